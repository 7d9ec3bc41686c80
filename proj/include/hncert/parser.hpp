#ifndef HNCERT_PARSER_HPP
#define HNCERT_PARSER_HPP

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "hncert/polynomial.hpp"

namespace hncert {

// Grammar:
//   poly   := ("+"|"-")? term (("+"|"-") term)*
//   term   := coeff ("*" factor)* | factor ("*" factor)*
//   factor := var ("^" nat)?
//   coeff  := nat | nat "/" nat
//   var    := identifier
// Whitespace is insignificant. Signs fold into the coefficient.
template <typename K>
class PolyParser {
 public:
  PolyParser(std::string_view text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

  Polynomial<K> parse() {
    skip_ws();
    if (eof()) throw parse_error("empty polynomial", pos_);
    Polynomial<K> result(ring_);
    bool first = true;
    while (!eof()) {
      bool negative = false;
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        negative = take() == '-';
      } else if (!first) {
        throw parse_error("expected '+' or '-' between terms", pos_);
      }
      result += parse_term(negative);
      skip_ws();
      first = false;
    }
    return result;
  }

 private:
  Polynomial<K> parse_term(bool negative) {
    skip_ws();
    if (eof()) throw parse_error("expected a term", pos_);
    K coeff = K::from_integer(negative ? -1 : 1, ring_->field());
    std::vector<int> exps(ring_->nvars(), 0);
    bool saw_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      K mag = parse_coeff();
      coeff *= mag;
      saw_factor = true;
    } else {
      parse_factor(exps);
      saw_factor = true;
    }
    while (true) {
      skip_ws();
      if (eof() || peek() != '*') break;
      take();  // '*'
      skip_ws();
      if (eof()) throw parse_error("dangling '*'", pos_);
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        // permissive: numeric factors multiply into the coefficient
        coeff *= parse_coeff();
      } else {
        parse_factor(exps);
      }
    }
    if (!saw_factor) throw parse_error("expected a term", pos_);
    return Polynomial<K>::monomial_term(ring_, Monomial(std::move(exps)), std::move(coeff));
  }

  K parse_coeff() {
    const std::size_t at = pos_;
    std::string num = parse_digits();
    skip_ws();
    if (!eof() && peek() == '/') {
      take();
      skip_ws();
      if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        throw parse_error("expected denominator digits after '/'", pos_);
      }
      std::string den = parse_digits();
      return make_fraction(num, den, at);
    }
    return K::from_digits(num, ring_->field());
  }

  K make_fraction(const std::string& num, const std::string& den, std::size_t at) {
    K d = K::from_digits(den, ring_->field());
    if (d.is_zero()) throw parse_error("coefficient not in field (denominator is zero)", at);
    return K::from_digits(num, ring_->field()) / d;
  }

  void parse_factor(std::vector<int>& exps) {
    const std::size_t at = pos_;
    std::string name = parse_identifier();
    auto idx = ring_->var_index(name);
    if (!idx) throw parse_error("unknown variable '" + name + "'", at);
    int e = 1;
    skip_ws();
    if (!eof() && peek() == '^') {
      take();
      skip_ws();
      const std::size_t eat = pos_;
      if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        throw parse_error("malformed exponent", eat);
      }
      std::string digits = parse_digits();
      if (digits.size() > 6) throw parse_error("exponent too large", eat);
      e = std::stoi(digits);
    }
    exps[*idx] += e;
  }

  std::string parse_identifier() {
    if (eof() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) {
      throw parse_error("expected a variable name", pos_);
    }
    std::string s;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      s += take();
    }
    return s;
  }

  std::string parse_digits() {
    std::string s;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) s += take();
    return s;
  }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }

  std::string_view text_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

template <typename K>
Polynomial<K> parse_poly(std::string_view text, const RingPtr& ring) {
  return PolyParser<K>(text, ring).parse();
}

// Canonical rendering: terms in descending order under ord, '-' folded
// into the coefficient sign (rationals only; prime-field residues are
// nonnegative), unit coefficients elided, '^1' elided.
template <typename K>
std::string format_poly(const Polynomial<K>& f, const MonomialOrder& ord) {
  if (f.is_zero()) return "0";
  std::vector<Term<K>> ts(f.terms().begin(), f.terms().end());
  std::sort(ts.begin(), ts.end(),
            [&](const Term<K>& a, const Term<K>& b) { return ord.greater(a.mono, b.mono); });
  std::string out;
  const auto& ring = *f.ring();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    K c = ts[i].coeff;
    if (c.is_negative()) {
      out += "-";
      c = -c;
    } else if (i > 0) {
      out += "+";
    }
    std::string mono;
    for (std::size_t v = 0; v < ring.nvars(); ++v) {
      int e = ts[i].mono.exponent(v);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring.var_name(v);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += c.to_string() + "*" + mono;
    }
  }
  return out;
}

template <typename K>
std::string format_poly(const Polynomial<K>& f) {
  return format_poly(f, f.ring()->default_order());
}

}  // namespace hncert

#endif
