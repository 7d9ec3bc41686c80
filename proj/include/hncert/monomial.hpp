#ifndef HNCERT_MONOMIAL_HPP
#define HNCERT_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "hncert/errors.hpp"

namespace hncert {

// Exponent vector over a fixed variable list. Length always matches the
// ambient ring's variable count.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {
    for (int e : e_) {
      if (e < 0) throw invalid_input_error("negative exponent in monomial");
    }
  }

  std::size_t nvars() const { return e_.size(); }
  int exponent(std::size_t i) const { return e_[i]; }
  std::span<const int> exponents() const { return e_; }

  bool is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](int e) { return e == 0; });
  }

  std::int64_t total_degree() const {
    std::int64_t d = 0;
    for (int e : e_) d += e;
    return d;
  }

  std::int64_t weighted_degree(std::span<const std::int64_t> weights) const {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < e_.size(); ++i) d += weights[i] * e_[i];
    return d;
  }

  Monomial times(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
  }

  // Does *this divide o?
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] > o.e_[i]) return false;
    }
    return true;
  }

  // Quotient *this / o; requires o | *this.
  Monomial divided_by(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) {
      r.e_[i] -= o.e_[i];
      if (r.e_[i] < 0) throw invalid_input_error("monomial quotient is not exact");
    }
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e_.size(); ++i) {
      if (a.e_[i] > 0 && b.e_[i] > 0) return false;
    }
    return true;
  }

  bool involves_any(std::span<const std::size_t> vars) const {
    for (std::size_t v : vars) {
      if (e_[v] > 0) return true;
    }
    return false;
  }

  // Fixed structural comparison (plain lex on exponent vectors), used only
  // to keep term maps canonically sorted; monomial orders live elsewhere.
  static int cmp_lex(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e_.size(); ++i) {
      if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i] ? -1 : 1;
    }
    return 0;
  }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

 private:
  std::vector<int> e_;
};

}  // namespace hncert

#endif
