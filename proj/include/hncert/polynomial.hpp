#ifndef HNCERT_POLYNOMIAL_HPP
#define HNCERT_POLYNOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hncert/errors.hpp"
#include "hncert/monomial.hpp"
#include "hncert/order.hpp"
#include "hncert/ring.hpp"

namespace hncert {

template <typename K>
struct Term {
  Monomial mono;
  K coeff;
};

// Sparse multivariate polynomial over an exact field. Terms are kept
// sorted (descending) under a fixed structural comparison so that values
// are canonical and arithmetic is order-agnostic; monomial orders are
// passed to the operations that need a notion of leading term.
template <typename K>
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }

  static Polynomial constant(RingPtr ring, K c) {
    Polynomial f(std::move(ring));
    if (!c.is_zero()) f.terms_.push_back({Monomial(f.ring_->nvars()), std::move(c)});
    return f;
  }

  static Polynomial monomial_term(RingPtr ring, Monomial m, K c) {
    Polynomial f(std::move(ring));
    if (m.nvars() != f.ring_->nvars()) throw context_error("monomial length mismatch");
    if (!c.is_zero()) f.terms_.push_back({std::move(m), std::move(c)});
    return f;
  }

  static Polynomial from_terms(RingPtr ring, std::vector<Term<K>> terms) {
    Polynomial f(std::move(ring));
    for (const auto& t : terms) {
      if (t.mono.nvars() != f.ring_->nvars()) throw context_error("monomial length mismatch");
    }
    f.terms_ = std::move(terms);
    f.normalize();
    return f;
  }

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  std::span<const Term<K>> terms() const { return terms_; }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }

  // The coefficient of a given monomial (zero when absent).
  K coefficient(const Monomial& m) const {
    for (const auto& t : terms_) {
      int c = Monomial::cmp_lex(t.mono, m);
      if (c == 0) return t.coeff;
      if (c < 0) break;  // sorted descending; passed the slot
    }
    return K{};
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_ring(o);
    terms_ = merged(terms_, o.terms_, false);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    check_ring(o);
    terms_ = merged(terms_, o.terms_, true);
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  Polynomial& operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    Polynomial r(a.ring_);
    for (const auto& t : b.terms_) {
      r.terms_ = merged(r.terms_, scaled_terms(a.terms_, t.coeff, t.mono), false);
    }
    return r;
  }

  Polynomial scaled(const K& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    r.terms_ = scaled_terms(terms_, c, Monomial(ring_->nvars()));
    return r;
  }

  // *this += c * m * g. The workhorse of polynomial reduction.
  void add_scaled(const Polynomial& g, const K& c, const Monomial& m) {
    check_ring(g);
    if (c.is_zero()) return;
    terms_ = merged(terms_, scaled_terms(g.terms_, c, m), false);
  }

  Polynomial pow(unsigned e) const {
    Polynomial r = constant(ring_, K::from_integer(1, ring_->field()));
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      base = (e >>= 1) ? base * base : base;
    }
    return r;
  }

  bool operator==(const Polynomial& o) const {
    if (!ring_->same_structure(*o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].mono != o.terms_[i].mono || !(terms_[i].coeff == o.terms_[i].coeff)) {
        return false;
      }
    }
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Leading term with respect to ord; linear scan over the term map.
  const Term<K>& leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) throw invalid_input_error("leading term of zero polynomial");
    std::size_t best = 0;
    for (std::size_t i = 1; i < terms_.size(); ++i) {
      if (ord.greater(terms_[i].mono, terms_[best].mono)) best = i;
    }
    return terms_[best];
  }

  void check_ring(const Polynomial& o) const {
    if (ring_ == o.ring_) return;
    if (!ring_->same_structure(*o.ring_)) {
      throw context_error("polynomials from incompatible ring contexts");
    }
  }

 private:
  static std::vector<Term<K>> scaled_terms(const std::vector<Term<K>>& ts, const K& c,
                                           const Monomial& m) {
    std::vector<Term<K>> out;
    out.reserve(ts.size());
    for (const auto& t : ts) {
      K nc = t.coeff * c;
      if (!nc.is_zero()) out.push_back({t.mono.times(m), std::move(nc)});
    }
    return out;  // multiplying by a fixed monomial preserves the sort
  }

  static std::vector<Term<K>> merged(const std::vector<Term<K>>& a,
                                     const std::vector<Term<K>>& b, bool subtract) {
    std::vector<Term<K>> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      int c = Monomial::cmp_lex(a[i].mono, b[j].mono);
      if (c > 0) {
        out.push_back(a[i++]);
      } else if (c < 0) {
        Term<K> t = b[j++];
        if (subtract) t.coeff = -t.coeff;
        out.push_back(std::move(t));
      } else {
        K sum = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
        if (!sum.is_zero()) out.push_back({a[i].mono, std::move(sum)});
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) {
      Term<K> t = b[j];
      if (subtract) t.coeff = -t.coeff;
      out.push_back(std::move(t));
    }
    return out;
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term<K>& x, const Term<K>& y) {
      return Monomial::cmp_lex(x.mono, y.mono) > 0;
    });
    std::vector<Term<K>> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff += t.coeff;
        if (out.back().coeff.is_zero()) out.pop_back();
      } else if (!t.coeff.is_zero()) {
        out.push_back(std::move(t));
      }
    }
    terms_ = std::move(out);
  }

  RingPtr ring_;
  std::vector<Term<K>> terms_;
};

template <typename K>
Polynomial<K> make_variable(const RingPtr& ring, std::size_t i) {
  std::vector<int> e(ring->nvars(), 0);
  if (i >= ring->nvars()) throw context_error("variable index out of range");
  e[i] = 1;
  return Polynomial<K>::monomial_term(ring, Monomial(std::move(e)),
                                      K::from_integer(1, ring->field()));
}

template <typename K>
Polynomial<K> make_constant(const RingPtr& ring, std::int64_t n) {
  return Polynomial<K>::constant(ring, K::from_integer(n, ring->field()));
}

template <typename K>
Polynomial<K> poly_mul(const Polynomial<K>& f, const Polynomial<K>& g) {
  return f * g;
}

// Simultaneous substitution x_i -> images[i], fully expanded. The images
// live in target (which may be a different ring over the same field).
template <typename K>
Polynomial<K> substitute(const Polynomial<K>& f, const RingPtr& target,
                         const std::vector<Polynomial<K>>& images) {
  if (images.size() != f.ring()->nvars()) {
    throw context_error("one image per source variable required");
  }
  for (const auto& g : images) {
    if (!g.ring()->same_structure(*target)) {
      throw context_error("substitution image in wrong ring");
    }
  }
  Polynomial<K> out(target);
  // cache powers per variable
  std::vector<std::vector<Polynomial<K>>> powers(images.size());
  auto power_of = [&](std::size_t v, int e) -> const Polynomial<K>& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(make_constant<K>(target, 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[v]);
    return cache[static_cast<std::size_t>(e)];
  };
  for (const auto& t : f.terms()) {
    Polynomial<K> term = Polynomial<K>::constant(target, t.coeff);
    for (std::size_t v = 0; v < images.size(); ++v) {
      int e = t.mono.exponent(v);
      if (e > 0) term = term * power_of(v, e);
    }
    out += term;
  }
  return out;
}

// Same-ring substitution of a subset of variables by name; unassigned
// variables map to themselves.
template <typename K>
Polynomial<K> substitute(const Polynomial<K>& f,
                         const std::map<std::string, Polynomial<K>>& assignments) {
  const RingPtr& ring = f.ring();
  std::vector<Polynomial<K>> images;
  images.reserve(ring->nvars());
  for (std::size_t i = 0; i < ring->nvars(); ++i) images.push_back(make_variable<K>(ring, i));
  for (const auto& [name, image] : assignments) {
    auto idx = ring->var_index(name);
    if (!idx) throw context_error("substitution of unknown variable '" + name + "'");
    images[*idx] = image;
  }
  return substitute(f, ring, images);
}

struct WeightedDegree {
  bool homogeneous = true;
  std::int64_t degree = 0;
};

// Common weighted degree of all terms, or homogeneous=false. Zero input
// has no degree.
template <typename K>
WeightedDegree weighted_degree(const Polynomial<K>& f) {
  if (f.is_zero()) throw invalid_input_error("degree of zero polynomial is undefined");
  const auto& w = f.ring()->weights();
  WeightedDegree r;
  r.degree = f.terms()[0].mono.weighted_degree(w);
  for (const auto& t : f.terms()) {
    if (t.mono.weighted_degree(w) != r.degree) {
      r.homogeneous = false;
      return r;
    }
  }
  return r;
}

template <typename K>
bool is_homogeneous(const Polynomial<K>& f) {
  return f.is_zero() || weighted_degree(f).homogeneous;
}

// Map a polynomial into a ring with more variables; var_map[i] gives the
// index in `target` of source variable i.
template <typename K>
Polynomial<K> lift_vars(const Polynomial<K>& f, const RingPtr& target,
                        const std::vector<std::size_t>& var_map) {
  std::vector<Term<K>> terms;
  for (const auto& t : f.terms()) {
    std::vector<int> e(target->nvars(), 0);
    for (std::size_t i = 0; i < var_map.size(); ++i) e[var_map[i]] = t.mono.exponent(i);
    terms.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Polynomial<K>::from_terms(target, std::move(terms));
}

// Inverse of lift_vars for polynomials not involving the dropped
// variables; keep[i] is the source index of target variable i.
template <typename K>
Polynomial<K> project_vars(const Polynomial<K>& f, const RingPtr& target,
                           const std::vector<std::size_t>& keep) {
  std::vector<Term<K>> terms;
  for (const auto& t : f.terms()) {
    std::vector<int> e(target->nvars(), 0);
    std::int64_t moved = 0;
    for (std::size_t i = 0; i < keep.size(); ++i) {
      e[i] = t.mono.exponent(keep[i]);
      moved += e[i];
    }
    if (moved != t.mono.total_degree()) {
      throw context_error("polynomial involves a variable outside the target subring");
    }
    terms.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Polynomial<K>::from_terms(target, std::move(terms));
}

}  // namespace hncert

#endif
