#ifndef HNCERT_RATIONAL_HPP
#define HNCERT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

#include "hncert/errors.hpp"
#include "hncert/field.hpp"

namespace hncert {

// Arbitrary-precision rational, always stored reduced with a positive
// denominator (zero is 0/1). Backed by GMP; the wrapper pins the canonical
// form so downstream code never sees an unnormalized value.
class Rational {
 public:
  Rational() : q_(0) {}

  static Rational from_integer(std::int64_t n, const FieldDesc& = FieldDesc::rationals()) {
    Rational r;
    r.q_ = mpq_class(static_cast<long>(n));
    return r;
  }

  static Rational from_fraction(std::int64_t n, std::int64_t d) {
    if (d == 0) throw invalid_input_error("rational with zero denominator");
    Rational r;
    r.q_ = mpq_class(static_cast<long>(n), static_cast<long>(d));
    r.q_.canonicalize();
    return r;
  }

  // Digit strings straight from the parser (no sign).
  static Rational from_digits(const std::string& digits,
                              const FieldDesc& = FieldDesc::rationals()) {
    Rational r;
    r.q_ = mpq_class(mpz_class(digits, 10));
    return r;
  }

  static Rational from_fraction_digits(const std::string& num, const std::string& den) {
    mpz_class d(den, 10);
    if (d == 0) throw invalid_input_error("rational with zero denominator");
    Rational r;
    r.q_ = mpq_class(mpz_class(num, 10), d);
    r.q_.canonicalize();
    return r;
  }

  bool is_zero() const { return q_ == 0; }
  bool is_one() const { return q_ == 1; }

  Rational operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
  }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw division_by_zero_error("rational division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  Rational inverse() const {
    if (is_zero()) throw division_by_zero_error("inverse of zero");
    Rational r;
    r.q_ = 1 / q_;
    return r;
  }

  bool operator==(const Rational& o) const { return q_ == o.q_; }
  bool operator!=(const Rational& o) const { return q_ != o.q_; }

  std::string numerator_string() const { return q_.get_num().get_str(); }
  std::string denominator_string() const { return q_.get_den().get_str(); }
  bool numerator_is(std::int64_t n) const { return q_.get_num() == n; }
  bool denominator_is(std::int64_t d) const { return q_.get_den() == d; }
  bool is_negative() const { return q_ < 0; }

  // gcd(|num|, den) == 1 and den > 0; GMP maintains this, the accessor
  // exists so tests can assert it after every operation.
  bool is_normalized() const {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
    return q_.get_den() > 0 && g == 1;
  }

  // "7", "-2/3"
  std::string to_string() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

 private:
  mpq_class q_;
};

// Canonical reduced form with positive denominator; d must be nonzero.
inline Rational rational_normalize(std::int64_t n, std::int64_t d) {
  return Rational::from_fraction(n, d);
}

}  // namespace hncert

#endif
