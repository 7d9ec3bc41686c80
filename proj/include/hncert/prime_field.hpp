#ifndef HNCERT_PRIME_FIELD_HPP
#define HNCERT_PRIME_FIELD_HPP

#include <cstdint>
#include <string>

#include "hncert/errors.hpp"
#include "hncert/field.hpp"

namespace hncert {

// Element of F_p for a word-size prime p. Products go through 128-bit
// intermediates. A default-constructed element is a modulus-agnostic zero
// that adopts the modulus of whatever it is combined with; this lets
// generic code default-construct accumulators without threading the field
// descriptor through every call.
class Fp {
 public:
  Fp() = default;

  Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

  static Fp from_integer(std::int64_t n, const FieldDesc& f) {
    const std::uint64_t p = f.p;
    std::uint64_t r;
    if (n >= 0) {
      r = static_cast<std::uint64_t>(n) % p;
    } else {
      const std::uint64_t m = static_cast<std::uint64_t>(-(n + 1)) + 1;  // |n|
      r = (p - m % p) % p;
    }
    return Fp(r, p);
  }

  static Fp from_digits(const std::string& digits, const FieldDesc& f) {
    std::uint64_t r = 0;
    for (char c : digits) r = (r * 10 + static_cast<std::uint64_t>(c - '0')) % f.p;
    return Fp(r, f.p);
  }

  std::uint64_t residue() const { return v_; }
  std::uint64_t modulus() const { return p_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Fp operator-() const {
    if (v_ == 0) return *this;
    return Fp(p_ - v_, p_);
  }

  Fp& operator+=(const Fp& o) {
    const std::uint64_t p = joint_modulus(o);
    if (p == 0) return *this;  // 0 + 0
    std::uint64_t s = v_ + o.v_;
    if (s >= p) s -= p;
    v_ = s;
    p_ = p;
    return *this;
  }

  Fp& operator-=(const Fp& o) {
    const std::uint64_t p = joint_modulus(o);
    if (p == 0) return *this;
    v_ = (v_ >= o.v_) ? v_ - o.v_ : v_ + p - o.v_;
    p_ = p;
    return *this;
  }

  Fp& operator*=(const Fp& o) {
    const std::uint64_t p = joint_modulus(o);
    if (p == 0) return *this;
    v_ = static_cast<std::uint64_t>((static_cast<__uint128_t>(v_) * o.v_) % p);
    p_ = p;
    return *this;
  }

  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }

  // x^(p-2); p prime so Fermat applies.
  Fp inverse() const {
    if (v_ == 0) throw division_by_zero_error("inverse of zero in prime field");
    std::uint64_t result = 1, base = v_, e = p_ - 2;
    while (e > 0) {
      if (e & 1) result = mulmod(result, base, p_);
      base = mulmod(base, base, p_);
      e >>= 1;
    }
    return Fp(result, p_);
  }

  bool operator==(const Fp& o) const {
    if (v_ == 0 && o.v_ == 0) return true;
    return v_ == o.v_ && p_ == o.p_;
  }
  bool operator!=(const Fp& o) const { return !(*this == o); }

  bool is_negative() const { return false; }  // residues print unsigned
  std::string to_string() const { return std::to_string(v_); }

 private:
  static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % p);
  }

  std::uint64_t joint_modulus(const Fp& o) const {
    if (p_ != 0 && o.p_ != 0 && p_ != o.p_) {
      throw context_error("mixing elements of different prime fields");
    }
    return p_ != 0 ? p_ : o.p_;
  }

  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;  // 0 = modulus-agnostic zero
};

inline Fp prime_field_inv(const Fp& x) { return x.inverse(); }

}  // namespace hncert

#endif
