#ifndef HNCERT_FIELD_HPP
#define HNCERT_FIELD_HPP

#include <cstdint>
#include <string>

namespace hncert {

bool is_prime_u64(std::uint64_t n);

// Runtime description of the coefficient field: the rationals or F_p for
// a word-size prime p.
struct FieldDesc {
  enum class Kind { rationals, prime };

  Kind kind = Kind::rationals;
  std::uint64_t p = 0;

  static FieldDesc rationals() { return FieldDesc{Kind::rationals, 0}; }
  // Checks primality by trial division; throws invalid_input_error.
  static FieldDesc prime(std::uint64_t p);

  bool operator==(const FieldDesc&) const = default;

  std::string to_string() const;  // "QQ" or "GF(32003)"
  // Accepts the CLI syntax "q" or "p:32003".
  static FieldDesc parse(const std::string& text);
};

}  // namespace hncert

#endif
