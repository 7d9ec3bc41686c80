#include "hncert/field.hpp"

#include "hncert/errors.hpp"

namespace hncert {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

FieldDesc FieldDesc::prime(std::uint64_t p) {
  if (p >= (1ULL << 62)) {
    throw invalid_input_error("prime modulus exceeds supported word size");
  }
  if (!is_prime_u64(p)) {
    throw invalid_input_error("modulus " + std::to_string(p) + " is not prime");
  }
  return FieldDesc{Kind::prime, p};
}

std::string FieldDesc::to_string() const {
  if (kind == Kind::rationals) return "QQ";
  return "GF(" + std::to_string(p) + ")";
}

FieldDesc FieldDesc::parse(const std::string& text) {
  if (text == "q" || text == "Q" || text == "QQ") return rationals();
  if (text.rfind("p:", 0) == 0) {
    const std::string digits = text.substr(2);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw invalid_input_error("bad field syntax '" + text + "', expected q or p:P");
    }
    return prime(std::stoull(digits));
  }
  throw invalid_input_error("bad field syntax '" + text + "', expected q or p:P");
}

}  // namespace hncert
