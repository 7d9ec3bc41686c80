#ifndef HNCERT_ERRORS_HPP
#define HNCERT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hncert {

// Base class for everything this library throws on purpose.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad arguments: zero denominators, non-Artinian quotients, inhomogeneous
// input where homogeneity is required, out-of-range spec exponents, ...
class invalid_input_error : public error {
 public:
  using error::error;
};

class division_by_zero_error : public error {
 public:
  using error::error;
};

// Mixing polynomials/ideals from incompatible ring contexts.
class context_error : public error {
 public:
  using error::error;
};

// Text that does not conform to the polynomial grammar; carries the
// byte offset of the offending token.
class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A computation exceeded its configured step budget. Never silent.
class resource_error : public error {
 public:
  using error::error;
};

// Could not draw admissible random scalars within the redraw limit.
class randomness_error : public error {
 public:
  using error::error;
};

// A certified-impossible situation was observed; signals an engine bug.
class internal_inconsistency_error : public error {
 public:
  using error::error;
};

}  // namespace hncert

#endif
