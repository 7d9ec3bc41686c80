#ifndef HNCERT_ORDER_HPP
#define HNCERT_ORDER_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hncert/monomial.hpp"

namespace hncert {

// Global monomial orders: lex, graded reverse lex, weighted grevlex, and
// two-block orders (first block compared first; putting the variables to
// eliminate in the first block yields an elimination order).
class MonomialOrder {
 public:
  enum class Kind { lex, grevlex, wgrevlex, block };

  static MonomialOrder lex() { return MonomialOrder(Kind::lex); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex); }
  static MonomialOrder weighted_grevlex(std::vector<std::int64_t> weights);
  // first_block holds indices (into the full exponent vector) of the
  // leading block; the sub-orders see exponent vectors restricted to their
  // block, so a weighted sub-order needs weights of the restricted length.
  static MonomialOrder block(std::vector<std::size_t> first_block, MonomialOrder first,
                             MonomialOrder rest);

  Kind kind() const { return kind_; }

  // <0 if a < b, 0 if equal, >0 if a > b.
  int compare(const Monomial& a, const Monomial& b) const;

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string describe() const;

 private:
  explicit MonomialOrder(Kind k) : kind_(k) {}

  int compare_span(std::span<const int> a, std::span<const int> b) const;

  Kind kind_;
  std::vector<std::int64_t> weights_;       // wgrevlex
  std::vector<std::size_t> first_block_;    // block
  std::shared_ptr<const MonomialOrder> sub_first_, sub_rest_;
};

}  // namespace hncert

#endif
