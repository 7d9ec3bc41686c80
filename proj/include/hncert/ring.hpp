#ifndef HNCERT_RING_HPP
#define HNCERT_RING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hncert/field.hpp"
#include "hncert/order.hpp"

namespace hncert {

// Ambient polynomial ring: ordered variable names, one positive weight per
// variable, and the coefficient field. Immutable; shared by pointer.
class RingContext {
 public:
  RingContext(std::vector<std::string> vars, std::vector<std::int64_t> weights,
              FieldDesc field);

  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var_name(std::size_t i) const { return vars_[i]; }
  const std::vector<std::int64_t>& weights() const { return weights_; }
  const FieldDesc& field() const { return field_; }

  std::optional<std::size_t> var_index(std::string_view name) const;

  // Weighted grevlex with the ring weights; the order every operation
  // defaults to when none is passed.
  MonomialOrder default_order() const { return MonomialOrder::weighted_grevlex(weights_); }

  bool same_structure(const RingContext& o) const {
    return vars_ == o.vars_ && weights_ == o.weights_ && field_ == o.field_;
  }

 private:
  std::vector<std::string> vars_;
  std::vector<std::int64_t> weights_;
  FieldDesc field_;
};

using RingPtr = std::shared_ptr<const RingContext>;

RingPtr make_ring(std::vector<std::string> vars, std::vector<std::int64_t> weights,
                  FieldDesc field);
// All weights 1.
RingPtr make_ring(std::vector<std::string> vars, FieldDesc field);

// New ring with extra variables appended (in front when front=true).
RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra_vars,
                    const std::vector<std::int64_t>& extra_weights, bool front);

// New ring keeping only the given variable indices (in their current order).
RingPtr restrict_ring(const RingPtr& ring, const std::vector<std::size_t>& keep);

// A variable name not already present in the ring ("t", "t0", "t1", ...).
std::string fresh_var_name(const RingContext& ring, const std::string& base);

}  // namespace hncert

#endif
