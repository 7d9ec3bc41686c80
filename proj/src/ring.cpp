#include "hncert/ring.hpp"

#include <set>

#include "hncert/errors.hpp"

namespace hncert {

RingContext::RingContext(std::vector<std::string> vars, std::vector<std::int64_t> weights,
                         FieldDesc field)
    : vars_(std::move(vars)), weights_(std::move(weights)), field_(field) {
  if (vars_.empty()) throw invalid_input_error("ring needs at least one variable");
  if (weights_.size() != vars_.size()) {
    throw invalid_input_error("one weight per variable required");
  }
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty()) throw invalid_input_error("empty variable name");
    if (!seen.insert(v).second) throw invalid_input_error("duplicate variable name '" + v + "'");
  }
  for (std::int64_t w : weights_) {
    if (w <= 0) throw invalid_input_error("variable weights must be positive");
  }
}

std::optional<std::size_t> RingContext::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> vars, std::vector<std::int64_t> weights,
                  FieldDesc field) {
  return std::make_shared<const RingContext>(std::move(vars), std::move(weights), field);
}

RingPtr make_ring(std::vector<std::string> vars, FieldDesc field) {
  std::vector<std::int64_t> weights(vars.size(), 1);
  return make_ring(std::move(vars), std::move(weights), field);
}

RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra_vars,
                    const std::vector<std::int64_t>& extra_weights, bool front) {
  std::vector<std::string> vars;
  std::vector<std::int64_t> weights;
  if (front) {
    vars = extra_vars;
    weights = extra_weights;
    vars.insert(vars.end(), ring->vars().begin(), ring->vars().end());
    weights.insert(weights.end(), ring->weights().begin(), ring->weights().end());
  } else {
    vars = ring->vars();
    weights = ring->weights();
    vars.insert(vars.end(), extra_vars.begin(), extra_vars.end());
    weights.insert(weights.end(), extra_weights.begin(), extra_weights.end());
  }
  return make_ring(std::move(vars), std::move(weights), ring->field());
}

RingPtr restrict_ring(const RingPtr& ring, const std::vector<std::size_t>& keep) {
  std::vector<std::string> vars;
  std::vector<std::int64_t> weights;
  for (std::size_t i : keep) {
    vars.push_back(ring->var_name(i));
    weights.push_back(ring->weights()[i]);
  }
  return make_ring(std::move(vars), std::move(weights), ring->field());
}

std::string fresh_var_name(const RingContext& ring, const std::string& base) {
  if (!ring.var_index(base)) return base;
  for (int i = 0;; ++i) {
    std::string cand = base + std::to_string(i);
    if (!ring.var_index(cand)) return cand;
  }
}

}  // namespace hncert
