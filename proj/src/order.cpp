#include "hncert/order.hpp"

#include <algorithm>

#include "hncert/errors.hpp"

namespace hncert {

MonomialOrder MonomialOrder::weighted_grevlex(std::vector<std::int64_t> weights) {
  for (std::int64_t w : weights) {
    if (w <= 0) throw invalid_input_error("order weights must be positive");
  }
  MonomialOrder o(Kind::wgrevlex);
  o.weights_ = std::move(weights);
  return o;
}

MonomialOrder MonomialOrder::block(std::vector<std::size_t> first_block, MonomialOrder first,
                                   MonomialOrder rest) {
  MonomialOrder o(Kind::block);
  std::sort(first_block.begin(), first_block.end());
  o.first_block_ = std::move(first_block);
  o.sub_first_ = std::make_shared<const MonomialOrder>(std::move(first));
  o.sub_rest_ = std::make_shared<const MonomialOrder>(std::move(rest));
  return o;
}

namespace {

int cmp_deg(std::int64_t a, std::int64_t b) { return a < b ? -1 : (a > b ? 1 : 0); }

// Grevlex tie-break: scanning from the last variable, the first index
// where the exponents differ decides; the smaller exponent there wins.
int grevlex_tie(std::span<const int> a, std::span<const int> b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare_span(std::span<const int> a, std::span<const int> b) const {
  switch (kind_) {
    case Kind::lex: {
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    }
    case Kind::grevlex: {
      std::int64_t da = 0, db = 0;
      for (int e : a) da += e;
      for (int e : b) db += e;
      if (int c = cmp_deg(da, db)) return c;
      return grevlex_tie(a, b);
    }
    case Kind::wgrevlex: {
      if (weights_.size() != a.size()) {
        throw context_error("order weight vector length does not match monomial");
      }
      std::int64_t da = 0, db = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        da += weights_[i] * a[i];
        db += weights_[i] * b[i];
      }
      if (int c = cmp_deg(da, db)) return c;
      return grevlex_tie(a, b);
    }
    case Kind::block: {
      std::vector<int> fa, fb, ra, rb;
      fa.reserve(first_block_.size());
      fb.reserve(first_block_.size());
      std::size_t k = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (k < first_block_.size() && first_block_[k] == i) {
          fa.push_back(a[i]);
          fb.push_back(b[i]);
          ++k;
        } else {
          ra.push_back(a[i]);
          rb.push_back(b[i]);
        }
      }
      if (int c = sub_first_->compare_span(fa, fb)) return c;
      return sub_rest_->compare_span(ra, rb);
    }
  }
  return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != b.nvars()) throw context_error("comparing monomials of different rings");
  return compare_span(a.exponents(), b.exponents());
}

std::string MonomialOrder::describe() const {
  switch (kind_) {
    case Kind::lex:
      return "lex";
    case Kind::grevlex:
      return "grevlex";
    case Kind::wgrevlex: {
      std::string s = "wgrevlex(";
      for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(weights_[i]);
      }
      return s + ")";
    }
    case Kind::block:
      return "block[" + sub_first_->describe() + ";" + sub_rest_->describe() + "]";
  }
  return "?";
}

}  // namespace hncert
