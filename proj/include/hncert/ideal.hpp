#ifndef HNCERT_IDEAL_HPP
#define HNCERT_IDEAL_HPP

#include <utility>
#include <vector>

#include "hncert/polynomial.hpp"

namespace hncert {

// Generator list in an ambient ring. Zero generators are dropped on
// construction; an empty list after that is the zero ideal.
template <typename K>
struct Ideal {
  RingPtr ctx;
  std::vector<Polynomial<K>> gens;

  static Ideal of(RingPtr ring, std::vector<Polynomial<K>> generators) {
    Ideal I;
    I.ctx = std::move(ring);
    for (auto& g : generators) {
      if (g.is_zero()) continue;
      if (!g.ring()->same_structure(*I.ctx)) {
        throw context_error("ideal generator from a different ring");
      }
      I.gens.push_back(std::move(g));
    }
    return I;
  }

  bool is_zero_ideal() const { return gens.empty(); }
};

template <typename K>
Ideal<K> ideal_sum(const Ideal<K>& a, const Ideal<K>& b) {
  if (!a.ctx->same_structure(*b.ctx)) throw context_error("ideal sum across rings");
  std::vector<Polynomial<K>> gens = a.gens;
  gens.insert(gens.end(), b.gens.begin(), b.gens.end());
  return Ideal<K>::of(a.ctx, std::move(gens));
}

// Generated by all pairwise products.
template <typename K>
Ideal<K> ideal_product(const Ideal<K>& a, const Ideal<K>& b) {
  if (!a.ctx->same_structure(*b.ctx)) throw context_error("ideal product across rings");
  std::vector<Polynomial<K>> gens;
  for (const auto& f : a.gens) {
    for (const auto& g : b.gens) {
      Polynomial<K> p = f * g;
      bool dup = false;
      for (const auto& q : gens) {
        if (q == p) {
          dup = true;
          break;
        }
      }
      if (!dup) gens.push_back(std::move(p));
    }
  }
  return Ideal<K>::of(a.ctx, std::move(gens));
}

}  // namespace hncert

#endif
