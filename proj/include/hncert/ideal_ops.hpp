#ifndef HNCERT_IDEAL_OPS_HPP
#define HNCERT_IDEAL_OPS_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "hncert/groebner.hpp"
#include "hncert/ideal.hpp"

namespace hncert {

// Canonical generators: the reduced Groebner basis under the ring's
// default order.
template <typename K>
Ideal<K> canonical_generators(const Ideal<K>& I) {
  GroebnerBasis<K> G = buchberger(I);
  return Ideal<K>::of(I.ctx, G.elements);
}

// Generators of I ∩ k[vars \ drop] as an ideal of the same ring, computed
// with a block elimination order (dropped variables first).
template <typename K>
Ideal<K> eliminate(const Ideal<K>& I, const std::vector<std::size_t>& drop) {
  for (std::size_t v : drop) {
    if (v >= I.ctx->nvars()) throw context_error("eliminating unknown variable");
  }
  if (drop.empty()) return canonical_generators(I);

  std::vector<std::size_t> keep;
  std::vector<std::int64_t> keep_weights;
  for (std::size_t i = 0; i < I.ctx->nvars(); ++i) {
    if (std::find(drop.begin(), drop.end(), i) == drop.end()) {
      keep.push_back(i);
      keep_weights.push_back(I.ctx->weights()[i]);
    }
  }
  MonomialOrder elim_order =
      MonomialOrder::block(drop, MonomialOrder::grevlex(),
                           MonomialOrder::weighted_grevlex(keep_weights));
  GroebnerBasis<K> G = buchberger(I, elim_order);

  std::vector<Polynomial<K>> extracted;
  for (const auto& g : G.elements) {
    bool involves = false;
    for (const auto& t : g.terms()) {
      if (t.mono.involves_any(drop)) {
        involves = true;
        break;
      }
    }
    if (!involves) extracted.push_back(g);
  }
  // Re-canonicalize under the ring default order so results are unique
  // generators of the elimination ideal.
  return canonical_generators(Ideal<K>::of(I.ctx, std::move(extracted)));
}

// I ∩ J via the single auxiliary variable t: eliminate t from t·I + (1−t)·J.
template <typename K>
Ideal<K> intersect(const Ideal<K>& I, const Ideal<K>& J) {
  if (!I.ctx->same_structure(*J.ctx)) throw context_error("intersect across rings");
  if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal<K>::of(I.ctx, {});

  const RingPtr& ring = I.ctx;
  const std::string tname = fresh_var_name(*ring, "t");
  RingPtr ext = extend_ring(ring, {tname}, {1}, /*front=*/true);

  std::vector<std::size_t> var_map(ring->nvars());
  for (std::size_t i = 0; i < ring->nvars(); ++i) var_map[i] = i + 1;

  Polynomial<K> t = make_variable<K>(ext, 0);
  Polynomial<K> one_minus_t = make_constant<K>(ext, 1) - t;

  std::vector<Polynomial<K>> gens;
  for (const auto& f : I.gens) gens.push_back(t * lift_vars(f, ext, var_map));
  for (const auto& g : J.gens) gens.push_back(one_minus_t * lift_vars(g, ext, var_map));

  Ideal<K> extended = Ideal<K>::of(ext, std::move(gens));
  Ideal<K> elim = eliminate(extended, {0});

  std::vector<std::size_t> keep(ring->nvars());
  for (std::size_t i = 0; i < ring->nvars(); ++i) keep[i] = i + 1;
  std::vector<Polynomial<K>> down;
  for (const auto& g : elim.gens) down.push_back(project_vars(g, ring, keep));
  return canonical_generators(Ideal<K>::of(ring, std::move(down)));
}

// Quotient g / f, which must be exact; used on members of (f).
template <typename K>
Polynomial<K> exact_divide(const Polynomial<K>& g, const Polynomial<K>& f,
                           const MonomialOrder& ord) {
  if (f.is_zero()) throw division_by_zero_error("division by zero polynomial");
  Polynomial<K> q(g.ring());
  Polynomial<K> r = g;
  const Term<K> ltf = f.leading_term(ord);
  while (!r.is_zero()) {
    const Term<K> ltr = r.leading_term(ord);
    if (!ltf.mono.divides(ltr.mono)) {
      throw internal_inconsistency_error("polynomial quotient is not exact");
    }
    const K c = ltr.coeff / ltf.coeff;
    const Monomial m = ltr.mono.divided_by(ltf.mono);
    q.add_scaled(Polynomial<K>::constant(g.ring(), c), K::from_integer(1, g.ring()->field()), m);
    r.add_scaled(f, -c, m);
  }
  return q;
}

// Colon ideal I : f = { g : g·f ∈ I }, via intersect(I, (f)) scaled by 1/f.
template <typename K>
Ideal<K> colon(const Ideal<K>& I, const Polynomial<K>& f) {
  if (f.is_zero()) throw invalid_input_error("colon by the zero polynomial");
  Ideal<K> cap = intersect(I, Ideal<K>::of(I.ctx, {f}));
  const MonomialOrder ord = I.ctx->default_order();
  std::vector<Polynomial<K>> gens;
  for (const auto& g : cap.gens) gens.push_back(exact_divide(g, f, ord));
  return canonical_generators(Ideal<K>::of(I.ctx, std::move(gens)));
}

// Saturation: iterate colon until it stabilizes.
template <typename K>
Ideal<K> saturate(const Ideal<K>& I, const Polynomial<K>& f) {
  if (f.is_zero()) throw invalid_input_error("saturation by the zero polynomial");
  Ideal<K> current = canonical_generators(I);
  for (int round = 0; round < 256; ++round) {
    Ideal<K> next = colon(current, f);
    if (ideal_equal(current, next)) return current;
    current = std::move(next);
  }
  throw resource_error("saturation did not stabilize within 256 rounds");
}

// Monomial ideal of leading terms of the reduced basis. The zero ideal
// yields an empty generator list.
template <typename K>
Ideal<K> leading_term_ideal(const Ideal<K>& I, const MonomialOrder& ord) {
  GroebnerBasis<K> G = buchberger(I, ord);
  std::vector<Polynomial<K>> gens;
  for (const auto& g : G.elements) {
    gens.push_back(Polynomial<K>::monomial_term(I.ctx, g.leading_term(ord).mono,
                                                K::from_integer(1, I.ctx->field())));
  }
  return Ideal<K>::of(I.ctx, std::move(gens));
}

template <typename K>
Ideal<K> leading_term_ideal(const Ideal<K>& I) {
  return leading_term_ideal(I, I.ctx->default_order());
}

// Ideal power with memoization; powers above the cap are refused so a
// runaway caller fails loudly instead of grinding.
template <typename K>
class IdealPowers {
 public:
  explicit IdealPowers(Ideal<K> base, int cap = 12) : base_(std::move(base)), cap_(cap) {
    Ideal<K> unit = Ideal<K>::of(base_.ctx, {make_constant<K>(base_.ctx, 1)});
    memo_.push_back(std::move(unit));  // I^0 = R
    memo_.push_back(base_);
  }

  const Ideal<K>& power(int d) {
    if (d < 0) d = 0;
    if (d > cap_) {
      throw resource_error("ideal power " + std::to_string(d) + " exceeds cap " +
                           std::to_string(cap_));
    }
    while (static_cast<int>(memo_.size()) <= d) {
      memo_.push_back(ideal_product(memo_.back(), base_));
    }
    return memo_[static_cast<std::size_t>(d)];
  }

 private:
  Ideal<K> base_;
  int cap_;
  std::vector<Ideal<K>> memo_;
};

}  // namespace hncert

#endif
