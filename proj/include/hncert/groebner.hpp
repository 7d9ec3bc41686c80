#ifndef HNCERT_GROEBNER_HPP
#define HNCERT_GROEBNER_HPP

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "hncert/ideal.hpp"
#include "hncert/polynomial.hpp"

namespace hncert {

// Per-thread engine configuration. Every Buchberger run (and every
// standalone normal-form call) gets its own step counter against the
// budget; exceeding it raises resource_error, never silent truncation.
struct EngineOptions {
  std::uint64_t step_budget = 1'000'000;
  bool audit = false;  // re-check every returned basis via S-pairs
};

struct EngineStats {
  std::uint64_t bases_computed = 0;
  std::uint64_t reduction_steps = 0;
  std::uint64_t audits_passed = 0;
  std::uint64_t audit_failures = 0;
};

inline EngineOptions& engine_options() {
  thread_local EngineOptions opts;
  return opts;
}

inline EngineStats& engine_stats() {
  thread_local EngineStats stats;
  return stats;
}

class ScopedEngineOptions {
 public:
  explicit ScopedEngineOptions(EngineOptions next) : saved_(engine_options()) {
    engine_options() = next;
  }
  ~ScopedEngineOptions() { engine_options() = saved_; }
  ScopedEngineOptions(const ScopedEngineOptions&) = delete;
  ScopedEngineOptions& operator=(const ScopedEngineOptions&) = delete;

 private:
  EngineOptions saved_;
};

template <typename K>
struct GroebnerBasis {
  RingPtr ctx;
  MonomialOrder order;
  std::vector<Polynomial<K>> elements;  // monic, sorted ascending by leading monomial
  bool reduced = false;
};

namespace detail {

template <typename K>
Polynomial<K> monic(const Polynomial<K>& f, const MonomialOrder& ord) {
  const K& lc = f.leading_term(ord).coeff;
  if (lc.is_one()) return f;
  return f.scaled(lc.inverse());
}

// Full normal form of h against G (fixed index order makes reducer choice
// deterministic). `steps` accrues against `budget`.
template <typename K>
Polynomial<K> reduce_full(Polynomial<K> h, const std::vector<Polynomial<K>>& G,
                          const MonomialOrder& ord, std::uint64_t& steps,
                          std::uint64_t budget) {
  std::vector<Term<K>> remainder;
  std::vector<Term<K>> leads;
  leads.reserve(G.size());
  for (const auto& g : G) leads.push_back(g.leading_term(ord));
  while (!h.is_zero()) {
    const Term<K> lt = h.leading_term(ord);
    bool reduced_step = false;
    for (std::size_t k = 0; k < G.size(); ++k) {
      if (!leads[k].mono.divides(lt.mono)) continue;
      if (++steps > budget) {
        throw resource_error("reduction step budget exceeded (" + std::to_string(budget) + ")");
      }
      engine_stats().reduction_steps++;
      h.add_scaled(G[k], -(lt.coeff / leads[k].coeff), lt.mono.divided_by(leads[k].mono));
      reduced_step = true;
      break;
    }
    if (!reduced_step) {
      remainder.push_back(lt);
      h.add_scaled(Polynomial<K>::monomial_term(h.ring(), lt.mono, lt.coeff),
                   K::from_integer(-1, h.ring()->field()), Monomial(h.ring()->nvars()));
    }
  }
  return Polynomial<K>::from_terms(h.ring(), std::move(remainder));
}

// S-polynomial; f and g need not be monic.
template <typename K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g,
                           const MonomialOrder& ord) {
  const Term<K>& ltf = f.leading_term(ord);
  const Term<K>& ltg = g.leading_term(ord);
  const Monomial lcm = Monomial::lcm(ltf.mono, ltg.mono);
  Polynomial<K> s(f.ring());
  s.add_scaled(f, ltf.coeff.inverse(), lcm.divided_by(ltf.mono));
  s.add_scaled(g, -(ltg.coeff.inverse()), lcm.divided_by(ltg.mono));
  return s;
}

}  // namespace detail

// Remainder of f on division by G: no term of the result is divisible by
// any leading term of G, and f - result lies in <G>.
template <typename K>
Polynomial<K> normal_form(const Polynomial<K>& f, const GroebnerBasis<K>& G) {
  if (!f.ring()->same_structure(*G.ctx)) throw context_error("normal form across rings");
  std::uint64_t steps = 0;
  return detail::reduce_full(f, G.elements, G.order, steps, engine_options().step_budget);
}

// Does every S-pair of G reduce to zero against G?
template <typename K>
bool spair_audit(const GroebnerBasis<K>& G) {
  std::uint64_t steps = 0;
  const std::uint64_t budget = engine_options().step_budget;
  for (std::size_t i = 0; i < G.elements.size(); ++i) {
    for (std::size_t j = i + 1; j < G.elements.size(); ++j) {
      Polynomial<K> s = detail::s_polynomial(G.elements[i], G.elements[j], G.order);
      if (!detail::reduce_full(s, G.elements, G.order, steps, budget).is_zero()) return false;
    }
  }
  return true;
}

// Buchberger with the coprime-leading-term and chain criteria and normal
// pair selection (smallest lcm in the order; ties by index pair). The
// returned basis is reduced, hence canonical for (ideal, order).
template <typename K>
GroebnerBasis<K> buchberger(const Ideal<K>& I, const MonomialOrder& order) {
  const EngineOptions opts = engine_options();
  std::uint64_t steps = 0;

  GroebnerBasis<K> result{I.ctx, order, {}, true};
  std::vector<Polynomial<K>> basis;
  for (const auto& g : I.gens) {
    if (!g.is_zero()) basis.push_back(detail::monic(g, order));
  }
  if (basis.empty()) {
    engine_stats().bases_computed++;
    return result;  // zero ideal
  }

  std::vector<Monomial> lead;
  for (const auto& g : basis) lead.push_back(g.leading_term(order).mono);

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  auto pair_less = [&order](const Pair& a, const Pair& b) {
    int c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::set<Pair, decltype(pair_less)> queue(pair_less);
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto push_pairs_for = [&](std::size_t t) {
    for (std::size_t i = 0; i < t; ++i) {
      queue.insert(Pair{i, t, Monomial::lcm(lead[i], lead[t])});
      pending.insert({i, t});
    }
  };
  for (std::size_t t = 1; t < basis.size(); ++t) push_pairs_for(t);

  while (!queue.empty()) {
    const Pair pr = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pr.i, pr.j});

    if (Monomial::coprime(lead[pr.i], lead[pr.j])) continue;

    bool chain_skip = false;
    for (std::size_t k = 0; k < basis.size() && !chain_skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!lead[k].divides(pr.lcm)) continue;
      auto key_ik = std::minmax(pr.i, k);
      auto key_jk = std::minmax(pr.j, k);
      if (!pending.count({key_ik.first, key_ik.second}) &&
          !pending.count({key_jk.first, key_jk.second})) {
        chain_skip = true;
      }
    }
    if (chain_skip) continue;

    Polynomial<K> s = detail::s_polynomial(basis[pr.i], basis[pr.j], order);
    Polynomial<K> nf = detail::reduce_full(s, basis, order, steps, opts.step_budget);
    if (!nf.is_zero()) {
      basis.push_back(detail::monic(nf, order));
      lead.push_back(basis.back().leading_term(order).mono);
      push_pairs_for(basis.size() - 1);
    }
  }

  // Minimize: drop elements whose leading monomial is divisible by the
  // leading monomial of another kept element.
  std::vector<std::size_t> idx(basis.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    int c = order.compare(lead[a], lead[b]);
    if (c != 0) return c < 0;
    return a < b;
  });
  std::vector<std::size_t> kept;
  for (std::size_t i : idx) {
    bool divisible = false;
    for (std::size_t k : kept) {
      if (lead[k].divides(lead[i])) {
        divisible = true;
        break;
      }
    }
    if (!divisible) kept.push_back(i);
  }

  // Inter-reduce tails; leading terms are untouched because kept leading
  // monomials are pairwise non-divisible.
  std::vector<Polynomial<K>> final_elems;
  for (std::size_t i : kept) final_elems.push_back(basis[i]);
  for (std::size_t i = 0; i < final_elems.size(); ++i) {
    std::vector<Polynomial<K>> others;
    for (std::size_t j = 0; j < final_elems.size(); ++j) {
      if (j != i) others.push_back(final_elems[j]);
    }
    final_elems[i] = detail::reduce_full(final_elems[i], others, order, steps, opts.step_budget);
  }

  result.elements = std::move(final_elems);
  result.reduced = true;
  engine_stats().bases_computed++;

  if (opts.audit) {
    if (spair_audit(result)) {
      engine_stats().audits_passed++;
    } else {
      engine_stats().audit_failures++;
    }
  }
  return result;
}

template <typename K>
GroebnerBasis<K> buchberger(const Ideal<K>& I) {
  return buchberger(I, I.ctx->default_order());
}

template <typename K>
bool ideal_membership(const Polynomial<K>& f, const Ideal<K>& I) {
  if (!f.ring()->same_structure(*I.ctx)) throw context_error("membership across rings");
  if (f.is_zero()) return true;
  if (I.is_zero_ideal()) return false;
  return normal_form(f, buchberger(I)).is_zero();
}

template <typename K>
bool ideal_membership(const Polynomial<K>& f, const GroebnerBasis<K>& G) {
  return normal_form(f, G).is_zero();
}

// Equality via identity of reduced bases under the shared default order.
template <typename K>
bool ideal_equal(const Ideal<K>& I, const Ideal<K>& J) {
  if (!I.ctx->same_structure(*J.ctx)) throw context_error("ideal comparison across rings");
  const MonomialOrder ord = I.ctx->default_order();
  GroebnerBasis<K> a = buchberger(I, ord);
  GroebnerBasis<K> b = buchberger(J, ord);
  if (a.elements.size() != b.elements.size()) return false;
  for (std::size_t i = 0; i < a.elements.size(); ++i) {
    if (a.elements[i] != b.elements[i]) return false;
  }
  return true;
}

template <typename K>
bool ideal_contains(const Ideal<K>& I, const Ideal<K>& J) {  // J subset of I
  if (I.is_zero_ideal()) return J.is_zero_ideal();
  GroebnerBasis<K> G = buchberger(I);
  for (const auto& g : J.gens) {
    if (!normal_form(g, G).is_zero()) return false;
  }
  return true;
}

}  // namespace hncert

#endif
