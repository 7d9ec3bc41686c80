#ifndef HNCERT_HN_HPP
#define HNCERT_HN_HPP

#include <array>
#include <cstdint>
#include <numeric>
#include <string>

#include "hncert/invariants.hpp"

namespace hncert {

// Exponent data of an HN (Herzog-Northcott) ideal: triples a, b of
// positive integers, c = a+b, and the weight vector
//   m(a,b) = (c2c3 - a2b3, c1c3 - a3b1, c1c2 - a1b2).
struct HNSpec {
  std::array<std::int64_t, 3> a;
  std::array<std::int64_t, 3> b;

  HNSpec(std::array<std::int64_t, 3> a_, std::array<std::int64_t, 3> b_) : a(a_), b(b_) {
    for (int i = 0; i < 3; ++i) {
      if (a[i] < 1 || b[i] < 1) {
        throw invalid_input_error("HN exponents must be positive integers");
      }
    }
  }

  std::array<std::int64_t, 3> c() const {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
  }

  std::array<std::int64_t, 3> m() const {
    const auto cc = c();
    return {cc[1] * cc[2] - a[1] * b[2], cc[0] * cc[2] - a[2] * b[0],
            cc[0] * cc[1] - a[0] * b[1]};
  }

  std::int64_t m_gcd() const {
    const auto mm = m();
    return std::gcd(std::gcd(mm[0], mm[1]), mm[2]);
  }

  std::string to_string() const {
    auto t = [](const std::array<std::int64_t, 3>& v) {
      return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," +
             std::to_string(v[2]) + ")";
    };
    return "a=" + t(a) + " b=" + t(b);
  }
};

// k[x,y,z] with weights m(a,b), the grading that makes the HN ideal
// homogeneous.
inline RingPtr hn_ring(const HNSpec& spec, const FieldDesc& field) {
  const auto m = spec.m();
  return make_ring({"x", "y", "z"}, {m[0], m[1], m[2]}, field);
}

// The 2x3 exponent matrix whose 2x2 minors generate the HN ideal:
//   [ x1^a1  x2^a2  x3^a3 ]
//   [ x2^b2  x3^b3  x1^b1 ]
template <typename K>
std::array<std::array<Polynomial<K>, 3>, 2> hn_matrix(const HNSpec& spec, const RingPtr& ring,
                                                      std::array<std::size_t, 3> xyz = {0, 1,
                                                                                        2}) {
  auto one = K::from_integer(1, ring->field());
  auto power = [&](std::size_t var, std::int64_t e) {
    std::vector<int> exps(ring->nvars(), 0);
    exps[xyz[var]] = static_cast<int>(e);
    return Polynomial<K>::monomial_term(ring, Monomial(std::move(exps)), one);
  };
  return {{{power(0, spec.a[0]), power(1, spec.a[1]), power(2, spec.a[2])},
           {power(1, spec.b[1]), power(2, spec.b[2]), power(0, spec.b[0])}}};
}

// Generators with the fixed sign convention
//   v1 = x1^c1 - x2^b2 x3^a3,  v2 = x2^c2 - x1^a1 x3^b3,
//   d_minor = x3^c3 - x1^b1 x2^a2.
template <typename K>
Ideal<K> hn_ideal(const HNSpec& spec, const RingPtr& ring,
                  std::array<std::size_t, 3> xyz = {0, 1, 2}) {
  if (xyz[0] == xyz[1] || xyz[0] == xyz[2] || xyz[1] == xyz[2]) {
    throw invalid_input_error("designated variables must be distinct");
  }
  auto one = K::from_integer(1, ring->field());
  auto mono = [&](std::int64_t e0, std::int64_t e1, std::int64_t e2) {
    std::vector<int> exps(ring->nvars(), 0);
    exps[xyz[0]] = static_cast<int>(e0);
    exps[xyz[1]] = static_cast<int>(e1);
    exps[xyz[2]] = static_cast<int>(e2);
    return Polynomial<K>::monomial_term(ring, Monomial(std::move(exps)), one);
  };
  const auto c = spec.c();
  Polynomial<K> v1 = mono(c[0], 0, 0) - mono(0, spec.b[1], spec.a[2]);
  Polynomial<K> v2 = mono(0, c[1], 0) - mono(spec.a[0], 0, spec.b[2]);
  Polynomial<K> d_minor = mono(0, 0, c[2]) - mono(spec.b[0], spec.a[1], 0);
  return Ideal<K>::of(ring, {v1, v2, d_minor});
}

template <typename K>
Ideal<K> hn_ideal(const HNSpec& spec, const FieldDesc& field) {
  return hn_ideal<K>(spec, hn_ring(spec, field));
}

// Kernel of x -> t^{m1}, y -> t^{m2}, z -> t^{m3}, computed by eliminating
// t from (x - t^{m1}, y - t^{m2}, z - t^{m3}); returned as the canonical
// reduced basis in the given three-variable ring.
template <typename K>
Ideal<K> toric_kernel(const std::array<std::int64_t, 3>& m, const RingPtr& ring) {
  if (ring->nvars() != 3) throw invalid_input_error("toric kernel expects a 3-variable ring");
  for (std::int64_t mi : m) {
    if (mi < 1) throw invalid_input_error("curve exponents must be positive");
  }
  const std::string tname = fresh_var_name(*ring, "t");
  RingPtr ext = extend_ring(ring, {tname}, {1}, /*front=*/true);
  std::vector<Polynomial<K>> gens;
  auto one = K::from_integer(1, ring->field());
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<int> var_exp(4, 0), t_exp(4, 0);
    var_exp[i + 1] = 1;
    t_exp[0] = static_cast<int>(m[i]);
    gens.push_back(Polynomial<K>::monomial_term(ext, Monomial(std::move(var_exp)), one) -
                   Polynomial<K>::monomial_term(ext, Monomial(std::move(t_exp)), one));
  }
  Ideal<K> graph = Ideal<K>::of(ext, std::move(gens));
  Ideal<K> elim = eliminate(graph, {0});
  std::vector<Polynomial<K>> down;
  for (const auto& g : elim.gens) down.push_back(project_vars(g, ring, {1, 2, 3}));
  return canonical_generators(Ideal<K>::of(ring, std::move(down)));
}

// gcd(m)=1: the HN ideal is certified prime iff it coincides with the
// toric kernel of m (a kernel into a domain). gcd(m)>1: no primality claim
// is made; the containment relations are reported instead.
template <typename K>
CertReport certify_hn_prime(const HNSpec& spec, const FieldDesc& field) {
  const auto m = spec.m();
  const std::int64_t g = spec.m_gcd();
  RingPtr ring = hn_ring(spec, field);

  CertReport report;
  report.stage = "hn-certify";
  report.field = field.to_string();
  report.add("m-vector", true,
             "m=(" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "," +
                 std::to_string(m[2]) + ") gcd=" + std::to_string(g));

  Ideal<K> hn = hn_ideal<K>(spec, ring);
  Ideal<K> ker = toric_kernel<K>(m, ring);

  if (g == 1) {
    const bool equal = ideal_equal(hn, ker);
    if (!equal) {
      throw internal_inconsistency_error(
          "gcd(m)=1 but the HN ideal differs from the toric kernel for " + spec.to_string());
    }
    report.add("gcd-1", true, "gcd(m(a,b)) = 1");
    report.add("toric-kernel-equality", true, "HN ideal = ker(x,y,z -> t^m)");
    report.verdict = Verdict::prime_certified;
  } else {
    report.add("gcd-1", false, "gcd(m(a,b)) = " + std::to_string(g));
    const bool hn_in_ker = ideal_contains(ker, hn);
    const bool ker_in_hn = ideal_contains(hn, ker);
    report.add("hn-inside-kernel", hn_in_ker,
               hn_in_ker ? "HN ideal is contained in the toric kernel" : "containment fails");
    report.add("containment-strict", hn_in_ker && !ker_in_hn,
               ker_in_hn ? "ideals coincide" : "kernel strictly larger");
    report.verdict = Verdict::not_certified;
  }
  return report;
}

}  // namespace hncert

#endif
