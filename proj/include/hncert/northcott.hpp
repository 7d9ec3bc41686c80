#ifndef HNCERT_NORTHCOTT_HPP
#define HNCERT_NORTHCOTT_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hncert/hn.hpp"
#include "hncert/prime_field.hpp"
#include "hncert/splitmix.hpp"

namespace hncert {

// The colon-ideal construction over a standard graded ring A with a
// designated degree-1 regular sequence x,y,z:
//   u = x^2-yz, v = y^2-xz, w = z^2-xy,   xw + yu + zv = 0,
//   D = A[X,Y],   K = (u+xX, v+xY)D : x,   L = (u+xX, v+xY, w-yX-zY)D.
// The paper-facing D is called ext_ring here because d_minor already names
// the third HN minor.
template <typename K>
struct NorthcottContext {
  RingPtr A;
  std::array<std::size_t, 3> xyz;
  RingPtr ext_ring;                      // A[X,Y]
  std::size_t X_index, Y_index;          // in ext_ring

  Polynomial<K> u, v, w;  // in A
  Ideal<K> I;             // (u,v,w) in A

  Polynomial<K> gen1, gen2, gen3;  // u+xX, v+xY, w-yX-zY in ext_ring
  Ideal<K> colon_ideal;            // K
  Ideal<K> explicit_ideal;         // L

  std::array<std::array<Polynomial<K>, 2>, 2> phi;    // [[x,z],[-z,-y]] in A
  std::array<std::array<Polynomial<K>, 2>, 2> psi;    // [[x+X,-z],[-z+Y,y]]
  std::array<std::array<Polynomial<K>, 3>, 2> psi2t;  // [[x,z,-y],[y,x+X,-z+Y]]
  std::array<Polynomial<K>, 3> psi1;                  // [w-yX-zY, v+xY, -(u+xX)]
};

template <typename K>
NorthcottContext<K> northcott_build(const RingPtr& A,
                                    std::array<std::size_t, 3> xyz = {0, 1, 2}) {
  if (A->nvars() < 4) {
    throw invalid_input_error("the construction needs a ring with at least 4 variables");
  }
  if (xyz[0] == xyz[1] || xyz[0] == xyz[2] || xyz[1] == xyz[2]) {
    throw invalid_input_error("need three distinct designated variables");
  }
  for (std::size_t v : xyz) {
    if (v >= A->nvars()) throw invalid_input_error("designated variable out of range");
    if (A->weights()[v] != 1) {
      throw invalid_input_error("designated variables must have weight 1 (standard grading)");
    }
  }

  Polynomial<K> x = make_variable<K>(A, xyz[0]);
  Polynomial<K> y = make_variable<K>(A, xyz[1]);
  Polynomial<K> z = make_variable<K>(A, xyz[2]);
  Polynomial<K> u = x * x - y * z;
  Polynomial<K> v = y * y - x * z;
  Polynomial<K> w = z * z - x * y;

  if (!(x * w + y * u + z * v).is_zero()) {
    throw internal_inconsistency_error("xw + yu + zv did not vanish");
  }

  const std::string Xn = fresh_var_name(*A, "X"), Yn = fresh_var_name(*A, "Y");
  RingPtr ext = extend_ring(A, {Xn, Yn}, {1, 1}, /*front=*/false);
  const std::size_t Xi = A->nvars(), Yi = A->nvars() + 1;

  std::vector<std::size_t> lift_map(A->nvars());
  for (std::size_t i = 0; i < A->nvars(); ++i) lift_map[i] = i;
  auto lift = [&](const Polynomial<K>& f) { return lift_vars(f, ext, lift_map); };

  Polynomial<K> xe = lift(x), ye = lift(y), ze = lift(z);
  Polynomial<K> X = make_variable<K>(ext, Xi);
  Polynomial<K> Y = make_variable<K>(ext, Yi);

  Polynomial<K> gen1 = lift(u) + xe * X;
  Polynomial<K> gen2 = lift(v) + xe * Y;
  Polynomial<K> gen3 = lift(w) - ye * X - ze * Y;

  Ideal<K> colon_ideal = colon(Ideal<K>::of(ext, {gen1, gen2}), xe);
  Ideal<K> explicit_ideal = Ideal<K>::of(ext, {gen1, gen2, gen3});

  // det(Psi) = -(w - yX - zY); the colon ideal is proper
  Polynomial<K> det = (xe + X) * ye - (-ze) * (-ze + Y);
  if (det != -gen3) throw internal_inconsistency_error("det(Psi) != -(w-yX-zY)");
  if (ideal_membership(make_constant<K>(ext, 1), colon_ideal)) {
    throw internal_inconsistency_error("colon ideal is not proper");
  }

  return NorthcottContext<K>{
      .A = A,
      .xyz = xyz,
      .ext_ring = ext,
      .X_index = Xi,
      .Y_index = Yi,
      .u = u,
      .v = v,
      .w = w,
      .I = Ideal<K>::of(A, {u, v, w}),
      .gen1 = gen1,
      .gen2 = gen2,
      .gen3 = gen3,
      .colon_ideal = colon_ideal,
      .explicit_ideal = explicit_ideal,
      .phi = {{{x, z}, {-z, -y}}},
      .psi = {{{xe + X, -ze}, {-ze + Y, ye}}},
      .psi2t = {{{xe, ze, -ye}, {ye, xe + X, -ze + Y}}},
      .psi1 = {gen3, gen2, -gen1}};
}

template <typename K>
bool verify_K_equals_L(const NorthcottContext<K>& ctx) {
  return ideal_equal(ctx.colon_ideal, ctx.explicit_ideal);
}

// One random specialization X -> X', Y -> Y'' over F_p. X' is drawn first
// from beta, then Y'' from alpha with X' substituted, matching the
// two-step order of the construction; the divisions by the trailing
// scalars are folded into the coefficients of the linear forms.
struct SpecializationTrial {
  std::uint64_t seed = 0;
  FieldDesc field;
  std::vector<std::uint64_t> alpha;  // n+2 residues, alpha[n+1] != 0
  std::vector<std::uint64_t> beta;   // n+1 residues, beta[n] != 0
  std::string x_prime, y_prime_prime;
  CertReport report;

  bool all_pass() const { return report.verdict == Verdict::certified; }
};

namespace detail {

inline std::vector<std::uint64_t> draw_with_nonzero_tail(SplitMix64& rng, std::size_t count,
                                                         std::uint64_t p) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<std::uint64_t> v(count);
    for (auto& x : v) x = rng.below(p);
    if (v.back() != 0) return v;
  }
  throw randomness_error("no admissible scalar vector within 100 redraws");
}

}  // namespace detail

template <typename K>
SpecializationTrial generic_specialize(const NorthcottContext<K>& ctx, std::uint64_t seed,
                                       const FieldDesc& field) {
  if (field.kind != FieldDesc::Kind::prime) {
    throw invalid_input_error("specialization trials run over a prime field");
  }
  const std::size_t n = ctx.A->nvars();

  SpecializationTrial trial;
  trial.seed = seed;
  trial.field = field;

  SplitMix64 rng(seed);
  trial.alpha = detail::draw_with_nonzero_tail(rng, n + 2, field.p);
  trial.beta = detail::draw_with_nonzero_tail(rng, n + 1, field.p);

  // Same variable names and grading, coefficients now in F_p.
  RingPtr Ap = make_ring(ctx.A->vars(), ctx.A->weights(), field);
  auto scalar = [&](std::uint64_t r) { return Fp(r, field.p); };

  // X' = -(b1 x1 + ... + bn xn)/b_{n+1}
  const Fp binv = scalar(trial.beta[n]).inverse();
  Polynomial<Fp> xprime(Ap);
  for (std::size_t i = 0; i < n; ++i) {
    xprime += make_variable<Fp>(Ap, i).scaled(-(scalar(trial.beta[i]) * binv));
  }
  // Y'' = -(a1 x1 + ... + an xn + a_{n+1} X')/a_{n+2}
  const Fp ainv = scalar(trial.alpha[n + 1]).inverse();
  Polynomial<Fp> yprime(Ap);
  for (std::size_t i = 0; i < n; ++i) {
    yprime += make_variable<Fp>(Ap, i).scaled(-(scalar(trial.alpha[i]) * ainv));
  }
  yprime += xprime.scaled(-(scalar(trial.alpha[n]) * ainv));

  trial.x_prime = format_poly(xprime);
  trial.y_prime_prime = format_poly(yprime);

  Polynomial<Fp> x = make_variable<Fp>(Ap, ctx.xyz[0]);
  Polynomial<Fp> y = make_variable<Fp>(Ap, ctx.xyz[1]);
  Polynomial<Fp> z = make_variable<Fp>(Ap, ctx.xyz[2]);
  Polynomial<Fp> u = x * x - y * z;
  Polynomial<Fp> v = y * y - x * z;
  Polynomial<Fp> w = z * z - x * y;

  Polynomial<Fp> g1 = u + x * xprime;
  Polynomial<Fp> g2 = v + x * yprime;
  Polynomial<Fp> g3 = w - y * xprime - z * yprime;
  Ideal<Fp> Kpp = Ideal<Fp>::of(Ap, {g1, g2, g3});

  CertReport& rep = trial.report;
  rep.stage = "specialization";
  rep.field = field.to_string();
  rep.seed = static_cast<std::int64_t>(seed);

  std::int64_t cd = codim(Kpp);
  rep.add("codim-2", cd == 2, "codim=" + std::to_string(cd));

  GradedMu mu = min_gens_graded(Kpp);
  rep.add("mu-3", mu.mu == 3, "mu=" + std::to_string(mu.mu));

  const bool x_regular = ideal_equal(colon(Kpp, x), Kpp);
  rep.add("x-regular", x_regular,
          x_regular ? "K'' : x = K''" : "x is a zerodivisor mod K''");

  auto witness =
      hilbert_burch_witness<Fp>({{{x, z, -y}, {y, x + xprime, -z + yprime}}}, Kpp);
  CertReport hb = hilbert_burch_certify(witness);
  rep.add("hilbert-burch", hb.verdict == Verdict::certified,
          "resolution certification " + to_string(hb.verdict));

  rep.verdict = rep.all_clauses_pass() ? Verdict::certified : Verdict::failed;
  return trial;
}

}  // namespace hncert

#endif
