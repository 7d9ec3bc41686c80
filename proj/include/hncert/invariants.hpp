#ifndef HNCERT_INVARIANTS_HPP
#define HNCERT_INVARIANTS_HPP

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hncert/ideal_ops.hpp"
#include "hncert/parser.hpp"
#include "hncert/rational.hpp"
#include "hncert/report.hpp"

namespace hncert {

namespace detail {

// Minimal monomial generators of LT(I): leading monomials of the reduced
// basis. Throws on the unit ideal.
template <typename K>
std::vector<Monomial> leading_monomials(const Ideal<K>& I, const MonomialOrder& ord) {
  GroebnerBasis<K> G = buchberger(I, ord);
  std::vector<Monomial> lms;
  for (const auto& g : G.elements) {
    Monomial lm = g.leading_term(ord).mono;
    if (lm.is_one()) throw invalid_input_error("unit ideal");
    lms.push_back(std::move(lm));
  }
  return lms;
}

}  // namespace detail

// Krull dimension of R/I via the combinatorial characterization on the
// leading-term ideal: the largest variable subset S such that no leading
// monomial has its support inside S.
template <typename K>
std::int64_t krull_dim(const Ideal<K>& I, const MonomialOrder& ord) {
  const std::size_t n = I.ctx->nvars();
  if (n > 24) throw resource_error("dimension enumeration limited to 24 variables");
  std::vector<Monomial> lms;
  try {
    lms = detail::leading_monomials(I, ord);
  } catch (const invalid_input_error&) {
    throw invalid_input_error("dimension of the unit ideal is undefined");
  }
  std::vector<std::uint32_t> supports;
  for (const auto& m : lms) {
    std::uint32_t mask = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (m.exponent(v) > 0) mask |= (1u << v);
    }
    supports.push_back(mask);
  }
  std::int64_t best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool independent = true;
    for (std::uint32_t sup : supports) {
      if ((sup & ~s) == 0) {  // support contained in s
        independent = false;
        break;
      }
    }
    if (independent) best = std::max<std::int64_t>(best, __builtin_popcount(s));
  }
  return best;
}

template <typename K>
std::int64_t krull_dim(const Ideal<K>& I) {
  return krull_dim(I, I.ctx->default_order());
}

template <typename K>
std::int64_t codim(const Ideal<K>& I) {
  return static_cast<std::int64_t>(I.ctx->nvars()) - krull_dim(I);
}

// Number of standard monomials (the staircase complement of LT(I));
// equals dim_k R/I when that is finite.
template <typename K>
std::int64_t length_artinian(const Ideal<K>& I, const MonomialOrder& ord) {
  const std::size_t n = I.ctx->nvars();
  std::vector<Monomial> lms;
  try {
    lms = detail::leading_monomials(I, ord);
  } catch (const invalid_input_error&) {
    return 0;  // unit ideal: zero ring
  }
  // Artinian iff LT(I) contains a pure power of every variable.
  std::vector<int> bound(n, -1);
  for (const auto& m : lms) {
    std::size_t support_var = n;
    int support_size = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (m.exponent(v) > 0) {
        support_var = v;
        ++support_size;
      }
    }
    if (support_size == 1) {
      int e = m.exponent(support_var);
      if (bound[support_var] < 0 || e < bound[support_var]) bound[support_var] = e;
    }
  }
  double box = 1;
  for (std::size_t v = 0; v < n; ++v) {
    if (bound[v] < 0) {
      throw invalid_input_error("quotient is not Artinian (no pure power of " +
                                I.ctx->var_name(v) + " in LT(I))");
    }
    box *= bound[v];
  }
  if (box > 1e7) throw resource_error("staircase enumeration too large");

  std::vector<int> e(n, 0);
  std::int64_t count = 0;
  while (true) {
    Monomial m{std::vector<int>(e)};
    bool in_lt = false;
    for (const auto& lm : lms) {
      if (lm.divides(m)) {
        in_lt = true;
        break;
      }
    }
    if (!in_lt) ++count;
    // odometer over the box [0,bound)
    std::size_t v = 0;
    while (v < n && ++e[v] >= bound[v]) e[v++] = 0;
    if (v == n) break;
  }
  return count;
}

template <typename K>
std::int64_t length_artinian(const Ideal<K>& I) {
  return length_artinian(I, I.ctx->default_order());
}

// The two-variable length identity: parameters of the colength of
// (x^p, y^q, x^r y^s).
struct LengthFormulaCase {
  std::int64_t p, q, r, s;

  LengthFormulaCase(std::int64_t p_, std::int64_t q_, std::int64_t r_, std::int64_t s_)
      : p(p_), q(q_), r(r_), s(s_) {
    if (!(1 <= r && r < p && 1 <= s && s < q)) {
      throw invalid_input_error("length formula case requires 1<=r<p and 1<=s<q");
    }
  }

  std::int64_t predicted() const { return p * q - (p - r) * (q - s); }
};

// length(k[x,y]/(x^p, y^q, x^r y^s)) == pq - (p-r)(q-s)?
inline bool verify_length_formula(const LengthFormulaCase& c) {
  RingPtr ring = make_ring({"x", "y"}, FieldDesc::rationals());
  auto mono = [&](int ex, int ey) {
    return Polynomial<Rational>::monomial_term(ring, Monomial({ex, ey}),
                                               Rational::from_integer(1));
  };
  Ideal<Rational> J = Ideal<Rational>::of(
      ring, {mono(static_cast<int>(c.p), 0), mono(0, static_cast<int>(c.q)),
             mono(static_cast<int>(c.r), static_cast<int>(c.s))});
  return length_artinian(J) == c.predicted();
}

struct GradedMu {
  std::int64_t mu = 0;
  std::map<std::int64_t, std::int64_t> by_degree;

  std::string degrees_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [d, k] : by_degree) {
      for (std::int64_t i = 0; i < k; ++i) {
        if (!first) s += ",";
        s += std::to_string(d);
        first = false;
      }
    }
    return s + "}";
  }
};

namespace detail {

inline void enum_weighted(const RingContext& ring, std::size_t v, std::int64_t left,
                          std::vector<int>& e, std::vector<Monomial>& out) {
  if (v == ring.nvars()) {
    if (left == 0) out.emplace_back(std::vector<int>(e));
    return;
  }
  const std::int64_t w = ring.weights()[v];
  for (std::int64_t k = 0; k * w <= left; ++k) {
    e[v] = static_cast<int>(k);
    enum_weighted(ring, v + 1, left - k * w, e, out);
  }
  e[v] = 0;
}

// All monomials of the given weighted degree, in a deterministic order.
inline std::vector<Monomial> monomials_of_weighted_degree(const RingContext& ring,
                                                          std::int64_t d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  std::vector<int> e(ring.nvars(), 0);
  enum_weighted(ring, 0, d, e, out);
  return out;
}

template <typename K>
std::size_t row_rank(std::vector<std::vector<K>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const K inv = rows[rank][col].inverse();
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      const K factor = rows[r][col] * inv;
      for (std::size_t c2 = col; c2 < cols; ++c2) {
        rows[r][c2] -= factor * rows[rank][c2];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

// Graded Nakayama count: mu = sum_d dim I_d - dim (M·I)_d, computed by
// linear algebra on monomial bases per weighted degree. Requires positive
// weights (ring invariant) and homogeneous generators.
template <typename K>
GradedMu min_gens_graded(const Ideal<K>& I) {
  const RingContext& ring = *I.ctx;
  std::vector<std::int64_t> deg;
  for (const auto& g : I.gens) {
    WeightedDegree wd = weighted_degree(g);
    if (!wd.homogeneous) {
      throw invalid_input_error("minimal generator count requires homogeneous generators");
    }
    deg.push_back(wd.degree);
  }
  std::set<std::int64_t> degrees(deg.begin(), deg.end());

  GradedMu result;
  for (std::int64_t d : degrees) {
    std::vector<Monomial> basis = detail::monomials_of_weighted_degree(ring, d);
    std::map<std::vector<int>, std::size_t> col;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      col[std::vector<int>(basis[i].exponents().begin(), basis[i].exponents().end())] = i;
    }
    std::vector<std::vector<K>> full, sub;
    for (std::size_t gi = 0; gi < I.gens.size(); ++gi) {
      if (deg[gi] > d) continue;
      for (const Monomial& m : detail::monomials_of_weighted_degree(ring, d - deg[gi])) {
        Polynomial<K> p(I.ctx);
        p.add_scaled(I.gens[gi], K::from_integer(1, ring.field()), m);
        std::vector<K> row(basis.size());
        for (const auto& t : p.terms()) {
          auto it = col.find(
              std::vector<int>(t.mono.exponents().begin(), t.mono.exponents().end()));
          if (it == col.end()) {
            throw internal_inconsistency_error("graded slice bookkeeping failed");
          }
          row[it->second] = t.coeff;
        }
        full.push_back(row);
        if (!m.is_one()) sub.push_back(std::move(row));
      }
    }
    const std::int64_t mu_d = static_cast<std::int64_t>(detail::row_rank(std::move(full))) -
                              static_cast<std::int64_t>(detail::row_rank(std::move(sub)));
    if (mu_d > 0) {
      result.by_degree[d] = mu_d;
      result.mu += mu_d;
    }
  }
  return result;
}

// One check of the standard-base identity
//   J ∩ I^d = J_1 I^{d-δ_1} + ... + J_t I^{d-δ_t}
// for monomials in the designated regular-sequence variables, with I the
// ideal of those variables and I^r = R for r <= 0.
struct StandardBaseCase {
  RingPtr ring;
  std::vector<std::size_t> designated;
  std::vector<Monomial> monomials;
  int dmax = 0;

  StandardBaseCase(RingPtr ring_, std::vector<std::size_t> designated_,
                   std::vector<Monomial> monomials_, int dmax_)
      : ring(std::move(ring_)),
        designated(std::move(designated_)),
        monomials(std::move(monomials_)),
        dmax(dmax_) {
    if (designated.empty()) throw invalid_input_error("no designated variables");
    if (monomials.empty()) throw invalid_input_error("no monomials supplied");
    if (dmax < 0) throw invalid_input_error("negative degree cutoff");
    for (const auto& m : monomials) {
      if (m.nvars() != ring->nvars()) throw context_error("monomial length mismatch");
      if (m.is_one()) throw invalid_input_error("unit monomial not allowed");
      std::int64_t in_designated = 0;
      for (std::size_t v : designated) in_designated += m.exponent(v);
      if (in_designated != m.total_degree()) {
        throw invalid_input_error("monomial involves a non-designated variable");
      }
    }
  }

  std::int64_t degree_of(const Monomial& m) const { return m.total_degree(); }

  std::vector<std::int64_t> distinct_degrees() const {
    std::set<std::int64_t> s;
    for (const auto& m : monomials) s.insert(m.total_degree());
    return {s.begin(), s.end()};
  }
};

template <typename K>
bool standard_base_check(const StandardBaseCase& c) {
  const RingPtr& ring = c.ring;
  auto one = K::from_integer(1, ring->field());
  std::vector<Polynomial<K>> jgens;
  for (const auto& m : c.monomials) {
    jgens.push_back(Polynomial<K>::monomial_term(ring, m, one));
  }
  Ideal<K> J = Ideal<K>::of(ring, jgens);

  std::vector<Polynomial<K>> vars;
  for (std::size_t v : c.designated) vars.push_back(make_variable<K>(ring, v));
  Ideal<K> Ivars = Ideal<K>::of(ring, vars);
  IdealPowers<K> powers(Ivars, std::max(c.dmax, 12));

  const std::vector<std::int64_t> deltas = c.distinct_degrees();
  std::vector<Ideal<K>> groups;
  for (std::int64_t delta : deltas) {
    std::vector<Polynomial<K>> g;
    for (std::size_t i = 0; i < c.monomials.size(); ++i) {
      if (c.monomials[i].total_degree() == delta) g.push_back(jgens[i]);
    }
    groups.push_back(Ideal<K>::of(ring, std::move(g)));
  }

  for (int d = 0; d <= c.dmax; ++d) {
    Ideal<K> lhs = intersect(J, powers.power(d));
    Ideal<K> rhs = Ideal<K>::of(ring, {});
    for (std::size_t i = 0; i < groups.size(); ++i) {
      const int rest = d - static_cast<int>(deltas[i]);
      rhs = ideal_sum(rhs, rest <= 0 ? groups[i] : ideal_product(groups[i], powers.power(rest)));
    }
    if (!ideal_equal(lhs, rhs)) return false;
  }
  return true;
}

// Rees coefficient implication: for F homogeneous of degree d in the slack
// variables, F(z) ∈ I^{d+i} must force every coefficient of F into I^i
// (I = ideal of the substituted values). Returns the implication's truth.
template <typename K>
bool rees_coefficient_check(const Polynomial<K>& F, const std::vector<std::size_t>& slack_vars,
                            const std::vector<Polynomial<K>>& z_values, int i) {
  const RingPtr& ring = F.ring();
  if (slack_vars.size() != z_values.size()) {
    throw invalid_input_error("one substituted value per slack variable required");
  }
  if (i < 0) throw invalid_input_error("negative power");
  if (F.is_zero()) return true;  // vacuously

  std::set<std::size_t> slack(slack_vars.begin(), slack_vars.end());
  for (const auto& z : z_values) {
    for (const auto& t : z.terms()) {
      for (std::size_t v : slack) {
        if (t.mono.exponent(v) > 0) {
          throw invalid_input_error("substituted value involves a slack variable");
        }
      }
    }
  }

  // degree in the slack block, common to all terms
  auto slack_degree = [&](const Monomial& m) {
    std::int64_t d = 0;
    for (std::size_t v : slack) d += m.exponent(v);
    return d;
  };
  const std::int64_t d = slack_degree(F.terms()[0].mono);
  for (const auto& t : F.terms()) {
    if (slack_degree(t.mono) != d) {
      throw invalid_input_error("polynomial is not homogeneous in the slack variables");
    }
  }

  Ideal<K> I = Ideal<K>::of(ring, z_values);
  IdealPowers<K> powers(I, static_cast<int>(d) + i + 1);

  // F(z)
  std::vector<Polynomial<K>> images;
  for (std::size_t v = 0; v < ring->nvars(); ++v) images.push_back(make_variable<K>(ring, v));
  for (std::size_t k = 0; k < slack_vars.size(); ++k) images[slack_vars[k]] = z_values[k];
  Polynomial<K> evaluated = substitute(F, ring, images);

  if (!ideal_membership(evaluated, powers.power(static_cast<int>(d) + i))) {
    return true;  // hypothesis fails, implication holds
  }

  // group coefficients by slack monomial
  std::map<std::vector<int>, Polynomial<K>> coeffs;
  for (const auto& t : F.terms()) {
    std::vector<int> zpart(ring->nvars(), 0), xpart(ring->nvars(), 0);
    for (std::size_t v = 0; v < ring->nvars(); ++v) {
      if (slack.count(v)) {
        zpart[v] = t.mono.exponent(v);
      } else {
        xpart[v] = t.mono.exponent(v);
      }
    }
    auto [it, inserted] = coeffs.try_emplace(zpart, Polynomial<K>(ring));
    it->second += Polynomial<K>::monomial_term(ring, Monomial(std::move(xpart)), t.coeff);
  }
  GroebnerBasis<K> Gi = buchberger(powers.power(i));
  for (const auto& [zm, coeff] : coeffs) {
    if (!normal_form(coeff, Gi).is_zero()) return false;
  }
  return true;
}

// Witness for the Hilbert-Burch shape 0 -> R^2 -> R^3 -> R -> R/target:
// the 2x3 presentation matrix (psi2 transposed) and the signed-minor row.
template <typename K>
struct HilbertBurchWitness {
  std::array<std::array<Polynomial<K>, 3>, 2> matrix;  // rows of psi2^T
  std::array<Polynomial<K>, 3> psi1;
  Ideal<K> target;
};

namespace detail {

template <typename K>
std::array<Polynomial<K>, 3> two_by_three_minors(
    const std::array<std::array<Polynomial<K>, 3>, 2>& m) {
  return {m[0][1] * m[1][2] - m[0][2] * m[1][1],   // delete column 0
          m[0][0] * m[1][2] - m[0][2] * m[1][0],   // delete column 1
          m[0][0] * m[1][1] - m[0][1] * m[1][0]};  // delete column 2
}

}  // namespace detail

// Witness with the cofactor row (D0, -D1, D2), which satisfies
// psi1 * psi2 = 0 identically.
template <typename K>
HilbertBurchWitness<K> hilbert_burch_witness(
    std::array<std::array<Polynomial<K>, 3>, 2> matrix, Ideal<K> target) {
  for (const auto& row : matrix) {
    for (const auto& entry : row) {
      if (!is_homogeneous(entry)) {
        throw invalid_input_error("matrix entries must be homogeneous for the ring weights");
      }
    }
  }
  auto minors = detail::two_by_three_minors(matrix);
  return HilbertBurchWitness<K>{std::move(matrix),
                                {minors[0], -minors[1], minors[2]},
                                std::move(target)};
}

// The five Hilbert-Burch clauses; "certified" iff all pass. Failures are
// reported, not thrown.
template <typename K>
CertReport hilbert_burch_certify(const HilbertBurchWitness<K>& w) {
  const RingPtr& ring = w.target.ctx;
  CertReport report;
  report.stage = "hilbert-burch";
  report.field = ring->field().to_string();

  // (i) psi1 * psi2 = 0 (psi2 = matrix transposed: columns are matrix rows)
  bool syzygy = true;
  for (std::size_t c = 0; c < 2 && syzygy; ++c) {
    Polynomial<K> acc(ring);
    for (std::size_t k = 0; k < 3; ++k) acc += w.psi1[k] * w.matrix[c][k];
    syzygy = acc.is_zero();
  }
  report.add("syzygy-product-zero", syzygy, syzygy ? "psi1*psi2 = 0" : "psi1*psi2 != 0");

  // (ii) I2(matrix) equals the target ideal
  auto minors = detail::two_by_three_minors(w.matrix);
  Ideal<K> minor_ideal = Ideal<K>::of(ring, {minors[0], minors[1], minors[2]});
  const bool generates = ideal_equal(minor_ideal, w.target);
  report.add("minors-generate-target", generates,
             generates ? "I2(matrix) = target" : "I2(matrix) != target");

  // (iii) codim(target) = 2
  std::int64_t cd = -1;
  bool cd_ok = false;
  try {
    cd = codim(w.target);
    cd_ok = (cd == 2);
  } catch (const invalid_input_error&) {
    cd_ok = false;
  }
  report.add("target-codim-2", cd_ok, "codim=" + (cd >= 0 ? std::to_string(cd) : "undefined"));

  // (iv) Buchsbaum-Eisenbud rank condition at this size: codim(I2) >= 2
  bool rank_ok = false;
  std::string rank_witness;
  try {
    std::int64_t cd2 = codim(minor_ideal);
    rank_ok = (cd2 >= 2);
    rank_witness = "codim(I2)=" + std::to_string(cd2);
  } catch (const invalid_input_error&) {
    rank_ok = true;  // unit ideal: infinite grade
    rank_witness = "I2 is the unit ideal";
  }
  report.add("minor-codim-ge-2", rank_ok, rank_witness);

  // (v) minimality: no entry is a nonzero constant
  bool minimal = true;
  for (const auto& row : w.matrix) {
    for (const auto& entry : row) {
      if (!entry.is_zero() && entry.is_constant()) minimal = false;
    }
  }
  report.add("entries-nonunit", minimal,
             minimal ? "no constant entries" : "matrix has a nonzero constant entry");

  report.verdict = report.all_clauses_pass() ? Verdict::certified : Verdict::failed;
  return report;
}

}  // namespace hncert

#endif
