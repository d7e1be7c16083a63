#ifndef HYPEROVAL_LAB_VERIFY_HPP
#define HYPEROVAL_LAB_VERIFY_HPP

// End-to-end verification pipeline: one check per acceptance criterion, with the
// k and e ranges clipped to caller-supplied maxima.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "absfactor.hpp"
#include "curve.hpp"
#include "hyperoval.hpp"
#include "intersect.hpp"
#include "weil.hpp"

namespace hyperoval_lab {

struct VerifyOptions {
  unsigned k_max = 40;
  unsigned e_max = 12;
  unsigned i_max = 10;
  unsigned ell_max = 99;
  unsigned threads = 0;
  std::uint64_t seed = 0;
  bool fail_fast = true;
};

struct CriterionResult {
  unsigned id = 0;
  std::string title;
  bool passed = false;
  std::size_t checks = 0;
  std::string detail;  // first violation, or a summary
};

namespace detail {

struct Check {
  CriterionResult r;
  bool fail(const std::string& what) {
    if (r.passed) {
      r.passed = false;
      r.detail = what;
    }
    return false;
  }
  bool expect(bool ok, const std::string& what) {
    ++r.checks;
    return ok ? true : fail(what);
  }
};

inline std::string ke(unsigned k, unsigned e) { return "k=" + std::to_string(k) + " e=" + std::to_string(e); }

inline std::string pt(const FFElem& a, const FFElem& b) { return "P=(" + a.to_string() + "," + b.to_string() + ")"; }

inline std::vector<unsigned> clip(std::vector<unsigned> ks, unsigned k_max) {
  ks.erase(std::remove_if(ks.begin(), ks.end(), [k_max](unsigned k) { return k > k_max; }), ks.end());
  return ks;
}

inline CriterionResult c1_segre_powers(const VerifyOptions& o) {
  Check c{{1, "k=2^i hyperoval law", true, 0, {}}};
  for (unsigned i = 1; i <= 4; ++i) {
    const unsigned k = 1u << i;
    if (k > o.k_max) continue;
    for (unsigned e = 1; e <= std::min(8u, o.e_max); ++e)
      if (!c.expect(perm_poly_test(k, e).is_hyperoval == (std::gcd(i, e) == 1), ke(k, e))) return c.r;
  }
  return c.r;
}

inline CriterionResult c2_segre_six(const VerifyOptions& o) {
  Check c{{2, "k=6 hyperoval law", true, 0, {}}};
  if (6 > o.k_max) return c.r;
  for (unsigned e = 1; e <= std::min(9u, o.e_max); ++e)
    if (!c.expect(perm_poly_test(6, e).is_hyperoval == (e % 2 == 1), ke(6, e))) return c.r;
  return c.r;
}

inline CriterionResult c3_cross_oracle(const VerifyOptions& o) {
  Check c{{3, "determinant test agrees with permutation test", true, 0, {}}};
  for (unsigned k = 2; k <= std::min(12u, o.k_max); k += 2)
    for (unsigned e = 1; e <= std::min(5u, o.e_max); ++e)
      if (!c.expect(determinant_test(k, e).is_hyperoval == perm_poly_test(k, e).is_hyperoval, ke(k, e))) return c.r;
  return c.r;
}

inline CriterionResult c4_construction(const VerifyOptions& o) {
  Check c{{4, "construction identity and degree of g_k", true, 0, {}}};
  const FieldCtx& f2 = make_field(1);
  const MPoly x = MPoly::variable(f2, 2, 0), y = MPoly::variable(f2, 2, 1), one = MPoly::constant(f2, 2, 1);
  for (unsigned k = 4; k <= std::min(40u, o.k_max); k += 2) {
    const MPoly g = build_gk(k);
    if (!c.expect((x + y) * (x + one) * (y + one) * g == build_fk(k), "k=" + std::to_string(k) + " product")) return c.r;
    if (!c.expect(g.total_degree() == static_cast<int>(k) - 2, "k=" + std::to_string(k) + " degree")) return c.r;
  }
  return c.r;
}

inline CriterionResult c5_reductions(const VerifyOptions& o) {
  Check c{{5, "reduction identities and degenerate-point bound", true, 0, {}}};
  for (unsigned k = 4; k <= std::min(40u, o.k_max); k += 2) {
    try {
      (void)reduction_polys(k);  // asserts both identities
      ++c.r.checks;
    } catch (const ConsistencyError& e) {
      c.fail("k=" + std::to_string(k) + ": " + e.what());
      return c.r;
    }
  }
  for (unsigned k = 4; k <= std::min(12u, o.k_max); k += 2)
    for (unsigned e = 1; e <= std::min(10u, o.e_max); ++e) {
      const std::uint64_t n = degenerate_count(k, e);
      if (!c.expect(n <= 3ull * k - 2, ke(k, e))) return c.r;
    }
  return c.r;
}

inline const std::vector<unsigned> kTableKs = {4, 6, 8, 10, 12, 20, 24};

inline CriterionResult c6_table(const VerifyOptions& o) {
  Check c{{6, "singular point table and no singular points at infinity", true, 0, {}}};
  for (unsigned k : clip(kTableKs, o.k_max)) {
    const CurveReport r = curve_report(k, o.seed);
    const std::string ks = "k=" + std::to_string(k);
    if (!c.expect(r.counts_ok, ks + " type counts")) return c.r;
    for (const auto& P : r.points)
      if (!c.expect(P.table_ok(), ks + " multiplicity at " + pt(P.alpha, P.beta))) return c.r;
    if (!c.expect(!r.infinity.singular_at_infinity, ks + " singular at infinity")) return c.r;
  }
  return c.r;
}

inline CriterionResult c7_tangents(const VerifyOptions& o) {
  Check c{{7, "tangent cone lemmas", true, 0, {}}};
  for (unsigned k : clip(kTableKs, o.k_max)) {
    const CurveParams cp = curve_params(k);
    for (const auto& P : singular_points(k, o.seed)) {
      const std::string where = "k=" + std::to_string(k) + " " + pt(P.alpha, P.beta);
      if (!c.expect(P.tangent_power_ok, where + " F_{2^i} power form")) return c.r;
      if (!c.expect(P.tangent_closed_form_ok, where + " F_{2^i+1} closed form")) return c.r;
      if (!c.expect(P.tangent_squarefree && P.tangent_distinct == (1u << cp.i) + 1, where + " F_{2^i+1} lines"))
        return c.r;
    }
  }
  return c.r;
}

inline CriterionResult c8_factorizations(const VerifyOptions& o) {
  Check c{{8, "closed-form factorizations", true, 0, {}}};
  for (unsigned k : clip({4, 8, 16, 6}, o.k_max))
    if (!c.expect(verify_segre_factorizations(k), "k=" + std::to_string(k))) return c.r;
  if (6 <= o.k_max) {
    const BiFactorization fz = factor_over(build_gk(6), make_field(2), o.seed);
    std::vector<MPoly> expect{segre_A(), segre_B()};
    std::sort(expect.begin(), expect.end(), canonical_less);
    bool same = fz.factors.size() == 2;
    for (std::size_t n = 0; same && n < 2; ++n) same = fz.factors[n].factor == expect[n] && fz.factors[n].multiplicity == 1;
    c.expect(same, "k=6 factors over GF(4) differ from A, B");
  }
  return c.r;
}

inline CriterionResult c9_bezout(const VerifyOptions& o) {
  Check c{{9, "Bezout audit", true, 0, {}}};
  if (6 <= o.k_max) {
    const BezoutAudit a = bezout_audit({segre_A(), segre_B()}, 1, o.seed);
    const PairAudit& p = a.pairs.at(0);
    if (!c.expect(p.total == 4 && p.degree_product == 4, "k=6 total " + std::to_string(p.total))) return c.r;
    if (!c.expect(p.records.size() == 2, "k=6 expected two common points")) return c.r;
    for (const auto& r : p.records) {
      const std::string where = "k=6 " + pt(r.point.c[0], r.point.c[1]);
      if (!c.expect(!r.point.at_infinity() && classify(r.point.c[0], r.point.c[1]) == PointType::III, where + " type"))
        return c.r;
      if (!c.expect(r.value == 2, where + " I=" + std::to_string(r.value))) return c.r;
    }
  }
  for (unsigned k : clip({4, 8}, o.k_max)) {
    const GkBezoutAudit a = bezout_audit_k(k, o.threads, o.seed);
    for (const auto& p : a.audit.pairs) {
      const std::string where = "k=" + std::to_string(k) + " pair " + std::to_string(p.u_id) + "," + std::to_string(p.v_id);
      if (!c.expect(p.total == 1 && p.records.size() == 1, where + " total")) return c.r;
      const auto& q = p.records[0].point;
      if (!c.expect(q.c[0].is_one() && q.c[1].is_one() && q.c[2].is_one(), where + " point is not (1,1)")) return c.r;
    }
  }
  return c.r;
}

inline CriterionResult c10_verdicts(const VerifyOptions& o) {
  Check c{{10, "absolute irreducibility verdicts", true, 0, {}}};
  std::vector<unsigned> ks;
  for (unsigned k = 4; k <= std::min(36u, o.k_max); k += 2) ks.push_back(k);
  std::vector<VerdictRecord> v(ks.size());
  parallel_for(ks.size(), o.threads, [&](std::size_t n) { v[n] = abs_irr_verdict(ks[n], o.seed); });
  const std::vector<unsigned> a_set{10, 14, 18, 22, 26, 30}, not_c{12, 20, 24, 28, 36}, c_set{4, 6, 8, 16, 32};
  auto has = [](const std::vector<unsigned>& s, unsigned k) { return std::find(s.begin(), s.end(), k) != s.end(); };
  for (std::size_t n = 0; n < ks.size(); ++n) {
    const unsigned k = ks[n];
    const std::string where = "k=" + std::to_string(k) + " verdict " + std::string(1, verdict_letter(v[n].verdict));
    if (has(a_set, k) && !c.expect(v[n].verdict == AbsVerdict::AbsolutelyIrreducible, where)) return c.r;
    if (has(not_c, k) && !c.expect(v[n].verdict != AbsVerdict::Neither, where)) return c.r;
    if (!c.expect((v[n].verdict == AbsVerdict::Neither) == has(c_set, k), where)) return c.r;
    if (!c.expect(v[n].degrees_ok && v[n].galois_ok && v[n].tree.expand() == build_gk(k), where + " tree invariants"))
      return c.r;
  }
  return c.r;
}

inline CriterionResult c11_weil(const VerifyOptions& o) {
  Check c{{11, "Weil threshold for k=10", true, 0, {}}};
  if (10 > o.k_max) return c.r;
  const WeilReport w = weil_report(10, std::min(12u, o.e_max), o.threads, o.seed);
  if (!c.expect(w.certified && w.degree == 8, "k=10 certified factor")) return c.r;
  if (!c.expect(w.e0 && *w.e0 == 11, "k=10 e0=" + (w.e0 ? std::to_string(*w.e0) : std::string("none")))) return c.r;
  for (const auto& r : w.counts)
    if (!c.expect(r.bound_ok && *r.bound_ok, ke(10, r.e) + " N_e=" + std::to_string(r.n_gk))) return c.r;
  return c.r;
}

inline CriterionResult c12_inequalities(const VerifyOptions& o) {
  Check c{{12, "counting inequality scans", true, 0, {}}};
  for (unsigned i = 1; i <= o.i_max; ++i)
    for (unsigned ell = 1; ell <= o.ell_max; ell += 2) {
      const InequalityRecord r = counting_inequalities(i, ell);
      const bool expect_nonpos = ell == 1 || (i == 1 && ell == 3);
      const std::string where = "i=" + std::to_string(i) + " ell=" + std::to_string(ell);
      if (!c.expect(r.first_positive != expect_nonpos, where + " first inequality")) return c.r;
      if (ell == 1 && !c.expect(r.l1_branch_holds == (i <= 2), where + " ell=1 branch")) return c.r;
    }
  return c.r;
}

inline CriterionResult c13_axioms(const VerifyOptions& o) {
  Check c{{13, "intersection multiplicity axioms", true, 0, {}}};
  std::mt19937_64 rng(o.seed ^ 0x9e3779b97f4a7c15ull);
  auto curve = [&rng](const FieldCtx& f, unsigned maxdeg, bool origin) {
    for (;;) {
      MPoly p(f, 2);
      const unsigned terms = 2 + rng() % 5;
      for (unsigned t = 0; t < terms; ++t) {
        const unsigned d = 1 + rng() % maxdeg, i = rng() % (d + 1);
        p.add_term(Exponents(i, d - i), static_cast<Bits>(1 + rng() % f.unit_group_order()));
      }
      if (!origin) p.add_term(Exponents{}, static_cast<Bits>(1 + rng() % f.unit_group_order()));
      if (p.total_degree() >= 1) return p;
    }
  };
  auto coprime = [](const MPoly& u, const MPoly& v) {
    const BiPoly g = gcd(BiPoly::from_mpoly(u), BiPoly::from_mpoly(v));
    return g.deg_x() <= 0 && g.deg_y() <= 0;
  };
  unsigned done = 0;
  while (done < 100) {
    const FieldCtx& f = make_field(1 + done % 4);
    const MPoly u = curve(f, 3, true), v = curve(f, 3, true), w = curve(f, 2, rng() % 2 == 0);
    if (u.total_degree() > 4 || v.total_degree() > 4 || !coprime(u, v * w)) continue;
    ++done;
    const FFElem z = FFElem::zero(f);
    const std::string where = "pair " + std::to_string(done) + " u=" + u.to_string() + " v=" + v.to_string();
    const auto I = [&](const MPoly& a, const MPoly& b, const FFElem& p, const FFElem& q) {
      return intersection_number(a, b, p, q).value;
    };
    const unsigned iuv = I(u, v, z, z);
    if (!c.expect(I(v, u, z, z) == iuv, where + " symmetry")) return c.r;
    if (!c.expect(I(u, v * w, z, z) == iuv + I(u, w, z, z), where + " additivity")) return c.r;
    if (!c.expect(I(u, v + w * u, z, z) == iuv, where + " v+wu")) return c.r;
    const FFElem a(f, rng() & f.unit_group_order()), b(f, rng() & f.unit_group_order());
    const MPoly xs = MPoly::variable(f, 2, 0) + MPoly::constant(f, 2, a.bits());
    const MPoly ys = MPoly::variable(f, 2, 1) + MPoly::constant(f, 2, b.bits());
    if (!c.expect(I(u.substitute(0, xs).substitute(1, ys), v.substitute(0, xs).substitute(1, ys), a, b) == iuv,
                  where + " translation"))
      return c.r;
    const int mu = multiplicity_at(u, z, z), mv = multiplicity_at(v, z, z);
    if (!c.expect(iuv >= static_cast<unsigned>(mu * mv), where + " lower bound")) return c.r;
    const bool disjoint = poly_gcd(u.homogeneous_part(static_cast<unsigned>(mu)),
                                   v.homogeneous_part(static_cast<unsigned>(mv))).total_degree() == 0;
    if (!c.expect((iuv == static_cast<unsigned>(mu * mv)) == disjoint, where + " tangent cone equality")) return c.r;
  }
  return c.r;
}

}  // namespace detail

using CriterionFn = std::function<CriterionResult(const VerifyOptions&)>;

inline std::vector<CriterionFn> criteria() {
  return {detail::c1_segre_powers, detail::c2_segre_six, detail::c3_cross_oracle, detail::c4_construction,
          detail::c5_reductions,   detail::c6_table,     detail::c7_tangents,     detail::c8_factorizations,
          detail::c9_bezout,       detail::c10_verdicts, detail::c11_weil,        detail::c12_inequalities,
          detail::c13_axioms};
}

/// Runs the criteria in order; with fail_fast it stops after the first failure.
/// Exceptions inside a criterion count as failures.
inline std::vector<CriterionResult> verify_paper(const VerifyOptions& o,
                                                 const std::function<void(const CriterionResult&)>& on_result = {}) {
  std::vector<CriterionResult> out;
  unsigned id = 0;
  for (const auto& fn : criteria()) {
    ++id;
    CriterionResult r;
    try {
      r = fn(o);
    } catch (const std::exception& e) {
      r.id = id;
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    if (on_result) on_result(r);
    out.push_back(r);
    if (!r.passed && o.fail_fast) break;
  }
  return out;
}

}  // namespace hyperoval_lab

#endif  // HYPEROVAL_LAB_VERIFY_HPP
