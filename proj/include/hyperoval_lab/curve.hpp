#ifndef HYPEROVAL_LAB_CURVE_HPP
#define HYPEROVAL_LAB_CURVE_HPP

// The curves f_k and g_k = f_k / ((x+y)(x+1)(y+1)), their singular points and
// tangent data, rational point counts, and the counting inequalities.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "embed.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "mpoly.hpp"
#include "parallel.hpp"
#include "taylor.hpp"
#include "upoly.hpp"

namespace hyperoval_lab {

inline constexpr unsigned kMaxCurveK = 64;

struct CurveParams {
  unsigned k = 0;
  unsigned i = 0;        // 2-adic valuation of k
  unsigned ell = 0;      // odd part
  unsigned m_split = 0;  // order of 2 mod ell
};

inline CurveParams curve_params(unsigned k) {
  if (k < 2 || k % 2 != 0) throw PreconditionError("k must be even (got " + std::to_string(k) + ")");
  CurveParams p;
  p.k = k;
  p.i = static_cast<unsigned>(std::countr_zero(k));
  p.ell = k >> p.i;
  p.m_split = order_of_two_mod(p.ell);
  return p;
}

namespace detail {

inline void check_build_k(unsigned k) {
  if (k < 4 || k > kMaxCurveK || k % 2 != 0)
    throw PreconditionError("k must be even with 4 <= k <= " + std::to_string(kMaxCurveK));
}

inline MPoly lin(unsigned nvars, unsigned a, int b) {
  // variable a plus variable b (b < 0 means the constant 1)
  const FieldCtx& f2 = make_field(1);
  MPoly p = MPoly::variable(f2, nvars, a);
  p += b < 0 ? MPoly::constant(f2, nvars, 1) : MPoly::variable(f2, nvars, static_cast<unsigned>(b));
  return p;
}

}  // namespace detail

/// f_k(x,y) = x y^k + y x^k + x^k + y^k + x + y over GF(2).
inline MPoly build_fk(unsigned k) {
  detail::check_build_k(k);
  MPoly f(make_field(1), 2);
  for (auto [a, b] : {std::pair{1u, k}, {k, 1u}, {k, 0u}, {0u, k}, {1u, 0u}, {0u, 1u}}) f.add_term(Exponents(a, b), 1);
  return f;
}

/// x y^k + y x^k + x z^k + z x^k + y z^k + z y^k.
inline MPoly build_fk3(unsigned k) {
  detail::check_build_k(k);
  MPoly f(make_field(1), 3);
  for (unsigned a = 0; a < 3; ++a)
    for (unsigned b = 0; b < 3; ++b) {
      if (a == b) continue;
      Exponents e;
      e.v[a] = 1;
      e.v[b] = static_cast<std::uint16_t>(k);
      f.add_term(e, 1);
    }
  return f;
}

/// g_k(x,y) by three exact divisions of f_k.
inline MPoly build_gk(unsigned k) {
  MPoly g = build_fk(k);
  try {
    g = exact_divide(g, detail::lin(2, 0, 1));
    g = exact_divide(g, detail::lin(2, 0, -1));
    g = exact_divide(g, detail::lin(2, 1, -1));
  } catch (const NotDivisible&) {
    throw ConsistencyError("build_gk: f_k is not divisible by (x+y)(x+1)(y+1)");
  }
  if (g.total_degree() != static_cast<int>(k) - 2) throw ConsistencyError("build_gk: unexpected degree");
  return g;
}

/// Homogeneous g_k(x,y,z) = f(x,y,z) / ((x+y)(x+z)(y+z)).
inline MPoly build_gk3(unsigned k) {
  MPoly g = build_fk3(k);
  try {
    g = exact_divide(g, detail::lin(3, 0, 1));
    g = exact_divide(g, detail::lin(3, 0, 2));
    g = exact_divide(g, detail::lin(3, 1, 2));
  } catch (const NotDivisible&) {
    throw ConsistencyError("build_gk3: not divisible by (x+y)(x+z)(y+z)");
  }
  return g;
}

/// w(x,y) = (x+y)(x+1)(y+1).
inline MPoly build_w() { return detail::lin(2, 0, 1) * detail::lin(2, 0, -1) * detail::lin(2, 1, -1); }

struct ReductionPolys {
  MPoly p;  // p(x,y,V) = g_k(x,y,x+V), V the third variable
  MPoly q;  // q(x,W) = p(x,x+W,0), W the second variable
};

/// Builds p and q and asserts p(x,y,0)(x+y)^2 = x^k+y^k and q(x,1) = x^k+(x+1)^k.
inline ReductionPolys reduction_polys(unsigned k) {
  const FieldCtx& f2 = make_field(1);
  const MPoly g3 = build_gk3(k);
  const MPoly x = MPoly::variable(f2, 3, 0), y = MPoly::variable(f2, 3, 1), v = MPoly::variable(f2, 3, 2);
  ReductionPolys r;
  r.p = g3.substitute(2, x + v);
  const MPoly p0 = r.p.substitute(2, MPoly(f2, 3)).with_nvars(2);
  const MPoly xk_yk = MPoly::term(f2, 2, Exponents(k, 0), 1) + MPoly::term(f2, 2, Exponents(0, k), 1);
  const MPoly xy = detail::lin(2, 0, 1);
  if (p0 * xy * xy != xk_yk) throw ConsistencyError("reduction_polys: p(x,y,0)(x+y)^2 != x^k+y^k");
  // q(x,W) = p0(x, x+W) with W in the second slot.
  const MPoly x2 = MPoly::variable(f2, 2, 0), w2 = MPoly::variable(f2, 2, 1);
  r.q = p0.substitute(1, x2 + w2);
  const MPoly q1 = r.q.substitute(1, MPoly::constant(f2, 2, 1));
  const MPoly x1 = MPoly::variable(f2, 2, 0) + MPoly::constant(f2, 2, 1);
  if (q1 != MPoly::term(f2, 2, Exponents(k, 0), 1) + x1.pow(k))
    throw ConsistencyError("reduction_polys: q(x,1) != x^k+(x+1)^k");
  return r;
}

// ---------------------------------------------------------------------------
// Singular points.

enum class PointType { I, II, III };

inline const char* type_name(PointType t) { return t == PointType::I ? "I" : t == PointType::II ? "II" : "III"; }

struct SingPoint {
  FFElem alpha, beta;
  PointType ptype = PointType::III;
  int m_f = 0;
  int m_g = 0;
  int expected_m_f = 0;
  int expected_m_g = 0;
  FFElem sigma, tau;
  bool tangent_power_ok = false;       // F_{2^i} = (sigma x + tau y)^(2^i)
  bool tangent_closed_form_ok = false;  // F_{2^i+1} = a^{-2^i} x^{2^i} y + b^{-2^i} y^{2^i} x
  bool tangent_squarefree = false;      // F_{2^i+1} squarefree
  unsigned tangent_distinct = 0;        // distinct linear factors of F_{2^i+1} over its splitting field
  unsigned tangent_field_degree = 0;    // that splitting field is GF(2^d)
  bool first_order_vanishes = false;    // F_0 = 0 and F_1 = 0
  MPoly g_lowest;                       // lowest homogeneous part of g_k at P (zero if m_g = 0)

  bool singular_on_g() const { return m_g >= 2; }
  bool table_ok() const { return m_f == expected_m_f && m_g == expected_m_g; }
};

inline PointType classify(const FFElem& a, const FFElem& b) {
  const bool a1 = a.is_one(), b1 = b.is_one();
  if (a1 && b1) return PointType::I;
  if (a1 || b1 || a == b) return PointType::II;
  return PointType::III;
}

inline std::pair<int, int> expected_multiplicities(PointType t, unsigned i) {
  const int p = 1 << i;
  switch (t) {
    case PointType::I: return {p + 1, p - 2};
    case PointType::II: return {p, p - 1};
    default: return {p, p};
  }
}

inline constexpr unsigned kMaxSplitDegree = 20;

/// Fills the tangent fields of P from the expansion of f_k at P.
inline void tangent_data(SingPoint& P, const CurveParams& cp, const HomComponents& hf, std::uint64_t seed = 0) {
  const FieldCtx& F = P.alpha.ctx();
  const unsigned i = cp.i, p2 = 1u << i;
  const std::uint64_t ex = static_cast<std::uint64_t>(p2) * (cp.ell - 1);
  const FFElem one = FFElem::one(F);
  P.sigma = (P.alpha.pow(ex) * (P.beta + one)).root_2pow(i);
  P.tau = (P.beta.pow(ex) * (P.alpha + one)).root_2pow(i);
  MPoly L(F, 2);
  L.add_term(Exponents(1, 0), P.sigma.bits());
  L.add_term(Exponents(0, 1), P.tau.bits());
  P.tangent_power_ok = hf.part(p2) == L.pow(p2);

  MPoly closed(F, 2);
  closed.add_term(Exponents(p2, 1), P.alpha.pow(p2).inverse().bits());
  closed.add_term(Exponents(1, p2), P.beta.pow(p2).inverse().bits());
  const MPoly F1 = hf.part(p2 + 1);
  P.tangent_closed_form_ok = F1 == closed;

  if (F1.is_zero()) return;
  const auto [h, ypow] = detail::dehomogenize_form(F1);
  P.tangent_squarefree = ypow <= 1 && gcd(h, h.derivative()).degree() <= 0;
  const unsigned d = form_splitting_degree(F1, seed);
  P.tangent_field_degree = d;
  if (d <= kMaxFieldDegree) {
    const FieldCtx& E = make_field(d);
    P.tangent_distinct = binary_form_factor(F1.embed_into(E), seed).distinct();
  }
}

/// All ell^2 singular points of f_k, over GF(2^m_split), ordered by (alpha, beta).
inline std::vector<SingPoint> singular_points(unsigned k, std::uint64_t seed = 0) {
  const CurveParams cp = curve_params(k);
  if (cp.m_split > kMaxSplitDegree) throw PreconditionError("singular_points: splitting field too large");
  const FieldCtx& F = make_field(cp.m_split);
  const MPoly fk = build_fk(k), gk = build_gk(k);
  const auto roots = ell_th_roots(cp.ell, F);
  std::vector<SingPoint> out;
  for (const auto& a : roots)
    for (const auto& b : roots) {
      SingPoint P;
      P.alpha = a;
      P.beta = b;
      P.ptype = classify(a, b);
      std::tie(P.expected_m_f, P.expected_m_g) = expected_multiplicities(P.ptype, cp.i);
      const HomComponents hf = taylor_shift(fk, a, b), hg = taylor_shift(gk, a, b);
      P.m_f = hf.multiplicity();
      P.m_g = hg.multiplicity();
      P.first_order_vanishes = hf.part(0).is_zero() && hf.part(1).is_zero();
      P.g_lowest = hg.part(static_cast<std::size_t>(std::max(0, P.m_g)));
      tangent_data(P, cp, hf, seed);
      out.push_back(std::move(P));
    }
  return out;
}

struct TypeCounts {
  unsigned type1 = 0, type2 = 0, type3 = 0;
};

inline TypeCounts count_types(const std::vector<SingPoint>& pts) {
  TypeCounts c;
  for (const auto& p : pts) {
    if (p.ptype == PointType::I) ++c.type1;
    else if (p.ptype == PointType::II) ++c.type2;
    else ++c.type3;
  }
  return c;
}

inline TypeCounts expected_type_counts(unsigned ell) { return {1, 3 * (ell - 1), (ell - 1) * (ell - 2)}; }

struct InfinityCheck {
  bool singular_at_infinity = false;
  unsigned common_degree = 0;  // degree of gcd over t for points (1:t:0)
  bool point_010_singular = false;
};

/// Singular points of a homogeneous trivariate G on the line z = 0.
inline InfinityCheck singular_at_infinity(const MPoly& G) {
  if (G.nvars() != 3 || !G.is_homogeneous()) throw PreconditionError("singular_at_infinity: need homogeneous trivariate");
  const FieldCtx& F = G.ctx();
  const std::vector<MPoly> polys{G, G.derivative(0), G.derivative(1), G.derivative(2)};
  InfinityCheck r;
  r.point_010_singular = true;
  for (const auto& p : polys)
    if (p.eval(std::vector<Bits>{0, 1, 0}) != 0) r.point_010_singular = false;
  UPoly g(F);
  for (const auto& p : polys) {
    std::vector<Bits> c(static_cast<std::size_t>(std::max(0, p.total_degree())) + 1, 0);
    for (const auto& [e, v] : p.terms())
      if (e[2] == 0) c[e[1]] ^= v;
    g = gcd(g, UPoly(F, c));
  }
  // All restrictions zero means every point of z = 0 is singular.
  r.common_degree = g.is_zero() ? ~0u : static_cast<unsigned>(std::max(0, g.degree()));
  r.singular_at_infinity = r.point_010_singular || g.is_zero() || g.degree() > 0;
  return r;
}

// ---------------------------------------------------------------------------
// Rational points.

/// Number of projective zeros over GF(2^e) of a curve given as a bivariate polynomial
/// (homogenized first) or a homogeneous trivariate polynomial.
inline std::uint64_t count_points(const MPoly& f, unsigned e, unsigned threads = 0) {
  if (e < 1 || e > 20) throw PreconditionError("count_points: need 1 <= e <= 20");
  const FieldCtx& E = make_field(e);
  const MPoly G = (f.nvars() == 2 ? f.homogenize() : f).embed_into(E);
  if (G.nvars() != 3 || !G.is_homogeneous()) throw PreconditionError("count_points: need a homogeneous curve");
  const std::uint64_t q = E.size();
  const int D = G.total_degree();
  if (D <= 0) throw PreconditionError("count_points: constant polynomial");

  // Affine part z = 1: group terms by their y-power.
  std::vector<std::vector<std::pair<unsigned, Bits>>> by_y(static_cast<std::size_t>(D) + 1);
  for (const auto& [ex, c] : G.terms()) by_y[ex[1]].emplace_back(ex[0], c);

  const std::size_t chunks = std::min<std::uint64_t>(q, 256);
  std::vector<std::uint64_t> partial(chunks, 0);
  parallel_for(chunks, threads, [&](std::size_t ci) {
    std::vector<Bits> xp(static_cast<std::size_t>(D) + 1), coeff(static_cast<std::size_t>(D) + 1);
    std::uint64_t acc = 0;
    for (std::uint64_t x = ci; x < q; x += chunks) {
      xp[0] = 1;
      for (int d = 1; d <= D; ++d) xp[d] = E.mul(xp[d - 1], static_cast<Bits>(x));
      for (int j = 0; j <= D; ++j) {
        Bits s = 0;
        for (const auto& [i, c] : by_y[j]) s ^= E.mul(c, xp[i]);
        coeff[j] = s;
      }
      const UPoly u(E, coeff);
      acc += u.is_zero() ? q : count_distinct_roots(u);
    }
    partial[ci] = acc;
  });
  std::uint64_t n = 0;
  for (auto v : partial) n += v;

  // Line at infinity: (1:t:0) and (0:1:0).
  std::vector<Bits> top(static_cast<std::size_t>(D) + 1, 0);
  for (const auto& [ex, c] : G.terms())
    if (ex[2] == 0) top[ex[1]] ^= c;
  const UPoly t(E, top);
  n += t.is_zero() ? q : count_distinct_roots(t);
  if (G.eval(std::vector<Bits>{0, 1, 0}) == 0) ++n;
  return n;
}

/// Zeros of the homogeneous g_k over GF(2^e) with coordinates not all distinct.
/// Throws ConsistencyError if the count exceeds 3k-2.
inline std::uint64_t degenerate_count(unsigned k, unsigned e) {
  if (e < 1 || e > 20) throw PreconditionError("degenerate_count: need 1 <= e <= 20");
  const FieldCtx& E = make_field(e);
  const MPoly G = build_gk3(k).embed_into(E);
  const Bits q = static_cast<Bits>(E.size() - 1);
  std::vector<std::array<Bits, 3>> pts;
  auto add = [&pts](Bits a, Bits b, Bits c) {
    std::array<Bits, 3> p{a, b, c};
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  };
  // Representatives with first nonzero coordinate 1.
  for (Bits z = 0;; ++z) {
    add(1, 1, z);  // x = y
    add(1, z, 1);  // x = z
    if (z == q) break;
  }
  for (Bits x = 1;; ++x) {  // y = z with x != 0: (x:1:1) ~ (1:1/x:1/x)
    const Bits ix = E.inv(x);
    add(1, ix, ix);
    if (x == q) break;
  }
  add(0, 0, 1);
  add(0, 1, 0);
  add(1, 0, 0);
  add(0, 1, 1);
  std::uint64_t n = 0;
  for (const auto& p : pts)
    if (G.eval(std::vector<Bits>{p[0], p[1], p[2]}) == 0) ++n;
  if (n > 3ull * k - 2) throw ConsistencyError("degenerate_count exceeds 3k-2 at k=" + std::to_string(k));
  return n;
}

// ---------------------------------------------------------------------------
// Weil-type bound |N - 2^e| < (D-1)(D-2) 2^(e/2) + D^2 for a curve of degree D.

/// Exact test of |n - 2^e| < (D-1)(D-2) 2^(e/2) + D^2.
inline bool weil_bound_holds(std::uint64_t n, unsigned e, unsigned D) {
  using i128 = __int128;
  const i128 A = static_cast<i128>(D - 1) * (D - 2), B = static_cast<i128>(D) * D;
  const i128 dev = n > (std::uint64_t{1} << e) ? static_cast<i128>(n - (std::uint64_t{1} << e))
                                                : static_cast<i128>((std::uint64_t{1} << e) - n);
  // dev - B < A 2^(e/2)
  const i128 lhs = dev - B;
  if (lhs < 0) return true;
  if (e % 2 == 0) return lhs < A * (i128{1} << (e / 2));
  return lhs * lhs < A * A * (i128{1} << e);
}

/// True iff 2^e - A 2^(e/2) - B > slack, with A = (D-1)(D-2), B = D^2, exactly.
inline bool weil_lower_exceeds(unsigned e, unsigned D, std::uint64_t slack) {
  using i128 = __int128;
  const i128 A = static_cast<i128>(D - 1) * (D - 2), B = static_cast<i128>(D) * D;
  const i128 L = (i128{1} << e) - B - static_cast<i128>(slack);
  if (L <= 0) return false;
  if (e % 2 == 0) return L > A * (i128{1} << (e / 2));
  return L * L > A * A * (i128{1} << e);
}

/// Least e0 such that the lower bound exceeds `slack` for every e >= e0.
inline unsigned weil_threshold(unsigned D, std::uint64_t slack) {
  // Beyond e = 60 the exact squared comparison could overflow; for D <= 200 the
  // lower bound is increasing well before that.
  if (D < 1 || D > 200) throw PreconditionError("weil_threshold: degree out of range");
  constexpr unsigned kScan = 60;
  unsigned last_fail = 0;
  for (unsigned e = 1; e <= kScan; ++e)
    if (!weil_lower_exceeds(e, D, slack)) last_fail = e;
  if (last_fail == kScan) throw ConsistencyError("weil_threshold: no threshold found");
  return last_fail + 1;
}

// ---------------------------------------------------------------------------
// Counting inequalities. All quantities are scaled by 4 so that i = 0 stays integral.

struct InequalityRecord {
  unsigned i = 0;
  unsigned ell = 0;
  std::int64_t first_x4 = 0;  // 4 [ (2^{2i-2} - 2^i)(l^2-1) + 2^{i+1}(l-1) ]
  bool first_positive = false;
  std::int64_t second_lhs_x4 = 0;  // 4 deg(g_k)^2/4 = (2^i l - 2)^2
  std::int64_t second_rhs_x4 = 0;  // 4 [ (2^{i-1}-1)(2^i-3) + 2^i(l-1)(l-2) ]
  bool second_holds = false;
  std::int64_t second_reduced_lhs_x4 = 0;  // 4 * 2^{2i-2}(l^2-2)
  std::int64_t second_reduced_rhs_x4 = 0;  // 4 [ 2^i(l-1)^2 - 3 2^{i-1} ], constant term dropped
  bool second_reduced_holds = false;
  bool second_reduced_exact_holds = false;  // same with the dropped +2 restored
  bool l1_branch_holds = false;         // 2^{i-2} < 3/2, i.e. 2^i < 6
};

inline InequalityRecord counting_inequalities(unsigned i, unsigned ell) {
  if (i > 20) throw PreconditionError("counting_inequalities: i must be at most 20");
  if (ell % 2 == 0 || ell > 999) throw PreconditionError("counting_inequalities: ell must be odd and at most 999");
  const std::int64_t p = std::int64_t{1} << i, l = ell;
  InequalityRecord r;
  r.i = i;
  r.ell = ell;
  r.first_x4 = (p * p - 4 * p) * (l * l - 1) + 8 * p * (l - 1);
  r.first_positive = r.first_x4 > 0;
  r.second_lhs_x4 = (p * l - 2) * (p * l - 2);
  r.second_rhs_x4 = 2 * (p - 2) * (p - 3) + 4 * p * (l - 1) * (l - 2);
  r.second_holds = r.second_lhs_x4 > r.second_rhs_x4;
  r.second_reduced_lhs_x4 = p * p * (l * l - 2);
  r.second_reduced_rhs_x4 = 4 * p * (l - 1) * (l - 1) - 6 * p;
  r.second_reduced_holds = r.second_reduced_lhs_x4 > r.second_reduced_rhs_x4;
  r.second_reduced_exact_holds = r.second_reduced_lhs_x4 > r.second_reduced_rhs_x4 + 8;
  r.l1_branch_holds = p < 6;
  return r;
}

// ---------------------------------------------------------------------------
// Aggregate per-k report.

struct CurveReport {
  CurveParams params;
  std::vector<SingPoint> points;
  TypeCounts counts, expected_counts;
  bool counts_ok = false;
  bool multiplicities_ok = false;
  bool tangents_ok = false;  // power form, closed form, squarefree with 2^i+1 distinct lines
  InfinityCheck infinity;
};

inline CurveReport curve_report(unsigned k, std::uint64_t seed = 0) {
  CurveReport r;
  r.params = curve_params(k);
  r.points = singular_points(k, seed);
  r.counts = count_types(r.points);
  r.expected_counts = expected_type_counts(r.params.ell);
  r.counts_ok = r.counts.type1 == r.expected_counts.type1 && r.counts.type2 == r.expected_counts.type2 &&
                r.counts.type3 == r.expected_counts.type3;
  r.multiplicities_ok = true;
  r.tangents_ok = true;
  const unsigned lines = (1u << r.params.i) + 1;
  for (const auto& P : r.points) {
    r.multiplicities_ok = r.multiplicities_ok && P.table_ok();
    r.tangents_ok = r.tangents_ok && P.tangent_power_ok && P.tangent_closed_form_ok && P.tangent_squarefree &&
                    P.tangent_distinct == lines;
  }
  r.infinity = singular_at_infinity(build_gk3(k));
  return r;
}

}  // namespace hyperoval_lab

#endif  // HYPEROVAL_LAB_CURVE_HPP
