#ifndef HYPEROVAL_LAB_INTERSECT_HPP
#define HYPEROVAL_LAB_INTERSECT_HPP

// Intersection multiplicities of plane curves and Bezout audits.

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "absfactor.hpp"
#include "bivariate.hpp"
#include "curve.hpp"
#include "embed.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "mpoly.hpp"
#include "parallel.hpp"
#include "taylor.hpp"
#include "upoly.hpp"

namespace hyperoval_lab {

struct IntersectionNumber {
  bool infinite = false;  // common component through the point
  unsigned value = 0;
};

/// Smallest field containing GF(2^a) and GF(2^b).
inline const FieldCtx& join_fields(const FieldCtx& a, const FieldCtx& b) {
  const std::uint64_t d = lcm_u64(a.degree(), b.degree());
  if (d > kMaxFieldDegree) throw SplittingFieldTooSmall("field join beyond GF(2^32)", static_cast<unsigned>(d));
  return make_field(static_cast<unsigned>(d));
}

namespace detail {

inline MPoly as_plane(const MPoly& u) {
  if (u.nvars() > 2 && u.degree_in(2) > 0) throw PreconditionError("expected a polynomial in x, y");
  return u.with_nvars(2);
}

inline UPoly on_x_axis(const MPoly& h) {
  std::vector<Bits> c(static_cast<std::size_t>(std::max(0, h.degree_in(0))) + 1, 0);
  for (const auto& [e, v] : h.terms())
    if (e[1] == 0) c[e[0]] = v;
  return UPoly(h.ctx(), std::move(c));
}

inline MPoly divide_by_y(const MPoly& h) {
  MPoly r(h.ctx(), 2);
  for (const auto& [e, v] : h.terms()) r.add_term(Exponents(e[0], e[1] - 1), v);
  return r;
}

inline unsigned x_order(const UPoly& u) {
  unsigned k = 0;
  while (u.coeff(k) == 0) ++k;
  return k;
}

inline unsigned intersection_step_cap(const MPoly& u, const MPoly& v) {
  const unsigned du = static_cast<unsigned>(std::max(1, u.total_degree()));
  const unsigned dv = static_cast<unsigned>(std::max(1, v.total_degree()));
  return 4 * (du + 1) * (dv + 1);
}

/// I((0,0), F, G) for F, G without a common component through the origin.
inline unsigned fulton_at_origin(MPoly F, MPoly G) {
  const unsigned cap = intersection_step_cap(F, G);
  unsigned total = 0;
  for (unsigned step = 0;; ++step) {
    if (step > cap) throw ConsistencyError("intersection_number: reduction did not terminate");
    if (F.coeff(Exponents{}) != 0 || G.coeff(Exponents{}) != 0) return total;
    const UPoly a = on_x_axis(F), b = on_x_axis(G);
    if (a.is_zero() && b.is_zero()) throw InfiniteIntersection("intersection_number: common component y = 0");
    if (a.is_zero()) {
      total += x_order(b);
      F = divide_by_y(F);
      continue;
    }
    if (b.is_zero()) {
      total += x_order(a);
      G = divide_by_y(G);
      continue;
    }
    if (a.degree() > b.degree()) {
      std::swap(F, G);
      continue;
    }
    // Cancel the leading x-term of G(x, 0) against F(x, 0).
    const unsigned shift = static_cast<unsigned>(b.degree() - a.degree());
    G = G.scale(a.lead()) + F * MPoly::term(F.ctx(), 2, Exponents(shift, 0), b.lead());
  }
}

}  // namespace detail

/// I(P, u, v) at P = (alpha, beta); arithmetic runs in the smallest field holding u, v and P.
inline IntersectionNumber intersection_number(const MPoly& u0, const MPoly& v0, const FFElem& alpha, const FFElem& beta) {
  const MPoly u1 = detail::as_plane(u0), v1 = detail::as_plane(v0);
  const FieldCtx& E = join_fields(join_fields(u1.ctx(), v1.ctx()), join_fields(alpha.ctx(), beta.ctx()));
  const FFElem a = embed(alpha, E), b = embed(beta, E);
  MPoly u = u1.embed_into(E), v = v1.embed_into(E);
  if (u.is_zero() || v.is_zero()) {
    const MPoly& o = u.is_zero() ? v : u;
    if (o.eval(std::vector<FFElem>{a, b}).is_zero()) return {true, 0};
    return {false, 0};
  }
  // A common component through P makes I infinite; one that misses P is a unit locally.
  const BiPoly h = gcd(BiPoly::from_mpoly(u), BiPoly::from_mpoly(v));
  if (h.deg_y() > 0 || h.deg_x() > 0) {
    const MPoly hm = h.to_mpoly();
    if (hm.eval(std::vector<FFElem>{a, b}).is_zero()) return {true, 0};
    u = exact_divide(u, hm);
    v = exact_divide(v, hm);
  }
  const MPoly x = MPoly::variable(E, 2, 0), y = MPoly::variable(E, 2, 1);
  const MPoly xs = x + MPoly::constant(E, 2, a.bits()), ys = y + MPoly::constant(E, 2, b.bits());
  const MPoly us = u.substitute(0, xs).substitute(1, ys);
  const MPoly vs = v.substitute(0, xs).substitute(1, ys);
  try {
    return {false, detail::fulton_at_origin(us, vs)};
  } catch (const InfiniteIntersection&) {
    return {true, 0};
  }
}

// ---------------------------------------------------------------------------
// Common points and Bezout audits.

/// A projective point normalized so its last nonzero coordinate is 1.
struct ProjPoint {
  std::array<FFElem, 3> c;
  bool at_infinity() const { return c[2].is_zero(); }
  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.c[0] == b.c[0] && a.c[1] == b.c[1] && a.c[2] == b.c[2];
  }
};

struct CommonPoints {
  unsigned field_degree = 1;
  std::vector<ProjPoint> points;
};

namespace detail {

inline unsigned relative_split(const UPoly& u) { return u.degree() <= 0 ? 1 : splitting_degree(u); }

/// y-polynomial u(x0, y).
inline UPoly at_x(const MPoly& u, Bits x0) { return BiPoly::from_mpoly(u).eval_x(x0); }

/// Top-degree form of u dehomogenized at x = 1, as a polynomial in t = y/x.
inline UPoly top_form_at_x1(const MPoly& u) {
  const MPoly top = u.homogeneous_part(static_cast<unsigned>(u.total_degree()));
  std::vector<Bits> c(static_cast<std::size_t>(u.total_degree()) + 1, 0);
  for (const auto& [e, v] : top.terms()) c[e[1]] = v;
  return UPoly(u.ctx(), std::move(c));
}

}  // namespace detail

/// All common points (affine and at infinity) of two coprime plane curves, in one field.
inline CommonPoints common_points(const MPoly& u0, const MPoly& v0, std::uint64_t seed = 0) {
  const FieldCtx& F = join_fields(u0.ctx(), v0.ctx());
  const MPoly u = detail::as_plane(u0).embed_into(F), v = detail::as_plane(v0).embed_into(F);
  if (u.total_degree() < 1 || v.total_degree() < 1) throw PreconditionError("common_points: constant curve");
  const BiPoly g = gcd(BiPoly::from_mpoly(u), BiPoly::from_mpoly(v));
  if (g.deg_x() > 0 || g.deg_y() > 0) throw InfiniteIntersection("common_points: curves share a component");

  const UPoly R = resultant_y(BiPoly::from_mpoly(u), BiPoly::from_mpoly(v));
  const UPoly T = gcd(detail::top_form_at_x1(u), detail::top_form_at_x1(v));
  // Field degree over F needed for all coordinates.
  std::uint64_t need = lcm_u64(detail::relative_split(R), detail::relative_split(T));
  {
    const std::uint64_t d1 = F.degree() * detail::relative_split(R);
    if (d1 > kMaxFieldDegree) throw SplittingFieldTooSmall("common_points: x-coordinates beyond GF(2^32)", static_cast<unsigned>(d1));
    const FieldCtx& E1 = make_field(static_cast<unsigned>(d1));
    const MPoly ue = u.embed_into(E1), ve = v.embed_into(E1);
    for (Bits x0 : roots(embed(R, E1), seed)) {
      const UPoly h = gcd(detail::at_x(ue, x0), detail::at_x(ve, x0));
      need = lcm_u64(need, detail::relative_split(R) * detail::relative_split(h));
    }
  }
  const std::uint64_t dE = F.degree() * need;
  if (dE > kMaxFieldDegree) throw SplittingFieldTooSmall("common_points: coordinates beyond GF(2^32)", static_cast<unsigned>(dE));
  const FieldCtx& E = make_field(static_cast<unsigned>(dE));
  const MPoly ue = u.embed_into(E), ve = v.embed_into(E);
  CommonPoints out;
  out.field_degree = E.degree();
  const FFElem one = FFElem::one(E), zero = FFElem::zero(E);
  for (Bits x0 : roots(embed(R, E), seed)) {
    const UPoly h = gcd(detail::at_x(ue, x0), detail::at_x(ve, x0));
    if (h.degree() <= 0) continue;
    for (Bits y0 : roots(h, seed)) out.points.push_back(ProjPoint{{FFElem(E, x0), FFElem(E, y0), one}});
  }
  if (T.degree() > 0)
    for (Bits t : roots(embed(T, E), seed)) out.points.push_back(ProjPoint{{one, FFElem(E, t), zero}});
  // (0:1:0) lies on a curve iff its top form has no x-free term of top degree.
  const Exponents ytop(0, static_cast<unsigned>(u.total_degree())), ytop_v(0, static_cast<unsigned>(v.total_degree()));
  if (u.coeff(ytop) == 0 && v.coeff(ytop_v) == 0) out.points.push_back(ProjPoint{{zero, one, zero}});
  return out;
}

/// I at a projective point, computed in an affine chart containing it.
inline IntersectionNumber projective_intersection(const MPoly& u, const MPoly& v, const ProjPoint& P) {
  if (!P.at_infinity()) return intersection_number(u, v, P.c[0], P.c[1]);
  const MPoly U = detail::as_plane(u).homogenize(), V = detail::as_plane(v).homogenize();
  const FieldCtx& f = U.ctx();
  if (P.c[0].is_zero()) {
    // Chart y = 1, coordinates (x, z), point (0, 0).
    auto chart = [](const MPoly& H) {
      MPoly r(H.ctx(), 2);
      for (const auto& [e, c] : H.terms()) r.add_term(Exponents(e[0], e[2]), c);
      return r;
    };
    return intersection_number(chart(U), chart(V), FFElem::zero(f), FFElem::zero(f));
  }
  // Chart x = 1, coordinates (y, z), point (t, 0).
  auto chart = [](const MPoly& H) {
    MPoly r(H.ctx(), 2);
    for (const auto& [e, c] : H.terms()) r.add_term(Exponents(e[1], e[2]), c);
    return r;
  };
  return intersection_number(chart(U), chart(V), P.c[1], FFElem::zero(P.c[1].ctx()));
}

struct IntersectionRecord {
  ProjPoint point;
  std::size_t u_id = 0, v_id = 0;
  unsigned value = 0;
};

struct PairAudit {
  std::size_t u_id = 0, v_id = 0;
  unsigned total = 0;
  unsigned degree_product = 0;
  bool ok = false;
  std::vector<IntersectionRecord> records;
};

struct BezoutAudit {
  std::vector<PairAudit> pairs;
  bool all_ok = true;
};

inline PairAudit audit_pair(const MPoly& u, const MPoly& v, std::size_t iu, std::size_t iv, std::uint64_t seed = 0) {
  PairAudit pa;
  pa.u_id = iu;
  pa.v_id = iv;
  pa.degree_product = static_cast<unsigned>(u.total_degree() * v.total_degree());
  for (const auto& P : common_points(u, v, seed).points) {
    const IntersectionNumber in = projective_intersection(u, v, P);
    if (in.infinite) throw InfiniteIntersection("bezout_audit: shared component");
    if (in.value == 0) throw ConsistencyError("bezout_audit: common point with zero intersection number");
    pa.records.push_back(IntersectionRecord{P, iu, iv, in.value});
    pa.total += in.value;
  }
  pa.ok = pa.total == pa.degree_product;
  return pa;
}

/// Audits every unordered pair of the given curves.
inline BezoutAudit bezout_audit(const std::vector<MPoly>& curves, unsigned threads = 1, std::uint64_t seed = 0) {
  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (std::size_t a = 0; a < curves.size(); ++a)
    for (std::size_t b = a + 1; b < curves.size(); ++b) jobs.emplace_back(a, b);
  BezoutAudit out;
  out.pairs.resize(jobs.size());
  parallel_for(jobs.size(), threads, [&](std::size_t j) {
    out.pairs[j] = audit_pair(curves[jobs[j].first], curves[jobs[j].second], jobs[j].first, jobs[j].second, seed);
  });
  for (const auto& p : out.pairs) out.all_ok = out.all_ok && p.ok;
  return out;
}

// ---------------------------------------------------------------------------
// Audits for g_k.

struct AbsFactorLabel {
  std::size_t j = 0;  // base factor index
  std::size_t s = 0;  // conjugate index
};

/// Flattened absolute factors of g_k with their (j, s) labels.
inline std::pair<std::vector<MPoly>, std::vector<AbsFactorLabel>> flatten_abs_factors(const FactorTree& t) {
  std::vector<MPoly> fs;
  std::vector<AbsFactorLabel> labels;
  for (std::size_t j = 0; j < t.base.size(); ++j)
    for (std::size_t s = 0; s < t.base[j].abs.abs_factors.size(); ++s) {
      fs.push_back(t.base[j].abs.abs_factors[s]);
      labels.push_back(AbsFactorLabel{j, s});
    }
  return {fs, labels};
}

struct GkBezoutAudit {
  unsigned k = 0;
  std::vector<AbsFactorLabel> labels;
  std::vector<MPoly> factors;
  BezoutAudit audit;
  unsigned within_total = 0;  // pairs inside one base factor's conjugate set
  unsigned cross_total = 0;   // pairs across different base factors
};

inline GkBezoutAudit bezout_audit_k(unsigned k, unsigned threads = 1, std::uint64_t seed = 0) {
  GkBezoutAudit r;
  r.k = k;
  const FactorTree t = factor_tree(k, seed);
  std::tie(r.factors, r.labels) = flatten_abs_factors(t);
  r.audit = bezout_audit(r.factors, threads, seed);
  for (const auto& p : r.audit.pairs)
    (r.labels[p.u_id].j == r.labels[p.v_id].j ? r.within_total : r.cross_total) += p.total;
  return r;
}

struct TypeLemmaRecord {
  FFElem alpha, beta;
  PointType ptype = PointType::I;
  std::size_t u_id = 0, v_id = 0;
  unsigned value = 0;
  bool admissible = false;
};

struct TypeLemmaReport {
  unsigned k = 0;
  unsigned i = 0;
  std::uint64_t type1_bound = 0;  // (2^(i-1) - 1)^2
  std::vector<AbsFactorLabel> labels;
  std::vector<TypeLemmaRecord> records;
  bool all_ok = true;
};

/// Checks the per-type admissible values of I(P, u, v) for every singular point and
/// every pair of absolute factors of g_k.
inline TypeLemmaReport type_lemma_checks(unsigned k, unsigned threads = 1, std::uint64_t seed = 0) {
  TypeLemmaReport rep;
  rep.k = k;
  const CurveParams cp = curve_params(k);
  rep.i = cp.i;
  const std::uint64_t half = cp.i == 0 ? 0 : (std::uint64_t{1} << (cp.i - 1));
  rep.type1_bound = half == 0 ? 0 : (half - 1) * (half - 1);
  const FactorTree t = factor_tree(k, seed);
  std::vector<MPoly> fs;
  std::tie(fs, rep.labels) = flatten_abs_factors(t);
  const std::vector<SingPoint> pts = singular_points(k, seed);
  for (const auto& P : pts)
    for (std::size_t a = 0; a < fs.size(); ++a)
      for (std::size_t b = a + 1; b < fs.size(); ++b) {
        TypeLemmaRecord r;
        r.alpha = P.alpha;
        r.beta = P.beta;
        r.ptype = P.ptype;
        r.u_id = a;
        r.v_id = b;
        rep.records.push_back(r);
      }
  parallel_for(rep.records.size(), threads, [&](std::size_t n) {
    TypeLemmaRecord& r = rep.records[n];
    const IntersectionNumber in = intersection_number(fs[r.u_id], fs[r.v_id], r.alpha, r.beta);
    if (in.infinite) throw InfiniteIntersection("type_lemma_checks: absolute factors share a component");
    r.value = in.value;
    switch (r.ptype) {
      case PointType::I: r.admissible = r.value <= rep.type1_bound; break;
      case PointType::II: r.admissible = r.value == 0; break;
      case PointType::III: r.admissible = r.value == 0 || r.value == (1u << cp.i); break;
    }
  });
  for (const auto& r : rep.records) rep.all_ok = rep.all_ok && r.admissible;
  return rep;
}

}  // namespace hyperoval_lab

#endif  // HYPEROVAL_LAB_INTERSECT_HPP
