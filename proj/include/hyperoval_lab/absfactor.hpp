#ifndef HYPEROVAL_LAB_ABSFACTOR_HPP
#define HYPEROVAL_LAB_ABSFACTOR_HPP

// Bivariate factorization over GF(2^s) and absolute factorization of g_k.
//
// factor_over: squarefree splitting, then for each separable piece a
// specialization x = x0, univariate factoring, (x - x0)-adic Hensel lifting and
// recombination by trial division. If the field has no usable x0 the piece is
// factored over an extension and the factors are regrouped into Frobenius orbits.

#include <algorithm>
#include <bitset>
#include <cstdint>
#include <numeric>
#include <bit>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bivariate.hpp"
#include "curve.hpp"
#include "embed.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "mpoly.hpp"
#include "upoly.hpp"

namespace hyperoval_lab {

/// Total order used to list factors: by total degree, then term by term.
inline bool canonical_less(const MPoly& a, const MPoly& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  auto ia = a.terms().begin(), ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (!(ia->first == ib->first)) return GrLexDesc{}(ia->first, ib->first);
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return a.terms().size() < b.terms().size();
}

struct BiFactor {
  MPoly factor;  // monic under graded lex
  unsigned multiplicity = 1;
};

struct BiFactorization {
  Bits unit = 1;
  std::vector<BiFactor> factors;
  unsigned max_extension = 0;  // largest auxiliary field degree used for specialization (0 if none)

  MPoly expand(const FieldCtx& ctx) const {
    MPoly p = MPoly::constant(ctx, 2, unit);
    for (const auto& f : factors) p *= f.factor.pow(f.multiplicity);
    return p;
  }
};

namespace detail {

constexpr unsigned kMaxSpecializations = 4;
constexpr std::uint64_t kMaxSpecializationScan = 1u << 14;
using DegreeSet = std::bitset<256>;

using Series = std::vector<UPoly>;  // coefficients of t^k, each a polynomial in y

struct FactorContext {
  std::uint64_t seed = 0;
  unsigned max_extension = 0;
};

inline UPoly shift_upoly(const UPoly& u, Bits a) {
  const FieldCtx& F = u.ctx();
  const int d = u.degree();
  if (d <= 0 || a == 0) return u;
  std::vector<Bits> ap(static_cast<std::size_t>(d) + 1, 1);
  for (int i = 1; i <= d; ++i) ap[i] = F.mul(ap[i - 1], a);
  std::vector<Bits> out(static_cast<std::size_t>(d) + 1, 0);
  for (unsigned i = 0; i <= static_cast<unsigned>(d); ++i) {
    const Bits c = u.coeff(i);
    if (!c) continue;
    for (unsigned m = i;; m = (m - 1) & i) {
      out[m] ^= F.mul(c, ap[i - m]);
      if (m == 0) break;
    }
  }
  return UPoly(F, std::move(out));
}

/// P(x + a, y).
inline BiPoly shift_x(const BiPoly& p, Bits a) {
  std::vector<UPoly> c;
  for (const auto& u : p.coeffs()) c.push_back(shift_upoly(u, a));
  return BiPoly(p.ctx(), std::move(c));
}

inline Series to_series(const BiPoly& p, std::size_t n) {
  Series s(n, UPoly(p.ctx()));
  std::vector<std::vector<Bits>> raw(n, std::vector<Bits>(static_cast<std::size_t>(p.deg_y()) + 1, 0));
  for (std::size_t j = 0; j < p.coeffs().size(); ++j)
    for (std::size_t k = 0; k < n && k < p.coeffs()[j].coeffs().size(); ++k) raw[k][j] = p.coeffs()[j].coeffs()[k];
  for (std::size_t k = 0; k < n; ++k) s[k] = UPoly(p.ctx(), std::move(raw[k]));
  return s;
}

inline BiPoly from_series(const Series& s, const FieldCtx& F) {
  int dy = -1;
  for (const auto& u : s) dy = std::max(dy, u.degree());
  if (dy < 0) return BiPoly(F);
  std::vector<std::vector<Bits>> raw(static_cast<std::size_t>(dy) + 1, std::vector<Bits>(s.size(), 0));
  for (std::size_t k = 0; k < s.size(); ++k)
    for (std::size_t j = 0; j < s[k].coeffs().size(); ++j) raw[j][k] = s[k].coeffs()[j];
  std::vector<UPoly> c;
  for (auto& r : raw) c.emplace_back(F, std::move(r));
  return BiPoly(F, std::move(c));
}

inline Series series_mul(const Series& a, const Series& b) {
  const std::size_t n = a.size();
  Series r(n, UPoly(a[0].ctx()));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  return r;
}

/// Scalar power series product mod t^n.
inline std::vector<Bits> scalar_series_mul(const FieldCtx& F, const std::vector<Bits>& a, const std::vector<Bits>& b) {
  const std::size_t n = a.size();
  std::vector<Bits> r(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; i + j < n; ++j) r[i + j] ^= F.mul(a[i], b[j]);
  }
  return r;
}

inline std::vector<Bits> scalar_series_inverse(const FieldCtx& F, const UPoly& u, std::size_t n) {
  std::vector<Bits> inv(n, 0);
  const Bits c0inv = F.inv(u.coeff(0));
  inv[0] = c0inv;
  for (std::size_t k = 1; k < n; ++k) {
    Bits s = 0;
    for (std::size_t j = 1; j <= k; ++j) s ^= F.mul(u.coeff(j), inv[k - j]);
    inv[k] = F.mul(s, c0inv);
  }
  return inv;
}

/// Lifts M = A0 * B0 (mod t) to M = A * B (mod t^n); M, A0, B0 monic in y.
inline std::pair<Series, Series> hensel_lift2(const Series& M, const UPoly& A0, const UPoly& B0) {
  const std::size_t n = M.size();
  const FieldCtx& F = A0.ctx();
  auto [g, s, r] = xgcd(A0, B0);
  if (g.degree() != 0) throw ConsistencyError("hensel: image factors are not coprime");
  const Bits gi = F.inv(g.lead());
  s = s.scale(gi);
  Series A(n, UPoly(F)), B(n, UPoly(F));
  A[0] = A0;
  B[0] = B0;
  for (std::size_t k = 1; k < n; ++k) {
    UPoly c = M[k];
    for (std::size_t b = 1; b < k; ++b)
      if (!A[b].is_zero() && !B[k - b].is_zero()) c += A[b] * B[k - b];
    if (c.is_zero()) continue;
    B[k] = (c * s) % B0;
    A[k] = divexact(c + A0 * B[k], B0);
  }
  return {std::move(A), std::move(B)};
}

inline void hensel_lift_all(const Series& M, const std::vector<UPoly>& us, std::vector<Series>& out) {
  if (us.size() == 1) {
    out.push_back(M);
    return;
  }
  const std::size_t mid = us.size() / 2;
  UPoly A0 = UPoly::constant(us[0].ctx(), 1), B0 = A0;
  for (std::size_t i = 0; i < mid; ++i) A0 *= us[i];
  for (std::size_t i = mid; i < us.size(); ++i) B0 *= us[i];
  auto [A, B] = hensel_lift2(M, A0, B0);
  hensel_lift_all(A, std::vector<UPoly>(us.begin(), us.begin() + mid), out);
  hensel_lift_all(B, std::vector<UPoly>(us.begin() + mid, us.end()), out);
}

inline DegreeSet subset_sums(const std::vector<UFactor>& fs) {
  DegreeSet s;
  s[0] = true;
  for (const auto& f : fs) s |= s << static_cast<std::size_t>(f.factor.degree());
  return s;
}

inline bool separable_image(const BiPoly& P, Bits x0, UPoly* image = nullptr) {
  if (P.lc().eval(x0) == 0) return false;
  const UPoly u = P.eval_x(x0);
  if (gcd(u, u.derivative()).degree() != 0) return false;
  if (image) *image = u;
  return true;
}

inline MPoly normalize(const BiPoly& p) { return p.to_mpoly().monic(); }

inline std::vector<MPoly> factor_separable(const BiPoly& P, FactorContext& fc);

/// Factors P over an extension and regroups into Frobenius orbits over P's field.
inline std::vector<MPoly> factor_via_extension(const BiPoly& P, FactorContext& fc) {
  const FieldCtx& F = P.ctx();
  const unsigned s = F.degree();
  for (unsigned m = 2; s * m <= kMaxFieldDegree; ++m) {
    const FieldCtx& E = make_field(s * m);
    const MPoly pe = P.to_mpoly().embed_into(E);
    const BiPoly PE = BiPoly::from_mpoly(pe);
    bool good = false;
    const std::uint64_t limit = std::min<std::uint64_t>(E.size(), kMaxSpecializationScan);
    for (std::uint64_t a = 0; a < limit && !good; ++a) good = separable_image(PE, static_cast<Bits>(a));
    if (!good) continue;
    fc.max_extension = std::max(fc.max_extension, s * m);
    std::vector<MPoly> fe = factor_separable(PE, fc);
    std::vector<bool> used(fe.size(), false);
    std::vector<MPoly> out;
    for (std::size_t i = 0; i < fe.size(); ++i) {
      if (used[i]) continue;
      MPoly prod = fe[i];
      used[i] = true;
      MPoly h = fe[i].frobenius(s).monic();
      while (!(h == fe[i])) {
        std::size_t j = 0;
        while (j < fe.size() && !(fe[j] == h)) ++j;
        if (j == fe.size() || used[j]) throw ConsistencyError("factor_over: Frobenius orbit not closed");
        used[j] = true;
        prod *= h;
        h = h.frobenius(s).monic();
      }
      out.push_back(prod.restrict_to(F).monic());
    }
    return out;
  }
  throw SplittingFieldTooSmall("factor_over: no usable specialization up to GF(2^32)", kMaxFieldDegree + 1);
}

/// P primitive in y, squarefree, with nonzero y-derivative.
inline std::vector<MPoly> factor_separable(const BiPoly& P, FactorContext& fc) {
  const FieldCtx& F = P.ctx();
  const int n = P.deg_y();
  if (n <= 1) return {normalize(P)};

  struct Spec {
    Bits x0;
    std::vector<UFactor> fs;
  };
  std::vector<Spec> specs;
  const std::uint64_t limit = std::min<std::uint64_t>(F.size(), kMaxSpecializationScan);
  for (std::uint64_t a = 0; a < limit && specs.size() < kMaxSpecializations; ++a) {
    UPoly img(F);
    if (!separable_image(P, static_cast<Bits>(a), &img)) continue;
    specs.push_back(Spec{static_cast<Bits>(a), factor(img, fc.seed).factors});
  }
  if (specs.empty()) return factor_via_extension(P, fc);

  DegreeSet allowed;
  allowed.set();
  std::size_t best = 0;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    allowed &= subset_sums(specs[i].fs);
    if (specs[i].fs.size() < specs[best].fs.size()) best = i;
  }
  const auto& fs = specs[best].fs;
  bool only_trivial = true;
  for (int d = 1; d < n; ++d)
    if (allowed[d]) only_trivial = false;
  if (fs.size() == 1 || only_trivial) return {normalize(P)};

  const Bits x0 = specs[best].x0;
  const int dx = P.deg_x();
  const std::size_t N = static_cast<std::size_t>(2 * dx + 1);
  BiPoly Q = shift_x(P, x0);

  std::vector<UPoly> us;
  for (const auto& f : fs) us.push_back(f.factor);
  std::vector<Series> lifted;
  {
    const Series S = to_series(Q, N);
    const std::vector<Bits> inv = scalar_series_inverse(F, Q.lc(), N);
    Series M(N, UPoly(F));
    for (std::size_t k = 0; k < N; ++k)
      for (std::size_t a = 0; a <= k; ++a)
        if (inv[a] && !S[k - a].is_zero()) M[k] += S[k - a].scale(inv[a]);
    hensel_lift_all(M, us, lifted);
  }

  std::vector<std::size_t> remaining(us.size());
  std::iota(remaining.begin(), remaining.end(), 0);
  std::vector<BiPoly> found;

  auto lc_series = [&](const BiPoly& q) {
    std::vector<Bits> l(N, 0);
    for (std::size_t k = 0; k < N; ++k) l[k] = q.lc().coeff(k);
    return l;
  };
  // Coefficients above t^bound of a candidate coefficient series must vanish.
  auto tail_zero = [&](const std::vector<Bits>& c, int bound) {
    for (std::size_t k = static_cast<std::size_t>(bound) + 1; k < N; ++k)
      if (c[k]) return false;
    return true;
  };

  std::size_t sz = 1;
  while (2 * sz <= remaining.size()) {
    bool hit = false;
    std::vector<std::size_t> pick(sz);
    std::iota(pick.begin(), pick.end(), 0);
    const std::vector<Bits> lcq = lc_series(Q);
    const int bound = Q.lc().degree() + dx;
    for (;;) {
      int deg = 0;
      for (auto p : pick) deg += us[remaining[p]].degree();
      if (allowed[deg]) {
        // Trace test: the y^(deg-1) coefficient of the monic product is a sum.
        std::vector<Bits> tr(N, 0);
        for (auto p : pick) {
          const Series& U = lifted[remaining[p]];
          const int du = us[remaining[p]].degree();
          for (std::size_t k = 0; k < N; ++k) tr[k] ^= U[k].coeff(du - 1);
        }
        bool ok = tail_zero(scalar_series_mul(F, lcq, tr), bound);
        if (ok) {
          std::vector<Bits> c0 = lcq;
          for (auto p : pick) {
            std::vector<Bits> u0(N);
            for (std::size_t k = 0; k < N; ++k) u0[k] = lifted[remaining[p]][k].coeff(0);
            c0 = scalar_series_mul(F, c0, u0);
          }
          ok = tail_zero(c0, bound);
        }
        if (ok) {
          Series prod(N, UPoly(F));
          for (std::size_t k = 0; k < N; ++k)
            if (lcq[k]) prod[k] = UPoly::constant(F, lcq[k]);
          for (auto p : pick) prod = series_mul(prod, lifted[remaining[p]]);
          const BiPoly cand = from_series(prod, F).primitive_part();
          try {
            Q = divexact(Q, cand);
            found.push_back(cand);
            std::vector<std::size_t> rest;
            for (std::size_t i = 0; i < remaining.size(); ++i)
              if (std::find(pick.begin(), pick.end(), i) == pick.end()) rest.push_back(remaining[i]);
            remaining.swap(rest);
            hit = true;
          } catch (const NotDivisible&) {
          }
        }
      }
      if (hit) break;
      // Next combination of sz indices out of remaining.size().
      int i = static_cast<int>(sz) - 1;
      while (i >= 0 && pick[i] == remaining.size() - sz + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (std::size_t j = i + 1; j < sz; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!hit) ++sz;
  }
  if (Q.deg_y() > 0) found.push_back(Q.primitive_part());

  std::vector<MPoly> out;
  for (const auto& f : found) out.push_back(normalize(shift_x(f, x0)));
  return out;
}

inline void add_distinct(std::vector<MPoly>& out, const MPoly& f) {
  if (f.total_degree() <= 0) return;
  const MPoly m = f.monic();
  for (const auto& g : out)
    if (g == m) return;
  out.push_back(m);
}

/// Distinct irreducible factors of p (bivariate over its own field).
inline void collect_irreducibles(const MPoly& p, std::vector<MPoly>& out, FactorContext& fc) {
  if (p.total_degree() <= 0) return;
  const FieldCtx& F = p.ctx();
  BiPoly P = BiPoly::from_mpoly(p);
  const UPoly c = P.content();
  if (c.degree() > 0) {
    for (const auto& f : factor(c, fc.seed).factors) add_distinct(out, from_upoly(f.factor, 2, 0));
    P = divexact(P, BiPoly(F, {c}));
  }
  if (P.deg_y() <= 0) return;
  const BiPoly Py = P.derivative_y();
  if (!Py.is_zero()) {
    const BiPoly h = gcd(P, Py);
    if (h.deg_y() <= 0) {
      for (const auto& f : factor_separable(P, fc)) add_distinct(out, f);
    } else {
      collect_irreducibles(divexact(P, h).to_mpoly(), out, fc);
      collect_irreducibles(h.to_mpoly(), out, fc);
    }
    return;
  }
  if (!P.derivative_x().is_zero()) {
    std::vector<MPoly> sw;
    collect_irreducibles(P.to_mpoly().swap_vars(0, 1), sw, fc);
    for (const auto& f : sw) add_distinct(out, f.swap_vars(0, 1));
    return;
  }
  // Every exponent is even: P is a square.
  MPoly r(F, 2);
  const MPoly sq = P.to_mpoly();
  for (const auto& [e, v] : sq.terms()) r.add_term(Exponents(e[0] / 2, e[1] / 2), F.sqrt(v));
  collect_irreducibles(r, out, fc);
}

}  // namespace detail

/// Complete factorization of a bivariate g over `ctx` (g's coefficients must lie in a subfield of ctx).
inline BiFactorization factor_over(const MPoly& g, const FieldCtx& ctx, std::uint64_t seed = 0) {
  if (g.is_zero()) throw PreconditionError("factor_over: zero polynomial");
  if (g.nvars() > 2 && g.degree_in(2) > 0) throw PreconditionError("factor_over: expects a bivariate polynomial");
  const MPoly p = g.with_nvars(2).embed_into(ctx);
  detail::FactorContext fc{seed, 0};
  std::vector<MPoly> irr;
  detail::collect_irreducibles(p, irr, fc);
  std::sort(irr.begin(), irr.end(), canonical_less);
  BiFactorization out;
  out.max_extension = fc.max_extension;
  MPoly rest = p;
  for (const auto& f : irr) {
    unsigned m = 0;
    for (;;) {
      try {
        rest = exact_divide(rest, f);
        ++m;
      } catch (const NotDivisible&) {
        break;
      }
    }
    if (m == 0) throw ConsistencyError("factor_over: factor does not divide the input");
    out.factors.push_back(BiFactor{f, m});
  }
  if (!rest.is_constant() || rest.is_zero()) throw ConsistencyError("factor_over: factors do not exhaust the input");
  out.unit = rest.coeff(Exponents{});
  if (out.expand(ctx) != p) throw ConsistencyError("factor_over: product check failed");
  return out;
}

// ---------------------------------------------------------------------------
// Absolute factorization.

struct AbsoluteFactorization {
  unsigned r = 1;                   // degree of GF(2^(s r)) over the base field GF(2^s)
  unsigned field_degree = 1;        // s r
  std::vector<MPoly> abs_factors;   // conjugate factors over GF(2^(s r))
  std::vector<unsigned> certified_with;  // extension degrees used to certify absolute irreducibility
};

/// f irreducible over its field GF(2^s). Finds the least r | deg f over which f splits
/// into r conjugate absolutely irreducible factors.
inline AbsoluteFactorization absolute_factorization(const MPoly& f, std::uint64_t seed = 0) {
  const FieldCtx& F0 = f.ctx();
  const unsigned s = F0.degree();
  const int t = f.total_degree();
  if (t <= 0) throw PreconditionError("absolute_factorization: constant polynomial");
  for (std::uint64_t r : divisors(static_cast<std::uint64_t>(t))) {
    if (s * r > kMaxFieldDegree)
      throw SplittingFieldTooSmall("absolute_factorization: extension beyond GF(2^32)", static_cast<unsigned>(s * r));
    const FieldCtx& E = make_field(static_cast<unsigned>(s * r));
    const BiFactorization fz = factor_over(f, E, seed);
    if (r == 1 && (fz.factors.size() != 1 || fz.factors[0].multiplicity != 1))
      throw PreconditionError("absolute_factorization: input is not irreducible over its field");
    if (fz.factors.size() != r) continue;
    AbsoluteFactorization out;
    out.r = static_cast<unsigned>(r);
    out.field_degree = static_cast<unsigned>(s * r);
    for (const auto& bf : fz.factors) {
      if (bf.multiplicity != 1 || bf.factor.total_degree() != t / static_cast<int>(r))
        throw ConsistencyError("absolute_factorization: unequal conjugate factors");
      out.abs_factors.push_back(bf.factor);
    }
    // Certify: the first factor stays irreducible over GF(2^(s r p)) for every prime p | t/r.
    bool certified = true;
    for (std::uint64_t p : prime_divisors(static_cast<std::uint64_t>(t) / r)) {
      const std::uint64_t d = s * r * p;
      if (d > kMaxFieldDegree)
        throw SplittingFieldTooSmall("absolute_factorization: certification needs GF(2^" + std::to_string(d) + ")",
                                     static_cast<unsigned>(d));
      const BiFactorization cz = factor_over(out.abs_factors[0], make_field(static_cast<unsigned>(d)), seed);
      out.certified_with.push_back(static_cast<unsigned>(d));
      if (cz.factors.size() != 1) {
        certified = false;
        break;
      }
    }
    if (certified) return out;
  }
  throw ConsistencyError("absolute_factorization: no splitting degree found");
}

// ---------------------------------------------------------------------------
// g_k factor trees and verdicts.

struct BaseFactor {
  MPoly f;  // irreducible over GF(2)
  unsigned multiplicity = 1;
  AbsoluteFactorization abs;
  unsigned n() const { return static_cast<unsigned>(abs.abs_factors.size()); }
};

struct FactorTree {
  unsigned k = 0;
  Bits unit = 1;
  std::vector<BaseFactor> base;

  MPoly expand() const {
    MPoly p = MPoly::constant(make_field(1), 2, unit);
    for (const auto& b : base) p *= b.f.pow(b.multiplicity);
    return p;
  }
};

inline FactorTree factor_tree(unsigned k, std::uint64_t seed = 0) {
  const MPoly g = build_gk(k);
  const BiFactorization fz = factor_over(g, make_field(1), seed);
  FactorTree t;
  t.k = k;
  t.unit = fz.unit;
  for (const auto& f : fz.factors) t.base.push_back(BaseFactor{f.factor, f.multiplicity, absolute_factorization(f.factor, seed)});
  return t;
}

enum class AbsVerdict { AbsolutelyIrreducible, HasAbsIrreducibleFactor, Neither };

inline char verdict_letter(AbsVerdict v) {
  return v == AbsVerdict::AbsolutelyIrreducible ? 'a' : v == AbsVerdict::HasAbsIrreducibleFactor ? 'b' : 'c';
}

inline AbsVerdict classify(const FactorTree& t) {
  if (t.base.size() == 1 && t.base[0].multiplicity == 1 && t.base[0].abs.r == 1) return AbsVerdict::AbsolutelyIrreducible;
  for (const auto& b : t.base)
    if (b.abs.r == 1) return AbsVerdict::HasAbsIrreducibleFactor;
  return AbsVerdict::Neither;
}

struct CotaCheck {
  // Compares sum_j deg(f_j)^2 / n_j with deg(g_k)^2 / 2 exactly (both scaled by 2L, L = lcm n_j).
  std::uint64_t lhs_scaled = 0;
  std::uint64_t rhs_scaled = 0;
  bool strict = false;      // lhs < rhs
  bool non_strict = false;  // lhs <= rhs
};

inline CotaCheck cota_check(const FactorTree& t) {
  std::uint64_t L = 1;
  for (const auto& b : t.base) L = lcm_u64(L, b.n());
  CotaCheck c;
  for (const auto& b : t.base) {
    const std::uint64_t d = static_cast<std::uint64_t>(b.f.total_degree());
    c.lhs_scaled += 2 * d * d * (L / b.n()) * b.multiplicity;
  }
  const std::uint64_t D = t.k - 2;
  c.rhs_scaled = D * D * L;
  c.strict = c.lhs_scaled < c.rhs_scaled;
  c.non_strict = c.lhs_scaled <= c.rhs_scaled;
  return c;
}

/// Frobenius maps each absolute factor to another absolute factor of the same base factor.
inline bool galois_consistent(const BaseFactor& b) {
  for (const auto& h : b.abs.abs_factors) {
    const MPoly img = h.frobenius(1).monic();
    if (std::find(b.abs.abs_factors.begin(), b.abs.abs_factors.end(), img) == b.abs.abs_factors.end()) return false;
  }
  return true;
}

struct VerdictRecord {
  unsigned k = 0;
  AbsVerdict verdict = AbsVerdict::Neither;
  FactorTree tree;
  CotaCheck cota;
  bool degrees_ok = false;  // sum of base degrees (with multiplicity) is k - 2
  bool galois_ok = false;
};

inline VerdictRecord abs_irr_verdict(unsigned k, std::uint64_t seed = 0) {
  if (k < 4 || k > 40 || k % 2) throw PreconditionError("abs_irr_verdict: k must be even with 4 <= k <= 40");
  VerdictRecord v;
  v.k = k;
  v.tree = factor_tree(k, seed);
  v.verdict = classify(v.tree);
  v.cota = cota_check(v.tree);
  int sum = 0;
  v.galois_ok = true;
  for (const auto& b : v.tree.base) {
    sum += b.f.total_degree() * static_cast<int>(b.multiplicity);
    if (!galois_consistent(b)) v.galois_ok = false;
  }
  v.degrees_ok = sum == static_cast<int>(k) - 2;
  return v;
}

// ---------------------------------------------------------------------------
// Closed-form factorizations for k = 2^i and k = 6.

/// 1 + w x + x^2 + (w + w x) y + y^2 over GF(4), w the generator 0b10.
inline MPoly segre_A() { return parse_mpoly(make_field(2), 2, "1+0b10*x+x^2+0b10*y+0b10*x*y+y^2"); }

/// The conjugate of segre_A under w -> w^2.
inline MPoly segre_B() { return segre_A().frobenius(1); }

/// Expands the closed-form product and compares it with g_k over the relevant field.
inline bool verify_segre_factorizations(unsigned k) {
  if (k == 6) return segre_A() * segre_B() == build_gk(6).embed_into(make_field(2));
  if (k < 4 || (k & (k - 1)) != 0) throw PreconditionError("verify_segre_factorizations: k must be 6 or 2^i with i >= 2");
  const unsigned i = static_cast<unsigned>(std::countr_zero(k));
  if (i > kMaxFieldDegree) throw PreconditionError("verify_segre_factorizations: k too large");
  const FieldCtx& E = make_field(i);
  MPoly prod = MPoly::constant(E, 2, 1);
  for (std::uint64_t gamma = 2; gamma < E.size(); ++gamma) {
    MPoly l(E, 2);
    l.add_term(Exponents(1, 0), 1);
    l.add_term(Exponents(0, 1), static_cast<Bits>(gamma));
    l.add_term(Exponents(0, 0), static_cast<Bits>(gamma) ^ 1);
    prod *= l;
  }
  return prod == build_gk(k).embed_into(E);
}

}  // namespace hyperoval_lab

#endif  // HYPEROVAL_LAB_ABSFACTOR_HPP
