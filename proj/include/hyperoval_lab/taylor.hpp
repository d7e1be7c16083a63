#ifndef HYPEROVAL_LAB_TAYLOR_HPP
#define HYPEROVAL_LAB_TAYLOR_HPP

// Local expansions h(x+a, y+b) = H_0 + H_1 + ..., univariate factoring of
// MPoly values, and factoring of binary forms into linear forms.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "embed.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "mpoly.hpp"
#include "upoly.hpp"

namespace hyperoval_lab {

struct HomComponents {
  FFElem alpha, beta;
  std::vector<MPoly> parts;  // parts[d] is zero or homogeneous of degree d

  /// Least d with parts[d] nonzero; -1 if the shifted polynomial is zero.
  int multiplicity() const {
    for (std::size_t d = 0; d < parts.size(); ++d)
      if (!parts[d].is_zero()) return static_cast<int>(d);
    return -1;
  }
  MPoly part(std::size_t d) const { return d < parts.size() ? parts[d] : MPoly(alpha.ctx(), 2); }
  MPoly sum() const {
    MPoly s(alpha.ctx(), 2);
    for (const auto& p : parts) s += p;
    return s;
  }
};

/// Expands f(x+alpha, y+beta). Coefficients of f are embedded into alpha's field.
inline HomComponents taylor_shift(const MPoly& f, const FFElem& alpha, const FFElem& beta) {
  if (&alpha.ctx() != &beta.ctx()) throw ContextMismatch("taylor_shift: alpha and beta in different fields");
  if (f.nvars() > 2) throw PreconditionError("taylor_shift expects a bivariate polynomial");
  const FieldCtx& ctx = alpha.ctx();
  const MPoly g = f.embed_into(ctx);
  const int D = std::max(0, g.total_degree());
  const std::size_t n = static_cast<std::size_t>(D) + 1;

  std::vector<Bits> apow(n, 1), bpow(n, 1);
  for (std::size_t i = 1; i < n; ++i) {
    apow[i] = ctx.mul(apow[i - 1], alpha.bits());
    bpow[i] = ctx.mul(bpow[i - 1], beta.bits());
  }
  // (x+a)^i = sum over m with C(i,m) odd, i.e. m a bit-subset of i (Lucas).
  std::vector<std::vector<Bits>> c(n, std::vector<Bits>(n, 0));
  for (const auto& [e, v] : g.terms()) {
    const unsigned i = e[0], j = e[1];
    for (unsigned m = i;; m = (m - 1) & i) {
      const Bits vm = ctx.mul(v, apow[i - m]);
      for (unsigned l = j;; l = (l - 1) & j) {
        c[m][l] ^= ctx.mul(vm, bpow[j - l]);
        if (l == 0) break;
      }
      if (m == 0) break;
    }
  }
  HomComponents out{alpha, beta, {}};
  out.parts.assign(n, MPoly(ctx, 2));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j)
      if (c[i][j]) out.parts[i + j].add_term(Exponents(static_cast<unsigned>(i), static_cast<unsigned>(j)), c[i][j]);
  while (out.parts.size() > 1 && out.parts.back().is_zero()) out.parts.pop_back();
  return out;
}

/// Multiplicity of f at (alpha, beta); -1 if f is zero.
inline int multiplicity_at(const MPoly& f, const FFElem& alpha, const FFElem& beta) {
  return taylor_shift(f, alpha, beta).multiplicity();
}

struct MFactorization {
  Bits unit = 1;
  std::vector<std::pair<MPoly, unsigned>> factors;

  MPoly expand(const FieldCtx& ctx, unsigned nvars) const {
    MPoly p = MPoly::constant(ctx, nvars, unit);
    for (const auto& [f, m] : factors) p *= f.pow(m);
    return p;
  }
};

/// Complete factorization of a polynomial in a single variable.
inline MFactorization univariate_factor(const MPoly& u, std::uint64_t seed = 0) {
  if (u.is_zero()) throw PreconditionError("univariate_factor: zero polynomial");
  const unsigned var = sole_variable(u);
  const UFactorization uf = factor(to_upoly(u, var), seed);
  MFactorization r;
  r.unit = uf.unit;
  for (const auto& f : uf.factors) r.factors.emplace_back(from_upoly(f.factor, u.nvars(), var), f.multiplicity);
  return r;
}

namespace detail {

inline bool is_univariate(const MPoly& u) {
  try {
    (void)sole_variable(u);
    return true;
  } catch (const PreconditionError&) {
    return false;
  }
}

// H(x,1) together with the power of y dividing H.
inline std::pair<UPoly, unsigned> dehomogenize_form(const MPoly& H) {
  const unsigned m = static_cast<unsigned>(H.total_degree());
  std::vector<Bits> h(m + 1, 0);
  for (const auto& [e, c] : H.terms()) h[e[0]] = c;
  UPoly hx(H.ctx(), std::move(h));
  return {hx, m - static_cast<unsigned>(hx.degree())};
}

}  // namespace detail

/// Monic gcd of two univariate polynomials in the same variable. Two binary forms
/// in x, y are also accepted; their gcd is the form normalized by the x-leading
/// coefficient (or y^n when no x occurs).
inline MPoly poly_gcd(const MPoly& u, const MPoly& v) {
  if (u.ctx_ptr() != v.ctx_ptr()) throw ContextMismatch("poly_gcd: different fields");
  if (u.is_zero() && v.is_zero()) throw PreconditionError("poly_gcd: both inputs are zero");
  const unsigned n = std::max(u.nvars(), v.nvars());
  const bool uni_u = detail::is_univariate(u), uni_v = detail::is_univariate(v);
  if (uni_u && uni_v) {
    const unsigned var = !u.is_constant() ? sole_variable(u) : sole_variable(v);
    if (u.is_constant() || v.is_constant() || sole_variable(v) == var)
      return from_upoly(gcd(to_upoly(u, var), to_upoly(v, var)), n, var);
  }

  // Binary forms.
  if (!u.is_homogeneous() || !v.is_homogeneous() || u.degree_in(2) > 0 || v.degree_in(2) > 0)
    throw PreconditionError("poly_gcd: expects univariate polynomials or binary forms");
  if (u.is_zero()) return poly_gcd(v, v);
  if (v.is_zero()) return poly_gcd(u, u);
  const auto [hu, yu] = detail::dehomogenize_form(u);
  const auto [hv, yv] = detail::dehomogenize_form(v);
  const UPoly g = gcd(hu, hv);
  const unsigned ypow = std::min(yu, yv);
  MPoly r(u.ctx(), n);
  for (std::size_t i = 0; i < g.coeffs().size(); ++i)
    r.add_term(Exponents(static_cast<unsigned>(i), static_cast<unsigned>(g.degree() - i) + ypow), g.coeffs()[i]);
  return r;
}

struct LinearForm {
  FFElem sigma, tau;  // sigma*x + tau*y
  unsigned multiplicity = 1;
};

struct BinaryFormFactorization {
  Bits unit = 1;
  std::vector<LinearForm> forms;
  bool squarefree = true;

  MPoly expand(const FieldCtx& ctx) const {
    MPoly p = MPoly::constant(ctx, 2, unit);
    for (const auto& l : forms) {
      MPoly lin(ctx, 2);
      lin.add_term(Exponents(1, 0), l.sigma.bits());
      lin.add_term(Exponents(0, 1), l.tau.bits());
      p *= lin.pow(l.multiplicity);
    }
    return p;
  }
  unsigned distinct() const { return static_cast<unsigned>(forms.size()); }
};

/// Splits a nonzero binary form H(x,y) into linear forms over its own field.
/// Forms are normalized: x + t*y (sigma=1), or y alone (sigma=0, tau=1).
inline BinaryFormFactorization binary_form_factor(const MPoly& H, std::uint64_t seed = 0) {
  if (H.is_zero()) throw PreconditionError("binary_form_factor: zero form");
  if (!H.is_homogeneous()) throw PreconditionError("binary_form_factor: form is not homogeneous");
  if (H.nvars() > 2 && H.degree_in(2) > 0) throw PreconditionError("binary_form_factor: form involves z");
  const FieldCtx& ctx = H.ctx();
  const auto [hx, ypow] = detail::dehomogenize_form(H);

  const UFactorization uf = factor(hx, seed);
  unsigned need = 1;
  for (const auto& f : uf.factors)
    need = static_cast<unsigned>(lcm_u64(need, static_cast<std::uint64_t>(f.factor.degree())));
  if (need > 1)
    throw SplittingFieldTooSmall("binary_form_factor: form does not split over GF(2^" +
                                     std::to_string(ctx.degree()) + ")",
                                 ctx.degree() * need);
  BinaryFormFactorization r;
  r.unit = uf.unit;
  for (const auto& f : uf.factors) {
    r.forms.push_back(LinearForm{FFElem::one(ctx), FFElem(ctx, f.factor.coeff(0)), f.multiplicity});
    if (f.multiplicity > 1) r.squarefree = false;
  }
  if (ypow > 0) {
    r.forms.push_back(LinearForm{FFElem::zero(ctx), FFElem::one(ctx), ypow});
    if (ypow > 1) r.squarefree = false;
  }
  return r;
}

/// Extension degree over GF(2) in which the binary form H splits into linear forms.
inline unsigned form_splitting_degree(const MPoly& H, std::uint64_t seed = 0) {
  const UPoly hx = detail::dehomogenize_form(H).first;
  return hx.degree() <= 0 ? H.ctx().degree() : H.ctx().degree() * splitting_degree(hx, seed);
}

}  // namespace hyperoval_lab

#endif  // HYPEROVAL_LAB_TAYLOR_HPP
