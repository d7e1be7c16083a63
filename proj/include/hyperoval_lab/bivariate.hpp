#ifndef HYPEROVAL_LAB_BIVARIATE_HPP
#define HYPEROVAL_LAB_BIVARIATE_HPP

// Dense polynomials in F[x][y]: pseudo-division, gcd and resultant in y.

#include <algorithm>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "mpoly.hpp"
#include "upoly.hpp"

namespace hyperoval_lab {

class BiPoly {
 public:
  explicit BiPoly(const FieldCtx& ctx) : ctx_(&ctx) {}
  BiPoly(const FieldCtx& ctx, std::vector<UPoly> c) : ctx_(&ctx), c_(std::move(c)) { trim(); }

  static BiPoly from_mpoly(const MPoly& p) {
    if (p.nvars() > 2 && p.degree_in(2) > 0) throw PreconditionError("BiPoly: polynomial involves z");
    const FieldCtx& ctx = p.ctx();
    const int dy = std::max(0, p.degree_in(1)), dx = std::max(0, p.degree_in(0));
    std::vector<std::vector<Bits>> raw(static_cast<std::size_t>(dy) + 1,
                                       std::vector<Bits>(static_cast<std::size_t>(dx) + 1, 0));
    for (const auto& [e, v] : p.terms()) raw[e[1]][e[0]] = v;
    std::vector<UPoly> c;
    for (auto& r : raw) c.emplace_back(ctx, std::move(r));
    return BiPoly(ctx, std::move(c));
  }

  MPoly to_mpoly(unsigned nvars = 2) const {
    MPoly p(*ctx_, nvars);
    for (std::size_t j = 0; j < c_.size(); ++j)
      for (std::size_t i = 0; i < c_[j].coeffs().size(); ++i)
        p.add_term(Exponents(static_cast<unsigned>(i), static_cast<unsigned>(j)), c_[j].coeffs()[i]);
    return p;
  }

  const FieldCtx& ctx() const { return *ctx_; }
  const std::vector<UPoly>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int deg_y() const { return static_cast<int>(c_.size()) - 1; }
  int deg_x() const {
    int d = -1;
    for (const auto& u : c_) d = std::max(d, u.degree());
    return d;
  }
  const UPoly& lc() const {
    if (c_.empty()) throw PreconditionError("BiPoly: leading coefficient of zero");
    return c_.back();
  }
  UPoly coeff(std::size_t j) const { return j < c_.size() ? c_[j] : UPoly(*ctx_); }

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    std::vector<UPoly> c(std::max(a.c_.size(), b.c_.size()), UPoly(*a.ctx_));
    for (std::size_t j = 0; j < a.c_.size(); ++j) c[j] += a.c_[j];
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[j] += b.c_[j];
    return BiPoly(*a.ctx_, std::move(c));
  }
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + b; }

  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return BiPoly(*a.ctx_);
    std::vector<UPoly> c(a.c_.size() + b.c_.size() - 1, UPoly(*a.ctx_));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!a.c_[i].is_zero())
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return BiPoly(*a.ctx_, std::move(c));
  }

  BiPoly scale(const UPoly& s) const {
    std::vector<UPoly> c;
    for (const auto& u : c_) c.push_back(u * s);
    return BiPoly(*ctx_, std::move(c));
  }

  BiPoly shift_y(std::size_t n) const {
    if (is_zero()) return *this;
    std::vector<UPoly> c(n, UPoly(*ctx_));
    c.insert(c.end(), c_.begin(), c_.end());
    return BiPoly(*ctx_, std::move(c));
  }

  BiPoly derivative_y() const {
    std::vector<UPoly> c;
    for (std::size_t j = 1; j < c_.size(); ++j) c.push_back(j % 2 ? c_[j] : UPoly(*ctx_));
    return BiPoly(*ctx_, std::move(c));
  }

  BiPoly derivative_x() const {
    std::vector<UPoly> c;
    for (const auto& u : c_) c.push_back(u.derivative());
    return BiPoly(*ctx_, std::move(c));
  }

  /// The univariate polynomial in y obtained by setting x = a.
  UPoly eval_x(Bits a) const {
    std::vector<Bits> v;
    for (const auto& u : c_) v.push_back(u.eval(a));
    return UPoly(*ctx_, std::move(v));
  }

  /// Monic gcd of the coefficients (zero for the zero polynomial).
  UPoly content() const {
    UPoly g(*ctx_);
    for (const auto& u : c_) {
      g = gcd(g, u);
      if (g.degree() == 0) break;
    }
    return g;
  }

  /// Divides out the content and makes the leading coefficient's leading coefficient 1.
  BiPoly primitive_part() const {
    if (is_zero()) return *this;
    const UPoly g = content();
    std::vector<UPoly> c;
    const Bits s = ctx_->inv(lc().lead());
    for (const auto& u : c_) c.push_back(divexact(u, g).scale(ctx_->mul(s, g.lead())));
    return BiPoly(*ctx_, std::move(c));
  }

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.ctx_ == b.ctx_ && a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  const FieldCtx* ctx_;
  std::vector<UPoly> c_;
};

/// lc(b)^(deg a - deg b + 1) * a mod b, as a polynomial in y.
inline BiPoly pseudo_remainder(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw PreconditionError("pseudo_remainder: division by zero");
  if (a.deg_y() < b.deg_y()) return a;
  int e = a.deg_y() - b.deg_y() + 1;
  std::vector<UPoly> r = a.coeffs();
  const UPoly& lb = b.lc();
  const int db = b.deg_y();
  while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
    const int dr = static_cast<int>(r.size()) - 1;
    const UPoly lr = r.back();
    for (auto& u : r) u = u * lb;
    for (int j = 0; j <= db; ++j) r[dr - db + j] += lr * b.coeffs()[j];
    while (!r.empty() && r.back().is_zero()) r.pop_back();
    --e;
  }
  UPoly f = UPoly::constant(a.ctx(), 1);
  for (int i = 0; i < e; ++i) f = f * lb;
  for (auto& u : r) u = u * f;
  return BiPoly(a.ctx(), std::move(r));
}

/// Exact quotient a / b in F[x][y]; throws NotDivisible.
inline BiPoly divexact(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw PreconditionError("divexact: division by zero");
  if (a.is_zero()) return a;
  if (a.deg_y() < b.deg_y()) throw NotDivisible("divexact: degree in y too small");
  std::vector<UPoly> r = a.coeffs();
  std::vector<UPoly> q(static_cast<std::size_t>(a.deg_y() - b.deg_y()) + 1, UPoly(a.ctx()));
  const int db = b.deg_y();
  for (int d = a.deg_y(); d >= db; --d) {
    if (r[d].is_zero()) continue;
    const UPoly t = divexact(r[d], b.lc());
    q[d - db] = t;
    for (int j = 0; j <= db; ++j) r[d - db + j] += t * b.coeffs()[j];
  }
  for (const auto& u : r)
    if (!u.is_zero()) throw NotDivisible("divexact: nonzero remainder");
  return BiPoly(a.ctx(), std::move(q));
}

/// gcd in F[x][y], normalized as in primitive_part times the monic content gcd.
inline BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return b.is_zero() ? b : b.primitive_part().scale(b.content().monic());
  if (b.is_zero()) return a.primitive_part().scale(a.content().monic());
  const UPoly c = gcd(a.content(), b.content());
  BiPoly A = a.primitive_part(), B = b.primitive_part();
  if (A.deg_y() < B.deg_y()) std::swap(A, B);
  while (!B.is_zero()) {
    if (B.deg_y() == 0) {
      A = BiPoly(a.ctx(), {UPoly::constant(a.ctx(), 1)});
      break;
    }
    BiPoly R = pseudo_remainder(A, B);
    A = std::move(B);
    B = R.is_zero() ? R : R.primitive_part();
  }
  return A.primitive_part().scale(c);
}

/// Res_y(a, b) in F[x] by the subresultant algorithm (signs vanish in characteristic 2).
inline UPoly resultant_y(const BiPoly& a, const BiPoly& b) {
  const FieldCtx& ctx = a.ctx();
  if (a.is_zero() || b.is_zero()) return UPoly(ctx);
  if (a.deg_y() == 0) {
    UPoly r = UPoly::constant(ctx, 1);
    for (int i = 0; i < b.deg_y(); ++i) r = r * a.lc();
    return r;
  }
  if (b.deg_y() == 0) {
    UPoly r = UPoly::constant(ctx, 1);
    for (int i = 0; i < a.deg_y(); ++i) r = r * b.lc();
    return r;
  }
  BiPoly A = a, B = b;
  if (A.deg_y() < B.deg_y()) std::swap(A, B);
  const UPoly ca = A.content(), cb = B.content();
  A = divexact(A, BiPoly(ctx, {ca}));
  B = divexact(B, BiPoly(ctx, {cb}));
  UPoly t = UPoly::constant(ctx, 1);
  for (int i = 0; i < B.deg_y(); ++i) t = t * ca;
  for (int i = 0; i < A.deg_y(); ++i) t = t * cb;
  UPoly g = UPoly::constant(ctx, 1), h = UPoly::constant(ctx, 1);
  auto upow = [&ctx](const UPoly& u, int n) {
    UPoly r = UPoly::constant(ctx, 1);
    for (int i = 0; i < n; ++i) r = r * u;
    return r;
  };
  while (B.deg_y() > 0) {
    const int delta = A.deg_y() - B.deg_y();
    BiPoly R = pseudo_remainder(A, B);
    if (R.is_zero()) return UPoly(ctx);
    A = B;
    const UPoly div = g * upow(h, delta);
    std::vector<UPoly> rc;
    for (const auto& u : R.coeffs()) rc.push_back(divexact(u, div));
    B = BiPoly(ctx, std::move(rc));
    g = A.lc();
    // h <- h^(1-delta) g^delta
    h = delta == 0 ? h : divexact(upow(g, delta), upow(h, delta - 1));
  }
  // B is a nonzero constant in y.
  const int da = A.deg_y();
  const UPoly hres = da == 0 ? h : divexact(upow(B.lc(), da), upow(h, da - 1));
  return t * hres;
}

}  // namespace hyperoval_lab

#endif  // HYPEROVAL_LAB_BIVARIATE_HPP
