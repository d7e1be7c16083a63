#ifndef HYPEROVAL_LAB_UPOLY_HPP
#define HYPEROVAL_LAB_UPOLY_HPP

// Dense univariate polynomials over GF(2^e) and their factorization
// (squarefree decomposition, distinct-degree and equal-degree splitting).

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"

namespace hyperoval_lab {

/// c[i] is the coefficient of t^i; the top coefficient is never zero.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(const FieldCtx& ctx) : ctx_(&ctx) {}
  UPoly(const FieldCtx& ctx, std::vector<Bits> coeffs) : ctx_(&ctx), c_(std::move(coeffs)) { trim(); }

  static UPoly constant(const FieldCtx& ctx, Bits v) { return UPoly(ctx, std::vector<Bits>{v}); }
  static UPoly monomial(const FieldCtx& ctx, std::size_t deg, Bits v = 1) {
    std::vector<Bits> c(deg + 1, 0);
    c[deg] = v;
    return UPoly(ctx, std::move(c));
  }
  /// t + a
  static UPoly linear(const FieldCtx& ctx, Bits a) { return UPoly(ctx, std::vector<Bits>{a, 1}); }

  const FieldCtx& ctx() const { return *ctx_; }
  const FieldCtx* ctx_ptr() const { return ctx_; }
  const std::vector<Bits>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  Bits lead() const { return c_.empty() ? 0 : c_.back(); }
  Bits coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

  void set_coeff(std::size_t i, Bits v) {
    if (i >= c_.size()) c_.resize(i + 1, 0);
    c_[i] = v;
    trim();
  }

  Bits eval(Bits x) const {
    Bits r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = ctx_->mul(r, x) ^ *it;
    return r;
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    return scale(ctx_->inv(lead()));
  }

  UPoly scale(Bits s) const {
    if (s == 0) return UPoly(*ctx_);
    std::vector<Bits> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = ctx_->mul(c_[i], s);
    return UPoly(*ctx_, std::move(c));
  }

  UPoly derivative() const {
    std::vector<Bits> c;
    for (std::size_t i = 1; i < c_.size(); ++i) c.push_back((i & 1) ? c_[i] : 0);
    return UPoly(*ctx_, std::move(c));
  }

  /// Multiply by t^n.
  UPoly shift_up(std::size_t n) const {
    if (is_zero()) return *this;
    std::vector<Bits> c(n, 0);
    c.insert(c.end(), c_.begin(), c_.end());
    return UPoly(*ctx_, std::move(c));
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    check(a, b);
    std::vector<Bits> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] ^= a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] ^= b.c_[i];
    return UPoly(a.ctx(), std::move(c));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + b; }

  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    check(a, b);
    if (a.is_zero() || b.is_zero()) return UPoly(a.ctx());
    const FieldCtx& f = a.ctx();
    std::vector<Bits> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] ^= f.mul(a.c_[i], b.c_[j]);
    }
    return UPoly(f, std::move(c));
  }

  UPoly& operator+=(const UPoly& b) { return *this = *this + b; }
  UPoly& operator*=(const UPoly& b) { return *this = *this * b; }

  friend bool operator==(const UPoly& a, const UPoly& b) {
    return a.ctx_ == b.ctx_ && a.c_ == b.c_;
  }

  /// Canonical total order: by degree, then coefficients from the top.
  friend bool operator<(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
  }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  static void check(const UPoly& a, const UPoly& b) {
    if (a.ctx_ != b.ctx_) throw ContextMismatch("univariate polynomials over different fields");
  }

  const FieldCtx* ctx_ = nullptr;
  std::vector<Bits> c_;
};

inline std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!s.empty()) s += "+";
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (c_[i] != 1 || i == 0) {
      s += FieldCtx::to_binary_string(c_[i]);
      if (!mono.empty()) s += "*";
    }
    s += mono;
  }
  return s;
}

/// Quotient and remainder; throws on division by zero.
inline std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  const FieldCtx& f = a.ctx();
  if (a.degree() < b.degree()) return {UPoly(f), a};
  std::vector<Bits> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  const Bits inv_lead = f.inv(b.lead());
  std::vector<Bits> q(a.degree() - db + 1, 0);
  for (int i = a.degree(); i >= db; --i) {
    const Bits top = r[i];
    if (top == 0) continue;
    const Bits qc = f.mul(top, inv_lead);
    q[i - db] = qc;
    for (int j = 0; j <= db; ++j) r[i - db + j] ^= f.mul(qc, bc[j]);
  }
  r.resize(db);
  return {UPoly(f, std::move(q)), UPoly(f, std::move(r))};
}

inline UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

/// Exact quotient; throws NotDivisible on a nonzero remainder.
inline UPoly divexact(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw NotDivisible("univariate exact division left a remainder");
  return q;
}

/// Monic gcd (zero only if both inputs are zero).
inline UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// (g, s, t) with s*a + t*b = g monic.
inline std::tuple<UPoly, UPoly, UPoly> xgcd(const UPoly& a, const UPoly& b) {
  const FieldCtx& f = a.ctx();
  UPoly r0 = a, r1 = b;
  UPoly s0 = UPoly::constant(f, 1), s1(f);
  UPoly t0(f), t1 = UPoly::constant(f, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Bits il = f.inv(r0.lead());
  return {r0.scale(il), s0.scale(il), t0.scale(il)};
}

inline UPoly mulmod(const UPoly& a, const UPoly& b, const UPoly& m) { return (a * b) % m; }

inline UPoly powmod(UPoly base, std::uint64_t n, const UPoly& m) {
  const FieldCtx& f = m.ctx();
  UPoly r = UPoly::constant(f, 1) % m;
  base = base % m;
  while (n) {
    if (n & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    n >>= 1;
  }
  return r;
}

/// a^(2^j) mod m by repeated squaring (j may exceed 64).
inline UPoly frobenius_pow_mod(UPoly a, std::uint64_t j, const UPoly& m) {
  a = a % m;
  for (std::uint64_t i = 0; i < j; ++i) a = mulmod(a, a, m);
  return a;
}

/// For a polynomial whose derivative vanishes: the unique p with p^2 = a.
inline UPoly sqrt_poly(const UPoly& a) {
  const FieldCtx& f = a.ctx();
  std::vector<Bits> c((a.coeffs().size() + 1) / 2, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    if (i & 1) throw ConsistencyError("sqrt_poly: odd power present");
    c[i / 2] = f.sqrt(a.coeffs()[i]);
  }
  return UPoly(f, std::move(c));
}

struct UFactor {
  UPoly factor;
  unsigned multiplicity;
};

struct UFactorization {
  Bits unit = 0;
  std::vector<UFactor> factors;  // monic irreducibles, canonical order
};

namespace detail {

inline void sort_factors(std::vector<UFactor>& fs) {
  std::sort(fs.begin(), fs.end(), [](const UFactor& a, const UFactor& b) {
    if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
    return a.factor < b.factor;
  });
}

/// Squarefree decomposition of a monic polynomial: pairs (squarefree part, multiplicity).
inline std::vector<UFactor> squarefree_decomposition(const UPoly& f) {
  std::vector<UFactor> out;
  if (f.degree() <= 0) return out;
  const UPoly d = f.derivative();
  if (d.is_zero()) {
    for (auto& [p, m] : squarefree_decomposition(sqrt_poly(f))) out.push_back({p, 2 * m});
    return out;
  }
  UPoly c = gcd(f, d);
  UPoly w = divexact(f, c);
  unsigned i = 1;
  while (w.degree() > 0) {
    UPoly y = gcd(w, c);
    UPoly z = divexact(w, y);
    if (z.degree() > 0) out.push_back({z.monic(), i});
    ++i;
    w = y;
    c = divexact(c, y);
  }
  if (c.degree() > 0) {
    for (auto& [p, m] : squarefree_decomposition(sqrt_poly(c).monic())) out.push_back({p, 2 * m});
  }
  return out;
}

/// Distinct-degree factorization of a monic squarefree polynomial.
inline std::vector<std::pair<UPoly, unsigned>> distinct_degree(UPoly f) {
  std::vector<std::pair<UPoly, unsigned>> out;
  const FieldCtx& fc = f.ctx();
  const UPoly t = UPoly::monomial(fc, 1);
  UPoly h = t % f;
  for (unsigned d = 1; 2 * static_cast<int>(d) <= f.degree(); ++d) {
    h = frobenius_pow_mod(h, fc.degree(), f);
    UPoly g = gcd(h - t, f);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = divexact(f, g);
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), static_cast<unsigned>(f.degree()));
  return out;
}

/// Splits a monic squarefree product of irreducibles of degree d (characteristic 2, trace map).
inline void equal_degree(const UPoly& f, unsigned d, std::mt19937_64& rng, std::vector<UPoly>& out) {
  if (f.degree() == static_cast<int>(d)) {
    out.push_back(f.monic());
    return;
  }
  const FieldCtx& fc = f.ctx();
  const std::uint64_t trace_len = static_cast<std::uint64_t>(fc.degree()) * d;
  std::uniform_int_distribution<std::uint64_t> pick(0, fc.unit_group_order());
  for (;;) {
    std::vector<Bits> rc(f.degree());
    for (auto& v : rc) v = static_cast<Bits>(pick(rng));
    UPoly r = UPoly(fc, std::move(rc));
    if (r.degree() <= 0) continue;
    UPoly acc = r % f, term = acc;
    for (std::uint64_t j = 1; j < trace_len; ++j) {
      term = mulmod(term, term, f);
      acc += term;
    }
    UPoly g = gcd(acc, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(divexact(f, g), d, rng, out);
      return;
    }
  }
}

}  // namespace detail

/// Complete factorization over u's field. Randomized splitting is driven by `seed`;
/// the returned factor list is canonically ordered, so it does not depend on the seed.
inline UFactorization factor(const UPoly& u, std::uint64_t seed = 0) {
  if (u.is_zero()) throw PreconditionError("factor: zero polynomial");
  UFactorization res;
  res.unit = u.lead();
  const UPoly m = u.monic();
  std::mt19937_64 rng(seed);
  for (auto& [sqf, mult] : detail::squarefree_decomposition(m)) {
    for (auto& [part, d] : detail::distinct_degree(sqf)) {
      std::vector<UPoly> pieces;
      detail::equal_degree(part, d, rng, pieces);
      for (auto& p : pieces) res.factors.push_back({std::move(p), mult});
    }
  }
  detail::sort_factors(res.factors);
  return res;
}

/// Distinct roots in the coefficient field, sorted by bit value.
inline std::vector<Bits> roots(const UPoly& u, std::uint64_t seed = 0) {
  if (u.is_zero()) throw PreconditionError("roots: zero polynomial");
  std::vector<Bits> out;
  if (u.degree() <= 0) return out;
  const FieldCtx& fc = u.ctx();
  const UPoly m = u.monic();
  const UPoly t = UPoly::monomial(fc, 1);
  UPoly split = gcd(frobenius_pow_mod(t, fc.degree(), m) - t, m);
  if (split.degree() <= 0) return out;
  std::mt19937_64 rng(seed);
  std::vector<UPoly> lin;
  detail::equal_degree(split, 1, rng, lin);
  for (auto& l : lin) out.push_back(l.coeff(0));
  std::sort(out.begin(), out.end());
  return out;
}

/// Number of distinct roots in the coefficient field (deg gcd(u, t^q - t)).
inline std::size_t count_distinct_roots(const UPoly& u) {
  if (u.is_zero()) throw PreconditionError("count_distinct_roots: zero polynomial");
  if (u.degree() <= 0) return 0;
  const FieldCtx& fc = u.ctx();
  const UPoly m = u.monic();
  const UPoly t = UPoly::monomial(fc, 1);
  return static_cast<std::size_t>(gcd(frobenius_pow_mod(t, fc.degree(), m) - t, m).degree());
}

/// Least common multiple of the degrees of u's irreducible factors: u splits over
/// the extension of that degree of its coefficient field.
inline unsigned splitting_degree(const UPoly& u, std::uint64_t seed = 0) {
  std::uint64_t l = 1;
  for (const auto& fac : factor(u, seed).factors) l = lcm_u64(l, fac.factor.degree());
  return static_cast<unsigned>(l);
}

}  // namespace hyperoval_lab

#endif  // HYPEROVAL_LAB_UPOLY_HPP
