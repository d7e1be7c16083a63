#ifndef HYPEROVAL_LAB_FIELD_HPP
#define HYPEROVAL_LAB_FIELD_HPP

// Arithmetic in GF(2^e), 1 <= e <= 32, in the polynomial basis.
//
// Elements are stored as e-bit words. Each degree e has exactly one context,
// built on first use from a fixed table of moduli (the lexicographically least
// irreducible polynomial of each degree). Contexts are immutable once built and
// can be shared freely between threads.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace hyperoval_lab {

using Bits = std::uint32_t;

inline constexpr unsigned kMaxFieldDegree = 32;

/// Lexicographically least irreducible polynomial over GF(2) of degree e, bit i = coeff of x^i.
/// Entry 1 is the degenerate modulus x (so GF(2) is plain bit arithmetic).
inline constexpr std::array<std::uint64_t, kMaxFieldDegree + 1> kModulusTable = {
    0x0ULL,        0x2ULL,        0x7ULL,        0xbULL,        0x13ULL,       0x25ULL,
    0x43ULL,       0x83ULL,       0x11bULL,      0x203ULL,      0x409ULL,      0x805ULL,
    0x1009ULL,     0x201bULL,     0x4021ULL,     0x8003ULL,     0x1002bULL,    0x20009ULL,
    0x40009ULL,    0x80027ULL,    0x100009ULL,   0x200005ULL,   0x400003ULL,   0x800021ULL,
    0x100001bULL,  0x2000009ULL,  0x400001bULL,  0x8000027ULL,  0x10000003ULL, 0x20000005ULL,
    0x40000003ULL, 0x80000009ULL, 0x10000008dULL};

// ---------------------------------------------------------------------------
// Small integer helpers shared by the whole library.

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

inline std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

/// Distinct prime divisors in increasing order.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Positive divisors in increasing order.
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> lo, hi;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      lo.push_back(d);
      if (d != n / d) hi.push_back(n / d);
    }
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

/// Multiplicative order of 2 modulo an odd ell (1 for ell = 1).
inline unsigned order_of_two_mod(std::uint64_t ell) {
  if (ell % 2 == 0) throw PreconditionError("order_of_two_mod: modulus must be odd");
  if (ell == 1) return 1;
  std::uint64_t v = 2 % ell;
  unsigned ord = 1;
  while (v != 1) {
    v = (v * 2) % ell;
    ++ord;
  }
  return ord;
}

// ---------------------------------------------------------------------------
// Polynomials over GF(2) packed into machine words.

namespace gf2x {

inline int degree(std::uint64_t a) { return a == 0 ? -1 : 63 - std::countl_zero(a); }

inline std::uint64_t mod(std::uint64_t a, std::uint64_t m) {
  const int dm = degree(m);
  for (int da = degree(a); da >= dm; da = degree(a)) a ^= m << (da - dm);
  return a;
}

/// Trial division by every polynomial of degree 1..deg(m)/2.
inline bool is_irreducible_by_trial_division(std::uint64_t m) {
  const int dm = degree(m);
  if (dm < 1) return false;
  for (int d = 1; d <= dm / 2; ++d) {
    for (std::uint64_t p = std::uint64_t{1} << d; p < (std::uint64_t{1} << (d + 1)); ++p) {
      if (mod(m, p) == 0) return false;
    }
  }
  return true;
}

}  // namespace gf2x

class FieldCtx;
const FieldCtx& make_field(unsigned e);

/// Immutable arithmetic context for GF(2^e).
class FieldCtx {
 public:
  explicit FieldCtx(unsigned e) : e_(e), modulus_(kModulusTable.at(e)) {
    if (e < 1 || e > kMaxFieldDegree) throw PreconditionError("field degree out of range");
    if (!gf2x::is_irreducible_by_trial_division(modulus_))
      throw ConsistencyError("modulus table entry is reducible");
    order_minus_one_ = (std::uint64_t{1} << e) - 1;
    group_primes_ = prime_divisors(order_minus_one_);
    choose_primitive();
    if (e_ <= kTableLimit) build_tables();
  }

  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

  unsigned degree() const noexcept { return e_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::uint64_t size() const noexcept { return order_minus_one_ + 1; }
  std::uint64_t unit_group_order() const noexcept { return order_minus_one_; }
  const std::vector<std::uint64_t>& unit_group_primes() const noexcept { return group_primes_; }

  /// "0b..." rendering of the modulus, most significant bit first.
  std::string modulus_string() const { return to_binary_string(modulus_); }

  bool contains(std::uint64_t a) const noexcept { return a <= order_minus_one_; }

  Bits add(Bits a, Bits b) const noexcept { return a ^ b; }

  Bits mul(Bits a, Bits b) const noexcept {
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) return exp_[log_[a] + log_[b]];
    return slow_mul(a, b);
  }

  Bits sqr(Bits a) const noexcept { return mul(a, a); }

  Bits pow(Bits a, std::uint64_t n) const noexcept {
    if (n == 0) return 1;
    if (a == 0) return 0;
    n %= order_minus_one_;
    if (!log_.empty()) {
      return exp_[static_cast<std::size_t>((static_cast<std::uint64_t>(log_[a]) * n) % order_minus_one_)];
    }
    Bits r = 1;
    while (n) {
      if (n & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      n >>= 1;
    }
    return r;
  }

  Bits inv(Bits a) const {
    if (a == 0) throw PreconditionError("inverse of zero");
    if (!log_.empty()) return exp_[order_minus_one_ - log_[a]];
    return pow(a, order_minus_one_ - 1);
  }

  Bits div(Bits a, Bits b) const { return mul(a, inv(b)); }

  /// a^(2^j); j is taken mod e.
  Bits frobenius(Bits a, unsigned j) const noexcept {
    j %= e_;
    for (unsigned t = 0; t < j; ++t) a = mul(a, a);
    return a;
  }

  /// The unique b with b^(2^j) = a.
  Bits root_2pow(Bits a, unsigned j) const noexcept { return frobenius(a, (e_ - j % e_) % e_); }

  Bits sqrt(Bits a) const noexcept { return root_2pow(a, 1); }

  /// Generator of the unit group, chosen compatibly across the subfield lattice
  /// (see choose_primitive()).
  Bits primitive() const noexcept { return primitive_; }

  /// Minimal polynomial of primitive() over GF(2), bit i = coeff of x^i.
  std::uint64_t primitive_minpoly() const noexcept { return primitive_minpoly_; }

  /// Discrete logarithm to base primitive(); only for e <= 16.
  std::uint64_t log(Bits a) const {
    if (a == 0) throw PreconditionError("log of zero");
    if (log_.empty()) throw PreconditionError("discrete log table not available for e > 16");
    return log_[a];
  }

  std::uint64_t element_order(Bits a) const {
    if (a == 0) throw PreconditionError("order of zero");
    std::uint64_t ord = order_minus_one_;
    for (std::uint64_t p : group_primes_) {
      while (ord % p == 0 && pow(a, ord / p) == 1) ord /= p;
    }
    return ord;
  }

  /// Evaluates a GF(2)-polynomial (bit-packed) at a.
  Bits eval_gf2x(std::uint64_t poly, Bits a) const noexcept {
    Bits r = 0;
    for (int i = gf2x::degree(poly); i >= 0; --i) {
      r = mul(r, a);
      if ((poly >> i) & 1) r ^= 1;
    }
    return r;
  }

  static std::string to_binary_string(std::uint64_t v) {
    if (v == 0) return "0b0";
    std::string s = "0b";
    for (int i = gf2x::degree(v); i >= 0; --i) s.push_back(((v >> i) & 1) ? '1' : '0');
    return s;
  }

 private:
  static constexpr unsigned kTableLimit = 16;

  Bits slow_mul(Bits a, Bits b) const noexcept {
    std::uint64_t r = 0;
    std::uint64_t aa = a;
    for (Bits bb = b; bb; bb &= bb - 1) r ^= aa << std::countr_zero(bb);
    for (int i = gf2x::degree(r); i >= static_cast<int>(e_); i = gf2x::degree(r))
      r ^= modulus_ << (i - e_);
    return static_cast<Bits>(r);
  }

  Bits slow_pow(Bits a, std::uint64_t n) const noexcept {
    Bits r = 1;
    while (n) {
      if (n & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      n >>= 1;
    }
    return r;
  }

  bool slow_is_primitive(Bits a) const noexcept {
    if (a == 0) return false;
    if (slow_pow(a, order_minus_one_) != 1) return false;
    for (std::uint64_t p : group_primes_)
      if (slow_pow(a, order_minus_one_ / p) == 1) return false;
    return true;
  }

  // The least (by bit value) primitive element pi such that for every maximal
  // proper subfield GF(2^d), pi^((2^e-1)/(2^d-1)) is a root of the minimal
  // polynomial of that subfield's own primitive element. Norm-compatible
  // generators make the subfield embeddings commute (a Conway-style system).
  void choose_primitive() {
    if (e_ == 1) {
      primitive_ = 1;
      primitive_minpoly_ = 0x3;
      return;
    }
    struct Constraint {
      std::uint64_t exponent;
      std::uint64_t minpoly;
    };
    std::vector<Constraint> constraints;
    for (std::uint64_t p : prime_divisors(e_)) {
      const unsigned d = e_ / static_cast<unsigned>(p);
      const FieldCtx& sub = make_field(d);
      const std::uint64_t qd1 = (std::uint64_t{1} << d) - 1;
      constraints.push_back({order_minus_one_ / qd1, sub.primitive_minpoly()});
    }
    for (std::uint64_t cand = 2; cand <= order_minus_one_; ++cand) {
      const Bits a = static_cast<Bits>(cand);
      bool ok = true;
      for (const auto& c : constraints) {
        const Bits rho = slow_pow(a, c.exponent);
        Bits v = 0;
        for (int i = gf2x::degree(c.minpoly); i >= 0; --i) {
          v = slow_mul(v, rho);
          if ((c.minpoly >> i) & 1) v ^= 1;
        }
        if (v != 0) {
          ok = false;
          break;
        }
      }
      if (ok && slow_is_primitive(a)) {
        primitive_ = a;
        break;
      }
    }
    if (primitive_ == 0) throw ConsistencyError("no compatible primitive element found");
    // minpoly = prod_{j<e} (X + pi^(2^j)); coefficients land in GF(2).
    std::vector<Bits> poly{1};
    Bits conj = primitive_;
    for (unsigned j = 0; j < e_; ++j) {
      std::vector<Bits> next(poly.size() + 1, 0);
      for (std::size_t t = 0; t < poly.size(); ++t) {
        next[t + 1] ^= poly[t];
        next[t] ^= slow_mul(poly[t], conj);
      }
      poly = std::move(next);
      conj = slow_mul(conj, conj);
    }
    primitive_minpoly_ = 0;
    for (std::size_t t = 0; t < poly.size(); ++t) {
      if (poly[t] > 1) throw ConsistencyError("minimal polynomial not over GF(2)");
      if (poly[t]) primitive_minpoly_ |= std::uint64_t{1} << t;
    }
  }

  void build_tables() {
    const std::size_t n = static_cast<std::size_t>(order_minus_one_);
    exp_.assign(2 * n + 1, 0);
    log_.assign(n + 1, 0);
    Bits v = 1;
    for (std::size_t i = 0; i < n; ++i) {
      exp_[i] = v;
      exp_[i + n] = v;
      log_[v] = static_cast<std::uint32_t>(i);
      v = slow_mul(v, primitive_);
    }
    exp_[2 * n] = 1;
  }

  unsigned e_;
  std::uint64_t modulus_;
  std::uint64_t order_minus_one_ = 0;
  std::vector<std::uint64_t> group_primes_;
  Bits primitive_ = 0;
  std::uint64_t primitive_minpoly_ = 0;
  std::vector<Bits> exp_;
  std::vector<std::uint32_t> log_;
};

/// Canonical context for GF(2^e); every call with the same e returns the same object.
inline const FieldCtx& make_field(unsigned e) {
  if (e < 1 || e > kMaxFieldDegree)
    throw PreconditionError("make_field: e must satisfy 1 <= e <= 32, got " + std::to_string(e));
  static std::array<std::once_flag, kMaxFieldDegree + 1> flags;
  static std::array<std::unique_ptr<FieldCtx>, kMaxFieldDegree + 1> fields;
  std::call_once(flags[e], [e] { fields[e] = std::make_unique<FieldCtx>(e); });
  return *fields[e];
}

/// An element together with its field.
class FFElem {
 public:
  FFElem() = default;
  FFElem(const FieldCtx& ctx, std::uint64_t bits) : bits_(static_cast<Bits>(bits)), ctx_(&ctx) {
    if (!ctx.contains(bits)) throw PreconditionError("element does not fit the field");
  }

  static FFElem zero(const FieldCtx& ctx) { return FFElem(ctx, 0); }
  static FFElem one(const FieldCtx& ctx) { return FFElem(ctx, 1); }

  Bits bits() const noexcept { return bits_; }
  const FieldCtx& ctx() const noexcept { return *ctx_; }
  bool is_zero() const noexcept { return bits_ == 0; }
  bool is_one() const noexcept { return bits_ == 1; }

  friend FFElem operator+(const FFElem& a, const FFElem& b) {
    check(a, b);
    return FFElem(*a.ctx_, a.bits_ ^ b.bits_, Raw{});
  }
  friend FFElem operator-(const FFElem& a, const FFElem& b) { return a + b; }
  friend FFElem operator*(const FFElem& a, const FFElem& b) {
    check(a, b);
    return FFElem(*a.ctx_, a.ctx_->mul(a.bits_, b.bits_), Raw{});
  }
  friend FFElem operator/(const FFElem& a, const FFElem& b) {
    check(a, b);
    return FFElem(*a.ctx_, a.ctx_->div(a.bits_, b.bits_), Raw{});
  }
  FFElem& operator+=(const FFElem& b) { return *this = *this + b; }
  FFElem& operator*=(const FFElem& b) { return *this = *this * b; }

  FFElem inverse() const { return FFElem(*ctx_, ctx_->inv(bits_), Raw{}); }
  FFElem pow(std::uint64_t n) const { return FFElem(*ctx_, ctx_->pow(bits_, n), Raw{}); }
  FFElem frobenius(unsigned j) const { return FFElem(*ctx_, ctx_->frobenius(bits_, j), Raw{}); }
  FFElem root_2pow(unsigned j) const { return FFElem(*ctx_, ctx_->root_2pow(bits_, j), Raw{}); }
  std::uint64_t order() const { return ctx_->element_order(bits_); }

  friend bool operator==(const FFElem& a, const FFElem& b) noexcept {
    return a.ctx_ == b.ctx_ && a.bits_ == b.bits_;
  }
  friend bool operator<(const FFElem& a, const FFElem& b) noexcept { return a.bits_ < b.bits_; }

  std::string to_string() const { return FieldCtx::to_binary_string(bits_); }

 private:
  struct Raw {};
  FFElem(const FieldCtx& ctx, Bits bits, Raw) : bits_(bits), ctx_(&ctx) {}

  static void check(const FFElem& a, const FFElem& b) {
    if (a.ctx_ != b.ctx_)
      throw ContextMismatch("arithmetic between GF(2^" + std::to_string(a.ctx_->degree()) +
                            ") and GF(2^" + std::to_string(b.ctx_->degree()) + ")");
  }

  Bits bits_ = 0;
  const FieldCtx* ctx_ = nullptr;
};

/// All ell-th roots of unity in ctx, sorted by bit value.
inline std::vector<FFElem> ell_th_roots(std::uint64_t ell, const FieldCtx& ctx) {
  if (ell == 0 || ell % 2 == 0) throw PreconditionError("ell_th_roots: ell must be odd");
  const unsigned need = order_of_two_mod(ell);
  if (ctx.degree() % need != 0)
    throw PreconditionError("ell_th_roots: the " + std::to_string(ell) + "-th roots of unity need GF(2^" +
                            std::to_string(need) + "), not a subfield of GF(2^" +
                            std::to_string(ctx.degree()) + ")");
  const Bits z = ctx.pow(ctx.primitive(), ctx.unit_group_order() / ell);
  std::vector<FFElem> out;
  out.reserve(ell);
  Bits v = 1;
  for (std::uint64_t j = 0; j < ell; ++j) {
    out.emplace_back(ctx, v);
    v = ctx.mul(v, z);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hyperoval_lab

#endif  // HYPEROVAL_LAB_FIELD_HPP
