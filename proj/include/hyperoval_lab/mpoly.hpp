#ifndef HYPEROVAL_LAB_MPOLY_HPP
#define HYPEROVAL_LAB_MPOLY_HPP

// Sparse polynomials in one to three variables (x, y, z) over GF(2^e).

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "embed.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "upoly.hpp"

namespace hyperoval_lab {

inline constexpr unsigned kMaxVars = 3;

struct Exponents {
  std::array<std::uint16_t, kMaxVars> v{};

  Exponents() = default;
  Exponents(unsigned i, unsigned j = 0, unsigned l = 0)
      : v{static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j), static_cast<std::uint16_t>(l)} {}

  unsigned total() const { return unsigned{v[0]} + v[1] + v[2]; }
  unsigned operator[](std::size_t k) const { return v[k]; }

  friend Exponents operator+(const Exponents& a, const Exponents& b) {
    Exponents r;
    for (std::size_t k = 0; k < kMaxVars; ++k) r.v[k] = static_cast<std::uint16_t>(a.v[k] + b.v[k]);
    return r;
  }
  bool divides(const Exponents& b) const {
    for (std::size_t k = 0; k < kMaxVars; ++k)
      if (v[k] > b.v[k]) return false;
    return true;
  }
  friend Exponents operator-(const Exponents& a, const Exponents& b) {
    Exponents r;
    for (std::size_t k = 0; k < kMaxVars; ++k) r.v[k] = static_cast<std::uint16_t>(a.v[k] - b.v[k]);
    return r;
  }
  friend bool operator==(const Exponents&, const Exponents&) = default;
};

/// Graded lexicographic order, largest first (x > y > z).
struct GrLexDesc {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const unsigned ta = a.total(), tb = b.total();
    if (ta != tb) return ta > tb;
    return a.v > b.v;
  }
};

class MPoly {
 public:
  using TermMap = std::map<Exponents, Bits, GrLexDesc>;

  MPoly() = default;
  MPoly(const FieldCtx& ctx, unsigned nvars) : ctx_(&ctx), nvars_(nvars) {
    if (nvars < 1 || nvars > kMaxVars) throw PreconditionError("MPoly supports 1 to 3 variables");
  }

  static MPoly constant(const FieldCtx& ctx, unsigned nvars, Bits c) {
    MPoly p(ctx, nvars);
    p.add_term(Exponents{}, c);
    return p;
  }
  static MPoly variable(const FieldCtx& ctx, unsigned nvars, unsigned var) {
    if (var >= nvars) throw PreconditionError("variable index out of range");
    MPoly p(ctx, nvars);
    Exponents e;
    e.v[var] = 1;
    p.add_term(e, 1);
    return p;
  }
  static MPoly term(const FieldCtx& ctx, unsigned nvars, Exponents e, Bits c) {
    MPoly p(ctx, nvars);
    p.add_term(e, c);
    return p;
  }

  const FieldCtx& ctx() const { return *ctx_; }
  const FieldCtx* ctx_ptr() const { return ctx_; }
  unsigned nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total() == 0); }

  /// -1 for the zero polynomial.
  int total_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.total()); }

  int degree_in(unsigned var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
    return d;
  }

  Bits coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }

  /// Adds c * X^e (accumulating into an existing term).
  void add_term(const Exponents& e, Bits c) {
    for (unsigned k = nvars_; k < kMaxVars; ++k)
      if (e[k] != 0) throw PreconditionError("exponent uses a variable beyond nvars");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second ^= c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Leading term under graded lex.
  std::pair<Exponents, Bits> leading_term() const {
    if (terms_.empty()) throw PreconditionError("leading term of zero polynomial");
    return *terms_.begin();
  }

  MPoly with_nvars(unsigned n) const {
    if (n < nvars_) {
      for (const auto& [e, c] : terms_)
        for (unsigned k = n; k < nvars_; ++k)
          if (e[k] != 0) throw PreconditionError("cannot drop a variable that occurs");
    }
    MPoly r(*ctx_, n);
    r.terms_ = terms_;
    return r;
  }

  MPoly scale(Bits s) const {
    MPoly r(*ctx_, nvars_);
    if (s == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, ctx_->mul(c, s));
    return r;
  }

  /// Scaled so that the leading coefficient is 1.
  MPoly monic() const {
    if (is_zero()) return *this;
    return scale(ctx_->inv(terms_.begin()->second));
  }

  friend MPoly operator+(const MPoly& a, const MPoly& b) {
    const unsigned n = check(a, b);
    MPoly r = a.with_nvars(n);
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + b; }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    const unsigned n = check(a, b);
    MPoly r(a.ctx(), n);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, a.ctx_->mul(ca, cb));
    return r;
  }

  MPoly& operator+=(const MPoly& b) { return *this = *this + b; }
  MPoly& operator*=(const MPoly& b) { return *this = *this * b; }

  MPoly pow(unsigned n) const {
    MPoly r = constant(*ctx_, nvars_, 1), base = *this;
    while (n) {
      if (n & 1) r *= base;
      base *= base;
      n >>= 1;
    }
    return r;
  }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }

  /// Evaluation at a point given as raw field words (one per variable).
  Bits eval(const std::vector<Bits>& pt) const {
    if (pt.size() < nvars_) throw PreconditionError("eval: point has too few coordinates");
    Bits r = 0;
    for (const auto& [e, c] : terms_) {
      Bits t = c;
      for (unsigned k = 0; k < nvars_; ++k)
        if (e[k]) t = ctx_->mul(t, ctx_->pow(pt[k], e[k]));
      r ^= t;
    }
    return r;
  }

  /// Evaluation at a point in this field or an extension of it.
  FFElem eval(const std::vector<FFElem>& pt) const {
    if (pt.empty()) throw PreconditionError("eval: empty point");
    const FieldCtx& target = pt[0].ctx();
    std::vector<Bits> raw;
    for (const auto& p : pt) {
      if (&p.ctx() != &target) throw ContextMismatch("eval: point coordinates in different fields");
      raw.push_back(p.bits());
    }
    return FFElem(target, embed_into(target).eval(raw));
  }

  /// Replaces variable `var` by the polynomial `repl`.
  MPoly substitute(unsigned var, const MPoly& repl) const {
    const unsigned n = check(*this, repl);
    const int dv = degree_in(var);
    std::vector<MPoly> powers;
    MPoly p = constant(*ctx_, n, 1);
    for (int i = 0; i <= dv; ++i) {
      powers.push_back(p);
      p *= repl;
    }
    MPoly r(*ctx_, n);
    for (const auto& [e, c] : terms_) {
      Exponents rest = e;
      rest.v[var] = 0;
      r += powers[e[var]] * term(*ctx_, n, rest, c);
    }
    return r;
  }

  MPoly homogeneous_part(unsigned d) const {
    MPoly r(*ctx_, nvars_);
    for (const auto& [e, c] : terms_)
      if (e.total() == d) r.terms_.emplace(e, c);
    return r;
  }

  bool is_homogeneous() const {
    return terms_.empty() || terms_.begin()->first.total() == terms_.rbegin()->first.total();
  }

  /// Bivariate f(x,y) -> z^deg f(x/z, y/z).
  MPoly homogenize() const {
    if (nvars_ != 2) throw PreconditionError("homogenize expects a bivariate polynomial");
    MPoly r(*ctx_, 3);
    const unsigned d = static_cast<unsigned>(std::max(0, total_degree()));
    for (const auto& [e, c] : terms_) r.terms_.emplace(Exponents(e[0], e[1], d - e.total()), c);
    return r;
  }

  /// Sets variable `var` to 1 and removes it, shifting later variables down.
  MPoly dehomogenize(unsigned var) const {
    if (nvars_ < 2) throw PreconditionError("dehomogenize needs at least two variables");
    MPoly r(*ctx_, nvars_ - 1);
    for (const auto& [e, c] : terms_) {
      Exponents ne;
      unsigned k2 = 0;
      for (unsigned k = 0; k < nvars_; ++k)
        if (k != var) ne.v[k2++] = e.v[k];
      r.add_term(ne, c);
    }
    return r;
  }

  MPoly derivative(unsigned var) const {
    MPoly r(*ctx_, nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] % 2 == 1) {
        Exponents ne = e;
        ne.v[var] -= 1;
        r.add_term(ne, c);
      }
    }
    return r;
  }

  MPoly swap_vars(unsigned a, unsigned b) const {
    MPoly r(*ctx_, nvars_);
    for (const auto& [e, c] : terms_) {
      Exponents ne = e;
      std::swap(ne.v[a], ne.v[b]);
      r.terms_.emplace(ne, c);
    }
    return r;
  }

  /// Coefficient-wise map into another field (fn must be additive and multiplicative).
  MPoly map_coeffs(const FieldCtx& target, const std::function<Bits(Bits)>& fn) const {
    MPoly r(target, nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, fn(c));
    return r;
  }

  MPoly embed_into(const FieldCtx& target) const {
    if (&target == ctx_) return *this;
    const Embedding& m = embedding(*ctx_, target);
    return map_coeffs(target, [&m](Bits c) { return m.apply(c); });
  }

  /// Pulls coefficients back into a subfield; throws if some coefficient lies outside it.
  MPoly restrict_to(const FieldCtx& sub) const {
    if (&sub == ctx_) return *this;
    const Embedding& m = embedding(sub, *ctx_);
    return map_coeffs(sub, [&m](Bits c) {
      auto pre = m.preimage(c);
      if (!pre) throw PreconditionError("restrict_to: coefficient outside the subfield");
      return *pre;
    });
  }

  bool coefficients_in(const FieldCtx& sub) const {
    if (ctx_->degree() % sub.degree() != 0) return false;
    const Embedding& m = embedding(sub, *ctx_);
    for (const auto& [e, c] : terms_)
      if (!m.preimage(c)) return false;
    return true;
  }

  /// Coefficient-wise c -> c^(2^j).
  MPoly frobenius(unsigned j) const {
    return map_coeffs(*ctx_, [this, j](Bits c) { return ctx_->frobenius(c, j); });
  }

  std::string to_string() const;

 private:
  static unsigned check(const MPoly& a, const MPoly& b) {
    if (a.ctx_ != b.ctx_) throw ContextMismatch("polynomials over different fields");
    return std::max(a.nvars_, b.nvars_);
  }

  const FieldCtx* ctx_ = nullptr;
  unsigned nvars_ = 2;
  TermMap terms_;
};

inline std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  static const char* names[kMaxVars] = {"x", "y", "z"};
  std::string s;
  for (const auto& [e, c] : terms_) {
    if (!s.empty()) s += "+";
    std::string mono;
    for (unsigned k = 0; k < nvars_; ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[k];
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    if (mono.empty()) {
      s += c == 1 ? "1" : FieldCtx::to_binary_string(c);
    } else if (c == 1) {
      s += mono;
    } else {
      s += FieldCtx::to_binary_string(c) + "*" + mono;
    }
  }
  return s;
}

/// Parses the text form, e.g. "x^2+0b10*x*y+y^2+1". Coefficients are "0b..." words
/// or decimal field words; a missing coefficient means 1.
inline MPoly parse_mpoly(const FieldCtx& ctx, unsigned nvars, const std::string& text) {
  MPoly p(ctx, nvars);
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s == "0") return p;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw PreconditionError("parse_mpoly: " + why + " in \"" + text + "\"");
  };
  while (pos <= s.size()) {
    std::size_t end = s.find('+', pos);
    if (end == std::string::npos) end = s.size();
    const std::string tok = s.substr(pos, end - pos);
    if (tok.empty()) fail("empty term");
    Bits coeff = 1;
    Exponents e;
    std::size_t fpos = 0;
    while (fpos < tok.size()) {
      std::size_t fend = tok.find('*', fpos);
      if (fend == std::string::npos) fend = tok.size();
      const std::string fac = tok.substr(fpos, fend - fpos);
      if (fac.empty()) fail("empty factor");
      if (fac.rfind("0b", 0) == 0) {
        coeff = ctx.mul(coeff, static_cast<Bits>(std::stoull(fac.substr(2), nullptr, 2)));
      } else if (std::isdigit(static_cast<unsigned char>(fac[0]))) {
        coeff = ctx.mul(coeff, static_cast<Bits>(std::stoull(fac)));
      } else {
        const char v = fac[0];
        unsigned var = v == 'x' ? 0 : v == 'y' ? 1 : v == 'z' ? 2 : kMaxVars;
        if (var >= nvars) fail(std::string("unknown variable '") + v + "'");
        unsigned power = 1;
        if (fac.size() > 1) {
          if (fac[1] != '^') fail("bad factor '" + fac + "'");
          power = static_cast<unsigned>(std::stoul(fac.substr(2)));
        }
        e.v[var] = static_cast<std::uint16_t>(e.v[var] + power);
      }
      fpos = fend + 1;
    }
    if (!ctx.contains(coeff)) fail("coefficient outside the field");
    p.add_term(e, coeff);
    if (end == s.size()) break;
    pos = end + 1;
  }
  return p;
}

/// Exact multivariate division: returns q with f = d*q, or throws NotDivisible.
inline MPoly exact_divide(const MPoly& f, const MPoly& d) {
  if (d.is_zero()) throw PreconditionError("exact_divide: division by zero polynomial");
  if (f.ctx_ptr() != d.ctx_ptr()) throw ContextMismatch("exact_divide: different fields");
  const FieldCtx& ctx = f.ctx();
  const unsigned n = std::max(f.nvars(), d.nvars());
  MPoly r = f.with_nvars(n), q(ctx, n);
  const auto [dlead, dcoef] = d.leading_term();
  const Bits dinv = ctx.inv(dcoef);
  while (!r.is_zero()) {
    const auto [rlead, rcoef] = r.leading_term();
    if (!dlead.divides(rlead)) throw NotDivisible("exact_divide: nonzero remainder");
    const Exponents qe = rlead - dlead;
    const Bits qc = ctx.mul(rcoef, dinv);
    q.add_term(qe, qc);
    for (const auto& [e, c] : d.terms()) r.add_term(e + qe, ctx.mul(c, qc));
  }
  return q;
}

/// The single variable a polynomial depends on (0 if it is constant); throws if several occur.
inline unsigned sole_variable(const MPoly& u) {
  int found = -1;
  for (const auto& [e, c] : u.terms())
    for (unsigned k = 0; k < u.nvars(); ++k)
      if (e[k] != 0) {
        if (found >= 0 && found != static_cast<int>(k))
          throw PreconditionError("expected a univariate polynomial");
        found = static_cast<int>(k);
      }
  return found < 0 ? 0 : static_cast<unsigned>(found);
}

inline UPoly to_upoly(const MPoly& u, unsigned var) {
  std::vector<Bits> c(static_cast<std::size_t>(std::max(0, u.degree_in(var)) + 1), 0);
  for (const auto& [e, v] : u.terms()) {
    for (unsigned k = 0; k < u.nvars(); ++k)
      if (k != var && e[k] != 0) throw PreconditionError("to_upoly: other variables occur");
    c[e[var]] ^= v;
  }
  return UPoly(u.ctx(), std::move(c));
}

inline MPoly from_upoly(const UPoly& p, unsigned nvars, unsigned var) {
  MPoly r(p.ctx(), nvars);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    Exponents e;
    e.v[var] = static_cast<std::uint16_t>(i);
    r.add_term(e, p.coeffs()[i]);
  }
  return r;
}

}  // namespace hyperoval_lab

#endif  // HYPEROVAL_LAB_MPOLY_HPP
