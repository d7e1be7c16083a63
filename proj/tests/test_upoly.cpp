#include <gtest/gtest.h>

#include <cstdint>
#include <random>

#include "hyperoval_lab/upoly.hpp"

using namespace hyperoval_lab;

namespace {

// GF(2)[t] polynomials as bit masks, handled without UPoly.
int bdeg(std::uint64_t p) { return p ? 63 - __builtin_clzll(p) : -1; }

std::uint64_t bmod(std::uint64_t a, std::uint64_t b) {
  while (a && bdeg(a) >= bdeg(b)) a ^= b << (bdeg(a) - bdeg(b));
  return a;
}

bool bit_irreducible(std::uint64_t p) {
  if (bdeg(p) <= 0) return false;
  for (std::uint64_t d = 2; bdeg(d) * 2 <= bdeg(p); ++d)
    if (bmod(p, d) == 0) return false;
  return true;
}

std::uint64_t to_mask(const UPoly& p) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    if (p.coeffs()[i]) m |= std::uint64_t{1} << i;
  return m;
}

UPoly from_mask(std::uint64_t m) {
  std::vector<Bits> c;
  for (int i = 0; i <= bdeg(m); ++i) c.push_back((m >> i) & 1);
  return UPoly(make_field(1), c);
}

// Irreducibility over any GF(2^e) by exhaustive search for a monic divisor of degree <= n/2.
bool brute_irreducible(const UPoly& f) {
  const FieldCtx& ctx = f.ctx();
  const int n = f.degree();
  if (n <= 0) return false;
  const std::uint64_t q = ctx.size();
  for (int d = 1; 2 * d <= n; ++d) {
    std::vector<Bits> c(d + 1, 0);
    c[d] = 1;
    std::uint64_t total = 1;
    for (int i = 0; i < d; ++i) total *= q;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t t = idx;
      for (int i = 0; i < d; ++i) {
        c[i] = static_cast<Bits>(t % q);
        t /= q;
      }
      if ((f % UPoly(ctx, c)).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

TEST(UPoly, CubicOverGF2) {
  const UPoly u = from_mask(0b1001);  // t^3 + 1
  const auto fz = factor(u);
  ASSERT_EQ(fz.factors.size(), 2u);
  EXPECT_EQ(to_mask(fz.factors[0].factor), 0b11u);
  EXPECT_EQ(to_mask(fz.factors[1].factor), 0b111u);
  EXPECT_EQ(fz.unit, 1u);
}

TEST(UPoly, QuadraticSplitsOverGF4) {
  const FieldCtx& f4 = make_field(2);
  const UPoly u(f4, {1, 1, 1});
  const auto fz = factor(u);
  ASSERT_EQ(fz.factors.size(), 2u);
  // Roots are omega = 0b10 and omega^2 = 0b11; the factors are t + root.
  EXPECT_EQ(fz.factors[0].factor, UPoly::linear(f4, 0b10));
  EXPECT_EQ(fz.factors[1].factor, UPoly::linear(f4, 0b11));
}

TEST(UPoly, QuarticIrreducible) {
  EXPECT_TRUE(bit_irreducible(0b10011));
  const auto fz = factor(from_mask(0b10011));
  ASSERT_EQ(fz.factors.size(), 1u);
  EXPECT_EQ(to_mask(fz.factors[0].factor), 0b10011u);
  EXPECT_EQ(fz.factors[0].multiplicity, 1u);
}

TEST(UPoly, FactorRoundTripAndIrreducibilityGF2) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const int deg = 1 + static_cast<int>(rng() % 16);
    std::uint64_t m = (rng() & ((std::uint64_t{1} << deg) - 1)) | (std::uint64_t{1} << deg);
    const auto fz = factor(from_mask(m), t);
    UPoly prod = UPoly::constant(make_field(1), fz.unit);
    for (const auto& f : fz.factors) {
      if (f.factor.degree() <= 8) ASSERT_TRUE(bit_irreducible(to_mask(f.factor))) << m;
      for (unsigned i = 0; i < f.multiplicity; ++i) prod *= f.factor;
    }
    ASSERT_EQ(to_mask(prod), m);
  }
}

TEST(UPoly, FactorRoundTripExtensions) {
  std::mt19937_64 rng(12);
  for (unsigned e : {2u, 3u, 4u}) {
    const FieldCtx& ctx = make_field(e);
    for (int t = 0; t < 60; ++t) {
      const int deg = 1 + static_cast<int>(rng() % 6);
      std::vector<Bits> c(deg + 1);
      for (auto& v : c) v = static_cast<Bits>(rng() & ctx.unit_group_order());
      if (c.back() == 0) c.back() = 1;
      // Occasionally force a repeated factor.
      UPoly u(ctx, c);
      if (t % 5 == 0) u *= UPoly::linear(ctx, 1) * UPoly::linear(ctx, 1);
      const auto fz = factor(u, 7);
      UPoly prod = UPoly::constant(ctx, fz.unit);
      for (const auto& f : fz.factors) {
        if (f.factor.degree() <= 4) ASSERT_TRUE(brute_irreducible(f.factor));
        for (unsigned i = 0; i < f.multiplicity; ++i) prod *= f.factor;
      }
      ASSERT_EQ(prod, u);
    }
  }
}

TEST(UPoly, SeedDoesNotChangeResult) {
  const FieldCtx& ctx = make_field(5);
  std::mt19937_64 rng(5);
  std::vector<Bits> c(12);
  for (auto& v : c) v = static_cast<Bits>(rng() & 31);
  c.back() = 1;
  const UPoly u(ctx, c);
  const auto a = factor(u, 0), b = factor(u, 99);
  ASSERT_EQ(a.factors.size(), b.factors.size());
  for (std::size_t i = 0; i < a.factors.size(); ++i) EXPECT_EQ(a.factors[i].factor, b.factors[i].factor);
}

TEST(UPoly, Gcd) {
  const UPoly a = from_mask(0b101), b = from_mask(0b11);
  EXPECT_EQ(gcd(a, b), b);
  const FieldCtx& f4 = make_field(2);
  const UPoly f(f4, {1, 2, 3});
  EXPECT_EQ(gcd(f, UPoly(f4)), f.monic());
  EXPECT_EQ(gcd(f, UPoly(f4)).lead(), 1u);
  auto [g, s, t] = xgcd(UPoly(f4, {1, 0, 1}), UPoly(f4, {1, 1}));
  EXPECT_EQ(s * UPoly(f4, {1, 0, 1}) + t * UPoly(f4, {1, 1}), g);
}

TEST(UPoly, DivisionAndRoots) {
  const UPoly a = from_mask(0b111);
  EXPECT_THROW(divexact(a, from_mask(0b11)), NotDivisible);
  EXPECT_EQ(divexact(from_mask(0b101), from_mask(0b11)), from_mask(0b11));
  const FieldCtx& f16 = make_field(4);
  // t^15 - 1 has every nonzero element as a root.
  UPoly p = UPoly::monomial(f16, 15) + UPoly::constant(f16, 1);
  EXPECT_EQ(count_distinct_roots(p), 15u);
  auto r = roots(p);
  ASSERT_EQ(r.size(), 15u);
  for (Bits i = 0; i < 15; ++i) EXPECT_EQ(r[i], i + 1);
  EXPECT_EQ(splitting_degree(from_mask(0b10011)), 4u);
  EXPECT_EQ(splitting_degree(from_mask(0b111) * from_mask(0b1011)), 6u);
}
