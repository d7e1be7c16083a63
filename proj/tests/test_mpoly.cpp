#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hyperoval_lab/mpoly.hpp"
#include "hyperoval_lab/taylor.hpp"

using namespace hyperoval_lab;

namespace {

const FieldCtx& F2() { return make_field(1); }
const FieldCtx& F4() { return make_field(2); }

// Dense GF(2)[x,y] products on coefficient grids, independent of MPoly.
using Grid = std::set<std::pair<unsigned, unsigned>>;
Grid grid_mul(const Grid& a, const Grid& b) {
  Grid r;
  for (auto [i, j] : a)
    for (auto [k, l] : b) {
      auto key = std::make_pair(i + k, j + l);
      if (!r.erase(key)) r.insert(key);
    }
  return r;
}
Grid to_grid(const MPoly& p) {
  Grid g;
  for (const auto& [e, c] : p.terms()) {
    EXPECT_EQ(c, 1u);
    g.insert({e[0], e[1]});
  }
  return g;
}

MPoly random_poly(const FieldCtx& ctx, std::mt19937_64& rng, unsigned maxdeg, unsigned terms) {
  MPoly p(ctx, 2);
  for (unsigned t = 0; t < terms; ++t) {
    const unsigned i = rng() % (maxdeg + 1), j = rng() % (maxdeg + 1 - i);
    p.add_term(Exponents(i, j), static_cast<Bits>(rng() & ctx.unit_group_order()));
  }
  return p;
}

// f(x+a, y+b) by plain substitution, a separate path from the Lucas-based shift.
MPoly shift_by_substitution(const MPoly& f, Bits a, Bits b) {
  const FieldCtx& ctx = f.ctx();
  const MPoly x = MPoly::variable(ctx, 2, 0), y = MPoly::variable(ctx, 2, 1);
  return f.substitute(0, x + MPoly::constant(ctx, 2, a)).substitute(1, y + MPoly::constant(ctx, 2, b));
}

MPoly fk(unsigned k) {
  return parse_mpoly(F2(), 2, "x*y^" + std::to_string(k) + "+y*x^" + std::to_string(k) + "+x^" +
                                  std::to_string(k) + "+y^" + std::to_string(k) + "+x+y");
}

}  // namespace

TEST(MPoly, SquaringAndText) {
  const MPoly s = parse_mpoly(F2(), 2, "x+y");
  EXPECT_EQ(s * s, parse_mpoly(F2(), 2, "x^2+y^2"));
  EXPECT_EQ(parse_mpoly(F2(), 2, "y^2+x*y+x^2").to_string(), "x^2+x*y+y^2");
  EXPECT_EQ(parse_mpoly(F4(), 2, "0b10*x+1").to_string(), "0b10*x+1");
  EXPECT_EQ(MPoly(F2(), 2).to_string(), "0");
  EXPECT_THROW(parse_mpoly(F2(), 2, "x*z"), PreconditionError);
}

TEST(MPoly, EvalInGF4) {
  const MPoly q = parse_mpoly(F2(), 2, "x^2+x*y+y^2");
  const FFElem w(F4(), 0b10), w2 = w * w;
  // w^2 + w*w^2 + w^4 = w^2 + 1 + w = 0.
  EXPECT_TRUE(q.eval({w, w2}).is_zero());
  // At (w, 1): w^2 + w + 1 = 0; at (w, 0): w^2.
  EXPECT_TRUE(q.eval({w, FFElem::one(F4())}).is_zero());
  EXPECT_EQ(q.eval({w, FFElem::zero(F4())}), w2);
}

TEST(MPoly, Substitution) {
  // x*z with z -> x + V, V playing the role of the second variable.
  const MPoly xz = parse_mpoly(F2(), 3, "x*z");
  const MPoly repl = parse_mpoly(F2(), 3, "x+y");
  EXPECT_EQ(xz.substitute(2, repl), parse_mpoly(F2(), 3, "x^2+x*y"));
}

TEST(MPoly, ExactDivide) {
  EXPECT_EQ(exact_divide(parse_mpoly(F2(), 1, "x^2+1"), parse_mpoly(F2(), 1, "x+1")), parse_mpoly(F2(), 1, "x+1"));
  EXPECT_THROW(exact_divide(parse_mpoly(F2(), 1, "x^2+x+1"), parse_mpoly(F2(), 1, "x+1")), NotDivisible);
  const MPoly d = parse_mpoly(F2(), 2, "x+y") * parse_mpoly(F2(), 2, "x+1") * parse_mpoly(F2(), 2, "y+1");
  const MPoly q = exact_divide(fk(4), d);
  EXPECT_EQ(q, parse_mpoly(F2(), 2, "x^2+y^2+x*y+x+y+1"));
  // Oracle: dense product of the three linear factors and the quotient.
  Grid prod = grid_mul(grid_mul(grid_mul(to_grid(q), {{1, 0}, {0, 1}}), {{1, 0}, {0, 0}}), {{0, 1}, {0, 0}});
  EXPECT_EQ(prod, to_grid(fk(4)));
  EXPECT_THROW(exact_divide(fk(4), MPoly(F2(), 2)), PreconditionError);
}

TEST(MPoly, ExactDivideRoundTrip) {
  std::mt19937_64 rng(21);
  for (unsigned e : {1u, 2u, 3u}) {
    const FieldCtx& ctx = make_field(e);
    for (int t = 0; t < 40; ++t) {
      const MPoly f = random_poly(ctx, rng, 5, 6), d = random_poly(ctx, rng, 4, 4);
      if (d.is_zero()) continue;
      ASSERT_EQ(exact_divide(f * d, d), f);
    }
  }
}

TEST(MPoly, HomogenizeAndDerivative) {
  const MPoly g = parse_mpoly(F2(), 2, "x^2+y+1");
  const MPoly G = g.homogenize();
  EXPECT_EQ(G, parse_mpoly(F2(), 3, "x^2+y*z+z^2"));
  EXPECT_TRUE(G.is_homogeneous());
  EXPECT_EQ(G.dehomogenize(2), g);
  EXPECT_EQ(parse_mpoly(F2(), 2, "x^3*y+x^2*y^2+x").derivative(0), parse_mpoly(F2(), 2, "x^2*y+1"));
  EXPECT_EQ(parse_mpoly(F2(), 2, "x^3*y+x").swap_vars(0, 1), parse_mpoly(F2(), 2, "y^3*x+y"));
}

TEST(Taylor, G4AtOne) {
  const MPoly g4 = parse_mpoly(F2(), 2, "x^2+y^2+x*y+x+y+1");
  const auto h = taylor_shift(g4, FFElem::one(F2()), FFElem::one(F2()));
  EXPECT_EQ(h.multiplicity(), 2);
  EXPECT_EQ(h.part(2), parse_mpoly(F2(), 2, "x^2+x*y+y^2"));
  EXPECT_EQ(h.sum(), shift_by_substitution(g4, 1, 1));
}

TEST(Taylor, F4AtOne) {
  const auto h = taylor_shift(fk(4), FFElem::one(F2()), FFElem::one(F2()));
  EXPECT_EQ(h.multiplicity(), 5);
  EXPECT_EQ(h.part(5), parse_mpoly(F2(), 2, "x^4*y+x*y^4"));
}

TEST(Taylor, IdentityShiftAndRoundTrip) {
  std::mt19937_64 rng(31);
  for (unsigned e : {1u, 2u, 4u}) {
    const FieldCtx& ctx = make_field(e);
    for (int t = 0; t < 30; ++t) {
      const MPoly f = random_poly(ctx, rng, 7, 8);
      const auto id = taylor_shift(f, FFElem::zero(ctx), FFElem::zero(ctx));
      for (std::size_t d = 0; d < id.parts.size(); ++d) ASSERT_EQ(id.parts[d], f.homogeneous_part(d));
      const FFElem a(ctx, rng() & ctx.unit_group_order()), b(ctx, rng() & ctx.unit_group_order());
      const auto h = taylor_shift(f, a, b);
      ASSERT_EQ(h.sum(), shift_by_substitution(f, a.bits(), b.bits()));
      for (std::size_t d = 0; d < h.parts.size(); ++d)
        ASSERT_TRUE(h.parts[d].is_zero() || h.parts[d].total_degree() == static_cast<int>(d));
      ASSERT_EQ(taylor_shift(h.sum(), a, b).sum(), f);
    }
  }
}

TEST(Taylor, ShiftIntoExtension) {
  const MPoly g4 = parse_mpoly(F2(), 2, "x^2+y^2+x*y+x+y+1");
  const FFElem w(F4(), 0b10);
  // g_4 is a product of two lines through (1,1) over GF(4), so any other point is smooth or off the curve.
  const auto h = taylor_shift(g4, w, w);
  EXPECT_EQ(h.sum(), shift_by_substitution(g4.embed_into(F4()), w.bits(), w.bits()));
  EXPECT_THROW(taylor_shift(g4, w, FFElem::one(F2())), ContextMismatch);
}

TEST(Univariate, Examples) {
  const auto a = univariate_factor(parse_mpoly(F2(), 1, "x^3+1"));
  ASSERT_EQ(a.factors.size(), 2u);
  EXPECT_EQ(a.factors[0].first, parse_mpoly(F2(), 1, "x+1"));
  EXPECT_EQ(a.factors[1].first, parse_mpoly(F2(), 1, "x^2+x+1"));
  const auto b = univariate_factor(parse_mpoly(F4(), 1, "x^2+x+1"));
  ASSERT_EQ(b.factors.size(), 2u);
  EXPECT_EQ(b.factors[0].first, parse_mpoly(F4(), 1, "x+0b10"));
  EXPECT_EQ(b.factors[1].first, parse_mpoly(F4(), 1, "x+0b11"));
  EXPECT_EQ(univariate_factor(parse_mpoly(F2(), 1, "x^4+x+1")).factors.size(), 1u);
  // A polynomial in y alone is factored in y.
  const auto c = univariate_factor(parse_mpoly(F2(), 2, "y^2+1"));
  ASSERT_EQ(c.factors.size(), 1u);
  EXPECT_EQ(c.factors[0].first, parse_mpoly(F2(), 2, "y+1"));
  EXPECT_EQ(c.factors[0].second, 2u);
  EXPECT_EQ(c.expand(F2(), 2), parse_mpoly(F2(), 2, "y^2+1"));
  EXPECT_THROW(univariate_factor(parse_mpoly(F2(), 2, "x*y")), PreconditionError);
}

TEST(Univariate, Gcd) {
  EXPECT_EQ(poly_gcd(parse_mpoly(F2(), 1, "x^2+1"), parse_mpoly(F2(), 1, "x+1")), parse_mpoly(F2(), 1, "x+1"));
  const MPoly f = parse_mpoly(F4(), 1, "0b10*x^2+1");
  EXPECT_EQ(poly_gcd(f, MPoly(F4(), 1)), f.monic());
  EXPECT_THROW(poly_gcd(MPoly(F2(), 1), MPoly(F2(), 1)), PreconditionError);
  // Binary forms: gcd(x^2*y + x*y^2, x*y^2) = x*y.
  EXPECT_EQ(poly_gcd(parse_mpoly(F2(), 2, "x^2*y+x*y^2"), parse_mpoly(F2(), 2, "x*y^2")),
            parse_mpoly(F2(), 2, "x*y"));
}

TEST(BinaryForm, Examples) {
  const auto a = binary_form_factor(parse_mpoly(F4(), 2, "x^2+x*y+y^2"));
  ASSERT_EQ(a.forms.size(), 2u);
  EXPECT_TRUE(a.squarefree);
  EXPECT_EQ(a.forms[0].tau.bits(), 0b10u);
  EXPECT_EQ(a.forms[1].tau.bits(), 0b11u);
  const MPoly h5 = parse_mpoly(F4(), 2, "x^4*y+x*y^4");
  const auto b = binary_form_factor(h5);
  EXPECT_EQ(b.forms.size(), 5u);
  EXPECT_TRUE(b.squarefree);
  EXPECT_EQ(b.expand(F4()), h5);
  const auto c = binary_form_factor(parse_mpoly(F2(), 2, "x^2+y^2"));
  ASSERT_EQ(c.forms.size(), 1u);
  EXPECT_EQ(c.forms[0].multiplicity, 2u);
  EXPECT_FALSE(c.squarefree);
  try {
    binary_form_factor(parse_mpoly(F2(), 2, "x^2+x*y+y^2"));
    FAIL() << "expected SplittingFieldTooSmall";
  } catch (const SplittingFieldTooSmall& err) {
    EXPECT_EQ(err.needed_degree(), 2u);
  }
}

TEST(BinaryForm, RandomRoundTripAndSquarefreeFlag) {
  std::mt19937_64 rng(41);
  const FieldCtx& ctx = make_field(4);
  for (int t = 0; t < 60; ++t) {
    // Products of random linear forms, so the form splits over the field.
    MPoly H = MPoly::constant(ctx, 2, static_cast<Bits>(1 + rng() % 15));
    const unsigned n = 1 + rng() % 5;
    for (unsigned i = 0; i < n; ++i) {
      MPoly l(ctx, 2);
      if (rng() % 6 == 0) {
        l.add_term(Exponents(0, 1), 1);
      } else {
        l.add_term(Exponents(1, 0), 1);
        l.add_term(Exponents(0, 1), static_cast<Bits>(rng() % 4));  // small pool forces repeats
      }
      H *= l;
    }
    const auto bf = binary_form_factor(H);
    ASSERT_EQ(bf.expand(ctx), H);
    // Squarefree iff gcd(H(x,1), d/dx H(x,1)) = 1 and y divides H at most once.
    std::vector<Bits> hx(H.total_degree() + 1, 0);
    for (const auto& [e, c] : H.terms()) hx[e[0]] = c;
    const UPoly u(ctx, hx);
    const bool sqf = gcd(u, u.derivative()).degree() == 0 && H.total_degree() - u.degree() <= 1;
    ASSERT_EQ(bf.squarefree, sqf);
  }
}
