#include <gtest/gtest.h>

#include <set>

#include "hyperoval_lab/curve.hpp"

using namespace hyperoval_lab;

namespace {

const FieldCtx& F2() { return make_field(1); }

// Projective zeros by evaluating at every normalized point of PG(2, 2^e).
std::uint64_t brute_count(const MPoly& G, unsigned e, bool degenerate_only = false) {
  const FieldCtx& E = make_field(e);
  const MPoly H = G.embed_into(E);
  const Bits q = static_cast<Bits>(E.size());
  std::uint64_t n = 0;
  auto visit = [&](Bits a, Bits b, Bits c) {
    if (degenerate_only && a != b && b != c && a != c) return;
    if (H.eval(std::vector<Bits>{a, b, c}) == 0) ++n;
  };
  for (Bits y = 0; y < q; ++y)
    for (Bits z = 0; z < q; ++z) visit(1, y, z);
  for (Bits z = 0; z < q; ++z) visit(0, 1, z);
  visit(0, 0, 1);
  return n;
}

}  // namespace

TEST(Curve, Params) {
  const auto p = curve_params(24);
  EXPECT_EQ(p.i, 3u);
  EXPECT_EQ(p.ell, 3u);
  EXPECT_EQ(p.m_split, 2u);
  EXPECT_EQ(curve_params(20).m_split, 4u);
  EXPECT_THROW(curve_params(7), PreconditionError);
}

TEST(Curve, SmallGk) {
  EXPECT_EQ(build_gk(4), parse_mpoly(F2(), 2, "x^2+y^2+x*y+x+y+1"));
  EXPECT_EQ(build_gk(6), parse_mpoly(F2(), 2,
                                     "y^4+y^3+x*y^3+y^2+x*y^2+x^2*y^2+y+x*y+x^2*y+x^3*y+1+x+x^2+x^3+x^4"));
  EXPECT_THROW(build_gk(5), PreconditionError);
  EXPECT_THROW(build_gk(2), PreconditionError);
}

TEST(Curve, ConstructionIdentity) {
  const MPoly w = build_w();
  for (unsigned k = 4; k <= 40; k += 2) {
    const MPoly g = build_gk(k);
    ASSERT_EQ(w * g, build_fk(k)) << k;
    ASSERT_EQ(g.total_degree(), static_cast<int>(k) - 2);
    ASSERT_EQ(g.swap_vars(0, 1), g);
    ASSERT_EQ(build_gk3(k), g.homogenize()) << k;
  }
}

TEST(Curve, Reductions) {
  const auto r4 = reduction_polys(4);
  const MPoly p0 = r4.p.substitute(2, MPoly(F2(), 3)).with_nvars(2);
  EXPECT_EQ(p0, parse_mpoly(F2(), 2, "x^2+y^2"));
  EXPECT_EQ(r4.q.substitute(1, MPoly::constant(F2(), 2, 1)), MPoly::constant(F2(), 2, 1));
  const auto r6 = reduction_polys(6);
  const MPoly q1 = r6.q.substitute(1, MPoly::constant(F2(), 2, 1));
  EXPECT_LE(q1.total_degree(), 5);
  for (unsigned k = 4; k <= 40; k += 2) EXPECT_NO_THROW(reduction_polys(k)) << k;
}

TEST(Curve, SingularPointsK4) {
  const auto pts = singular_points(4);
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_EQ(pts[0].ptype, PointType::I);
  EXPECT_EQ(pts[0].m_f, 5);
  EXPECT_EQ(pts[0].m_g, 2);
  EXPECT_EQ(pts[0].tangent_distinct, 5u);
  EXPECT_TRUE(pts[0].tangent_squarefree);
}

TEST(Curve, SingularPointsK12) {
  const auto pts = singular_points(12);
  ASSERT_EQ(pts.size(), 9u);
  const auto c = count_types(pts);
  EXPECT_EQ(c.type1, 1u);
  EXPECT_EQ(c.type2, 6u);
  EXPECT_EQ(c.type3, 2u);
  for (const auto& p : pts) {
    EXPECT_TRUE(p.table_ok());
    EXPECT_TRUE(p.first_order_vanishes);
    EXPECT_TRUE(p.tangent_power_ok);
    EXPECT_TRUE(p.tangent_closed_form_ok);
    EXPECT_TRUE(p.tangent_squarefree);
    EXPECT_EQ(p.tangent_distinct, 5u);
    if (p.ptype == PointType::I) EXPECT_EQ(p.m_g, 2);
    if (p.ptype == PointType::II) EXPECT_EQ(p.m_g, 3);
    if (p.ptype == PointType::III) EXPECT_EQ(p.m_g, 4);
    if (p.ptype == PointType::II && p.beta.is_one()) {
      EXPECT_TRUE(p.sigma.is_zero());
      EXPECT_FALSE(p.tau.is_zero());
    }
  }
}

TEST(Curve, SingularPointsK6) {
  const auto pts = singular_points(6);
  ASSERT_EQ(pts.size(), 9u);
  unsigned singular_on_g = 0;
  for (const auto& p : pts) {
    EXPECT_TRUE(p.table_ok());
    if (p.ptype == PointType::I) EXPECT_EQ(p.m_g, 0);
    if (p.singular_on_g()) {
      ++singular_on_g;
      EXPECT_EQ(p.ptype, PointType::III);
    }
  }
  EXPECT_EQ(singular_on_g, 2u);
}

TEST(Curve, TableForSeveralK) {
  for (unsigned k : {4u, 6u, 8u, 10u, 12u, 20u, 24u}) {
    const auto cp = curve_params(k);
    const auto pts = singular_points(k);
    ASSERT_EQ(pts.size(), cp.ell * cp.ell);
    const auto c = count_types(pts), x = expected_type_counts(cp.ell);
    EXPECT_EQ(c.type1, x.type1);
    EXPECT_EQ(c.type2, x.type2);
    EXPECT_EQ(c.type3, x.type3);
    for (const auto& p : pts) {
      EXPECT_TRUE(p.table_ok()) << k;
      EXPECT_TRUE(p.tangent_power_ok) << k;
      EXPECT_TRUE(p.tangent_squarefree) << k;
      EXPECT_EQ(p.tangent_distinct, (1u << cp.i) + 1) << k;
    }
    EXPECT_FALSE(singular_at_infinity(build_fk3(k)).singular_at_infinity) << k;
    EXPECT_FALSE(singular_at_infinity(build_gk3(k)).singular_at_infinity) << k;
  }
}

TEST(Curve, SingularAtInfinityDetects) {
  EXPECT_TRUE(singular_at_infinity(parse_mpoly(F2(), 3, "x^2*y")).singular_at_infinity);
  EXPECT_TRUE(singular_at_infinity(parse_mpoly(F2(), 3, "x^2*y+z^3")).singular_at_infinity);
  EXPECT_FALSE(singular_at_infinity(parse_mpoly(F2(), 3, "x*y+z^2")).singular_at_infinity);
  // On z = 0 only (1:0:0) lies on it, and dG/dz = x^2 is nonzero there.
  EXPECT_FALSE(singular_at_infinity(parse_mpoly(F2(), 3, "x^2*z+y^3")).singular_at_infinity);
}

TEST(Curve, CountPoints) {
  EXPECT_EQ(count_points(build_gk(4), 1), 1u);
  EXPECT_EQ(count_points(build_gk(4), 2), 9u);
  for (unsigned k : {4u, 6u, 8u, 10u})
    for (unsigned e = 1; e <= 4; ++e) {
      const MPoly G = build_gk3(k);
      EXPECT_EQ(count_points(G, e, 2), brute_count(G, e)) << k << "," << e;
    }
  EXPECT_EQ(count_points(build_gk(10), 6, 1), count_points(build_gk(10), 6, 4));
}

TEST(Curve, DegenerateCount) {
  for (unsigned e = 1; e <= 10; ++e) EXPECT_LE(degenerate_count(6, e), 16u);
  for (unsigned k : {4u, 6u, 8u, 12u})
    for (unsigned e = 1; e <= 4; ++e)
      EXPECT_EQ(degenerate_count(k, e), brute_count(build_gk3(k), e, true)) << k << "," << e;
}

TEST(Weil, Threshold) {
  EXPECT_EQ(weil_threshold(8, 28), 11u);
  EXPECT_FALSE(weil_lower_exceeds(10, 8, 28));  // 932 vs 42*32 = 1344
  EXPECT_TRUE(weil_lower_exceeds(11, 8, 28));   // 1956 vs 42*2^5.5 ~ 1900.6
  EXPECT_TRUE(weil_bound_holds(1024, 10, 8));
  // D = 8, e = 10: bound is 42 * 32 + 64 = 1408.
  EXPECT_TRUE(weil_bound_holds(1024 + 1407, 10, 8));
  EXPECT_FALSE(weil_bound_holds(1024 + 1408, 10, 8));
  EXPECT_TRUE(weil_bound_holds(1024 - 1023, 10, 8));
  // Lines: A = 0, B = 1, so only n = 2^e passes.
  EXPECT_TRUE(weil_bound_holds(1024, 10, 1));
  EXPECT_FALSE(weil_bound_holds(1024 + 1, 10, 1));
  // Odd e: 2^(1/2) compared exactly. |n - 8| < 2 * 2^(1.5) + 9 ~ 14.66.
  EXPECT_TRUE(weil_bound_holds(8 + 14, 3, 3));
  EXPECT_FALSE(weil_bound_holds(8 + 15, 3, 3));
}

TEST(Inequalities, Examples) {
  EXPECT_EQ(counting_inequalities(1, 3).first_x4, 0);
  EXPECT_FALSE(counting_inequalities(1, 3).first_positive);
  for (unsigned i = 1; i <= 10; ++i) EXPECT_EQ(counting_inequalities(i, 1).first_x4, 0);
  EXPECT_EQ(counting_inequalities(2, 3).first_x4, 4 * 16);
  // i = 0 row stays exact: (1/4 - 1)(l^2-1) + 2(l-1) at l = 3 is -6 + 4 = -2.
  EXPECT_EQ(counting_inequalities(0, 3).first_x4, -8);
  EXPECT_TRUE(counting_inequalities(1, 1).l1_branch_holds);
  EXPECT_TRUE(counting_inequalities(2, 1).l1_branch_holds);
  EXPECT_FALSE(counting_inequalities(3, 1).l1_branch_holds);
}

TEST(Inequalities, ExactReducedFormMatchesOriginal) {
  for (unsigned i = 1; i <= 12; ++i)
    for (unsigned l = 1; l <= 99; l += 2) {
      const auto r = counting_inequalities(i, l);
      ASSERT_EQ(r.second_holds, r.second_reduced_exact_holds) << i << "," << l;
      ASSERT_EQ(r.second_lhs_x4 - r.second_rhs_x4, r.second_reduced_lhs_x4 - r.second_reduced_rhs_x4 - 8);
    }
}
