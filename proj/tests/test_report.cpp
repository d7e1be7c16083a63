#include <gtest/gtest.h>

#include "hyperoval_lab/hyperoval_lab.hpp"

using namespace hyperoval_lab;
namespace rp = hyperoval_lab::report;

TEST(Report, EnvelopeCarriesSchema) {
  const auto j = rp::envelope("hyperoval", rp::verdict(perm_poly_test(6, 3)));
  EXPECT_EQ(j.at("schema"), "hyperoval-lab/1");
  EXPECT_EQ(j.at("command"), "hyperoval");
  EXPECT_TRUE(j.at("result").at("hyperoval").get<bool>());
  EXPECT_TRUE(j.at("result").at("witness").is_null());
}

TEST(Report, PolyTermsAreGrlexDescendingWithBinaryCoefficients) {
  const MPoly p = parse_mpoly(make_field(2), 2, "1+0b10*x+x^2*y");
  const auto j = rp::poly(p);
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0].at("exp"), nlohmann::json::array({2, 1}));
  EXPECT_EQ(j[0].at("coeff"), "0b1");
  EXPECT_EQ(j[1].at("exp"), nlohmann::json::array({1, 0}));
  EXPECT_EQ(j[1].at("coeff"), "0b10");
  EXPECT_EQ(j[2].at("exp"), nlohmann::json::array({0, 0}));
}

TEST(Report, WitnessIsReportedForNonHyperovals) {
  const auto j = rp::verdict(perm_poly_test(6, 2));
  EXPECT_FALSE(j.at("hyperoval").get<bool>());
  EXPECT_EQ(j.at("witness").size(), 3u);
}

TEST(Report, OutputIsDeterministic) {
  const auto a = rp::envelope("factor", rp::verdict_record(abs_irr_verdict(16))).dump();
  const auto b = rp::envelope("factor", rp::verdict_record(abs_irr_verdict(16))).dump();
  EXPECT_EQ(a, b);
  const auto w1 = rp::weil(weil_report(10, 6)).dump();
  const auto w2 = rp::weil(weil_report(10, 6, 4, 7)).dump();
  EXPECT_EQ(w1, w2);
}

TEST(Report, CurveReportFlagsTable) {
  const auto j = rp::curve(curve_report(12));
  const auto& t = j.at("table_check");
  EXPECT_TRUE(t.at("counts_ok").get<bool>());
  EXPECT_TRUE(t.at("multiplicities_ok").get<bool>());
  EXPECT_TRUE(t.at("tangents_ok").get<bool>());
  EXPECT_EQ(t.at("counts").at("III"), 2);
  EXPECT_FALSE(j.at("infinity_check").at("singular_at_infinity").get<bool>());
}
