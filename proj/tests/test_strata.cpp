#include <gtest/gtest.h>

#include "fibfull/error.hpp"
#include "fibfull/strata.hpp"
#include "support.hpp"

using namespace fibfull;
using namespace fibfull::test;

TEST(Strata, AcmAndAg) {
  auto rep = acm_report(twisted_cubic());
  EXPECT_TRUE(rep.acm);
  EXPECT_EQ(rep.type, 2);
  EXPECT_FALSE(is_ag(twisted_cubic()));
  EXPECT_FALSE(is_acm(skew_lines()));
  EXPECT_TRUE(is_ag(ideal({"x0^2", "x1^2"})));
  EXPECT_TRUE(is_ag(Ideal::zero(3, Field::rationals())));
  EXPECT_FALSE(is_acm(conic_point()));
  EXPECT_TRUE(is_acm(ideal({"x0*x1", "x0*x2"})) == false);
  EXPECT_THROW(is_acm(ideal({"x0", "x1", "x2", "x3"})), InputError);
}

TEST(Strata, AcmIsSaturationInvariant) {
  EXPECT_TRUE(is_acm(ideal({"x0^2", "x0*x1", "x0*x2", "x0*x3"})));
}

TEST(Strata, AcmMeansNoIntermediateCohomology) {
  for (const auto& I : corpus()) {
    if (!is_acm(I)) continue;
    auto s = sheaf_cohomology_table(I);
    long dim = hilbert_series(saturate_irrelevant(I)).dimension() - 1;
    for (long i = 1; i <= dim - 1; ++i)
      for (long nu = s.window.lo; nu <= s.window.hi; ++nu) EXPECT_EQ(s.at(static_cast<std::size_t>(i), nu), 0);
  }
}

TEST(Strata, CompareFindsFirstDivergence) {
  auto a = sheaf_cohomology_table(skew_lines());
  auto b = sheaf_cohomology_table(conic_point());
  auto c = compare_signatures(a, b);
  ASSERT_FALSE(c.same);
  EXPECT_EQ(c.first->i, 0u);
  EXPECT_EQ(c.first->nu, -1);
  EXPECT_TRUE(same_stratum(a, a));
  auto cubic = sheaf_cohomology_table(twisted_cubic());
  auto pc = sheaf_cohomology_table(plane_cubic_point());
  auto d = compare_signatures(cubic, pc);
  ASSERT_FALSE(d.same);
  EXPECT_EQ(d.first->i, 0u);
  EXPECT_EQ(d.first->nu, 0);
}

TEST(Strata, CompareChecksTailsBeyondWindow) {
  auto a = sheaf_cohomology_table(skew_lines(), Window{0, 4});
  auto b = sheaf_cohomology_table(conic_point(), Window{0, 4});
  auto c = compare_signatures(a, b);
  EXPECT_FALSE(c.same);
}

TEST(Strata, CompareRejectsDifferentSpaces) {
  auto a = sheaf_cohomology_table(twisted_cubic());
  auto b = sheaf_cohomology_table(ideal({"x0"}, 3));
  EXPECT_THROW(compare_signatures(a, b), InputError);
}

TEST(Strata, LexIdealDisplay) {
  auto L = lex_ideal(IntegerPartition::parse("2,1"), 3);
  EXPECT_EQ(L.ideal.canonical_text(), ideal({"x0", "x1^2", "x1*x2"}).canonical_text());
  EXPECT_TRUE(lex_ideal(IntegerPartition::parse("4"), 3).ideal.is_zero());
  EXPECT_THROW(lex_ideal(IntegerPartition::parse("4,1"), 3), InputError);
  auto pts = lex_ideal(IntegerPartition::parse("1,1,1"), 2);
  EXPECT_EQ(hilbert_polynomial(pts.ideal).to_string(), "3");
}

TEST(Strata, LexClosedFormValues) {
  auto l = IntegerPartition::parse("2,1");
  EXPECT_EQ(lex_cohomology_closed_form(l, 3, 1, -2), 1);
  for (long nu = -6; nu <= 6; ++nu) EXPECT_EQ(lex_cohomology_closed_form(l, 3, 2, nu), 0);
}

TEST(Strata, LexClosedFormMatchesEngine) {
  for (const char* p : {"1", "2,1", "2,2", "3,1"}) {
    auto l = IntegerPartition::parse(p);
    auto s = sheaf_cohomology_table(lex_ideal(l, 3).ideal, Window{-6, 6});
    for (std::size_t i = 0; i <= 3; ++i)
      for (long nu = -6; nu <= 6; ++nu) EXPECT_EQ(s.at(i, nu), lex_cohomology_closed_form(l, 3, i, nu)) << p;
  }
}

TEST(Strata, Detach) {
  auto d = detach(ideal({"x0*x1", "x0*x2"}));
  EXPECT_EQ(d.f, P("x0"));
  EXPECT_EQ(d.degree, 1);
  EXPECT_TRUE(same_ideal(d.rest, ideal({"x1", "x2"})));
  EXPECT_NO_THROW(check_detach(ideal({"x0*x1", "x0*x2"}), d, Window{-6, 6}));
  auto plain = detach(twisted_cubic());
  EXPECT_EQ(plain.degree, 0);
  EXPECT_TRUE(same_ideal(plain.rest, twisted_cubic()));
}

TEST(Strata, DetachHigherDegreeFactor) {
  Ideal I = ideal({"x0^2*x1", "x0^2*x2", "x0^2*x3"}, 5);
  auto d = detach(I);
  EXPECT_EQ(d.degree, 2);
  EXPECT_NO_THROW(check_detach(I, d, Window{-5, 5}));
}

TEST(Strata, ClassifyBundlesBoth) {
  auto c = classify(twisted_cubic());
  EXPECT_TRUE(c.acm);
  EXPECT_FALSE(c.ag);
  EXPECT_EQ(c.signature.P_h.to_string(), "3*m+1");
}
