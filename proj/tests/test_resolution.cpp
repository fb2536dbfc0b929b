#include <gtest/gtest.h>

#include "fibfull/error.hpp"
#include "fibfull/resolution.hpp"
#include "support.hpp"

using namespace fibfull;
using namespace fibfull::test;

namespace {

BettiTable betti_of(const Ideal& I) { return minimize(free_resolution(I)).second; }

}  // namespace

TEST(Resolution, TwistedCubicBetti) {
  auto res = free_resolution(twisted_cubic());
  EXPECT_TRUE(res.is_complex());
  auto [minimal, b] = minimize(res);
  EXPECT_TRUE(minimal.is_complex());
  EXPECT_TRUE(minimal.is_minimal());
  std::map<std::pair<long, long>, long> expect{{{0, 2}, 3}, {{1, 3}, 2}};
  EXPECT_EQ(b.entries(), expect);
  EXPECT_EQ(regularity(b), 1);
  EXPECT_EQ(b.projective_dimension(), 2);
  EXPECT_EQ(b.last_rank(), 2);
}

TEST(Resolution, Koszul) {
  auto b = betti_of(ideal({"x0", "x1", "x2"}, 3));
  std::map<std::pair<long, long>, long> expect{{{0, 1}, 3}, {{1, 2}, 3}, {{2, 3}, 1}};
  EXPECT_EQ(b.entries(), expect);
  EXPECT_EQ(regularity(b), 0);
}

TEST(Resolution, CompleteIntersection) {
  auto b = betti_of(ideal({"x0^2", "x1^2"}));
  std::map<std::pair<long, long>, long> expect{{{0, 2}, 2}, {{1, 4}, 1}};
  EXPECT_EQ(b.entries(), expect);
  EXPECT_EQ(regularity(b), 2);
  EXPECT_EQ(b.last_rank(), 1);
}

TEST(Resolution, SkewLines) {
  auto b = betti_of(skew_lines());
  std::map<std::pair<long, long>, long> expect{{{0, 2}, 4}, {{1, 3}, 4}, {{2, 4}, 1}};
  EXPECT_EQ(b.entries(), expect);
  EXPECT_EQ(b.projective_dimension(), 3);
}

TEST(Resolution, ZeroAndUnitIdeals) {
  auto b = betti_of(Ideal::zero(3, Field::rationals()));
  EXPECT_TRUE(b.empty());
  EXPECT_EQ(regularity(b), 0);
  EXPECT_EQ(b.projective_dimension(), 0);
}

TEST(Resolution, DualComplexShape) {
  auto [minimal, b] = minimize(free_resolution(twisted_cubic()));
  FreeComplex K = dual_complex(minimal);
  EXPECT_TRUE(K.is_complex());
  ASSERT_EQ(K.terms.size(), 3u);
  EXPECT_EQ(K.terms[1].degrees, (std::vector<long>{-2, -2, -2}));
  EXPECT_EQ(K.terms[2].degrees, (std::vector<long>{-3, -3}));
}

TEST(Resolution, StrandAndSeriesRoutesAgree) {
  for (const auto& I : {twisted_cubic(), skew_lines(), conic_point()}) {
    auto [minimal, b] = minimize(free_resolution(I));
    FreeComplex K = dual_complex(minimal);
    auto series = complex_cohomology_series(K);
    for (long nu = -8; nu <= 3; ++nu) {
      auto dims = complex_cohomology_dims(K, nu);
      for (std::size_t i = 0; i < dims.size(); ++i) EXPECT_EQ(series[i].value(nu), dims[i]) << i << " " << nu;
    }
  }
}

TEST(Resolution, BettiText) {
  auto b = betti_of(twisted_cubic());
  EXPECT_EQ(b.to_text(), "         0    1\n   2:    3    2\n");
}
