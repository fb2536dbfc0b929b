#include <gtest/gtest.h>

#include "fibfull/cohomology.hpp"
#include "fibfull/error.hpp"
#include "support.hpp"

using namespace fibfull;
using namespace fibfull::test;

namespace {

void expect_row(const CohomologySignature& s, std::size_t i, long lo, const std::vector<long>& vals) {
  for (std::size_t k = 0; k < vals.size(); ++k) {
    long nu = lo + static_cast<long>(k);
    EXPECT_EQ(s.value(i, nu), vals[k]) << "h" << i << "(" << nu << ")";
  }
}

}  // namespace

TEST(Cohomology, TwistedCubicTable) {
  auto s = sheaf_cohomology_table(twisted_cubic(), Window{-5, 5});
  for (long nu = -5; nu <= 5; ++nu) {
    long h0 = nu >= 0 ? 3 * nu + 1 : 0;
    EXPECT_EQ(s.at(0, nu), h0);
    EXPECT_EQ(s.at(1, nu), h0 - (3 * nu + 1));
    EXPECT_EQ(s.at(2, nu), 0);
    EXPECT_EQ(s.at(3, nu), 0);
  }
  EXPECT_EQ(s.P_h.to_string(), "3*m+1");
}

TEST(Cohomology, PlaneCubicUnionPoint) {
  auto s = sheaf_cohomology_table(plane_cubic_point(), Window{-5, 5});
  expect_row(s, 0, -5, {1, 1, 1, 1, 1, 2, 4, 7, 10, 13, 16});
}

TEST(Cohomology, SkewLinesVersusConicPoint) {
  auto a = sheaf_cohomology_table(skew_lines(), Window{-5, 5});
  auto b = sheaf_cohomology_table(conic_point(), Window{-5, 5});
  for (long nu = -5; nu <= 5; ++nu) {
    EXPECT_EQ(a.at(0, nu), nu >= 0 ? 2 * nu + 2 : 0);
    EXPECT_EQ(b.at(0, nu), nu >= 0 ? 2 * nu + 2 : 1);
  }
  EXPECT_EQ(a.P_h, b.P_h);
}

TEST(Cohomology, PlaneUnionLine) {
  auto s = sheaf_cohomology_table(ideal({"x0*x1", "x0*x2"}));
  EXPECT_EQ(s.value(2, -3), 1);
  EXPECT_EQ(s.value(2, -4), 3);
  EXPECT_EQ(s.value(1, -2), 2);
}

TEST(Cohomology, ProjectiveSpace) {
  auto s = sheaf_cohomology_table(Ideal::zero(3, Field::rationals()));
  for (long nu = -6; nu <= 3; ++nu) {
    EXPECT_EQ(s.value(0, nu), binom_count(nu + 2, 2));
    EXPECT_EQ(s.value(1, nu), 0);
    EXPECT_EQ(s.value(2, nu), binom_count(-nu - 1, 2));
  }
}

TEST(Cohomology, TailsExtendTheTable) {
  auto s = sheaf_cohomology_table(skew_lines());
  for (std::size_t i = 0; i < s.tails.size(); ++i) {
    for (long nu = s.window.lo; nu <= std::min(s.window.hi, s.tail_until[i]); ++nu) {
      EXPECT_EQ(s.tails[i](nu), s.at(i, nu));
    }
  }
  EXPECT_EQ(s.value(1, -40), 2 * 39);
}

TEST(Cohomology, SaturationDoesNotChangeTable) {
  Ideal I = ideal({"x0^2", "x0*x1", "x0*x2", "x0*x3"});
  auto a = sheaf_cohomology_table(I, Window{-3, 3});
  auto b = sheaf_cohomology_table(ideal({"x0"}), Window{-3, 3});
  EXPECT_EQ(a.h, b.h);
  EXPECT_NE(a.hash, b.hash);
  EXPECT_NE(a.hilbert_raw, b.hilbert_raw);
}

TEST(Cohomology, ExtAndLocalCohomologyFlip) {
  auto ext = ext_dimensions(skew_lines(), Window{-6, 2});
  EXPECT_EQ(ext.at(3, -4), 1);
  auto loc = flip_to_local(ext);
  auto back = flip_to_ext(loc);
  EXPECT_EQ(back.dims, ext.dims);
  EXPECT_EQ(back.window, ext.window);
  EXPECT_EQ(loc.at(1, 0), 1);  // H^1_m(S/I)_0 for skew lines
}

TEST(Cohomology, WindowValidation) {
  EXPECT_THROW(sheaf_cohomology_table(twisted_cubic(), Window{2, 1}), InputError);
  EXPECT_THROW(sheaf_cohomology_table(ideal({"x0 + x1^2"})), InputError);
}

TEST(Cohomology, HashIsStable) {
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  auto a = sheaf_cohomology_table(twisted_cubic());
  auto b = sheaf_cohomology_table(ideal({"x1*x3 - x2^2", "x0*x2 - x1^2", "x0*x3 - x1*x2"}));
  EXPECT_EQ(a.hash, b.hash);
}
