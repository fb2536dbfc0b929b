#include <gtest/gtest.h>

#include "fibfull/degeneration.hpp"
#include "fibfull/error.hpp"
#include "fibfull/strata.hpp"
#include "support.hpp"

using namespace fibfull;
using namespace fibfull::test;

TEST(Degeneration, WeightRealization) {
  EXPECT_TRUE(weight_realizes(twisted_cubic(), MonomialOrder::lex(), WeightVector({8, 4, 2, 1})));
  EXPECT_FALSE(weight_realizes(twisted_cubic(), MonomialOrder::lex(), WeightVector({1, 1, 1, 1})));
  auto w = realize_weight(twisted_cubic(), MonomialOrder::lex());
  EXPECT_TRUE(weight_realizes(twisted_cubic(), MonomialOrder::lex(), w));
  auto m = realize_weight(ideal({"x0*x1", "x2^3"}), MonomialOrder::lex());
  EXPECT_EQ(m, WeightVector::ones(4));
  EXPECT_TRUE(weight_realizes(ideal({"x0*x3 - x1*x2"}), MonomialOrder::lex(), WeightVector({2, 1, 1, 2})));
}

TEST(Degeneration, HomogenizeAndSpecialize) {
  FamilyIdeal F = homogenize_ideal(twisted_cubic(), WeightVector({8, 4, 2, 1}));
  ASSERT_EQ(F.ideal.generators().size(), 3u);
  for (const auto& g : F.ideal.generators()) EXPECT_TRUE(g.is_homogeneous_prefix(4));
  Ideal z0 = specialize(F, Scalar(0));
  EXPECT_EQ(initial_ideal(z0, MonomialOrder::grevlex()).to_string(), "(x0*x2, x0*x3, x1*x3)");
  EXPECT_TRUE(same_ideal(specialize(F, Scalar(1)), twisted_cubic()));
  auto s1 = sheaf_cohomology_table(specialize(F, Scalar(1)));
  auto s2 = sheaf_cohomology_table(specialize(F, Scalar(2)));
  EXPECT_TRUE(same_stratum(s1, s2));
}

TEST(Degeneration, MonomialAndPrincipal) {
  FamilyIdeal F = homogenize_ideal(ideal({"x0*x1", "x2^2"}), MonomialOrder::grevlex());
  for (const auto& g : F.ideal.generators())
    for (const auto& t : g.terms()) EXPECT_EQ(t.mon[4], 0u);
  FamilyIdeal G = homogenize_ideal(ideal({"x0^2 - x1*x2"}, 3), MonomialOrder::lex());
  EXPECT_EQ(G.ideal.generators().size(), 1u);
}

TEST(Degeneration, RoundTripCorpus) {
  for (const auto& I : corpus()) {
    for (const auto& ord : {MonomialOrder::lex(), MonomialOrder::grevlex()}) {
      FamilyIdeal F = homogenize_ideal(I, ord);
      Ideal z0 = specialize(F, I.field().from_int(0));
      EXPECT_EQ(initial_ideal(z0, MonomialOrder::grevlex()), initial_ideal(I, ord));
      EXPECT_TRUE(same_ideal(specialize(F, I.field().from_int(1)), I));
    }
  }
}

TEST(Degeneration, FiberDimensionsConstant) {
  FamilyIdeal F = homogenize_ideal(twisted_cubic(), MonomialOrder::lex());
  auto rep = fitting_stratify(F, Window{0, 4});
  EXPECT_TRUE(rep.flat);
  for (long nu = 0; nu <= 4; ++nu)
    for (long a : {0, 1, 2}) EXPECT_EQ(fiber_rank(F, nu, Scalar(a)), rep.generic_rank[nu]);
}

TEST(Degeneration, ConcaVarbaro) {
  auto r = verify_conca_varbaro(twisted_cubic(), MonomialOrder::lex());
  EXPECT_TRUE(r.squarefree);
  EXPECT_TRUE(r.tables_equal);
  EXPECT_FALSE(r.falsified());
  auto g = verify_conca_varbaro(twisted_cubic(), MonomialOrder::grevlex());
  EXPECT_FALSE(g.squarefree);
  EXPECT_EQ(g.initial.to_string(), "(x1^2, x1*x2, x2^2)");
  auto m = verify_conca_varbaro(minors_2x3(), MonomialOrder::lex());
  EXPECT_TRUE(m.squarefree);
  EXPECT_TRUE(m.tables_equal);
}

TEST(Degeneration, NonSquarefreeInitialIdealMayJump) {
  Ideal quartic = ideal({"x1*x2 - x0*x3", "x2^3 - x1*x3^2", "x0*x2^2 - x1^2*x3", "x1^3 - x0^2*x2"});
  auto r = verify_conca_varbaro(quartic, MonomialOrder::grevlex());
  EXPECT_FALSE(r.squarefree);
  EXPECT_FALSE(r.tables_equal);
  EXPECT_FALSE(r.falsified());
}

TEST(Degeneration, StratifyTorsionFamily) {
  auto rep = fitting_stratify(family({"t*x0"}, 1), Window{1, 1});
  ASSERT_EQ(rep.strata.size(), 2u);
  EXPECT_FALSE(rep.strata[0].generic);
  EXPECT_EQ(rep.strata[0].locus.to_string(), "t");
  EXPECT_EQ(rep.strata[0].h.at(1), 1);
  EXPECT_TRUE(rep.strata[1].generic);
  EXPECT_EQ(rep.strata[1].h.at(1), 0);
  EXPECT_FALSE(rep.flat);
}

TEST(Degeneration, StratifyRotatingPoint) {
  auto rep = fitting_stratify(family({"x1 - t*x0"}, 2), Window{1, 1});
  ASSERT_EQ(rep.strata.size(), 1u);
  EXPECT_EQ(rep.strata[0].h.at(1), 1);
}

TEST(Degeneration, StratifySeveralRoots) {
  auto rep = fitting_stratify(family({"t*x0", "(t^2 - t)*x1"}, 2), Window{1, 1});
  ASSERT_EQ(rep.strata.size(), 3u);
  EXPECT_EQ(rep.strata[0].locus.to_string(), "t");
  EXPECT_EQ(rep.strata[0].h.at(1), 2);
  EXPECT_EQ(rep.strata[1].locus.degree(), 1);
  EXPECT_EQ(rep.strata[1].h.at(1), 1);
  EXPECT_TRUE(rep.strata[2].generic);
  EXPECT_EQ(rep.strata[2].h.at(1), 0);
  EXPECT_EQ(rep.strata[2].excluded.degree(), 2);
}

TEST(Degeneration, FiberFullCheck) {
  FamilyIdeal F = homogenize_ideal(twisted_cubic(), MonomialOrder::lex());
  auto rep = fiber_full_family_check(F, 3);
  EXPECT_TRUE(rep.flat);
  EXPECT_EQ(rep.free_at_q, (std::vector<bool>{true, true, true}));
  EXPECT_TRUE(rep.fiber_full());
  auto bad = fiber_full_family_check(family({"t*x0"}, 1), 3);
  EXPECT_FALSE(bad.flat);
  EXPECT_FALSE(bad.fiber_full());
  auto constant = fiber_full_family_check(FamilyIdeal::constant(skew_lines()), 2);
  EXPECT_TRUE(constant.fiber_full());
}

TEST(Degeneration, FiberFullDetectsEmbeddedPointLimit) {
  // Skew lines moving to meet: the flat limit acquires an embedded point.
  FamilyIdeal F = family({"x1*x2", "x0*x2", "x1*x3*t - x1^2", "x0*x3*t - x0*x1"}, 4);
  auto rep = fiber_full_family_check(F, 2);
  EXPECT_TRUE(rep.flat);
  EXPECT_TRUE(rep.free_at_q[0]);
  EXPECT_FALSE(rep.free_at_q[1]);
}

TEST(Degeneration, RejectsNonHomogeneous) {
  EXPECT_THROW(family({"x0 - t"}, 1), InputError);
  EXPECT_THROW(homogenize_ideal(ideal({"x0 + x1^2"}), WeightVector::ones(4)), InputError);
}
