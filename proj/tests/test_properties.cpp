#include <gtest/gtest.h>

#include <random>

#include "fibfull/cohomology.hpp"
#include "fibfull/matrix.hpp"
#include "fibfull/strata.hpp"
#include "checks.hpp"
#include "support.hpp"

using namespace fibfull;
using namespace fibfull::test;

namespace {

constexpr unsigned kSeed = 20240917;

}  // namespace

TEST(Property, MacaulayConsistency) {
  std::mt19937 rng(kSeed);
  for (int trial = 0; trial < 25; ++trial) {
    Ideal I = random_ideal(rng);
    auto in_lex = initial_ideal(I, MonomialOrder::lex());
    auto in_grl = initial_ideal(I, MonomialOrder::grevlex());
    for (long nu = 0; nu <= 5; ++nu) {
      long total = count_monomials(I.nvars(), nu);
      long expect = total - ideal_degree_dimension(I, nu);
      EXPECT_EQ(count_standard_monomials(in_lex, nu), expect) << trial << " nu=" << nu;
      EXPECT_EQ(count_standard_monomials(in_grl, nu), expect) << trial << " nu=" << nu;
      EXPECT_EQ(hilbert_function(I, nu), expect) << trial << " nu=" << nu;
    }
  }
}

TEST(Property, SmithMatchesMinorGcds) {
  std::mt19937 rng(kSeed + 1);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    PolyTMatrix m(dim(rng), dim(rng));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = random_uni(rng);
    auto s = smith_normal_form(m);
    std::size_t kmax = std::min(m.rows(), m.cols());
    UniPoly prod(Scalar(1));
    for (std::size_t k = 1; k <= kmax; ++k) {
      UniPoly g = minor_gcd(m, k);
      if (k <= s.invariant_factors.size()) {
        prod = prod * s.invariant_factors[k - 1];
        EXPECT_EQ(prod.monic(), g) << "trial " << trial << " k " << k;
      } else {
        EXPECT_TRUE(g.is_zero()) << "trial " << trial << " k " << k;
      }
    }
    for (std::size_t k = 1; k < s.invariant_factors.size(); ++k)
      EXPECT_TRUE(s.invariant_factors[k - 1].divides(s.invariant_factors[k]));
  }
}

TEST(Property, HowellRankNullity) {
  std::mt19937 rng(kSeed + 2);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  std::uniform_int_distribution<long> qd(1, 3);
  for (int trial = 0; trial < 40; ++trial) {
    PolyTMatrix m(dim(rng), dim(rng));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = random_uni(rng);
    long q = qd(rng);
    long ker = howell_kernel(m, q).length();
    long img = howell_reduce(m.transposed(), q).length();
    EXPECT_EQ(ker + img, q * static_cast<long>(m.cols())) << trial;
  }
}

TEST(Property, DualityInvolution) {
  std::mt19937 rng(kSeed + 3);
  auto ideals = corpus();
  for (int k = 0; k < 10; ++k) ideals.push_back(random_ideal(rng));
  for (const auto& I : ideals) {
    auto ext = ext_dimensions(I, Window{-8, 4});
    auto loc = flip_to_local(ext);
    auto back = flip_to_ext(loc);
    EXPECT_EQ(back.dims, ext.dims);
    EXPECT_EQ(back.tails, ext.tails);
    EXPECT_EQ(back.stable_from, ext.stable_from);
    auto again = flip_to_local(back);
    EXPECT_EQ(again.dims, loc.dims);
  }
}

TEST(Property, GrothendieckVanishing) {
  std::mt19937 rng(kSeed + 4);
  auto ideals = corpus();
  for (int k = 0; k < 10; ++k) ideals.push_back(random_ideal(rng));
  for (const auto& I : ideals) {
    ExtData e = compute_ext_data(I);
    long n = static_cast<long>(I.nvars());
    long dim = e.quotient_series.dimension();
    long depth = n - e.betti.projective_dimension();
    auto loc = local_cohomology_table(e, Window{-8, 6});
    for (long j = 0; j <= n; ++j) {
      if (j <= dim && j >= depth) continue;
      for (long nu = -8; nu <= 6; ++nu) EXPECT_EQ(loc.at(static_cast<std::size_t>(j), nu), 0) << "j=" << j;
    }
    if (I.is_unit()) continue;
    auto s = sheaf_cohomology_table(I);
    long dimX = hilbert_series(saturate_irrelevant(I)).dimension() - 1;
    for (long i = std::max(0L, dimX + 1); i <= s.r; ++i)
      for (long nu = s.window.lo; nu <= s.window.hi; ++nu) EXPECT_EQ(s.at(static_cast<std::size_t>(i), nu), 0);
  }
}

TEST(Property, EulerIdentityEverywhere) {
  std::mt19937 rng(kSeed + 5);
  auto ideals = corpus();
  for (int k = 0; k < 15; ++k) ideals.push_back(random_ideal(rng));
  for (const auto& l : IntegerPartition::enumerate(5, 3)) ideals.push_back(lex_ideal(l, 3).ideal);
  for (const auto& I : ideals) {
    auto s = sheaf_cohomology_table(I);
    for (long nu = s.window.lo; nu <= s.window.hi; ++nu) {
      mpz_class chi = 0;
      for (std::size_t i = 0; i < s.h.size(); ++i) chi += (i % 2 ? -1 : 1) * s.at(i, nu);
      EXPECT_EQ(chi, s.P_h(nu));
    }
    EXPECT_EQ(s.P_h, hilbert_polynomial(I));
  }
}

TEST(Property, AcmRoutesAndAgImpliesAcm) {
  std::mt19937 rng(kSeed + 6);
  auto ideals = corpus();
  for (int k = 0; k < 15; ++k) ideals.push_back(random_ideal(rng));
  for (const auto& I : ideals) {
    if (saturate_irrelevant(I).is_unit()) continue;
    auto rep = acm_report(I);  // throws if the two routes disagree
    EXPECT_TRUE(!is_ag(I) || rep.acm);
  }
}

TEST(Property, SameStratumIsEquivalence) {
  std::vector<CohomologySignature> sigs;
  for (const auto& I : corpus()) {
    if (I.nvars() == 4) sigs.push_back(sheaf_cohomology_table(I));
  }
  sigs.push_back(sheaf_cohomology_table(twisted_cubic()));
  for (const auto& a : sigs) {
    EXPECT_TRUE(same_stratum(a, a));
    for (const auto& b : sigs) {
      EXPECT_EQ(same_stratum(a, b), same_stratum(b, a));
      for (const auto& c : sigs)
        EXPECT_TRUE(!(same_stratum(a, b) && same_stratum(b, c)) || same_stratum(a, c));
    }
  }
}

TEST(Property, RandomDegenerationRoundTrip) {
  std::mt19937 rng(kSeed + 7);
  for (int k = 0; k < 10; ++k) {
    Ideal I = random_ideal(rng);
    for (const auto& ord : {MonomialOrder::lex(), MonomialOrder::grevlex()}) {
      FamilyIdeal F = homogenize_ideal(I, ord);
      EXPECT_EQ(initial_ideal(specialize(F, Scalar(0)), MonomialOrder::grevlex()), initial_ideal(I, ord));
      EXPECT_TRUE(same_ideal(specialize(F, Scalar(1)), I));
    }
  }
}
