#include "symdet/sampler.hpp"

#include <gtest/gtest.h>

using namespace symdet;

TEST(TrialRng, DeterministicPerTrial) {
  TrialRng a(123, 7), b(123, 7), c(123, 8);
  EXPECT_EQ(a.next(), b.next());
  EXPECT_EQ(a.next(), b.next());
  EXPECT_NE(TrialRng(123, 7).next(), c.next());
  // independent of how earlier trials consumed their streams
  TrialRng t0(5, 0);
  for (int i = 0; i < 17; ++i) t0.next();
  EXPECT_EQ(TrialRng(5, 1).next(), TrialRng(5, 1).next());
}

TEST(Generators, RankQuadricSoundness) {
  for (const Field& f : {Field::rationals(), Field::prime(10007)}) {
    for (std::uint64_t t = 0; t < 60; ++t) {
      TrialRng rng(127, t);
      std::size_t n = 3 + rng.below(3);
      std::size_t r = 1 + rng.below(n + 1);
      Quadric q = random_rank_quadric(n, r, f, rng);
      EXPECT_EQ(classify_quadric(q).rank, r);
    }
  }
}

TEST(Generators, SplitRankFourAlwaysRules) {
  Field f = Field::prime(10007);
  for (std::uint64_t t = 0; t < 30; ++t) {
    TrialRng rng(131, t);
    Quadric q = random_rank_quadric(4, 4, f, rng);
    EXPECT_NO_THROW(rulings_rank4(q));
  }
}

TEST(Generators, PlaneConstraintSoundness) {
  Field f5 = Field::prime(5);
  for (std::uint64_t t = 0; t < 40; ++t) {
    TrialRng rng(137, t);
    for (std::size_t n : {std::size_t(3), std::size_t(4), std::size_t(5)}) {
      ThreePlaneU rho = random_3plane(n, PlaneConstraint::Rho, 0, f5, rng);
      EXPECT_EQ(annihilator(rho).dim(), n - 2);
      ThreePlaneU sig = random_3plane(n, PlaneConstraint::Sigma, 0, f5, rng);
      EXPECT_EQ(annihilator(sig).dim(), n - 3);
      for (std::size_t d = 1; d <= n - 2; ++d) {
        ThreePlaneU ann =
            random_3plane(n, PlaneConstraint::Annihilated, d, f5, rng);
        EXPECT_GE(annihilator(ann).dim(), d);
      }
      ThreePlaneU tau = random_3plane(n, PlaneConstraint::Tau, 0, f5, rng);
      EXPECT_EQ(phi_analysis(tau).rank_phi, 1u);
    }
  }
}

TEST(Generators, DoubleLinePlaneIsDegenerate) {
  Field q = Field::rationals();
  for (std::uint64_t t = 0; t < 30; ++t) {
    TrialRng rng(139, t);
    for (std::size_t n : {std::size_t(3), std::size_t(4)}) {
      ThreePlaneU u = random_double_line_plane(n, q, rng);
      // on the locus: the annihilator is large enough
      EXPECT_GE(annihilator(u).dim() + 3, n);
      EXPECT_LE(phi_analysis(u).rank_phi, 1u);
    }
  }
}

TEST(Enumeration, GaussianCounts) {
  Field f3 = Field::prime(3);
  EXPECT_EQ(enumerate_subspaces(4, 2, f3).size(), gaussian_count(4, 2, 3));
  EXPECT_EQ(gaussian_count(4, 2, 3), 130u);
  Field f2 = Field::prime(2);
  EXPECT_EQ(enumerate_subspaces(5, 2, f2).size(), gaussian_count(5, 2, 2));
  EXPECT_EQ(gaussian_count(5, 2, 2), 155u);
  // all distinct
  auto subs = enumerate_subspaces(4, 2, f3);
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = i + 1; j < subs.size(); ++j)
      EXPECT_NE(subs[i], subs[j]);
}

TEST(Suites, PropBSmall) {
  VerifyReport rep = verify_prop_b(3, Field::prime(3), 200, 7);
  EXPECT_EQ(rep.failures, 0u);
  EXPECT_EQ(rep.trials, 200u);
  EXPECT_TRUE(rep.first_counterexample.empty());
}

TEST(Suites, PropBRationalN5) {
  VerifyReport rep = verify_prop_b(5, Field::rationals(), 60, 7);
  EXPECT_EQ(rep.failures, 0u);
}

TEST(Suites, JacobianSmall) {
  VerifyReport rep = verify_jacobian(3, 3, Field::prime(101), 40, 3);
  EXPECT_EQ(rep.failures, 0u);
  VerifyReport rep2 = verify_jacobian(4, 2, Field::prime(101), 10, 3);
  EXPECT_EQ(rep2.failures, 0u);
}

TEST(Suites, Plucker36Small) {
  EXPECT_EQ(verify_plucker36(Field::prime(10007), 100, 1).failures, 0u);
  EXPECT_EQ(verify_plucker36_negative(Field::prime(10007), 100, 1).failures,
            0u);
}

TEST(Suites, RulingsSmall) {
  EXPECT_EQ(verify_rulings(3, Field::prime(10007), 20, 5).failures, 0u);
  EXPECT_EQ(verify_rulings(4, Field::prime(10007), 10, 5).failures, 0u);
  EXPECT_EQ(verify_rulings(3, Field::rationals(), 5, 5).failures, 0u);
}

TEST(Suites, FlagsRoundtripSmall) {
  EXPECT_EQ(verify_flags_roundtrip(3, Field::prime(13), 40, 11).failures, 0u);
  EXPECT_EQ(verify_flags_roundtrip(4, Field::prime(13), 20, 11).failures, 0u);
  EXPECT_EQ(verify_flags_roundtrip(5, Field::rationals(), 10, 11).failures,
            0u);
}

TEST(Suites, SpringerCountSmall) {
  VerifyReport rep = verify_springer_count(10, 3);
  EXPECT_EQ(rep.failures, 0u);
}

TEST(Suites, FiberCount) {
  VerifyReport rep = verify_fiber_count();
  EXPECT_EQ(rep.failures, 0u);
  EXPECT_EQ(rep.trials, 4u);  // (q, n) in {2,3} x {3,4}
}

TEST(Suites, RhoSigmaImagesSmall) {
  EXPECT_EQ(verify_rho_sigma_images(20, 9).failures, 0u);
}

TEST(Suites, ReportsAreDeterministic) {
  VerifyReport a = verify_prop_b(3, Field::prime(5), 50, 99);
  VerifyReport b = verify_prop_b(3, Field::prime(5), 50, 99);
  EXPECT_EQ(a.failures, b.failures);
  EXPECT_EQ(a.first_counterexample, b.first_counterexample);
}
