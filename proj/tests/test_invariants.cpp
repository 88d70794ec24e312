#include "symdet/invariants.hpp"

#include <gtest/gtest.h>

using namespace symdet;

TEST(Invariants, RankFourOnPFour) {
  StratumInvariants s = strata_invariants(4, 4, Side::S);
  EXPECT_EQ(s.dim, 13);
  EXPECT_EQ(s.codim, 1);
  EXPECT_EQ(s.fano_index, BigRat(10));
  EXPECT_EQ(s.discrepancy, BigRat(0));
  EXPECT_EQ(s.er_coeffs, std::make_pair(4L, 2L));
  EXPECT_EQ(s.k_coeffs, std::make_pair(10L, 0L));
  EXPECT_EQ(s.cy_codim, BigRat(10));
  EXPECT_EQ(s.cy_dim, BigRat(3));
  EXPECT_EQ(s.gorenstein_index, 1);
  EXPECT_FALSE(s.cy_smooth_s);  // rank 4 section of the S side is singular
}

TEST(Invariants, RankTwoDualIsSmoothThreefold) {
  StratumInvariants s = strata_invariants(4, 2, Side::SDual);
  EXPECT_EQ(s.dim, 8);
  EXPECT_EQ(s.cy_codim, BigRat(5));
  EXPECT_EQ(s.cy_dim, BigRat(3));
  EXPECT_TRUE(s.cy_smooth_s);
}

TEST(Invariants, TotalSpaceDoubleCover) {
  // r = n+1 = 4: the cover of the full space of quadrics on P^3
  StratumInvariants s = strata_invariants(3, 4, Side::T);
  EXPECT_EQ(s.fano_index, BigRat(8));  // (n+1)^2/2
  EXPECT_EQ(s.codim, 0);
  EXPECT_EQ(s.dim, 9);
  EXPECT_TRUE(s.cy_smooth_t);
  // the exceptional-divisor coefficient n-2 = 1 matches the n = 3 case
  ASSERT_TRUE(s.f_discrepancy.has_value());
  EXPECT_EQ(*s.f_discrepancy, 1);
}

TEST(Invariants, DoubleCoverRecordCarriesFlatteningDiscrepancy) {
  StratumInvariants s = strata_invariants(4, 4, Side::T);
  ASSERT_TRUE(s.f_discrepancy.has_value());
  EXPECT_EQ(*s.f_discrepancy, 2);  // n - 2
  EXPECT_EQ(strata_invariants(6, 4, Side::T).f_discrepancy.value(), 4);
}

TEST(Invariants, ParityAndRangeErrors) {
  EXPECT_THROW(strata_invariants(4, 3, Side::T), InputError);
  EXPECT_THROW(strata_invariants(4, 0, Side::S), InputError);
  EXPECT_THROW(strata_invariants(4, 6, Side::S), InputError);
  EXPECT_THROW(duality_row(4, 1), InputError);
  EXPECT_THROW(duality_row(4, 5), InputError);
}

TEST(Invariants, DimCodimAndDualityForAllSmallCases) {
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::size_t r = 1; r <= n; ++r) {
      StratumInvariants s = strata_invariants(n, r, Side::S);
      // dim + codim fills the space of quadrics
      EXPECT_EQ(s.dim + s.codim,
                static_cast<long>((n + 1) * (n + 2) / 2 - 1));
      // discrepancy nonnegative, zero exactly on the boundary case
      EXPECT_GE(s.discrepancy, BigRat(0));
      EXPECT_EQ(s.discrepancy == BigRat(0), n == r);
      // Cartier parity
      EXPECT_EQ(s.gorenstein_index, (n - r) % 2 == 0 ? 1 : 2);
      if (r >= 2) {
        DualityRow d = duality_row(n, r);
        EXPECT_TRUE(d.equal);
        EXPECT_EQ(d.cy_dim_s, s.cy_dim);
      }
    }
}

TEST(Invariants, RankFourSectionsHaveDimension2nMinus5) {
  for (std::size_t n = 4; n <= 8; ++n) {
    StratumInvariants s = strata_invariants(n, 4, Side::T);
    EXPECT_EQ(s.cy_dim, BigRat(2 * static_cast<long>(n) - 5));
  }
}

TEST(Invariants, HalfIntegerCasesStayExact) {
  // odd r(n+1) keeps the Fano index a genuine half-integer
  StratumInvariants s = strata_invariants(4, 3, Side::S);
  EXPECT_EQ(s.fano_index, BigRat(15, 2));
  EXPECT_EQ(s.discrepancy, BigRat(1, 2));
  EXPECT_EQ(s.gorenstein_index, 2);
}
