#include "symdet/matrix.hpp"

#include <gtest/gtest.h>

#include "symdet/sampler.hpp"
#include "symdet/subspace.hpp"

using namespace symdet;

namespace {

Matrix mat(const std::vector<std::vector<int>>& rows, const Field& f) {
  std::vector<std::vector<Scalar>> s;
  for (const auto& r : rows) {
    std::vector<Scalar> row;
    for (int x : r) row.push_back(Scalar::from_int(x, f));
    s.push_back(row);
  }
  return Matrix::from_rows(s, f);
}

}  // namespace

TEST(Reduce, DiagonalCase) {
  Field q = Field::rationals();
  Reduction r = reduce(mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}, q));
  EXPECT_EQ(r.rank, 2u);
  ASSERT_EQ(r.kernel.dim(), 1u);
  EXPECT_TRUE(r.kernel.contains(
      {Scalar::zero(q), Scalar::zero(q), Scalar::one(q)}));
}

TEST(Reduce, ZeroMatrix) {
  Field q = Field::rationals();
  Reduction r = reduce(Matrix(3, 3, q));
  EXPECT_EQ(r.rank, 0u);
  EXPECT_EQ(r.kernel.dim(), 3u);
  EXPECT_EQ(r.kernel, Subspace::full(3, q));
}

TEST(Reduce, HandReducedOverF5) {
  // [[1,2],[2,4]] over F_5: rank 1; kernel spanned by (3,1), normalized to
  // the echelon representative (1,2) (since 3^{-1} = 2 mod 5).
  Field f5 = Field::prime(5);
  Reduction r = reduce(mat({{1, 2}, {2, 4}}, f5));
  EXPECT_EQ(r.rank, 1u);
  ASSERT_EQ(r.kernel.dim(), 1u);
  EXPECT_TRUE(
      r.kernel.contains({Scalar::from_int(3, f5), Scalar::one(f5)}));
  EXPECT_EQ(r.kernel.basis().at(0, 0).residue(), 1);
  EXPECT_EQ(r.kernel.basis().at(0, 1).residue(), 2);
}

TEST(Reduce, RankPlusKernelIsCols) {
  Field f7 = Field::prime(7);
  for (std::uint64_t t = 0; t < 50; ++t) {
    TrialRng rng(42, t);
    std::size_t rows = 1 + rng.below(5), cols = 1 + rng.below(5);
    Matrix m = random_matrix(rows, cols, f7, rng);
    Reduction r = reduce(m);
    EXPECT_EQ(r.rank + r.kernel.dim(), cols);
    // every kernel row is annihilated
    for (std::size_t i = 0; i < r.kernel.dim(); ++i) {
      auto v = r.kernel.basis_row(i);
      for (std::size_t a = 0; a < rows; ++a) {
        Scalar acc = Scalar::zero(f7);
        for (std::size_t b = 0; b < cols; ++b) acc += m.at(a, b) * v[b];
        EXPECT_TRUE(acc.is_zero());
      }
    }
  }
}

TEST(MinorsVanish, RankBounds) {
  Field q = Field::rationals();
  Matrix m = mat({{1, 2, 3, 4}, {2, 4, 6, 8}, {1, 1, 1, 1}, {3, 5, 7, 9}}, q);
  // rank 2: all 3x3 minors vanish, not all 2x2
  EXPECT_EQ(rank(m), 2u);
  EXPECT_TRUE(minors_vanish(m, 3));
  EXPECT_FALSE(minors_vanish(m, 2));
  EXPECT_FALSE(minors_vanish(Matrix::identity(4, q), 4));
  EXPECT_THROW(minors_vanish(m, 0), InputError);
  EXPECT_THROW(minors_vanish(m, 5), InputError);
}

TEST(MinorsVanish, AgreesWithEchelonRank) {
  // cross-check the two routes on seeded samples
  Field f7 = Field::prime(7);
  for (std::uint64_t t = 0; t < 200; ++t) {
    TrialRng rng(7, t);
    std::size_t mdim = 2 + rng.below(4);
    Matrix m = random_matrix(mdim, mdim, f7, rng);
    std::size_t rk = rank(m);
    for (std::size_t k = 1; k <= mdim; ++k)
      EXPECT_EQ(minors_vanish(m, k), rk <= k - 1);
  }
}

TEST(Det, CofactorAndAdjugate) {
  Field q = Field::rationals();
  Matrix m = mat({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}}, q);
  Scalar d = det(m);
  EXPECT_EQ(d.str(), "18");
  Matrix prod = adjugate(m) * m;
  EXPECT_EQ(prod, Matrix::identity(3, q).scaled(d));
  EXPECT_EQ(cofactor(m, 0, 1), Scalar::from_int(-4, q));
}

TEST(Solve, SquareSystem) {
  Field f11 = Field::prime(11);
  TrialRng rng(3, 0);
  Matrix a = random_invertible(3, f11, rng);
  Matrix x = random_matrix(3, 2, f11, rng);
  Matrix b = a * x;
  EXPECT_EQ(solve(a, b), x);
}
