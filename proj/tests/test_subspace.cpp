#include "symdet/subspace.hpp"

#include <gtest/gtest.h>

#include "symdet/sampler.hpp"

using namespace symdet;

namespace {

Subspace sp(const std::vector<std::vector<int>>& rows, std::size_t ambient,
            const Field& f) {
  std::vector<std::vector<Scalar>> s;
  for (const auto& r : rows) {
    std::vector<Scalar> row;
    for (int x : r) row.push_back(Scalar::from_int(x, f));
    s.push_back(row);
  }
  return Subspace::span_of(s, ambient, f);
}

}  // namespace

TEST(Subspace, CanonicalEquality) {
  Field q = Field::rationals();
  // two spanning sets of one plane give identical basis data
  Subspace a = sp({{1, 1, 0}, {0, 2, 2}}, 3, q);
  Subspace b = sp({{2, 2, 0}, {1, 3, 2}}, 3, q);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.canonical_key(), b.canonical_key());
}

TEST(Subspace, AlgebraBasics) {
  Field q = Field::rationals();
  Subspace a = sp({{1, 0, 0}, {0, 1, 0}}, 3, q);
  EXPECT_EQ(intersect(a, a), a);
  EXPECT_EQ(sum(a, a), a);
  Subspace e1 = sp({{1, 0, 0}}, 3, q);
  EXPECT_TRUE(a.contains(e1));
  EXPECT_FALSE(e1.contains(a));
}

TEST(Subspace, TwoPlanesMeetInLineExhaustiveF3) {
  // every pair of distinct 2-planes in a 3-space meets in dimension 1
  Field f3 = Field::prime(3);
  auto planes = enumerate_subspaces(3, 2, f3);
  EXPECT_EQ(planes.size(), gaussian_count(3, 2, 3));
  for (std::size_t i = 0; i < planes.size(); ++i)
    for (std::size_t j = i + 1; j < planes.size(); ++j) {
      EXPECT_EQ(intersect(planes[i], planes[j]).dim(), 1u);
      EXPECT_EQ(sum(planes[i], planes[j]).dim(), 3u);
    }
}

TEST(Subspace, DimensionFormula) {
  Field f5 = Field::prime(5);
  for (std::uint64_t t = 0; t < 100; ++t) {
    TrialRng rng(9, t);
    std::size_t m = 4 + rng.below(3);
    Subspace a = random_subspace(m, 1 + rng.below(m - 1), f5, rng);
    Subspace b = random_subspace(m, 1 + rng.below(m - 1), f5, rng);
    EXPECT_EQ(a.dim() + b.dim(), sum(a, b).dim() + intersect(a, b).dim());
    EXPECT_TRUE(a.contains(intersect(a, b)));
    EXPECT_TRUE(sum(a, b).contains(a));
  }
}

TEST(Apolar, CoordinateComplement) {
  // n = 1: symmetric 2x2 coordinates (a11, a12, a22); the span of the
  // first unit vector is complemented by the remaining two coordinates
  Field q = Field::rationals();
  Subspace l = sp({{1, 0, 0}}, 3, q);
  Subspace perp = apolar_complement(l, 1);
  EXPECT_EQ(perp.dim(), 2u);
  EXPECT_EQ(perp, sp({{0, 1, 0}, {0, 0, 1}}, 3, q));
}

TEST(Apolar, ZeroComplementsToFull) {
  Field q = Field::rationals();
  Subspace zero(sym_pack_dim(2), q);
  EXPECT_EQ(apolar_complement(zero, 2), Subspace::full(6, q));
}

TEST(Apolar, DoubleComplementIdentity) {
  for (const Field& f : {Field::rationals(), Field::prime(101)}) {
    for (std::uint64_t t = 0; t < 100; ++t) {
      TrialRng rng(11, t);
      std::size_t n = 4;  // ambient 15
      Subspace l = random_subspace(sym_pack_dim(n), 5, f, rng);
      Subspace perp = apolar_complement(l, n);
      EXPECT_EQ(perp.dim(), 10u);
      EXPECT_EQ(apolar_complement(perp, n), l);
    }
  }
}

TEST(Apolar, PairingIsTrace) {
  // <A,B> with multiplicities (1 diagonal, 2 off-diagonal) equals tr(A B)
  Field q = Field::rationals();
  TrialRng rng(13, 0);
  Matrix a = random_matrix(4, 4, q, rng);
  a = a + a.transpose();
  Matrix b = random_matrix(4, 4, q, rng);
  b = b + b.transpose();
  auto pa = sym_pack(a), pb = sym_pack(b);
  Scalar pairing = Scalar::zero(q);
  std::size_t k = 0;
  Scalar two = Scalar::from_int(2, q);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j) {
      pairing += (i == j ? Scalar::one(q) : two) * pa[k] * pb[k];
      ++k;
    }
  Scalar trace = Scalar::zero(q);
  Matrix ab = a * b;
  for (std::size_t i = 0; i < 4; ++i) trace += ab.at(i, i);
  EXPECT_EQ(pairing, trace);
}

TEST(Apolar, RejectsCharacteristicTwo) {
  Field f2 = Field::prime(2);
  Subspace l(sym_pack_dim(2), f2);
  EXPECT_THROW(apolar_complement(l, 2), InputError);
}
