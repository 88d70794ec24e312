#include "symdet/wedge.hpp"

#include <gtest/gtest.h>

#include "symdet/sampler.hpp"

using namespace symdet;

namespace {

WedgeVector rnd_wedge(std::size_t deg, std::size_t m, const Field& f,
                      TrialRng& rng) {
  std::vector<Scalar> c(binomial(m, deg));
  for (auto& x : c) x = random_scalar(f, rng);
  return WedgeVector(deg, m, c);
}

}  // namespace

TEST(Wedge, BasisProducts) {
  Field q = Field::rationals();
  WedgeVector e1 = WedgeVector::basis_element(1, 4, {0}, q);
  WedgeVector e2 = WedgeVector::basis_element(1, 4, {1}, q);
  WedgeVector e12 = wedge(e1, e2);
  EXPECT_EQ(e12, WedgeVector::basis_element(2, 4, {0, 1}, q));
  EXPECT_TRUE(wedge(e12, e12).is_zero());
  EXPECT_EQ(wedge(e2, e1),
            e12.scaled(Scalar::from_int(-1, q)));
}

TEST(Wedge, BilinearExpansion) {
  // (e1+e2) ^ (e1-e2) = -2 e12
  Field q = Field::rationals();
  WedgeVector e1 = WedgeVector::basis_element(1, 4, {0}, q);
  WedgeVector e2 = WedgeVector::basis_element(1, 4, {1}, q);
  WedgeVector lhs = wedge(e1 + e2, e1 - e2);
  EXPECT_EQ(lhs, WedgeVector::basis_element(2, 4, {0, 1}, q)
                     .scaled(Scalar::from_int(-2, q)));
}

TEST(Wedge, DegreeOverflowThrows) {
  Field q = Field::rationals();
  WedgeVector a = WedgeVector::basis_element(2, 4, {0, 1}, q);
  WedgeVector b = WedgeVector::basis_element(3, 4, {0, 1, 2}, q);
  EXPECT_THROW(wedge(a, b), InputError);
}

TEST(Wedge, AssociativeAndGradedCommutative) {
  Field f7 = Field::prime(7);
  // degree profiles (1,1,1), (1,2,1), (2,1,2) in ambient 6
  const std::size_t profiles[3][3] = {{1, 1, 1}, {1, 2, 1}, {2, 1, 2}};
  for (const auto& pr : profiles) {
    for (std::uint64_t t = 0; t < 200; ++t) {
      TrialRng rng(17, t);
      WedgeVector a = rnd_wedge(pr[0], 6, f7, rng);
      WedgeVector b = rnd_wedge(pr[1], 6, f7, rng);
      WedgeVector c = rnd_wedge(pr[2], 6, f7, rng);
      EXPECT_EQ(wedge(wedge(a, b), c), wedge(a, wedge(b, c)));
      // a^b = (-1)^{deg a deg b} b^a
      WedgeVector ab = wedge(a, b);
      WedgeVector ba = wedge(b, a);
      if ((pr[0] * pr[1]) % 2 == 0)
        EXPECT_EQ(ab, ba);
      else
        EXPECT_EQ(ab, ba.scaled(Scalar::from_int(-1, f7)));
    }
  }
}

TEST(DualTwoForm, SignsForN3) {
  // ambient 4 (n = 3): e12 -> +e34*, e13 -> -e24*
  Field q = Field::rationals();
  WedgeVector e12 = WedgeVector::basis_element(2, 4, {0, 1}, q);
  EXPECT_EQ(dual_two_form(e12), WedgeVector::basis_element(2, 4, {2, 3}, q));
  WedgeVector e13 = WedgeVector::basis_element(2, 4, {0, 2}, q);
  EXPECT_EQ(dual_two_form(e13),
            WedgeVector::basis_element(2, 4, {1, 3}, q)
                .scaled(Scalar::from_int(-1, q)));
}

TEST(DualTwoForm, RoundTrip) {
  Field f5 = Field::prime(5);
  for (std::size_t m : {4u, 5u, 6u}) {
    for (std::uint64_t t = 0; t < 100; ++t) {
      TrialRng rng(19, t);
      WedgeVector omega = rnd_wedge(m - 2, m, f5, rng);
      EXPECT_EQ(dual_two_form_inverse(dual_two_form(omega)), omega);
      WedgeVector beta = rnd_wedge(2, m, f5, rng);
      EXPECT_EQ(dual_two_form(dual_two_form_inverse(beta)), beta);
    }
  }
}

TEST(DualTwoForm, IsLinearBijection) {
  // the matrix of the duality on basis elements is a signed permutation
  Field q = Field::rationals();
  std::size_t m = 5;
  const auto& subs = lex_subsets(m, m - 2);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    WedgeVector img =
        dual_two_form(WedgeVector::basis_element(m - 2, m, subs[i], q));
    std::size_t nonzero = 0;
    for (const auto& c : img.coords())
      if (!c.is_zero()) {
        ++nonzero;
        EXPECT_TRUE(c.is_one() || (-c).is_one());
      }
    EXPECT_EQ(nonzero, 1u);
  }
}

TEST(PushForward, IdentityAndComposition) {
  Field f7 = Field::prime(7);
  TrialRng rng(23, 0);
  Matrix g = random_invertible(5, f7, rng);
  Matrix h = random_invertible(5, f7, rng);
  WedgeVector omega = rnd_wedge(3, 5, f7, rng);
  EXPECT_EQ(push_forward(Matrix::identity(5, f7), omega), omega);
  EXPECT_EQ(push_forward(g * h, omega), push_forward(g, push_forward(h, omega)));
  // compatibility: (g v1) ^ (g v2) = wedge^2(g) (v1 ^ v2)
  WedgeVector v1 = rnd_wedge(1, 5, f7, rng);
  WedgeVector v2 = rnd_wedge(1, 5, f7, rng);
  EXPECT_EQ(wedge(push_forward(g, v1), push_forward(g, v2)),
            push_forward(g, wedge(v1, v2)));
}

TEST(DualTwoForm, DecomposablesHaveDecomposableDuals) {
  // the dual of a wedge of m-2 independent vectors is a rank-one 2-form
  Field f7 = Field::prime(7);
  for (std::size_t m : {4u, 5u, 6u}) {
    for (std::uint64_t t = 0; t < 100; ++t) {
      TrialRng rng(149, t);
      WedgeVector omega = WedgeVector::basis_element(0, m, {}, f7);
      for (std::size_t i = 0; i + 2 < m; ++i)
        omega = wedge(omega, rnd_wedge(1, m, f7, rng));
      if (omega.is_zero()) continue;
      WedgeVector beta = dual_two_form(omega);
      EXPECT_TRUE(wedge(beta, beta).is_zero());
    }
  }
}

TEST(WedgeAnnihilator, DecomposableSupport) {
  Field q = Field::rationals();
  // e0 ^ e2 ^ e3 in ambient 5: support is span{e0, e2, e3}
  WedgeVector omega = WedgeVector::basis_element(3, 5, {0, 2, 3}, q);
  Subspace supp = wedge_annihilator(omega);
  EXPECT_EQ(supp.dim(), 3u);
  EXPECT_TRUE(supp.contains({Scalar::one(q), Scalar::zero(q), Scalar::zero(q),
                             Scalar::zero(q), Scalar::zero(q)}));
  EXPECT_TRUE(supp.contains({Scalar::zero(q), Scalar::zero(q), Scalar::one(q),
                             Scalar::zero(q), Scalar::zero(q)}));
}
