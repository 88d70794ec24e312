#include "symdet/scalar.hpp"

#include <gtest/gtest.h>

using namespace symdet;

TEST(Field, ParseAndName) {
  EXPECT_TRUE(Field::parse("Q").is_rational());
  EXPECT_EQ(Field::parse("Fp:10007").modulus(), 10007);
  EXPECT_EQ(Field::prime(3).name(), "Fp:3");
  EXPECT_THROW(Field::parse("Fp:4"), InputError);
  EXPECT_THROW(Field::parse("R"), InputError);
  // F_2 is constructible (pure linear algebra); quadric layers reject it.
  EXPECT_EQ(Field::prime(2).modulus(), 2);
}

TEST(Scalar, RationalCanonicalForm) {
  Scalar a = Scalar::rational(BigInt(6), BigInt(-4));
  EXPECT_EQ(a.str(), "-3/2");
  Scalar b = Scalar::rational(BigInt(-3), BigInt(2));
  EXPECT_EQ(a, b);
  EXPECT_EQ((a + b).str(), "-3");
  EXPECT_EQ((a * b).str(), "9/4");
  EXPECT_EQ((a - b).str(), "0");
  EXPECT_TRUE((a / b).is_one());
}

TEST(Scalar, PrimeFieldArithmetic) {
  Field f7 = Field::prime(7);
  Scalar a = Scalar::from_int(3, f7), b = Scalar::from_int(5, f7);
  EXPECT_EQ((a + b).residue(), 1);
  EXPECT_EQ((a * b).residue(), 1);
  EXPECT_EQ((a - b).residue(), 5);
  EXPECT_EQ(a.inverse().residue(), 5);
  EXPECT_EQ((-a).residue(), 4);
  EXPECT_EQ(Scalar::from_int(-10, f7).residue(), 4);
}

TEST(Scalar, MixingFieldsThrows) {
  Scalar q = Scalar::from_int(1, Field::rationals());
  Scalar p = Scalar::from_int(1, Field::prime(5));
  EXPECT_THROW(q + p, FieldMismatch);
  EXPECT_THROW(q == p, FieldMismatch);
}

TEST(Scalar, SquareRoots) {
  // rational: exact integer square roots of numerator and denominator
  Scalar a = Scalar::rational(BigInt(9), BigInt(4));
  ASSERT_TRUE(a.sqrt().has_value());
  EXPECT_EQ(a.sqrt()->str(), "3/2");
  EXPECT_FALSE(Scalar::rational(BigInt(2), BigInt(1)).is_square());
  EXPECT_FALSE(Scalar::rational(BigInt(-1), BigInt(1)).is_square());

  // F_7: residues {1,2,4} are the nonzero squares; 3 is not (residue table)
  Field f7 = Field::prime(7);
  for (int v : {1, 2, 4}) {
    auto s = Scalar::from_int(v, f7).sqrt();
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ((*s * *s).residue(), v);
  }
  for (int v : {3, 5, 6})
    EXPECT_FALSE(Scalar::from_int(v, f7).is_square());

  // Tonelli-Shanks branch: p = 1 mod 4
  Field f13 = Field::prime(13);
  auto s = Scalar::from_int(10, f13).sqrt();
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ((*s * *s).residue(), 10);
}

TEST(Scalar, DivisionByZeroThrows) {
  Field f = Field::prime(11);
  EXPECT_THROW(Scalar::one(f) / Scalar::zero(f), InputError);
  EXPECT_THROW(Scalar::zero(Field::rationals()).inverse(), InputError);
}
