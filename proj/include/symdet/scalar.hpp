#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "symdet/errors.hpp"

namespace symdet {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Coefficient field: the rationals, or a prime field F_p.
// p = 2 is constructible for plain linear algebra (exhaustive flag
// enumeration uses it) but is rejected by every quadric-facing entry point.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::int64_t p);

  bool is_rational() const { return modulus_ == 0; }
  std::int64_t modulus() const { return modulus_; }

  bool operator==(const Field& o) const { return modulus_ == o.modulus_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  std::string name() const;

  // Parses "Q" or "Fp:<p>".
  static Field parse(const std::string& spec);

 private:
  explicit Field(std::int64_t p) : modulus_(p) {}
  std::int64_t modulus_;  // 0 = rationals
};

// Exact field element. Immutable value type; arithmetic between different
// fields throws FieldMismatch.
class Scalar {
 public:
  Scalar() : field_(Field::rationals()) {}  // rational zero

  static Scalar zero(const Field& f) { return from_int(0, f); }
  static Scalar one(const Field& f) { return from_int(1, f); }
  static Scalar from_int(std::int64_t v, const Field& f);
  static Scalar from_bigint(const BigInt& v, const Field& f);
  static Scalar rational(const BigInt& num, const BigInt& den);
  static Scalar rational(const BigRat& r);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Exact square root, if one exists in the field.
  std::optional<Scalar> sqrt() const;
  bool is_square() const { return sqrt().has_value(); }

  // Rational accessors (field must be Q).
  const BigRat& rat() const;
  // Prime-field accessor, reduced representative in [0, p).
  std::int64_t residue() const;

  // "a" or "a/b" over Q; the reduced residue over F_p.
  std::string str() const;

  // Total order used only for canonical tie-breaking (lex dumps, unordered
  // pairs). Not a field order.
  static int compare_for_order(const Scalar& a, const Scalar& b);

 private:
  void check_same_field(const Scalar& o) const;

  Field field_;
  BigRat rat_;           // used when field is Q
  std::int64_t res_ = 0; // used when field is F_p
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace symdet
