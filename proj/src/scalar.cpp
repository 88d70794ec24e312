#include "symdet/scalar.hpp"

#include <ostream>

namespace symdet {

namespace {

bool is_prime64(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(
      static_cast<__int128>(a) * static_cast<__int128>(b) % p);
}

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t acc = 1 % p;
  b = mod_reduce(b, p);
  while (e > 0) {
    if (e & 1) acc = mod_mul(acc, b, p);
    b = mod_mul(b, b, p);
    e >>= 1;
  }
  return acc;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
  // extended Euclid
  std::int64_t t = 0, new_t = 1, r = p, new_r = mod_reduce(a, p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw InputError("division by a non-invertible residue");
  return mod_reduce(t, p);
}

// Tonelli-Shanks; p an odd prime, a in [0,p).
std::optional<std::int64_t> mod_sqrt(std::int64_t a, std::int64_t p) {
  if (a == 0) return 0;
  if (p == 2) return a;  // not reachable: p odd
  if (mod_pow(a, (p - 1) / 2, p) != 1) return std::nullopt;
  if (p % 4 == 3) return mod_pow(a, (p + 1) / 4, p);
  std::int64_t q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::int64_t z = 2;
  while (mod_pow(z, (p - 1) / 2, p) != p - 1) ++z;
  std::int64_t m = s;
  std::int64_t c = mod_pow(z, q, p);
  std::int64_t t = mod_pow(a, q, p);
  std::int64_t r = mod_pow(a, (q + 1) / 2, p);
  while (t != 1) {
    std::int64_t i = 0, tt = t;
    while (tt != 1) {
      tt = mod_mul(tt, tt, p);
      ++i;
      if (i == m) return std::nullopt;
    }
    std::int64_t b = mod_pow(c, std::int64_t(1) << (m - i - 1), p);
    m = i;
    c = mod_mul(b, b, p);
    t = mod_mul(t, c, p);
    r = mod_mul(r, b, p);
  }
  return r;
}

std::optional<BigInt> int_sqrt_exact(const BigInt& v) {
  if (v < 0) return std::nullopt;
  BigInt r = boost::multiprecision::sqrt(v);
  if (r * r == v) return r;
  return std::nullopt;
}

}  // namespace

Field Field::prime(std::int64_t p) {
  if (p < 2 || p >= (std::int64_t(1) << 31) || !is_prime64(p))
    throw InputError("modulus must be a prime below 2^31, got " +
                     std::to_string(p));
  return Field(p);
}

std::string Field::name() const {
  return is_rational() ? "Q" : "Fp:" + std::to_string(modulus_);
}

Field Field::parse(const std::string& spec) {
  if (spec == "Q") return rationals();
  if (spec.rfind("Fp:", 0) == 0) {
    try {
      return prime(std::stoll(spec.substr(3)));
    } catch (const std::logic_error&) {
      throw InputError("bad field spec: " + spec);
    }
  }
  throw InputError("bad field spec: " + spec + " (expected Q or Fp:<p>)");
}

Scalar Scalar::from_int(std::int64_t v, const Field& f) {
  Scalar s;
  s.field_ = f;
  if (f.is_rational())
    s.rat_ = BigRat(v);
  else
    s.res_ = mod_reduce(v, f.modulus());
  return s;
}

Scalar Scalar::from_bigint(const BigInt& v, const Field& f) {
  Scalar s;
  s.field_ = f;
  if (f.is_rational()) {
    s.rat_ = BigRat(v);
  } else {
    BigInt r = v % f.modulus();
    if (r < 0) r += f.modulus();
    s.res_ = r.convert_to<std::int64_t>();
  }
  return s;
}

Scalar Scalar::rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InputError("zero denominator");
  Scalar s;
  s.field_ = Field::rationals();
  // cpp_rational reduces to lowest terms but insists on a positive
  // denominator at construction
  s.rat_ = (den < 0) ? BigRat(-num, -den) : BigRat(num, den);
  return s;
}

Scalar Scalar::rational(const BigRat& r) {
  Scalar s;
  s.field_ = Field::rationals();
  s.rat_ = r;
  return s;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw FieldMismatch("cannot combine " + field_.name() + " with " +
                        o.field_.name());
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? rat_.is_zero() : res_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? rat_ == 1 : res_ == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar s;
  s.field_ = field_;
  if (field_.is_rational())
    s.rat_ = rat_ + o.rat_;
  else
    s.res_ = mod_reduce(res_ + o.res_, field_.modulus());
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  Scalar s;
  s.field_ = field_;
  if (field_.is_rational())
    s.rat_ = rat_ - o.rat_;
  else
    s.res_ = mod_reduce(res_ - o.res_, field_.modulus());
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar s;
  s.field_ = field_;
  if (field_.is_rational())
    s.rat_ = rat_ * o.rat_;
  else
    s.res_ = mod_mul(res_, o.res_, field_.modulus());
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar s;
  s.field_ = field_;
  if (field_.is_rational())
    s.rat_ = -rat_;
  else
    s.res_ = mod_reduce(-res_, field_.modulus());
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InputError("division by zero");
  Scalar s;
  s.field_ = field_;
  if (field_.is_rational())
    s.rat_ = 1 / rat_;
  else
    s.res_ = mod_inv(res_, field_.modulus());
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same_field(o);
  return field_.is_rational() ? rat_ == o.rat_ : res_ == o.res_;
}

std::optional<Scalar> Scalar::sqrt() const {
  if (field_.is_rational()) {
    auto n = int_sqrt_exact(boost::multiprecision::numerator(rat_));
    auto d = int_sqrt_exact(boost::multiprecision::denominator(rat_));
    if (!n || !d) return std::nullopt;
    return rational(*n, *d);
  }
  auto r = mod_sqrt(res_, field_.modulus());
  if (!r) return std::nullopt;
  return from_int(*r, field_);
}

const BigRat& Scalar::rat() const {
  if (!field_.is_rational()) throw InputError("not a rational scalar");
  return rat_;
}

std::int64_t Scalar::residue() const {
  if (field_.is_rational()) throw InputError("not a prime-field scalar");
  return res_;
}

std::string Scalar::str() const {
  if (!field_.is_rational()) return std::to_string(res_);
  BigInt num = boost::multiprecision::numerator(rat_);
  BigInt den = boost::multiprecision::denominator(rat_);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

int Scalar::compare_for_order(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  if (a.field_.is_rational()) {
    if (a.rat_ < b.rat_) return -1;
    if (a.rat_ > b.rat_) return 1;
    return 0;
  }
  if (a.res_ < b.res_) return -1;
  if (a.res_ > b.res_) return 1;
  return 0;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

}  // namespace symdet
