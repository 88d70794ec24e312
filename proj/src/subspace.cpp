#include "symdet/subspace.hpp"

#include <sstream>

namespace symdet {

Subspace::Subspace(std::size_t ambient_dim, const Field& f)
    : ambient_(ambient_dim), basis_(0, ambient_dim, f) {}

Subspace::Subspace(Matrix basis, std::size_t ambient)
    : ambient_(ambient), basis_(std::move(basis)) {}

Subspace Subspace::span(const Matrix& span_rows) {
  Echelon e = echelon(span_rows);
  Matrix b(e.rank, span_rows.cols(), span_rows.field());
  for (std::size_t i = 0; i < e.rank; ++i)
    for (std::size_t j = 0; j < span_rows.cols(); ++j)
      b.set(i, j, e.rref.at(i, j));
  return Subspace(std::move(b), span_rows.cols());
}

Subspace Subspace::span_of(const std::vector<std::vector<Scalar>>& rows,
                           std::size_t ambient_dim, const Field& f) {
  if (rows.empty()) return Subspace(ambient_dim, f);
  Matrix m = Matrix::from_rows(rows, f);
  if (m.cols() != ambient_dim) throw DimensionMismatch("span ambient");
  return span(m);
}

Subspace Subspace::full(std::size_t ambient_dim, const Field& f) {
  return span(Matrix::identity(ambient_dim, f));
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector ambient");
  // Reduce v against the RREF basis.
  std::vector<Scalar> w = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    // pivot of row i
    std::size_t p = 0;
    while (p < ambient_ && basis_.at(i, p).is_zero()) ++p;
    if (p == ambient_) continue;
    if (!w[p].is_zero()) {
      Scalar fac = w[p];
      for (std::size_t j = 0; j < ambient_; ++j)
        w[j] = w[j] - fac * basis_.at(i, j);
    }
  }
  for (const auto& x : w)
    if (!x.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& o) const {
  if (o.ambient_ != ambient_) throw DimensionMismatch("subspace ambient");
  for (std::size_t i = 0; i < o.dim(); ++i)
    if (!contains(o.basis_row(i))) return false;
  return true;
}

std::string Subspace::canonical_key() const {
  std::ostringstream os;
  os << ambient_ << ";" << dim() << ";";
  for (std::size_t i = 0; i < basis_.rows(); ++i)
    for (std::size_t j = 0; j < basis_.cols(); ++j)
      os << basis_.at(i, j).str() << ",";
  return os.str();
}

Reduction reduce(const Matrix& m) {
  Echelon e = echelon(m);
  Subspace ker = Subspace::span(e.kernel_rows);
  if (e.kernel_rows.rows() == 0) ker = Subspace(m.cols(), m.field());
  return Reduction{std::move(e.rref), e.rank, std::move(e.pivots),
                   std::move(ker)};
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.field() != b.field())
    throw DimensionMismatch("subspace sum ambient");
  Matrix stacked(a.dim() + b.dim(), a.ambient_dim(), a.field());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.ambient_dim(); ++j)
      stacked.set(i, j, a.basis().at(i, j));
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.ambient_dim(); ++j)
      stacked.set(a.dim() + i, j, b.basis().at(i, j));
  return Subspace::span(stacked);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.field() != b.field())
    throw DimensionMismatch("subspace intersection ambient");
  const Field& f = a.field();
  std::size_t m = a.ambient_dim();
  if (a.dim() == 0 || b.dim() == 0) return Subspace(m, f);
  // x^T A = y^T B  <=>  (x, y) in ker [A^T | -B^T]^T, columns = coefficients.
  Matrix sys(m, a.dim() + b.dim(), f);
  for (std::size_t j = 0; j < a.dim(); ++j)
    for (std::size_t i = 0; i < m; ++i) sys.set(i, j, a.basis().at(j, i));
  for (std::size_t j = 0; j < b.dim(); ++j)
    for (std::size_t i = 0; i < m; ++i)
      sys.set(i, a.dim() + j, -b.basis().at(j, i));
  Reduction r = reduce(sys);
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t k = 0; k < r.kernel.dim(); ++k) {
    std::vector<Scalar> coef = r.kernel.basis_row(k);
    std::vector<Scalar> v(m, Scalar::zero(f));
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t i = 0; i < m; ++i)
        v[i] = v[i] + coef[j] * a.basis().at(j, i);
    rows.push_back(std::move(v));
  }
  return Subspace::span_of(rows, m, f);
}

std::size_t sym_pack_dim(std::size_t n) { return (n + 1) * (n + 2) / 2; }

std::vector<Scalar> sym_pack(const Matrix& s) {
  if (!s.is_symmetric()) throw InputError("sym_pack needs a symmetric matrix");
  std::vector<Scalar> out;
  out.reserve(s.rows() * (s.rows() + 1) / 2);
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = i; j < s.cols(); ++j) out.push_back(s.at(i, j));
  return out;
}

Matrix sym_unpack(const std::vector<Scalar>& packed, std::size_t n,
                  const Field& f) {
  std::size_t m = n + 1;
  if (packed.size() != sym_pack_dim(n))
    throw DimensionMismatch("packed symmetric length");
  Matrix s(m, m, f);
  std::size_t k = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      s.set(i, j, packed[k]);
      s.set(j, i, packed[k]);
      ++k;
    }
  return s;
}

Subspace apolar_complement(const Subspace& l, std::size_t n) {
  std::size_t dim = sym_pack_dim(n);
  if (l.ambient_dim() != dim)
    throw DimensionMismatch("apolar complement expects ambient " +
                            std::to_string(dim));
  const Field& f = l.field();
  if (!f.is_rational() && f.modulus() == 2)
    throw InputError("trace pairing is degenerate in characteristic 2");
  if (l.dim() == 0) return Subspace::full(dim, f);
  // Row k of the system: the pairing against basis vector k of L.
  Matrix sys(l.dim(), dim, f);
  Scalar two = Scalar::from_int(2, f);
  std::size_t m = n + 1;
  for (std::size_t r = 0; r < l.dim(); ++r) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j) {
        Scalar mult = (i == j) ? Scalar::one(f) : two;
        sys.set(r, k, mult * l.basis().at(r, k));
        ++k;
      }
  }
  return reduce(sys).kernel;
}

std::vector<Scalar> projective_normalize(const std::vector<Scalar>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) {
      Scalar inv = x.inverse();
      std::vector<Scalar> out;
      out.reserve(v.size());
      for (const auto& y : v) out.push_back(y * inv);
      return out;
    }
  throw InputError("cannot normalize the zero vector projectively");
}

}  // namespace symdet
