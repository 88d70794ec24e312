#include "symdet/matrix.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace symdet {

Matrix::Matrix(std::size_t rows, std::size_t cols, const Field& f)
    : rows_(rows), cols_(cols), field_(f), e_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(std::size_t m, const Field& f) {
  Matrix r(m, m, f);
  for (std::size_t i = 0; i < m; ++i) r.set(i, i, Scalar::one(f));
  return r;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows,
                         const Field& f) {
  std::size_t nr = rows.size();
  std::size_t nc = nr == 0 ? 0 : rows[0].size();
  Matrix r(nr, nc, f);
  for (std::size_t i = 0; i < nr; ++i) {
    if (rows[i].size() != nc) throw DimensionMismatch("ragged rows");
    for (std::size_t j = 0; j < nc; ++j) {
      if (rows[i][j].field() != f) throw FieldMismatch("row entry field");
      r.set(i, j, rows[i][j]);
    }
  }
  return r;
}

const Scalar& Matrix::at(std::size_t i, std::size_t j) const {
  return e_[i * cols_ + j];
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& v) {
  e_[i * cols_ + j] = v;
}

std::vector<Scalar> Matrix::row(std::size_t i) const {
  return std::vector<Scalar>(e_.begin() + i * cols_,
                             e_.begin() + (i + 1) * cols_);
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shapes");
  if (field_ != o.field_) throw FieldMismatch("matrix product fields");
  Matrix r(rows_, o.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.set(i, j, r.at(i, j) + at(i, k) * o.at(k, j));
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionMismatch("matrix sum shapes");
  Matrix r(rows_, cols_, field_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionMismatch("matrix difference shapes");
  Matrix r(rows_, cols_, field_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r(rows_, cols_, field_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols) const {
  Matrix r(rows.size(), cols.size(), field_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      r.set(i, j, at(rows[i], cols[j]));
  return r;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ") << "[";
    for (std::size_t j = 0; j < cols_; ++j)
      os << at(i, j).str() << (j + 1 < cols_ ? " " : "");
    os << "]" << (i + 1 < rows_ ? "\n" : "]");
  }
  return os.str();
}

namespace {

// In-place Gauss-Jordan; returns rank and fills pivot columns.
std::size_t rref_core(Matrix& a, std::vector<std::size_t>& pivots) {
  pivots.clear();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = a.rows();
    for (std::size_t i = r; i < a.rows(); ++i)
      if (!a.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) {
        Scalar tmp = a.at(r, j);
        a.set(r, j, a.at(piv, j));
        a.set(piv, j, tmp);
      }
    Scalar inv = a.at(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a.set(r, j, a.at(r, j) * inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      Scalar fac = a.at(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        a.set(i, j, a.at(i, j) - fac * a.at(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return r;
}

}  // namespace

Echelon echelon(const Matrix& m) {
  Matrix a = m;
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = rref_core(a, pivots);

  // Canonical kernel basis: one vector per free column, then one more
  // normalization pass so equal kernels have identical data regardless of
  // provenance.
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> krows;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (is_pivot[c]) continue;
    std::vector<Scalar> v(a.cols(), Scalar::zero(f));
    v[c] = Scalar::one(f);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -a.at(i, c);
    krows.push_back(std::move(v));
  }
  Matrix kernel(krows.size(), m.cols(), f);
  for (std::size_t i = 0; i < krows.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) kernel.set(i, j, krows[i][j]);
  std::vector<std::size_t> kpiv;
  rref_core(kernel, kpiv);
  return Echelon{std::move(a), r, std::move(pivots), std::move(kernel)};
}

std::size_t rank(const Matrix& m) { return echelon(m).rank; }

Scalar det(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square");
  Matrix a = m;
  const Field& f = m.field();
  Scalar d = Scalar::one(f);
  for (std::size_t c = 0; c < a.cols(); ++c) {
    std::size_t piv = a.rows();
    for (std::size_t i = c; i < a.rows(); ++i)
      if (!a.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv == a.rows()) return Scalar::zero(f);
    if (piv != c) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        Scalar tmp = a.at(c, j);
        a.set(c, j, a.at(piv, j));
        a.set(piv, j, tmp);
      }
      d = -d;
    }
    d = d * a.at(c, c);
    Scalar inv = a.at(c, c).inverse();
    for (std::size_t i = c + 1; i < a.rows(); ++i) {
      if (a.at(i, c).is_zero()) continue;
      Scalar fac = a.at(i, c) * inv;
      for (std::size_t j = c; j < a.cols(); ++j)
        a.set(i, j, a.at(i, j) - fac * a.at(c, j));
    }
  }
  return d;
}

bool minors_vanish(const Matrix& m, std::size_t k) {
  if (k < 1 || k > std::min(m.rows(), m.cols()))
    throw InputError("minor order out of range");
  const auto& rs = lex_subsets(m.rows(), k);
  const auto& cs = lex_subsets(m.cols(), k);
  for (const auto& R : rs)
    for (const auto& C : cs)
      if (!det(m.submatrix(R, C)).is_zero()) return false;
  return true;
}

Scalar cofactor(const Matrix& m, std::size_t i, std::size_t j) {
  if (m.rows() != m.cols()) throw DimensionMismatch("cofactor of non-square");
  std::vector<std::size_t> rs, cs;
  for (std::size_t a = 0; a < m.rows(); ++a)
    if (a != i) rs.push_back(a);
  for (std::size_t a = 0; a < m.cols(); ++a)
    if (a != j) cs.push_back(a);
  Scalar d = rs.empty() ? Scalar::one(m.field()) : det(m.submatrix(rs, cs));
  return ((i + j) % 2 == 0) ? d : -d;
}

Matrix adjugate(const Matrix& m) {
  Matrix r(m.rows(), m.cols(), m.field());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.set(j, i, cofactor(m, i, j));
  return r;
}

Matrix solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols() || a.rows() != b.rows())
    throw DimensionMismatch("solve shapes");
  // Gauss-Jordan on [a | b]
  Matrix aug(a.rows(), a.cols() + b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.set(i, j, a.at(i, j));
    for (std::size_t j = 0; j < b.cols(); ++j)
      aug.set(i, a.cols() + j, b.at(i, j));
  }
  Echelon e = echelon(aug);
  if (e.rank != a.rows() ||
      (e.rank > 0 && e.pivots.back() >= a.cols()))
    throw InputError("singular system");
  Matrix x(a.cols(), b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      x.set(i, j, e.rref.at(i, a.cols() + j));
  return x;
}

Scalar bilinear(const std::vector<Scalar>& x, const Matrix& m,
                const std::vector<Scalar>& y) {
  if (x.size() != m.rows() || y.size() != m.cols())
    throw DimensionMismatch("bilinear shapes");
  Scalar acc = Scalar::zero(m.field());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!y[j].is_zero()) acc += x[i] * m.at(i, j) * y[j];
  }
  return acc;
}

std::size_t binomial(std::size_t m, std::size_t k) {
  if (k > m) return 0;
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * (m - i) / (i + 1);
  return r;
}

const std::vector<std::vector<std::size_t>>& lex_subsets(std::size_t m,
                                                         std::size_t k) {
  static std::map<std::pair<std::size_t, std::size_t>,
                  std::vector<std::vector<std::size_t>>>
      cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto key = std::make_pair(m, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<std::size_t>> subs;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  if (k <= m) {
    while (true) {
      subs.push_back(cur);
      std::size_t i = k;
      while (i > 0 && cur[i - 1] == m - k + i - 1) --i;
      if (i == 0) break;
      ++cur[i - 1];
      for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
  }
  if (k == 0) subs = {{}};
  return cache.emplace(key, std::move(subs)).first->second;
}

}  // namespace symdet
