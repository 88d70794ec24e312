#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "symdet/scalar.hpp"

namespace symdet {

// Dense exact matrix over one field. Row-major, immutable by convention
// (all operations return fresh values).
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const Field& f);
  static Matrix identity(std::size_t m, const Field& f);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows,
                          const Field& f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  const Scalar& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Scalar& v);

  std::vector<Scalar> row(std::size_t i) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_symmetric() const;

  Matrix submatrix(const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols) const;

  std::string str() const;

 private:
  std::size_t rows_, cols_;
  Field field_;
  std::vector<Scalar> e_;
};

// Row-echelon data of a matrix. The kernel is returned as canonical RREF
// rows (see Subspace for the wrapped form).
struct Echelon {
  Matrix rref;
  std::size_t rank;
  std::vector<std::size_t> pivots;
  Matrix kernel_rows;  // dim(ker) x cols, already in RREF
};

Echelon echelon(const Matrix& m);

std::size_t rank(const Matrix& m);

// Determinant by exact Gaussian elimination (square matrices).
Scalar det(const Matrix& m);

// True iff every k x k minor vanishes, i.e. rank <= k-1. Minors are
// enumerated lexicographically on (row-set, column-set) and evaluated
// honestly; this is the cross-check route against echelon rank.
bool minors_vanish(const Matrix& m, std::size_t k);

// Signed cofactor of the (i,j) entry of a square matrix.
Scalar cofactor(const Matrix& m, std::size_t i, std::size_t j);

// Adjugate: adj(m) * m = det(m) * I.
Matrix adjugate(const Matrix& m);

// Solve a.x = b for square invertible a.
Matrix solve(const Matrix& a, const Matrix& b);

// dot(x, m * y) for row vectors x, y.
Scalar bilinear(const std::vector<Scalar>& x, const Matrix& m,
                const std::vector<Scalar>& y);

// Lexicographic k-subset enumeration of {0,...,m-1}; shared by the minor
// enumeration and the wedge-basis indexing.
const std::vector<std::vector<std::size_t>>& lex_subsets(std::size_t m,
                                                         std::size_t k);
std::size_t binomial(std::size_t m, std::size_t k);

}  // namespace symdet
