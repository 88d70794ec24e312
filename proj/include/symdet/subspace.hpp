#pragma once

#include <string>
#include <vector>

#include "symdet/matrix.hpp"

namespace symdet {

// Linear subspace of F^m in canonical form: the basis matrix is in reduced
// row echelon form with strictly increasing pivots, so equal subspaces have
// bitwise-identical basis data.
class Subspace {
 public:
  // Zero subspace.
  Subspace(std::size_t ambient_dim, const Field& f);
  // Canonicalizes the row span of `span_rows`.
  static Subspace span(const Matrix& span_rows);
  static Subspace span_of(const std::vector<std::vector<Scalar>>& rows,
                          std::size_t ambient_dim, const Field& f);
  static Subspace full(std::size_t ambient_dim, const Field& f);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Field& field() const { return basis_.field(); }
  const Matrix& basis() const { return basis_; }
  std::vector<Scalar> basis_row(std::size_t i) const { return basis_.row(i); }

  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  bool contains(const std::vector<Scalar>& v) const;
  bool contains(const Subspace& o) const;  // o subset of this

  std::string str() const { return basis_.str(); }

  // Deterministic encoding used for lexicographic tie-breaking.
  std::string canonical_key() const;

 private:
  explicit Subspace(Matrix basis, std::size_t ambient);
  std::size_t ambient_;
  Matrix basis_;
};

struct Reduction {
  Matrix rref;
  std::size_t rank;
  std::vector<std::size_t> pivots;
  Subspace kernel;
};

// Reduced row echelon form with canonical null space.
Reduction reduce(const Matrix& m);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

// Complement of L (living in the packed coordinates of symmetric matrices
// on an (n+1)-dimensional space) under the trace pairing
// <A,B> = sum_i A_ii B_ii + 2 sum_{i<j} A_ij B_ij.
Subspace apolar_complement(const Subspace& l, std::size_t n);

// Packed coordinates of symmetric matrices: entry (i,j), i <= j, at the
// lex rank of the pair. Dimension (n+1)(n+2)/2.
std::size_t sym_pack_dim(std::size_t n);
std::vector<Scalar> sym_pack(const Matrix& symmetric);
Matrix sym_unpack(const std::vector<Scalar>& packed, std::size_t n,
                  const Field& f);

// First-nonzero-to-one projective normalization; the canonical
// representative of a point of projective space.
std::vector<Scalar> projective_normalize(const std::vector<Scalar>& v);

}  // namespace symdet
