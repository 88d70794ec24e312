#pragma once

#include <vector>

#include "symdet/subspace.hpp"

namespace symdet {

// Element of an exterior power of an m-dimensional space, expanded over the
// lexicographically ordered basis of k-subsets of {0,...,m-1}. Vectors of
// the dual exterior algebra use the same coordinates; which side a vector
// lives on is tracked by the caller.
class WedgeVector {
 public:
  WedgeVector(std::size_t degree, std::size_t ambient, const Field& f);
  WedgeVector(std::size_t degree, std::size_t ambient,
              std::vector<Scalar> coords);

  static WedgeVector basis_element(std::size_t degree, std::size_t ambient,
                                   const std::vector<std::size_t>& subset,
                                   const Field& f);
  // Degree-1 vector from plain coordinates.
  static WedgeVector from_vector(const std::vector<Scalar>& v);

  std::size_t degree() const { return degree_; }
  std::size_t ambient() const { return ambient_; }
  const Field& field() const { return field_; }
  const std::vector<Scalar>& coords() const { return coords_; }
  const Scalar& coord(std::size_t lex_rank) const { return coords_[lex_rank]; }
  bool is_zero() const;

  WedgeVector operator+(const WedgeVector& o) const;
  WedgeVector operator-(const WedgeVector& o) const;
  WedgeVector scaled(const Scalar& c) const;
  bool operator==(const WedgeVector& o) const;
  bool operator!=(const WedgeVector& o) const { return !(*this == o); }

 private:
  std::size_t degree_, ambient_;
  Field field_;
  std::vector<Scalar> coords_;
};

// Rank of a sorted subset in the lex enumeration of k-subsets.
std::size_t subset_rank(std::size_t m, const std::vector<std::size_t>& subset);

// Sign of merging two disjoint sorted subsets (number of transpositions to
// sort the concatenation), and the merged subset.
int merge_sign(const std::vector<std::size_t>& a,
               const std::vector<std::size_t>& b);

// Graded-commutative wedge product.
WedgeVector wedge(const WedgeVector& a, const WedgeVector& b);

// The duality of degree (m-2) vectors with 2-forms: on basis elements,
// e_S -> sign(S, S-complement) e*_{S-complement}. Degree must be ambient-2.
WedgeVector dual_two_form(const WedgeVector& omega);
// Inverse of the above (input degree 2, output degree ambient-2).
WedgeVector dual_two_form_inverse(const WedgeVector& beta);

// Induced action of g on the k-th exterior power.
WedgeVector push_forward(const Matrix& g, const WedgeVector& omega);

// {v : v ^ omega = 0}; the support of omega when it is decomposable of
// degree k (then the result has dimension k).
Subspace wedge_annihilator(const WedgeVector& omega);

}  // namespace symdet
