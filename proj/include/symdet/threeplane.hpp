#pragma once

#include <optional>

#include "symdet/wedge.hpp"

namespace symdet {

// A 3-dimensional subspace of the (n-1)-st exterior power of an
// (n+1)-dimensional space; the span of a candidate conic in the
// Grassmannian of (n-1)-subspaces.
class ThreePlaneU {
 public:
  ThreePlaneU(std::size_t n, const Subspace& span);
  static ThreePlaneU from_rows(std::size_t n,
                               const std::vector<WedgeVector>& rows);

  std::size_t n() const { return n_; }
  std::size_t wedge_degree() const { return n_ - 1; }
  std::size_t ambient() const { return n_ + 1; }
  const Subspace& space() const { return space_; }
  const Field& field() const { return space_.field(); }

  // Canonical basis rows as wedge vectors.
  WedgeVector basis_vector(std::size_t i) const;

  bool operator==(const ThreePlaneU& o) const {
    return n_ == o.n_ && space_ == o.space_;
  }

 private:
  std::size_t n_;
  Subspace space_;  // ambient C(n+1, n-1), dim 3
};

// a_U: all v in V whose wedge with every element of U vanishes.
Subspace annihilator(const ThreePlaneU& u);

// Restriction of the composite S^2(wedge^{n-1} V) ~ S^2(wedge^2 V*)
// -> wedge^4 V* to S^2 U, evaluated on the canonical basis of U.
struct PhiAnalysis {
  std::size_t rank_phi;
  // Present iff rank_phi == 1: the canonical generator of the image
  // (first nonzero coordinate scaled to 1) and the symmetric 3x3
  // coefficient matrix in the canonical basis of U. The conic cut out of
  // the Grassmannian by P(U) is the zero locus of c.
  std::optional<WedgeVector> image_gen;
  std::optional<Matrix> c;
};

PhiAnalysis phi_analysis(const ThreePlaneU& u);

// The full 6 x C(n+1,4) matrix of the map on the S^2 U basis, row order
// (11,12,13,22,23,33).
Matrix phi_matrix(const ThreePlaneU& u);

// For a plane whose dual 2-forms share a common linear factor f (the
// sigma-plane case), returns the n-dimensional kernel of f. Empty when no
// unique common factor exists.
std::optional<Subspace> common_factor_kernel(const ThreePlaneU& u);

}  // namespace symdet
