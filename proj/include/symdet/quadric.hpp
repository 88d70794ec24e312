#pragma once

#include <optional>
#include <utility>
#include <variant>

#include "symdet/threeplane.hpp"

namespace symdet {

// A quadric in P(V), dim V = n+1: a nonzero symmetric matrix up to scalar,
// stored as the canonical representative (first nonzero packed entry
// scaled to one). Characteristic 2 is rejected.
class Quadric {
 public:
  Quadric(std::size_t n, const Matrix& b);

  std::size_t n() const { return n_; }
  const Matrix& b() const { return b_; }
  const Field& field() const { return b_.field(); }

  Scalar eval(const std::vector<Scalar>& x) const;  // x^T B x
  Scalar pair(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;

  bool operator==(const Quadric& o) const {
    return n_ == o.n_ && b_ == o.b_;
  }
  bool operator!=(const Quadric& o) const { return !(*this == o); }

 private:
  std::size_t n_;
  Matrix b_;
};

struct QuadricClass {
  std::size_t rank;
  Subspace vertex;     // kernel of B; Sing Q = P(vertex)
  std::size_t stratum; // least r with [Q] in S_r, i.e. the rank
  std::size_t codim;   // (n+1-r)(n+2-r)/2
};

QuadricClass classify_quadric(const Quadric& q);

// Point of the Springer-type resolution: a kernel subspace of dimension
// n+1-r together with the induced form on the canonical complement basis.
struct SpringerLift {
  Subspace kernel_space;
  Quadric reduced_form;  // on an r-dimensional space
  bool unique;           // false when rank(Q) < r
};

// Lift of a quadric of rank <= r. When rank(Q) = r the lift is unique;
// when rank(Q) < r the distinguished lift spans the first n+1-r canonical
// kernel basis rows and `unique` is false. rank(Q) > r is an error.
SpringerLift springer_lift(const Quadric& q, std::size_t r);

// Reconstructs the quadric a lift came from (exactly, before projective
// normalization).
Quadric springer_push(const SpringerLift& lift, std::size_t n);

// Projection along the kernel onto the canonical complement coordinates
// (the standard basis vectors at non-pivot columns of the kernel).
Matrix projection_matrix(const Subspace& kernel);
std::vector<std::size_t> complement_cols(const Subspace& kernel);

// One connected family of maximal linear subspaces on a rank-4 quadric:
// the plane at parameter (s:t) is spanned by the two moving rows
// s*a_i + t*b_i together with the fixed vertex rows.
struct PlaneFamily {
  Matrix moving_a;  // 2 x (n+1)
  Matrix moving_b;  // 2 x (n+1)
  Matrix fixed;     // (n-3) x (n+1)
  ThreePlaneU span_u;
  Matrix conic;     // 3x3 c_U of the spanned plane, canonical

  Subspace plane_at(const Scalar& s, const Scalar& t) const;
  std::size_t n() const { return moving_a.cols() - 1; }
};

// The two rulings of a split rank-4 quadric. Throws NonSplitQuadric when
// the two sheets are conjugate over the base field (discriminant a
// non-square, or no isotropic vector found), WrongRank otherwise.
std::pair<PlaneFamily, PlaneFamily> rulings_rank4(const Quadric& q);

// True iff the two maximal isotropic (n-1)-subspaces lie on the same
// connected component: their reductions modulo the vertex intersect in
// even dimension.
bool same_ruling(const Quadric& q, const Subspace& p, const Subspace& p2);

struct RankTwoPlanes {
  Subspace plane1, plane2, meet;
};
struct RankOnePlane {
  Subspace plane;  // with multiplicity two
};
using LowRankFamilies = std::variant<RankTwoPlanes, RankOnePlane>;

LowRankFamilies low_rank_families(const Quadric& q);

// The unique quadric whose isotropic planes include every plane of the
// family; solved linearly from sampled parameter values.
Quadric quadric_from_family(const PlaneFamily& f);

// Decomposition of a symmetric matrix of rank <= 2 as v w^T + w v^T, up to
// scalar: the unordered pair {[v],[w]} (equal points for rank one).
std::pair<std::vector<Scalar>, std::vector<Scalar>> rank2_decompose(
    const Matrix& b);

// Splits a binary quadratic form given by a symmetric 2x2 Gram matrix into
// two independent linear forms (coefficient pairs), or throws NonSplitForm.
std::pair<std::array<Scalar, 2>, std::array<Scalar, 2>> split_binary_form(
    const Matrix& gram);

// Jacobian of all k x k minors of a symmetric matrix with respect to its
// packed upper-triangle entries. Rows enumerate (row-set, column-set)
// lexicographically; the chain rule counts both occurrences of an
// off-diagonal variable.
Matrix minor_jacobian(const Matrix& b, std::size_t k);

}  // namespace symdet
