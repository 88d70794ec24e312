#pragma once

#include <array>

#include "symdet/threeplane.hpp"

namespace symdet {
namespace spin36 {

// Basis order of the index pairs of wedge^2 C^4 used by the chart:
//   1={1,2}, 2={1,3}, 3={2,3}, 4={1,4}, 5={2,4}, 6={3,4}  (1-based).
// The symmetric-matrix tables are only valid in this order; it differs
// from the plain lexicographic pair order, which would place {1,4} third.
extern const std::array<std::pair<int, int>, 6> kPairOrder;

// 20 coordinates indexed by lexicographic triples of the six pair symbols.
using Coords20 = std::array<Scalar, 20>;

std::size_t triple_rank(int a, int b, int c);  // 1-based symbols, a<b<c

// The symmetric-matrix pair (v, w) of a 20-vector, via the tabulated
// integer-coefficient linear forms (valid over every supported field).
std::pair<Matrix, Matrix> split(const Coords20& p, const Field& f);

// Pluecker vector of a 3-plane in the 6-dimensional pair space (given in
// kPairOrder coordinates), canonically scaled.
Coords20 plucker20(const Subspace& u3);

// The 45 generators: 36 paired 2x2 minors and the 9 independent entries of
// the product conditions. All vanish exactly on points of the chart.
std::vector<Scalar> g36_residuals(const Matrix& v, const Matrix& w);

bool on_g36(const Matrix& v, const Matrix& w);

struct IdentityReport {
  Scalar d;          // the common diagonal of v.w
  Scalar det_v, det_w;
  std::size_t rank_v, rank_w;
  bool dets_equal;       // det v = det w
  bool product_scalar;   // v.w = d id with d^2 = det w
  bool no_rank3;         // rank v != 3 and rank w != 3
  bool rank2_paired;     // rank v = 2  <=>  rank w = 2
  bool rank_le1_paired;  // rank v <= 1 <=> rank w <= 1
  bool all_ok() const {
    return dets_equal && product_scalar && no_rank3 && rank2_paired &&
           rank_le1_paired;
  }
};

// Throws NotOnG36 when the residuals do not vanish.
IdentityReport check_identities(const Matrix& v, const Matrix& w);

// +1 / -1 relative to the chosen square root of det w; 0 on the branch
// locus (det w = 0). The two preimages of a nondegenerate w carry opposite
// signs.
int sheet_sign(const Matrix& v, const Matrix& w, const Scalar& sqrt_det);

enum class FiberType {
  TwoPoints,     // rank w = 4
  OnePoint,      // rank w = 3 (no chart point; the blow-up point is recorded)
  SegreQuadric,  // rank w = 2: a smooth quadric surface of chart points
  VeroneseCone,  // rank w = 1: cone over a Veronese conic, vertex off-chart
};

struct FiberProbe {
  FiberType type;
  bool member;             // residual test of the candidate pair
  bool structured_member;  // the per-rank defining condition
  bool normal_form_available = true;
  // rank 4 with square determinant: the two chart solutions.
  std::vector<Matrix> points;
  // rank 3: vertex direction x of the limiting pair (x x^T, 0);
  // rank 1: the row covector a with w proportional to a a^T.
  std::vector<Scalar> axis;
};

FiberProbe fiber_probe(const Matrix& w, const Matrix& v_candidate);

// Coordinates of a 3-plane in wedge^2 of a 4-space, rewritten from the
// lexicographic pair basis into kPairOrder.
Subspace to_spin_plane(const ThreePlaneU& u);  // n = 3 only

// Relative reduction for n >= 4: rewrites U with V_{n-3} inside its
// annihilator as a 3-plane of wedge^2 of the quotient by V_{n-3}, in
// kPairOrder coordinates of the canonical complement basis.
Subspace relative_spin_plane(const ThreePlaneU& u, const Subspace& vn3);

}  // namespace spin36
}  // namespace symdet
