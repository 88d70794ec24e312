#pragma once

#include <cstdint>
#include <string>

#include "symdet/grassconic.hpp"
#include "symdet/spin36.hpp"

namespace symdet {

// Deterministic per-trial random stream: the state is derived from
// (root seed, trial index) alone, so trials are self-contained and their
// results do not depend on execution order.
class TrialRng {
 public:
  TrialRng(std::uint64_t root_seed, std::uint64_t trial);
  std::uint64_t next();
  std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound)
  std::int64_t in_range(std::int64_t lo, std::int64_t hi);  // inclusive

 private:
  std::uint64_t state_;
};

Scalar random_scalar(const Field& f, TrialRng& rng);
Scalar random_nonzero_scalar(const Field& f, TrialRng& rng);
Matrix random_matrix(std::size_t rows, std::size_t cols, const Field& f,
                     TrialRng& rng);
Matrix random_invertible(std::size_t m, const Field& f, TrialRng& rng);
Subspace random_subspace(std::size_t ambient, std::size_t dim, const Field& f,
                         TrialRng& rng);
Subspace random_subspace_of(const Subspace& big, std::size_t dim,
                            TrialRng& rng);

// Congruence image of a rank-r normal core (hyperbolic blocks, plus one
// square for odd r); even-rank instances are split by construction.
Quadric random_rank_quadric(std::size_t n, std::size_t r, const Field& f,
                            TrialRng& rng);

enum class PlaneConstraint { Generic, Annihilated, Rho, Sigma, Tau };

// d is the annihilator dimension for PlaneConstraint::Annihilated and is
// ignored otherwise.
ThreePlaneU random_3plane(std::size_t n, PlaneConstraint c, std::size_t d,
                          const Field& f, TrialRng& rng);

// A valid non-diagonal F1 tuple with distinct n-spaces.
FlagTuple random_f1(std::size_t n, const Field& f, TrialRng& rng);

// Directed degenerate family: the span of a double line, pushed through a
// random change of basis.
ThreePlaneU random_double_line_plane(std::size_t n, const Field& f,
                                     TrialRng& rng);

// All k-dimensional subspaces of F_q^ambient, each exactly once (RREF
// enumeration). The field may be F_2 here.
std::vector<Subspace> enumerate_subspaces(std::size_t ambient, std::size_t k,
                                          const Field& f);

// Number of k-subspaces of an m-space over F_q.
std::uint64_t gaussian_count(std::uint64_t m, std::uint64_t k,
                             std::uint64_t q);

struct VerifyReport {
  std::string suite;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::string first_counterexample;  // empty iff failures == 0
  std::int64_t elapsed_ms = 0;
};

// dim a_U >= n-3  <=>  rank phi_U <= 1, over a mixture of generic,
// constrained, and directed degenerate families.
VerifyReport verify_prop_b(std::size_t n, const Field& f,
                           std::uint64_t trials, std::uint64_t seed);

// At rank-r points the Jacobian of the (r+1)-minors has rank equal to the
// stratum codimension; at rank-(r-1) points it drops.
VerifyReport verify_jacobian(std::size_t n, std::size_t r, const Field& f,
                             std::uint64_t trials, std::uint64_t seed);

// Chart identities on genuine Grassmannian points.
VerifyReport verify_plucker36(const Field& f, std::uint64_t trials,
                              std::uint64_t seed);
// Negative control: generic 20-vectors violate some generator.
VerifyReport verify_plucker36_negative(const Field& f, std::uint64_t trials,
                                       std::uint64_t seed);

// Rulings of split rank-4 quadrics: isotropy, two components, quadric
// recovery, and (n = 3) the chart correspondence with sheet signs.
VerifyReport verify_rulings(std::size_t n, const Field& f,
                            std::uint64_t trials, std::uint64_t seed);

// flags -> conic -> flags is the identity up to the pair swap, and
// conic -> flags -> conic the identity on canonical representatives.
VerifyReport verify_flags_roundtrip(std::size_t n, const Field& f,
                                    std::uint64_t trials, std::uint64_t seed);

// Over F_3, n = 4: rank-3 quadrics admit exactly q+1 = 4 valid kernel
// lines for the rank-4 lift.
VerifyReport verify_springer_count(std::uint64_t trials, std::uint64_t seed);

// Exhaustive reducible-conic counts over F_2 and F_3, n in {3,4}: for fixed
// distinct n-spaces the valid tuples number ((q^{n-1}-1)/(q-1))^2.
VerifyReport verify_fiber_count();

// Constructed sigma-planes map to (0, rank-1 w) with ker w the enveloping
// n-space; rho-planes map to (rank-1 v, 0).
VerifyReport verify_rho_sigma_images(std::uint64_t count, std::uint64_t seed);

std::string render_report(const VerifyReport& r);

}  // namespace symdet
