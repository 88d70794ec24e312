#pragma once

#include <optional>
#include <utility>

#include "symdet/scalar.hpp"

namespace symdet {

// Which determinantal locus a record describes: rank strata of quadrics in
// P(V) (S), their duals in the symmetric square of V (SDual), or the even
// double cover (T).
enum class Side { S, SDual, T };

struct StratumInvariants {
  std::size_t n, r;
  Side side;
  long dim;        // (r+1)r/2 - 1 + r(n+1-r)
  long codim;      // (n+1-r)(n+2-r)/2
  BigRat fano_index;           // r(n+1)/2
  std::pair<long, long> k_coeffs;   // canonical class: (binom(r+1,2), n-r)
  std::pair<long, long> er_coeffs;  // exceptional divisor: (r, 2)
  BigRat discrepancy;          // (n-r)/2
  int gorenstein_index;        // 1 when n-r even, else 2
  BigRat cy_codim;             // r(n+1)/2
  BigRat cy_dim;               // r(n+2-r)/2 - 1
  bool cy_smooth_s;            // r <= 2
  bool cy_smooth_t;            // r <= 4 (meaningful on the T side)
  std::optional<long> f_discrepancy;  // n-2; only the r = 4 double cover
};

// All closed-form invariants of the stratum. Range errors for r outside
// [1, n+1]; the T side requires even r.
StratumInvariants strata_invariants(std::size_t n, std::size_t r, Side side);

struct DualityRow {
  BigRat cy_dim_s;     // CY section dimension at rank r
  BigRat cy_dim_dual;  // same at rank n+2-r on the dual side
  bool equal;
};

DualityRow duality_row(std::size_t n, std::size_t r);

}  // namespace symdet
