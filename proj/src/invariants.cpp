#include "symdet/invariants.hpp"

#include "symdet/errors.hpp"

namespace symdet {

StratumInvariants strata_invariants(std::size_t n, std::size_t r, Side side) {
  if (n < 1 || r < 1 || r > n + 1)
    throw InputError("rank out of range: need 1 <= r <= n+1");
  if (side == Side::T && r % 2 != 0)
    throw InputError("the double cover exists only for even rank");

  long ln = static_cast<long>(n), lr = static_cast<long>(r);
  StratumInvariants out;
  out.n = n;
  out.r = r;
  out.side = side;
  out.dim = lr * (lr + 1) / 2 - 1 + lr * (ln + 1 - lr);
  out.codim = (ln + 1 - lr) * (ln + 2 - lr) / 2;
  out.fano_index = BigRat(lr * (ln + 1), 2);
  out.k_coeffs = {lr * (lr + 1) / 2, ln - lr};
  out.er_coeffs = {lr, 2};
  out.discrepancy = BigRat(ln - lr, 2);
  out.gorenstein_index = ((ln - lr) % 2 == 0) ? 1 : 2;
  out.cy_codim = out.fano_index;
  out.cy_dim = BigRat(lr * (ln + 2 - lr), 2) - 1;
  out.cy_smooth_s = (r <= 2);
  out.cy_smooth_t = (r <= 4);
  if (side == Side::T && r == 4) out.f_discrepancy = ln - 2;
  return out;
}

DualityRow duality_row(std::size_t n, std::size_t r) {
  if (r < 2 || r > n) throw InputError("duality row needs 2 <= r <= n");
  StratumInvariants a = strata_invariants(n, r, Side::S);
  StratumInvariants b = strata_invariants(n, n + 2 - r, Side::SDual);
  return DualityRow{a.cy_dim, b.cy_dim, a.cy_dim == b.cy_dim};
}

}  // namespace symdet
