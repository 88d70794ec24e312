#include "symdet/threeplane.hpp"

namespace symdet {

ThreePlaneU::ThreePlaneU(std::size_t n, const Subspace& span)
    : n_(n), space_(span) {
  if (n < 3) throw InputError("ThreePlaneU needs n >= 3");
  if (span.ambient_dim() != binomial(n + 1, n - 1))
    throw DimensionMismatch("ThreePlaneU ambient");
  if (span.dim() != 3) throw WrongDimension("ThreePlaneU must have dimension 3");
}

ThreePlaneU ThreePlaneU::from_rows(std::size_t n,
                                   const std::vector<WedgeVector>& rows) {
  if (rows.empty()) throw WrongDimension("empty span");
  std::vector<std::vector<Scalar>> data;
  for (const auto& r : rows) {
    if (r.degree() != n - 1 || r.ambient() != n + 1)
      throw DimensionMismatch("ThreePlaneU row degree");
    data.push_back(r.coords());
  }
  return ThreePlaneU(
      n, Subspace::span_of(data, binomial(n + 1, n - 1), rows[0].field()));
}

WedgeVector ThreePlaneU::basis_vector(std::size_t i) const {
  return WedgeVector(n_ - 1, n_ + 1, space_.basis_row(i));
}

Subspace annihilator(const ThreePlaneU& u) {
  std::size_t m = u.ambient();
  const Field& f = u.field();
  // Unknown v = sum v_i e_i; equations: every coordinate of v ^ u_b is zero.
  std::size_t ncoords = binomial(m, u.wedge_degree() + 1);
  Matrix sys(3 * ncoords, m, f);
  for (std::size_t b = 0; b < 3; ++b) {
    WedgeVector ub = u.basis_vector(b);
    for (std::size_t i = 0; i < m; ++i) {
      WedgeVector ei = WedgeVector::basis_element(1, m, {i}, f);
      WedgeVector prod = wedge(ei, ub);
      for (std::size_t t = 0; t < ncoords; ++t)
        sys.set(b * ncoords + t, i, prod.coord(t));
    }
  }
  return reduce(sys).kernel;
}

Matrix phi_matrix(const ThreePlaneU& u) {
  std::size_t m = u.ambient();
  const Field& f = u.field();
  WedgeVector d0 = dual_two_form(u.basis_vector(0));
  WedgeVector d1 = dual_two_form(u.basis_vector(1));
  WedgeVector d2 = dual_two_form(u.basis_vector(2));
  const WedgeVector* d[3] = {&d0, &d1, &d2};
  static const std::size_t order[6][2] = {{0, 0}, {0, 1}, {0, 2},
                                          {1, 1}, {1, 2}, {2, 2}};
  Matrix rows(6, binomial(m, 4), f);
  for (std::size_t r = 0; r < 6; ++r) {
    WedgeVector prod = wedge(*d[order[r][0]], *d[order[r][1]]);
    for (std::size_t c = 0; c < rows.cols(); ++c) rows.set(r, c, prod.coord(c));
  }
  return rows;
}

PhiAnalysis phi_analysis(const ThreePlaneU& u) {
  Matrix rows = phi_matrix(u);
  Reduction red = reduce(rows);
  PhiAnalysis out{red.rank, std::nullopt, std::nullopt};
  if (red.rank != 1) return out;

  // Canonical image generator: the normalized nonzero row of the RREF.
  std::vector<Scalar> gen = red.rref.row(0);
  std::size_t k0 = 0;
  while (gen[k0].is_zero()) ++k0;
  // RREF already scales the pivot to one.
  out.image_gen = WedgeVector(4, u.ambient(), gen);

  static const std::size_t order[6][2] = {{0, 0}, {0, 1}, {0, 2},
                                          {1, 1}, {1, 2}, {2, 2}};
  Matrix c(3, 3, u.field());
  for (std::size_t r = 0; r < 6; ++r) {
    Scalar v = rows.at(r, k0);
    c.set(order[r][0], order[r][1], v);
    c.set(order[r][1], order[r][0], v);
  }
  out.c = std::move(c);
  return out;
}

std::optional<Subspace> common_factor_kernel(const ThreePlaneU& u) {
  std::size_t m = u.ambient();
  const Field& f = u.field();
  // Solve for a 1-form g with (dual u_b) ^ g = 0 for all three basis rows.
  std::size_t ncoords = binomial(m, 3);
  Matrix sys(3 * ncoords, m, f);
  for (std::size_t b = 0; b < 3; ++b) {
    WedgeVector db = dual_two_form(u.basis_vector(b));
    for (std::size_t i = 0; i < m; ++i) {
      WedgeVector gi = WedgeVector::basis_element(1, m, {i}, f);
      WedgeVector prod = wedge(db, gi);
      for (std::size_t t = 0; t < ncoords; ++t)
        sys.set(b * ncoords + t, i, prod.coord(t));
    }
  }
  Subspace factors = reduce(sys).kernel;
  if (factors.dim() != 1) return std::nullopt;
  // V_n = kernel of the functional f.
  Matrix functional(1, m, f);
  for (std::size_t j = 0; j < m; ++j)
    functional.set(0, j, factors.basis().at(0, j));
  return reduce(functional).kernel;
}

}  // namespace symdet
