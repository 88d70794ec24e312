#include "symdet/quadric.hpp"

#include <array>
#include <map>

namespace symdet {

namespace {

Matrix canonical_rep(const Matrix& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = i; j < b.cols(); ++j)
      if (!b.at(i, j).is_zero()) return b.scaled(b.at(i, j).inverse());
  throw InputError("quadric matrix must be nonzero");
}

std::vector<Scalar> axpy(const Scalar& a, const std::vector<Scalar>& x,
                         const std::vector<Scalar>& y) {
  std::vector<Scalar> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] + y[i];
  return out;
}

}  // namespace

Quadric::Quadric(std::size_t n, const Matrix& b) : n_(n), b_(canonical_rep(b)) {
  if (b.rows() != n + 1 || b.cols() != n + 1)
    throw DimensionMismatch("quadric matrix must be (n+1) x (n+1)");
  if (!b.is_symmetric()) throw InputError("quadric matrix must be symmetric");
  if (!b.field().is_rational() && b.field().modulus() == 2)
    throw InputError("quadrics are not supported over F_2");
}

Scalar Quadric::eval(const std::vector<Scalar>& x) const {
  return bilinear(x, b_, x);
}

Scalar Quadric::pair(const std::vector<Scalar>& x,
                     const std::vector<Scalar>& y) const {
  return bilinear(x, b_, y);
}

QuadricClass classify_quadric(const Quadric& q) {
  Reduction red = reduce(q.b());
  std::size_t r = red.rank;
  std::size_t d = q.n() + 1 - r;
  return QuadricClass{r, red.kernel, r, d * (d + 1) / 2};
}

std::vector<std::size_t> complement_cols(const Subspace& kernel) {
  std::vector<bool> is_pivot(kernel.ambient_dim(), false);
  for (std::size_t i = 0; i < kernel.dim(); ++i) {
    std::size_t p = 0;
    while (kernel.basis().at(i, p).is_zero()) ++p;
    is_pivot[p] = true;
  }
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < kernel.ambient_dim(); ++j)
    if (!is_pivot[j]) cols.push_back(j);
  return cols;
}

Matrix projection_matrix(const Subspace& kernel) {
  std::size_t m = kernel.ambient_dim();
  const Field& f = kernel.field();
  auto comp = complement_cols(kernel);
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < kernel.dim(); ++i) {
    std::size_t p = 0;
    while (kernel.basis().at(i, p).is_zero()) ++p;
    pivots.push_back(p);
  }
  // v  ->  v - sum_i v_{p_i} kappa_i, read off at complement columns.
  Matrix proj(comp.size(), m, f);
  for (std::size_t a = 0; a < comp.size(); ++a) {
    proj.set(a, comp[a], Scalar::one(f));
    for (std::size_t i = 0; i < pivots.size(); ++i)
      proj.set(a, pivots[i],
               proj.at(a, pivots[i]) - kernel.basis().at(i, comp[a]));
  }
  return proj;
}

SpringerLift springer_lift(const Quadric& q, std::size_t r) {
  if (r < 1 || r > q.n() + 1) throw InputError("lift rank out of range");
  QuadricClass cls = classify_quadric(q);
  if (cls.rank > r)
    throw WrongRank("quadric rank " + std::to_string(cls.rank) +
                    " exceeds requested stratum " + std::to_string(r));
  std::size_t kdim = q.n() + 1 - r;
  // the fiber of the resolution is the set of kdim-subspaces of the
  // kernel; it is a single point exactly when kdim is 0 or everything
  bool unique = (cls.rank == r) || kdim == 0;
  Subspace ker = cls.vertex;
  if (cls.rank != r) {
    // Distinguished representative: the span of the first kdim canonical
    // kernel basis rows (lex-least pivot tuple).
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t i = 0; i < kdim; ++i) rows.push_back(ker.basis_row(i));
    ker = Subspace::span_of(rows, ker.ambient_dim(), ker.field());
  }
  auto comp = complement_cols(ker);
  Matrix reduced(r, r, q.field());
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      reduced.set(a, b, q.b().at(comp[a], comp[b]));
  return SpringerLift{std::move(ker), Quadric(r - 1, reduced), unique};
}

Quadric springer_push(const SpringerLift& lift, std::size_t n) {
  Matrix proj = projection_matrix(lift.kernel_space);
  Matrix b = proj.transpose() * lift.reduced_form.b() * proj;
  return Quadric(n, b);
}

namespace {

// Congruence diagonalization: returns basis vectors (rows, in V
// coordinates) whose Gram matrix under `pair` is diagonal and
// nondegenerate. `basis` must span a subspace on which the form is
// nondegenerate.
std::vector<std::vector<Scalar>> diagonalize_on(
    const Quadric& q, std::vector<std::vector<Scalar>> basis) {
  const Field& f = q.field();
  Scalar half = Scalar::from_int(2, f).inverse();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (q.eval(basis[i]).is_zero()) {
      // find a partner making the diagonal entry nonzero
      bool fixed = false;
      for (std::size_t j = i + 1; j < basis.size() && !fixed; ++j) {
        if (!q.eval(basis[j]).is_zero()) {
          std::swap(basis[i], basis[j]);
          fixed = true;
        } else if (!q.pair(basis[i], basis[j]).is_zero()) {
          basis[i] = axpy(Scalar::one(f), basis[j], basis[i]);
          fixed = true;
        }
      }
      if (!fixed) throw InputError("degenerate form in diagonalization");
    }
    Scalar qi = q.eval(basis[i]);
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      Scalar c = q.pair(basis[i], basis[j]) / qi;
      basis[j] = axpy(-c, basis[i], basis[j]);
    }
    (void)half;
  }
  return basis;
}

// Deterministic search for an isotropic vector of the form restricted to
// the span of an orthogonal basis (vertex components are harmless: they
// move a vector within its plane). Over F_p this always succeeds for rank
// >= 3 (square-table scan); over Q the search is a small-height box scan
// followed by a bounded meet-in-the-middle on the diagonal coordinates,
// and fails loudly.
std::optional<std::vector<Scalar>> find_isotropic(
    const Quadric& q, const std::vector<std::vector<Scalar>>& diag_basis) {
  const Field& f = q.field();
  std::size_t r = diag_basis.size();
  std::vector<Scalar> d(r);
  for (std::size_t i = 0; i < r; ++i) d[i] = q.eval(diag_basis[i]);

  if (f.is_rational()) {
    // standard-coordinate box scan; accepts isotropic vectors outside the
    // radical
    std::size_t m = q.n() + 1;
    const std::int64_t kBox = 2;
    std::vector<std::int64_t> c(m, -kBox);
    for (;;) {
      std::vector<Scalar> v(m);
      bool zero = true;
      for (std::size_t i = 0; i < m; ++i) {
        v[i] = Scalar::from_int(c[i], f);
        zero = zero && c[i] == 0;
      }
      if (!zero && q.eval(v).is_zero()) {
        bool in_radical = true;
        for (std::size_t j = 0; j < m && in_radical; ++j) {
          Scalar acc = Scalar::zero(f);
          for (std::size_t i = 0; i < m; ++i) acc += q.b().at(j, i) * v[i];
          in_radical = acc.is_zero();
        }
        if (!in_radical) return v;
      }
      std::size_t t = 0;
      while (t < m && ++c[t] > kBox) c[t++] = -kBox;
      if (t == m) break;
    }
  }

  // pairwise hyperbolic pairs: -d_j/d_i a square
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      auto s = (-(d[j] / d[i])).sqrt();
      if (s) return axpy(*s, diag_basis[i], diag_basis[j]);
    }
  if (r < 3) return std::nullopt;

  if (!f.is_rational()) {
    // d0 x^2 + d1 y^2 + d2 = 0 has a solution over F_p.
    std::int64_t p = f.modulus();
    for (std::int64_t x = 0; x < p; ++x) {
      Scalar xs = Scalar::from_int(x, f);
      Scalar rhs = -(d[0] * xs * xs + d[2]) / d[1];
      auto y = rhs.sqrt();
      if (y) {
        auto v = axpy(xs, diag_basis[0], diag_basis[2]);
        return axpy(*y, diag_basis[1], v);
      }
    }
    return std::nullopt;
  }

  // Rational case: meet-in-the-middle over small integer coordinates.
  const std::int64_t kHeight = 128;
  std::map<BigRat, std::pair<std::int64_t, std::int64_t>> lhs;
  for (std::int64_t x0 = 0; x0 <= kHeight; ++x0)
    for (std::int64_t x1 = -kHeight; x1 <= kHeight; ++x1) {
      BigRat val = -(d[0].rat() * x0 * x0 + d[1].rat() * x1 * x1);
      lhs.emplace(val, std::make_pair(x0, x1));
    }
  std::size_t last = std::min<std::size_t>(r - 1, 3);
  for (std::int64_t x2 = 0; x2 <= kHeight; ++x2)
    for (std::int64_t x3 = (r > 3 ? -kHeight : 0);
         x3 <= (r > 3 ? kHeight : 0); ++x3) {
      BigRat val = d[2].rat() * x2 * x2;
      if (r > 3) val += d[last].rat() * x3 * x3;
      auto it = lhs.find(val);
      if (it == lhs.end()) continue;
      auto [x0, x1] = it->second;
      if (x0 == 0 && x1 == 0 && x2 == 0 && x3 == 0) continue;
      std::vector<Scalar> v(q.n() + 1, Scalar::zero(f));
      v = axpy(Scalar::from_int(x0, f), diag_basis[0], v);
      v = axpy(Scalar::from_int(x1, f), diag_basis[1], v);
      v = axpy(Scalar::from_int(x2, f), diag_basis[2], v);
      if (r > 3) v = axpy(Scalar::from_int(x3, f), diag_basis[last], v);
      bool zero = true;
      for (const auto& c : v) zero = zero && c.is_zero();
      if (!zero && q.eval(v).is_zero()) return v;
    }
  return std::nullopt;
}

// Completes an isotropic vector to a hyperbolic pair inside the span of
// `ambient_basis`: returns w with q(w)=0 and pair(v,w)=1.
std::vector<Scalar> hyperbolic_partner(
    const Quadric& q, const std::vector<Scalar>& v,
    const std::vector<std::vector<Scalar>>& ambient_basis) {
  const Field& f = q.field();
  for (const auto& u : ambient_basis) {
    Scalar b = q.pair(v, u);
    if (b.is_zero()) continue;
    std::vector<Scalar> u1(u.size());
    Scalar inv = b.inverse();
    for (std::size_t i = 0; i < u.size(); ++i) u1[i] = u[i] * inv;
    Scalar c = q.eval(u1) * Scalar::from_int(2, f).inverse();
    return axpy(-c, v, u1);
  }
  throw InputError("isotropic vector lies in the radical");
}

}  // namespace

Subspace PlaneFamily::plane_at(const Scalar& s, const Scalar& t) const {
  std::size_t m = moving_a.cols();
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t i = 0; i < 2; ++i) {
    std::vector<Scalar> r(m);
    for (std::size_t j = 0; j < m; ++j)
      r[j] = s * moving_a.at(i, j) + t * moving_b.at(i, j);
    rows.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < fixed.rows(); ++i) rows.push_back(fixed.row(i));
  return Subspace::span_of(rows, m, moving_a.field());
}

namespace {

PlaneFamily make_family(const Quadric& q, const std::vector<Scalar>& a1,
                        const std::vector<Scalar>& b1,
                        const std::vector<Scalar>& a2,
                        const std::vector<Scalar>& b2, const Matrix& fixed) {
  std::size_t n = q.n();
  std::size_t m = n + 1;
  const Field& f = q.field();
  Matrix ma = Matrix::from_rows({a1, a2}, f);
  Matrix mb = Matrix::from_rows({b1, b2}, f);

  // span of the family in the (n-1)-st exterior power:
  //   u1 = a1^a2^F, u2 = a1^b2^F + b1^a2^F, u3 = b1^b2^F
  WedgeVector fixed_wedge =
      WedgeVector::basis_element(0, m, {}, f);  // scalar 1
  for (std::size_t i = 0; i < fixed.rows(); ++i)
    fixed_wedge = wedge(fixed_wedge, WedgeVector::from_vector(fixed.row(i)));
  auto wv = [&](const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    return wedge(wedge(WedgeVector::from_vector(x), WedgeVector::from_vector(y)),
                 fixed_wedge);
  };
  WedgeVector u1 = wv(a1, a2);
  WedgeVector u2 = wv(a1, b2) + wv(b1, a2);
  WedgeVector u3 = wv(b1, b2);
  ThreePlaneU span = ThreePlaneU::from_rows(n, {u1, u2, u3});
  PhiAnalysis phi = phi_analysis(span);
  if (phi.rank_phi != 1 || !phi.c)
    throw InputError("ruling span failed the conic test");
  return PlaneFamily{std::move(ma), std::move(mb), fixed, std::move(span),
                     *phi.c};
}

}  // namespace

std::pair<PlaneFamily, PlaneFamily> rulings_rank4(const Quadric& q) {
  QuadricClass cls = classify_quadric(q);
  if (cls.rank != 4)
    throw WrongRank("rulings need rank 4, got " + std::to_string(cls.rank));
  const Field& f = q.field();
  std::size_t m = q.n() + 1;

  // canonical complement of the vertex
  auto comp = complement_cols(cls.vertex);
  std::vector<std::vector<Scalar>> wbasis;
  for (auto c : comp) {
    std::vector<Scalar> e(m, Scalar::zero(f));
    e[c] = Scalar::one(f);
    wbasis.push_back(std::move(e));
  }

  // discriminant must be a square for the two sheets to be rational
  Matrix gram(4, 4, f);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      gram.set(i, j, q.pair(wbasis[i], wbasis[j]));
  if (!det(gram).is_square())
    throw NonSplitQuadric("discriminant is not a square in " + f.name());

  auto diag = diagonalize_on(q, wbasis);
  auto v1 = find_isotropic(q, diag);
  if (!v1)
    throw NonSplitQuadric("no rational isotropic vector found in " + f.name());
  std::vector<Scalar> w1 = hyperbolic_partner(q, *v1, diag);

  // complement of the first hyperbolic plane inside W
  Matrix sys(2, 4, f);
  for (std::size_t j = 0; j < 4; ++j) {
    sys.set(0, j, q.pair(*v1, wbasis[j]));
    sys.set(1, j, q.pair(w1, wbasis[j]));
  }
  Subspace coef = reduce(sys).kernel;
  if (coef.dim() != 2) throw InputError("hyperbolic complement dimension");
  std::vector<std::vector<Scalar>> cbasis;
  for (std::size_t i = 0; i < 2; ++i) {
    std::vector<Scalar> v(m, Scalar::zero(f));
    for (std::size_t j = 0; j < 4; ++j)
      v = axpy(coef.basis().at(i, j), wbasis[j], v);
    cbasis.push_back(std::move(v));
  }
  auto cdiag = diagonalize_on(q, cbasis);
  Scalar da = q.eval(cdiag[0]), db = q.eval(cdiag[1]);
  auto s = (-(db / da)).sqrt();
  if (!s)
    throw NonSplitQuadric("residual binary form does not split over " +
                          f.name());
  std::vector<Scalar> v2 = axpy(*s, cdiag[0], cdiag[1]);
  std::vector<Scalar> w2 = hyperbolic_partner(q, v2, cdiag);

  // Gram target: pair(f1,f4)=1, pair(f2,f3)=-1, rest zero.
  std::vector<Scalar> f1 = *v1, f4 = w1, f2 = v2;
  std::vector<Scalar> f3(m);
  for (std::size_t i = 0; i < m; ++i) f3[i] = -w2[i];

  Matrix fixed(cls.vertex.dim(), m, f);
  for (std::size_t i = 0; i < cls.vertex.dim(); ++i)
    for (std::size_t j = 0; j < m; ++j)
      fixed.set(i, j, cls.vertex.basis().at(i, j));

  PlaneFamily fam1 = make_family(q, f1, f3, f2, f4, fixed);
  PlaneFamily fam2 = make_family(q, f1, f2, f3, f4, fixed);
  return {std::move(fam1), std::move(fam2)};
}

bool same_ruling(const Quadric& q, const Subspace& p, const Subspace& p2) {
  QuadricClass cls = classify_quadric(q);
  if (cls.rank != 4) throw WrongRank("same_ruling needs a rank-4 quadric");
  std::size_t want = q.n() - 1;
  if (p.dim() != want || p2.dim() != want ||
      p.ambient_dim() != q.n() + 1 || p2.ambient_dim() != q.n() + 1)
    throw WrongDimension("planes must have dimension n-1 in V");
  for (const Subspace* s : {&p, &p2})
    for (std::size_t i = 0; i < s->dim(); ++i)
      for (std::size_t j = i; j < s->dim(); ++j)
        if (!q.pair(s->basis_row(i), s->basis_row(j)).is_zero())
          throw NotIsotropic("plane is not isotropic for the quadric");
  // Maximal isotropic subspaces contain the vertex, so intersection
  // dimensions reduce modulo it directly.
  std::size_t meet = intersect(p, p2).dim();
  std::size_t vdim = cls.vertex.dim();
  return (meet - vdim) % 2 == 0;
}

std::pair<std::array<Scalar, 2>, std::array<Scalar, 2>> split_binary_form(
    const Matrix& gram) {
  const Field& f = gram.field();
  Scalar a = gram.at(0, 0), b = gram.at(0, 1), c = gram.at(1, 1);
  if (a.is_zero() && c.is_zero()) {
    if (b.is_zero()) throw InputError("zero binary form");
    return {{Scalar::one(f), Scalar::zero(f)},
            {Scalar::zero(f), Scalar::one(f)}};
  }
  if (a.is_zero()) {
    auto [l1, l2] = split_binary_form(
        Matrix::from_rows({{c, b}, {b, a}}, f));
    return {{l1[1], l1[0]}, {l2[1], l2[0]}};
  }
  auto s = (b * b - a * c).sqrt();
  if (!s)
    throw NonSplitForm("binary form is irreducible over " + f.name());
  return {{a, b + *s}, {a, b - *s}};
}

LowRankFamilies low_rank_families(const Quadric& q) {
  QuadricClass cls = classify_quadric(q);
  const Field& f = q.field();
  std::size_t m = q.n() + 1;
  if (cls.rank == 1) return RankOnePlane{cls.vertex};
  if (cls.rank != 2)
    throw WrongRank("low-rank families need rank 1 or 2, got " +
                    std::to_string(cls.rank));
  auto comp = complement_cols(cls.vertex);
  Matrix gram(2, 2, f);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      gram.set(i, j, q.b().at(comp[i], comp[j]));
  auto [l1, l2] = split_binary_form(gram);
  Matrix proj = projection_matrix(cls.vertex);
  auto plane_of = [&](const std::array<Scalar, 2>& l) {
    Matrix functional(1, m, f);
    for (std::size_t j = 0; j < m; ++j)
      functional.set(0, j, l[0] * proj.at(0, j) + l[1] * proj.at(1, j));
    return reduce(functional).kernel;
  };
  Subspace p1 = plane_of(l1), p2 = plane_of(l2);
  return RankTwoPlanes{p1, p2, intersect(p1, p2)};
}

Quadric quadric_from_family(const PlaneFamily& fam) {
  std::size_t n = fam.n();
  std::size_t m = n + 1;
  const Field& f = fam.moving_a.field();
  std::size_t unknowns = sym_pack_dim(n);

  // parameter values (1,0), (0,1), (1,1), (1,2), ... capped by the field
  std::vector<std::pair<Scalar, Scalar>> params;
  params.emplace_back(Scalar::one(f), Scalar::zero(f));
  params.emplace_back(Scalar::zero(f), Scalar::one(f));
  std::size_t want = 2 * n + 3;
  if (!f.is_rational())
    want = std::min<std::size_t>(want, std::size_t(f.modulus()) + 1);
  for (std::int64_t t = 1; params.size() < want; ++t)
    params.emplace_back(Scalar::one(f), Scalar::from_int(t, f));

  std::vector<std::vector<Scalar>> eqs;
  for (const auto& [s, t] : params) {
    Subspace plane = fam.plane_at(s, t);
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t i = 0; i < plane.dim(); ++i)
      rows.push_back(plane.basis_row(i));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = i; j < rows.size(); ++j) {
        std::vector<Scalar> eq(unknowns, Scalar::zero(f));
        std::size_t k = 0;
        for (std::size_t a = 0; a < m; ++a)
          for (std::size_t b = a; b < m; ++b) {
            eq[k] = (a == b) ? rows[i][a] * rows[j][a]
                             : rows[i][a] * rows[j][b] + rows[i][b] * rows[j][a];
            ++k;
          }
        eqs.push_back(std::move(eq));
      }
  }
  Subspace sol = reduce(Matrix::from_rows(eqs, f)).kernel;
  if (sol.dim() != 1)
    throw AmbiguousQuadric("family constraints leave a solution space of dim " +
                           std::to_string(sol.dim()));
  return Quadric(n, sym_unpack(sol.basis_row(0), n, f));
}

Matrix minor_jacobian(const Matrix& b, std::size_t k) {
  if (!b.is_symmetric()) throw InputError("minor Jacobian needs symmetry");
  std::size_t m = b.rows();
  if (k < 1 || k > m) throw InputError("minor order out of range");
  const Field& f = b.field();
  const auto& subs = lex_subsets(m, k);
  std::size_t nvars = m * (m + 1) / 2;
  Matrix jac(subs.size() * subs.size(), nvars, f);
  std::size_t row = 0;
  for (const auto& rset : subs) {
    for (const auto& cset : subs) {
      Matrix sub = b.submatrix(rset, cset);
      std::size_t var = 0;
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t bb = a; bb < m; ++bb) {
          Scalar dv = Scalar::zero(f);
          for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
              bool hit = (rset[i] == a && cset[j] == bb) ||
                         (a != bb && rset[i] == bb && cset[j] == a);
              if (hit) dv += cofactor(sub, i, j);
            }
          jac.set(row, var, dv);
          ++var;
        }
      ++row;
    }
  }
  return jac;
}

std::pair<std::vector<Scalar>, std::vector<Scalar>> rank2_decompose(
    const Matrix& b) {
  if (!b.is_symmetric()) throw InputError("decomposition needs symmetry");
  const Field& f = b.field();
  Reduction red = reduce(b);
  if (red.rank > 2) throw RankTooHigh("matrix rank exceeds 2");
  if (red.rank == 0) throw InputError("zero matrix");

  if (red.rank == 1) {
    std::vector<Scalar> v = projective_normalize(red.rref.row(0));
    return {v, v};
  }
  // B = S^T N S with S the RREF row basis; N read off at pivot columns.
  std::vector<Scalar> s1 = red.rref.row(0), s2 = red.rref.row(1);
  std::size_t p1 = red.pivots[0], p2 = red.pivots[1];
  Matrix nmat = Matrix::from_rows({{b.at(p1, p1), b.at(p1, p2)},
                                   {b.at(p2, p1), b.at(p2, p2)}},
                                  f);
  auto [l1, l2] = split_binary_form(nmat);
  auto combine = [&](const std::array<Scalar, 2>& l) {
    std::vector<Scalar> v(b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j)
      v[j] = l[0] * s1[j] + l[1] * s2[j];
    return projective_normalize(v);
  };
  std::vector<Scalar> v = combine(l1), w = combine(l2);
  // canonical unordered pair
  for (std::size_t j = 0; j < v.size(); ++j) {
    int cmp = Scalar::compare_for_order(v[j], w[j]);
    if (cmp > 0) std::swap(v, w);
    if (cmp != 0) break;
  }
  return {v, w};
}

}  // namespace symdet
