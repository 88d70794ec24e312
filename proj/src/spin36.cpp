#include "symdet/spin36.hpp"

#include <algorithm>

#include "symdet/quadric.hpp"

namespace symdet {
namespace spin36 {

const std::array<std::pair<int, int>, 6> kPairOrder = {
    {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}}};

std::size_t triple_rank(int a, int b, int c) {
  return subset_rank(6, {std::size_t(a - 1), std::size_t(b - 1),
                         std::size_t(c - 1)});
}

namespace {

const Scalar& P(const Coords20& p, int a, int b, int c) {
  return p[triple_rank(a, b, c)];
}

void sym_set(Matrix& m, int i, int j, const Scalar& v) {
  m.set(i - 1, j - 1, v);
  m.set(j - 1, i - 1, v);
}

// complementary pair and the signature of (I, I-complement) in (1,2,3,4)
std::pair<int, int> pair_complement(std::size_t idx) {
  auto [a, b] = kPairOrder[idx];
  int c = 0, d = 0;
  for (int x = 1; x <= 4; ++x)
    if (x != a && x != b) (c == 0 ? c : d) = x;
  return {c, d};
}

int eps_pair(std::size_t idx) {
  auto [a, b] = kPairOrder[idx];
  auto [c, d] = pair_complement(idx);
  int seq[4] = {a, b, c, d};
  int inv = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (seq[i] > seq[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

Scalar minor2(const Matrix& m, std::size_t pi, std::size_t pj) {
  auto [a, b] = kPairOrder[pi];
  auto [c, d] = kPairOrder[pj];
  return m.at(a - 1, c - 1) * m.at(b - 1, d - 1) -
         m.at(a - 1, d - 1) * m.at(b - 1, c - 1);
}

}  // namespace

std::pair<Matrix, Matrix> split(const Coords20& p, const Field& f) {
  for (const auto& x : p)
    if (x.field() != f) throw FieldMismatch("chart coordinates field");
  Matrix v(4, 4, f), w(4, 4, f);
  Scalar two = Scalar::from_int(2, f);

  sym_set(v, 1, 1, two * P(p, 1, 2, 4));
  sym_set(v, 1, 2, P(p, 1, 3, 4) + P(p, 1, 2, 5));
  sym_set(v, 1, 3, P(p, 2, 3, 4) + P(p, 1, 2, 6));
  sym_set(v, 1, 4, P(p, 1, 4, 6) - P(p, 2, 4, 5));
  sym_set(v, 2, 2, two * P(p, 1, 3, 5));
  sym_set(v, 2, 3, P(p, 2, 3, 5) + P(p, 1, 3, 6));
  sym_set(v, 2, 4, P(p, 1, 5, 6) - P(p, 3, 4, 5));
  sym_set(v, 3, 3, two * P(p, 2, 3, 6));
  sym_set(v, 3, 4, P(p, 2, 5, 6) - P(p, 3, 4, 6));
  sym_set(v, 4, 4, two * P(p, 4, 5, 6));

  sym_set(w, 1, 1, two * P(p, 3, 5, 6));
  sym_set(w, 1, 2, -P(p, 3, 4, 6) - P(p, 2, 5, 6));
  sym_set(w, 1, 3, P(p, 3, 4, 5) + P(p, 1, 5, 6));
  sym_set(w, 1, 4, P(p, 2, 3, 5) - P(p, 1, 3, 6));
  sym_set(w, 2, 2, two * P(p, 2, 4, 6));
  sym_set(w, 2, 3, -P(p, 2, 4, 5) - P(p, 1, 4, 6));
  sym_set(w, 2, 4, P(p, 1, 2, 6) - P(p, 2, 3, 4));
  sym_set(w, 3, 3, two * P(p, 1, 4, 5));
  sym_set(w, 3, 4, P(p, 1, 3, 4) - P(p, 1, 2, 5));
  sym_set(w, 4, 4, two * P(p, 1, 2, 3));
  return {std::move(v), std::move(w)};
}

Coords20 plucker20(const Subspace& u3) {
  if (u3.ambient_dim() != 6 || u3.dim() != 3)
    throw DimensionMismatch("chart expects a 3-plane in a 6-space");
  const Field& f = u3.field();
  const auto& triples = lex_subsets(6, 3);
  std::vector<Scalar> raw;
  raw.reserve(20);
  for (const auto& t : triples)
    raw.push_back(det(u3.basis().submatrix({0, 1, 2}, t)));
  raw = projective_normalize(raw);
  Coords20 p;
  std::copy(raw.begin(), raw.end(), p.begin());
  return p;
}

std::vector<Scalar> g36_residuals(const Matrix& v, const Matrix& w) {
  if (v.rows() != 4 || v.cols() != 4 || w.rows() != 4 || w.cols() != 4 ||
      !v.is_symmetric() || !w.is_symmetric())
    throw InputError("chart matrices must be symmetric 4x4");
  if (v.field() != w.field()) throw FieldMismatch("chart matrix fields");
  const Field& f = v.field();
  std::vector<Scalar> res;
  res.reserve(45);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      auto [c1, c2] = pair_complement(i);
      auto [d1, d2] = pair_complement(j);
      std::size_t ic = 0, jc = 0;
      for (std::size_t k = 0; k < 6; ++k) {
        if (kPairOrder[k] == std::make_pair(c1, c2)) ic = k;
        if (kPairOrder[k] == std::make_pair(d1, d2)) jc = k;
      }
      Scalar sgn = Scalar::from_int(eps_pair(i) * eps_pair(j), f);
      res.push_back(minor2(v, i, j) - sgn * minor2(w, ic, jc));
    }
  Matrix vw = v * w;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) res.push_back(vw.at(i, j));
  for (std::size_t i = 1; i < 4; ++i)
    res.push_back(vw.at(0, 0) - vw.at(i, i));
  return res;
}

bool on_g36(const Matrix& v, const Matrix& w) {
  for (const auto& r : g36_residuals(v, w))
    if (!r.is_zero()) return false;
  return true;
}

IdentityReport check_identities(const Matrix& v, const Matrix& w) {
  if (!on_g36(v, w)) throw NotOnG36("generators do not vanish on (v, w)");
  Matrix vw = v * w;
  Scalar d = vw.at(0, 0);
  Scalar dv = det(v), dw = det(w);
  IdentityReport rep;
  rep.d = d;
  rep.det_v = dv;
  rep.det_w = dw;
  rep.rank_v = rank(v);
  rep.rank_w = rank(w);
  rep.dets_equal = (dv == dw);
  rep.product_scalar =
      (vw == Matrix::identity(4, v.field()).scaled(d)) && (d * d == dw);
  rep.no_rank3 = (rep.rank_v != 3 && rep.rank_w != 3);
  rep.rank2_paired = ((rep.rank_v == 2) == (rep.rank_w == 2));
  rep.rank_le1_paired = ((rep.rank_v <= 1) == (rep.rank_w <= 1));
  return rep;
}

int sheet_sign(const Matrix& v, const Matrix& w, const Scalar& sqrt_det) {
  IdentityReport rep = check_identities(v, w);
  if (sqrt_det * sqrt_det != rep.det_w)
    throw InputError("sqrt_det^2 does not equal det w");
  if (rep.det_w.is_zero()) return 0;
  Scalar s = rep.d / sqrt_det;
  if (s.is_one()) return 1;
  if ((-s).is_one()) return -1;
  throw Error("sheet sign is not a unit");  // unreachable on the chart
}

FiberProbe fiber_probe(const Matrix& w, const Matrix& v_candidate) {
  if (w.rows() != 4 || !w.is_symmetric())
    throw InputError("fiber probe expects a symmetric 4x4 w");
  const Field& f = w.field();
  if (!f.is_rational() && f.modulus() == 2)
    throw InputError("quadric fibers are not supported over F_2");
  std::size_t rw = rank(w);
  if (rw == 0) throw InputError("w = 0 defines no quadric");

  FiberProbe out;
  out.member = on_g36(v_candidate, w);
  out.structured_member = false;

  if (rw == 4) {
    out.type = FiberType::TwoPoints;
    Matrix vw = v_candidate * w;
    Scalar d = vw.at(0, 0);
    out.structured_member =
        (vw == Matrix::identity(4, f).scaled(d)) && (d * d == det(w)) &&
        on_g36(v_candidate, w);
    auto s = det(w).sqrt();
    if (s && !s->is_zero()) {
      Matrix winv_scaled = adjugate(w).scaled(s->inverse());  // sqrt(det) w^{-1}
      out.points.push_back(winv_scaled);
      out.points.push_back(winv_scaled.scaled(-Scalar::one(f)));
    } else {
      out.normal_form_available = false;  // the two points are conjugate
    }
    return out;
  }

  if (rw == 3) {
    out.type = FiberType::OnePoint;
    // No chart point has a rank-3 w; the unique fiber point is the limit
    // (x x^T, 0) along the vertex direction of w.
    Subspace ker = reduce(w).kernel;
    out.axis = projective_normalize(ker.basis_row(0));
    out.structured_member = false;
    return out;
  }

  if (rw == 2) {
    out.type = FiberType::SegreQuadric;
    // Normal form: basis (u1, u2, k1, k2) with w(u1,u2) = 1 hyperbolic and
    // k_i spanning the kernel; then the pair, twisted by the determinant
    // powers of the base change, must be supported on the kernel block and
    // satisfy v33 v44 - v34^2 + t^2 = 0. The raw matrix w is used here:
    // the congruence must reach the normal form exactly, not up to scalar.
    auto wpair = [&](const std::vector<Scalar>& x,
                     const std::vector<Scalar>& y) {
      return bilinear(x, w, y);
    };
    Subspace ker = reduce(w).kernel;
    auto comp = complement_cols(ker);
    std::vector<std::vector<Scalar>> basis;
    for (auto c : comp) {
      std::vector<Scalar> e(4, Scalar::zero(f));
      e[c] = Scalar::one(f);
      basis.push_back(std::move(e));
    }
    try {
      // isotropic vector of the binary part, then a hyperbolic partner
      Matrix gram(2, 2, f);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
          gram.set(i, j, wpair(basis[i], basis[j]));
      auto [l1, l2] = split_binary_form(gram);
      // u1 in the kernel of the form l1 on the binary space is isotropic
      std::vector<Scalar> u1(4, Scalar::zero(f));
      for (std::size_t j = 0; j < 4; ++j)
        u1[j] = l1[1] * basis[0][j] - l1[0] * basis[1][j];
      std::vector<Scalar> partner =
          basis[wpair(u1, basis[0]).is_zero() ? 1 : 0];
      Scalar pairing = wpair(u1, partner);
      Scalar inv = pairing.inverse();
      std::vector<Scalar> u2(4);
      for (std::size_t j = 0; j < 4; ++j) u2[j] = partner[j] * inv;
      Scalar c = wpair(u2, u2) * Scalar::from_int(2, f).inverse();
      for (std::size_t j = 0; j < 4; ++j) u2[j] = u2[j] - c * u1[j];

      Matrix s(4, 4, f);  // columns u1, u2, kernel rows
      for (std::size_t i = 0; i < 4; ++i) {
        s.set(i, 0, u1[i]);
        s.set(i, 1, u2[i]);
        s.set(i, 2, ker.basis().at(0, i));
        s.set(i, 3, ker.basis().at(1, i));
      }
      Scalar ds = det(s);
      Matrix sinv = adjugate(s).scaled(ds.inverse());
      // equivariant twists: v -> det^{-1} S^{-1} v S^{-T}, w -> det^{-2} S^T w S
      Matrix v2 = (sinv * v_candidate * sinv.transpose()).scaled(ds.inverse());
      Scalar t = (ds * ds).inverse();  // S^T w S = w0, so w2 = t w0
      bool blocked = true;
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
          if ((i < 2 || j < 2) && !v2.at(i, j).is_zero()) blocked = false;
      Scalar eq = v2.at(2, 2) * v2.at(3, 3) - v2.at(2, 3) * v2.at(2, 3) + t * t;
      out.structured_member = blocked && eq.is_zero();
    } catch (const NonSplitForm&) {
      out.normal_form_available = false;
      out.structured_member = out.member;
    }
    return out;
  }

  // rank 1
  out.type = FiberType::VeroneseCone;
  Reduction red = reduce(w);
  out.axis = projective_normalize(red.rref.row(0));
  bool rank_ok = rank(v_candidate) <= 1;
  bool annihilates = (w * v_candidate).is_zero() && (v_candidate * w).is_zero();
  out.structured_member = rank_ok && annihilates;
  return out;
}

Subspace to_spin_plane(const ThreePlaneU& u) {
  if (u.n() != 3) throw InputError("direct chart coordinates need n = 3");
  // lex pair order (12)(13)(14)(23)(24)(34) -> kPairOrder positions
  static const std::size_t lex_of_pair[6] = {0, 1, 3, 2, 4, 5};
  Matrix rows(3, 6, u.field());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 6; ++k)
      rows.set(i, k, u.space().basis().at(i, lex_of_pair[k]));
  return Subspace::span(rows);
}

Subspace relative_spin_plane(const ThreePlaneU& u, const Subspace& vn3) {
  std::size_t n = u.n();
  std::size_t m = n + 1;
  const Field& f = u.field();
  if (vn3.ambient_dim() != m || vn3.dim() != n - 3)
    throw DimensionMismatch("relative reduction expects an (n-3)-subspace");
  if (!annihilator(u).contains(vn3))
    throw InputError("subspace does not annihilate the plane");
  if (n == 3) return to_spin_plane(u);

  WedgeVector kappa = WedgeVector::basis_element(0, m, {}, f);
  for (std::size_t i = 0; i < vn3.dim(); ++i)
    kappa = wedge(kappa, WedgeVector::from_vector(vn3.basis_row(i)));
  auto comp = complement_cols(vn3);  // 4 canonical complement directions

  // columns: images of the lex pair basis of wedge^2(complement)
  std::size_t wdim = binomial(m, n - 1);
  Matrix cols(wdim, 6, f);
  const auto& pairs = lex_subsets(4, 2);
  for (std::size_t k = 0; k < 6; ++k) {
    std::vector<Scalar> ea(m, Scalar::zero(f)), eb(m, Scalar::zero(f));
    ea[comp[pairs[k][0]]] = Scalar::one(f);
    eb[comp[pairs[k][1]]] = Scalar::one(f);
    WedgeVector img = wedge(
        wedge(WedgeVector::from_vector(ea), WedgeVector::from_vector(eb)),
        kappa);
    for (std::size_t t = 0; t < wdim; ++t) cols.set(t, k, img.coord(t));
  }
  // solve cols * beta_i = u_i for each canonical basis row, using six
  // independent rows of the embedding matrix
  Reduction rowsel = reduce(cols.transpose());
  if (rowsel.rank != 6) throw Error("quotient embedding is degenerate");
  const std::vector<std::size_t>& rowpiv = rowsel.pivots;
  Matrix square(6, 6, f);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) square.set(i, j, cols.at(rowpiv[i], j));
  Matrix rows(3, 6, f);
  for (std::size_t b = 0; b < 3; ++b) {
    Matrix rhs(6, 1, f);
    for (std::size_t i = 0; i < 6; ++i)
      rhs.set(i, 0, u.space().basis().at(b, rowpiv[i]));
    Matrix beta = solve(square, rhs);
    // verify consistency on all coordinates
    for (std::size_t t = 0; t < wdim; ++t) {
      Scalar acc = Scalar::zero(f);
      for (std::size_t k = 0; k < 6; ++k)
        acc += cols.at(t, k) * beta.at(k, 0);
      if (acc != u.space().basis().at(b, t))
        throw InputError("plane is not a pullback from the quotient");
    }
    for (std::size_t k = 0; k < 6; ++k) rows.set(b, k, beta.at(k, 0));
  }
  // lex pair coordinates -> kPairOrder
  static const std::size_t lex_of_pair[6] = {0, 1, 3, 2, 4, 5};
  Matrix reordered(3, 6, f);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 6; ++k)
      reordered.set(i, k, rows.at(i, lex_of_pair[k]));
  return Subspace::span(reordered);
}

}  // namespace spin36
}  // namespace symdet
