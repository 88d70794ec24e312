#include "symdet/grassconic.hpp"

namespace symdet {

namespace {

Matrix canonical_conic(const Matrix& c) {
  if (c.rows() != 3 || c.cols() != 3 || !c.is_symmetric())
    throw InputError("conic matrix must be symmetric 3x3");
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j)
      if (!c.at(i, j).is_zero()) return c.scaled(c.at(i, j).inverse());
  throw InputError("conic matrix must be nonzero");
}

// Coefficients of `rows` in the canonical basis of u: T with
// canonical = T * rows.
Matrix basis_change_from(const Matrix& rows, const ThreePlaneU& u) {
  Reduction red = reduce(rows);
  if (red.rank != 3) throw DegenerateFlags("span has dimension != 3");
  std::vector<std::size_t> piv = red.pivots;
  Matrix g = rows.submatrix({0, 1, 2}, piv);
  Matrix target = u.space().basis().submatrix({0, 1, 2}, piv);
  // canonical[:,piv] = T * rows[:,piv]  =>  T = target * g^{-1}
  return target * adjugate(g).scaled(det(g).inverse());
}

}  // namespace

GrassConic::GrassConic(ThreePlaneU u_, Matrix c_)
    : u(std::move(u_)), c(canonical_conic(c_)) {
  if (!c.field().is_rational() && c.field().modulus() == 2)
    throw InputError("conic points are not supported over F_2");
}

ConicClass classify(const ThreePlaneU& u) {
  PhiAnalysis phi = phi_analysis(u);
  if (phi.rank_phi >= 2) return NotOnYbar{phi.rank_phi};
  if (phi.rank_phi == 1)
    return TauConic{canonical_conic(*phi.c), rank(*phi.c)};
  Subspace ann = annihilator(u);
  std::size_t n = u.n();
  if (ann.dim() == n - 2) return RhoPlane{ann};
  if (ann.dim() == n - 3) {
    auto vn = common_factor_kernel(u);
    if (!vn) throw Error("sigma plane without a unique enveloping n-space");
    return SigmaPlane{ann, *vn};
  }
  throw Error("vanishing quadric system with unexpected annihilator dim " +
              std::to_string(ann.dim()));
}

const char* conic_class_name(const ConicClass& c) {
  if (std::holds_alternative<TauConic>(c)) return "tau-conic";
  if (std::holds_alternative<RhoPlane>(c)) return "rho-plane";
  if (std::holds_alternative<SigmaPlane>(c)) return "sigma-plane";
  return "not-on-Ybar";
}

bool y0_validate(const GrassConic& g) {
  PhiAnalysis phi = phi_analysis(g.u);
  if (phi.rank_phi >= 2) return false;
  if (phi.rank_phi == 0) return true;  // plane case: any conic in it
  return canonical_conic(*phi.c) == g.c;
}

bool y3_member(const ThreePlaneU& u, const Subspace& w) {
  if (w.ambient_dim() != u.ambient())
    throw DimensionMismatch("membership ambient");
  if (w.dim() != u.n() - 3)
    throw WrongDimension("membership expects an (n-3)-subspace");
  return annihilator(u).contains(w);
}

GrassConic family_conic(const Quadric& q, std::optional<int> sheet) {
  QuadricClass cls = classify_quadric(q);
  if (cls.rank == 4) {
    if (!sheet) throw InputError("rank-4 family needs a sheet choice (1 or 2)");
    if (*sheet != 1 && *sheet != 2)
      throw InputError("sheet must be 1 or 2");
    auto [fam1, fam2] = rulings_rank4(q);
    const PlaneFamily& fam = (*sheet == 1) ? fam1 : fam2;
    return GrassConic(fam.span_u, fam.conic);
  }
  if (cls.rank != 3)
    throw WrongRank("family conic needs rank 3 or 4, got " +
                    std::to_string(cls.rank));

  // Rank 3: the cone over a smooth conic. The family of (n-1)-subspaces
  // K + <w> is the rho-plane of the vertex K; in its coordinates the conic
  // is the reduced rank-3 form itself.
  const Field& f = q.field();
  std::size_t m = q.n() + 1;
  auto comp = complement_cols(cls.vertex);
  WedgeVector kappa = WedgeVector::basis_element(0, m, {}, f);
  for (std::size_t i = 0; i < cls.vertex.dim(); ++i)
    kappa = wedge(kappa, WedgeVector::from_vector(cls.vertex.basis_row(i)));
  std::vector<WedgeVector> rows;
  for (auto cidx : comp) {
    std::vector<Scalar> e(m, Scalar::zero(f));
    e[cidx] = Scalar::one(f);
    rows.push_back(wedge(WedgeVector::from_vector(e), kappa));
  }
  ThreePlaneU u = ThreePlaneU::from_rows(q.n(), rows);
  Matrix reduced(3, 3, f);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      reduced.set(a, b, q.b().at(comp[a], comp[b]));
  Matrix given_rows(3, binomial(m, q.n() - 1), f);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < given_rows.cols(); ++j)
      given_rows.set(i, j, rows[i].coords()[j]);
  Matrix t = basis_change_from(given_rows, u);
  return GrassConic(u, t * reduced * t.transpose());
}

bool FlagTuple::is_diagonal() const {
  return kind == Kind::F1 && vn2 && vn2p && vn && vnp && *vn2 == *vn2p &&
         *vn == *vnp;
}

namespace {

void need(const std::optional<Subspace>& s, const char* name,
          std::size_t dim_want, std::size_t n, FlagCheck& out) {
  if (!s) {
    out.violations.push_back(std::string(name) + " missing");
    return;
  }
  if (s->ambient_dim() != n + 1)
    out.violations.push_back(std::string(name) + " ambient != n+1");
  if (s->dim() != dim_want)
    out.violations.push_back(std::string(name) + " dim != " +
                             std::to_string(dim_want));
}

bool both(const std::optional<Subspace>& a, const std::optional<Subspace>& b) {
  return a.has_value() && b.has_value();
}

}  // namespace

FlagCheck validate_flag(const FlagTuple& t, std::size_t n) {
  FlagCheck out{true, {}};
  using K = FlagTuple::Kind;
  switch (t.kind) {
    case K::F1:
      need(t.vn2, "V_{n-2}", n - 2, n, out);
      need(t.vn2p, "V'_{n-2}", n - 2, n, out);
      need(t.vn, "V_n", n, n, out);
      need(t.vnp, "V'_n", n, n, out);
      if (out.violations.empty()) {
        Subspace common = intersect(*t.vn, *t.vnp);
        if (!common.contains(*t.vn2))
          out.violations.push_back("V_{n-2} not inside V_n and V'_n");
        if (!common.contains(*t.vn2p))
          out.violations.push_back("V'_{n-2} not inside V_n and V'_n");
        if (intersect(*t.vn2, *t.vn2p).dim() + 3 < n)
          out.violations.push_back("intersection dim of the (n-2)-spaces < n-3");
        bool diag = t.is_diagonal();
        if (diag && !t.diagonal_tag)
          out.violations.push_back("diagonal tuple without the diagonal tag");
        if (!diag && t.diagonal_tag)
          out.violations.push_back("diagonal tag on a non-diagonal tuple");
      }
      break;
    case K::F2:
      need(t.vn2, "V_{n-2}", n - 2, n, out);
      need(t.vn2p, "V'_{n-2}", n - 2, n, out);
      need(t.vn1, "V_{n-1}", n - 1, n, out);
      need(t.vn, "V_n", n, n, out);
      need(t.vnp, "V'_n", n, n, out);
      if (out.violations.empty()) {
        if (!t.vn1->contains(*t.vn2))
          out.violations.push_back("V_{n-2} not inside V_{n-1}");
        if (!t.vn1->contains(*t.vn2p))
          out.violations.push_back("V'_{n-2} not inside V_{n-1}");
        if (!intersect(*t.vn, *t.vnp).contains(*t.vn1))
          out.violations.push_back("V_{n-1} not inside V_n and V'_n");
      }
      break;
    case K::D4:
      need(t.vn3, "V_{n-3}", n - 3, n, out);
      need(t.vn2, "V_{n-2}", n - 2, n, out);
      need(t.vn2p, "V'_{n-2}", n - 2, n, out);
      need(t.vn, "V_n", n, n, out);
      if (out.violations.empty()) {
        if (!t.vn2->contains(*t.vn3))
          out.violations.push_back("V_{n-3} not inside V_{n-2}");
        if (!t.vn2p->contains(*t.vn3))
          out.violations.push_back("V_{n-3} not inside V'_{n-2}");
        if (!t.vn->contains(*t.vn2))
          out.violations.push_back("V_{n-2} not inside V_n");
        if (!t.vn->contains(*t.vn2p))
          out.violations.push_back("V'_{n-2} not inside V_n");
      }
      break;
    case K::D3:
      need(t.vn3, "V_{n-3}", n - 3, n, out);
      need(t.vn2, "V_{n-2}", n - 2, n, out);
      need(t.vn2p, "V'_{n-2}", n - 2, n, out);
      need(t.vn1, "V_{n-1}", n - 1, n, out);
      need(t.vn, "V_n", n, n, out);
      if (out.violations.empty()) {
        if (!t.vn2->contains(*t.vn3))
          out.violations.push_back("V_{n-3} not inside V_{n-2}");
        if (!t.vn2p->contains(*t.vn3))
          out.violations.push_back("V_{n-3} not inside V'_{n-2}");
        if (!t.vn1->contains(*t.vn2))
          out.violations.push_back("V_{n-2} not inside V_{n-1}");
        if (!t.vn1->contains(*t.vn2p))
          out.violations.push_back("V'_{n-2} not inside V_{n-1}");
        if (!t.vn->contains(*t.vn1))
          out.violations.push_back("V_{n-1} not inside V_n");
      }
      break;
  }
  out.ok = out.violations.empty();
  return out;
}

namespace {

// The line of (n-1)-subspaces between vn2 and vn, as a 2-dim span of
// wedge vectors.
std::vector<WedgeVector> line_span(const Subspace& vn2, const Subspace& vn,
                                   std::size_t n) {
  const Field& f = vn2.field();
  std::size_t m = n + 1;
  WedgeVector omega = WedgeVector::basis_element(0, m, {}, f);
  for (std::size_t i = 0; i < vn2.dim(); ++i)
    omega = wedge(omega, WedgeVector::from_vector(vn2.basis_row(i)));
  // two extension vectors of vn2 inside vn
  std::vector<std::vector<Scalar>> ext;
  Subspace cur = vn2;
  for (std::size_t i = 0; i < vn.dim() && ext.size() < 2; ++i) {
    std::vector<Scalar> cand = vn.basis_row(i);
    if (!cur.contains(cand)) {
      ext.push_back(cand);
      std::vector<std::vector<Scalar>> rows;
      for (std::size_t k = 0; k < cur.dim(); ++k) rows.push_back(cur.basis_row(k));
      rows.push_back(cand);
      cur = Subspace::span_of(rows, m, f);
    }
  }
  if (ext.size() != 2) throw DegenerateFlags("V_n does not extend V_{n-2} by 2");
  return {wedge(omega, WedgeVector::from_vector(ext[0])),
          wedge(omega, WedgeVector::from_vector(ext[1]))};
}

}  // namespace

GrassConic flags_to_conic(const FlagTuple& t, std::size_t n) {
  if (t.kind != FlagTuple::Kind::F1)
    throw InputError("conic construction expects an F1 tuple");
  FlagTuple checked = t;
  checked.diagonal_tag = t.is_diagonal();
  FlagCheck chk = validate_flag(checked, n);
  if (!chk.ok) throw InputError("invalid F1 tuple: " + chk.violations.front());
  if (t.is_diagonal())
    throw DegenerateFlags("the two lines coincide (diagonal tuple)");

  const Field& f = t.vn2->field();
  auto l1 = line_span(*t.vn2, *t.vn, n);
  auto l2 = line_span(*t.vn2p, *t.vnp, n);
  std::size_t wdim = binomial(n + 1, n - 1);
  Matrix stacked(4, wdim, f);
  for (std::size_t j = 0; j < wdim; ++j) {
    stacked.set(0, j, l1[0].coords()[j]);
    stacked.set(1, j, l1[1].coords()[j]);
    stacked.set(2, j, l2[0].coords()[j]);
    stacked.set(3, j, l2[1].coords()[j]);
  }
  Subspace span = Subspace::span(stacked);
  if (span.dim() != 3) throw DegenerateFlags("line pair spans dimension " +
                                             std::to_string(span.dim()));
  ThreePlaneU u(n, span);

  // linear forms cutting the two lines out of P(U); since the canonical
  // basis is in RREF, coordinates in it are read off at the pivot columns
  std::vector<std::size_t> upiv;
  for (std::size_t a = 0; a < 3; ++a) {
    std::size_t p = 0;
    while (u.space().basis().at(a, p).is_zero()) ++p;
    upiv.push_back(p);
  }
  auto line_form = [&](const std::vector<WedgeVector>& line) {
    Matrix rows(2, 3, f);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t a = 0; a < 3; ++a)
        rows.set(i, a, line[i].coords()[upiv[a]]);
    return reduce(rows).kernel;  // 1-dim: the form vanishing on the line
  };
  Subspace k1 = line_form(l1), k2 = line_form(l2);
  if (k1.dim() != 1 || k2.dim() != 1)
    throw DegenerateFlags("line is not a hyperplane of the span");
  Matrix c(3, 3, f);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      c.set(i, j, k1.basis().at(0, i) * k2.basis().at(0, j) +
                      k2.basis().at(0, i) * k1.basis().at(0, j));
  return GrassConic(u, c);
}

FlagTuple conic_to_flags(const GrassConic& g) {
  if (!y0_validate(g)) throw InputError("input is not a valid conic point");
  if (rank(g.c) != 2)
    throw WrongConicRank("flag recovery expects a rank-2 conic, got rank " +
                         std::to_string(rank(g.c)));
  std::size_t n = g.u.n();
  std::size_t m = n + 1;
  const Field& f = g.u.field();
  auto [l1, l2] = rank2_decompose(g.c);  // the two linear forms on U

  auto line_of = [&](const std::vector<Scalar>& form) {
    Matrix fm = Matrix::from_rows({form}, f);
    Subspace coords = reduce(fm).kernel;  // 2-dim in U coordinates
    std::vector<WedgeVector> pts;
    for (std::size_t i = 0; i < 2; ++i) {
      std::vector<Scalar> w(binomial(m, n - 1), Scalar::zero(f));
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t j = 0; j < w.size(); ++j)
          w[j] = w[j] + coords.basis().at(i, a) * g.u.space().basis().at(a, j);
      pts.emplace_back(n - 1, m, std::move(w));
    }
    return pts;
  };

  auto flag_of = [&](const std::vector<WedgeVector>& pts) {
    Subspace pi1 = wedge_annihilator(pts[0]);
    Subspace pi2 = wedge_annihilator(pts[1]);
    if (pi1.dim() != n - 1 || pi2.dim() != n - 1)
      throw Error("line point is not decomposable");
    return std::make_pair(intersect(pi1, pi2), sum(pi1, pi2));
  };

  auto [vn2a, vna] = flag_of(line_of(l1));
  auto [vn2b, vnb] = flag_of(line_of(l2));
  if (vn2a.dim() != n - 2 || vn2b.dim() != n - 2 || vna.dim() != n ||
      vnb.dim() != n)
    throw Error("recovered flags have unexpected dimensions");

  // canonical order of the unordered pair
  std::string ka = vn2a.canonical_key() + "|" + vna.canonical_key();
  std::string kb = vn2b.canonical_key() + "|" + vnb.canonical_key();
  FlagTuple t;
  t.kind = FlagTuple::Kind::F1;
  if (ka <= kb) {
    t.vn2 = vn2a;
    t.vn = vna;
    t.vn2p = vn2b;
    t.vnp = vnb;
  } else {
    t.vn2 = vn2b;
    t.vn = vnb;
    t.vn2p = vn2a;
    t.vnp = vna;
  }
  return t;
}

}  // namespace symdet
