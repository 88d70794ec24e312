#include "symdet/sampler.hpp"

#include <chrono>
#include <sstream>

namespace symdet {

namespace {

std::uint64_t splitmix(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string dump_matrix(const Matrix& m) { return m.str(); }

}  // namespace

TrialRng::TrialRng(std::uint64_t root_seed, std::uint64_t trial) {
  std::uint64_t s = root_seed;
  std::uint64_t a = splitmix(s);
  s = a ^ (trial * 0xd1342543de82ef95ull + 0x2545f4914f6cdd1dull);
  state_ = splitmix(s);
  if (state_ == 0) state_ = 0x6a09e667f3bcc909ull;
}

std::uint64_t TrialRng::next() { return splitmix(state_); }

std::uint64_t TrialRng::below(std::uint64_t bound) {
  // bounds here are tiny relative to 2^64; modulo bias is negligible and
  // determinism is what matters
  return bound == 0 ? 0 : next() % bound;
}

std::int64_t TrialRng::in_range(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(std::uint64_t(hi - lo + 1)));
}

Scalar random_scalar(const Field& f, TrialRng& rng) {
  if (f.is_rational()) {
    std::int64_t num = rng.in_range(-9, 9);
    std::int64_t den = rng.in_range(1, 3);
    return Scalar::rational(BigInt(num), BigInt(den));
  }
  return Scalar::from_int(std::int64_t(rng.below(std::uint64_t(f.modulus()))),
                          f);
}

Scalar random_nonzero_scalar(const Field& f, TrialRng& rng) {
  for (;;) {
    Scalar s = random_scalar(f, rng);
    if (!s.is_zero()) return s;
  }
}

Matrix random_matrix(std::size_t rows, std::size_t cols, const Field& f,
                     TrialRng& rng) {
  Matrix m(rows, cols, f);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, random_scalar(f, rng));
  return m;
}

Matrix random_invertible(std::size_t m, const Field& f, TrialRng& rng) {
  for (;;) {
    Matrix a = random_matrix(m, m, f, rng);
    if (!det(a).is_zero()) return a;
  }
}

Subspace random_subspace(std::size_t ambient, std::size_t dim, const Field& f,
                         TrialRng& rng) {
  if (dim == 0) return Subspace(ambient, f);
  for (;;) {
    Subspace s = Subspace::span(random_matrix(dim, ambient, f, rng));
    if (s.dim() == dim) return s;
  }
}

Subspace random_subspace_of(const Subspace& big, std::size_t dim,
                            TrialRng& rng) {
  if (dim > big.dim()) throw InputError("subspace dimension too large");
  if (dim == 0) return Subspace(big.ambient_dim(), big.field());
  const Field& f = big.field();
  for (;;) {
    Matrix coef = random_matrix(dim, big.dim(), f, rng);
    Matrix rows = coef * big.basis();
    Subspace s = Subspace::span(rows);
    if (s.dim() == dim) return s;
  }
}

Quadric random_rank_quadric(std::size_t n, std::size_t r, const Field& f,
                            TrialRng& rng) {
  if (r < 1 || r > n + 1) throw InputError("rank out of range");
  std::size_t m = n + 1;
  Matrix core(m, m, f);
  std::size_t blocks = r / 2;
  for (std::size_t i = 0; i < blocks; ++i) {
    core.set(2 * i, 2 * i + 1, Scalar::one(f));
    core.set(2 * i + 1, 2 * i, Scalar::one(f));
  }
  if (r % 2 == 1) core.set(r - 1, r - 1, Scalar::one(f));
  if (!f.is_rational()) {
    Matrix a = random_invertible(m, f, rng);
    return Quadric(n, a.transpose() * core * a);
  }
  // Over Q, congruence by the adjugate of a small integer matrix: the
  // columns of the matrix itself are then isotropic directions of small
  // height, within reach of the bounded rational search of the ruling
  // machinery.
  Matrix a(m, m, f);
  do {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        a.set(i, j, Scalar::from_int(rng.in_range(-2, 2), f));
  } while (det(a).is_zero());
  Matrix adj = adjugate(a);
  return Quadric(n, adj.transpose() * core * adj);
}

namespace {

WedgeVector wedge_of_rows(const Subspace& s) {
  std::size_t m = s.ambient_dim();
  WedgeVector acc = WedgeVector::basis_element(0, m, {}, s.field());
  for (std::size_t i = 0; i < s.dim(); ++i)
    acc = wedge(acc, WedgeVector::from_vector(s.basis_row(i)));
  return acc;
}

// basis vectors of V extending `inner` within `outer`
std::vector<std::vector<Scalar>> extension_vectors(const Subspace& inner,
                                                   const Subspace& outer,
                                                   std::size_t count) {
  std::vector<std::vector<Scalar>> ext;
  Subspace cur = inner;
  for (std::size_t i = 0; i < outer.dim() && ext.size() < count; ++i) {
    std::vector<Scalar> cand = outer.basis_row(i);
    if (!cur.contains(cand)) {
      ext.push_back(cand);
      std::vector<std::vector<Scalar>> rows;
      for (std::size_t k = 0; k < cur.dim(); ++k)
        rows.push_back(cur.basis_row(k));
      rows.push_back(cand);
      cur = Subspace::span_of(rows, inner.ambient_dim(), inner.field());
    }
  }
  if (ext.size() != count) throw Error("extension basis not found");
  return ext;
}

}  // namespace

ThreePlaneU random_3plane(std::size_t n, PlaneConstraint c, std::size_t d,
                          const Field& f, TrialRng& rng) {
  std::size_t m = n + 1;
  std::size_t wdim = binomial(m, n - 1);
  switch (c) {
    case PlaneConstraint::Generic:
      return ThreePlaneU(n, random_subspace(wdim, 3, f, rng));
    case PlaneConstraint::Annihilated: {
      if (d < 1 || d > n - 2) throw InputError("annihilated dim out of range");
      Subspace vd = random_subspace(m, d, f, rng);
      WedgeVector kappa = wedge_of_rows(vd);
      auto comp = complement_cols(vd);
      std::size_t deg = n - 1 - d;
      const auto& subs = lex_subsets(comp.size(), deg);
      for (;;) {
        std::vector<WedgeVector> rows;
        for (std::size_t i = 0; i < 3; ++i) {
          WedgeVector acc(n - 1, m, f);
          for (const auto& s : subs) {
            Scalar coeff = random_scalar(f, rng);
            if (coeff.is_zero()) continue;
            std::vector<std::size_t> lifted;
            for (auto x : s) lifted.push_back(comp[x]);
            acc = acc + wedge(WedgeVector::basis_element(deg, m, lifted, f),
                              kappa)
                            .scaled(coeff);
          }
          rows.push_back(acc);
        }
        std::vector<std::vector<Scalar>> data;
        for (const auto& r : rows) data.push_back(r.coords());
        Subspace s = Subspace::span_of(data, wdim, f);
        if (s.dim() == 3) return ThreePlaneU(n, s);
      }
    }
    case PlaneConstraint::Rho: {
      Subspace vn2 = random_subspace(m, n - 2, f, rng);
      WedgeVector kappa = wedge_of_rows(vn2);
      auto comp = complement_cols(vn2);
      std::vector<WedgeVector> rows;
      for (auto cidx : comp) {
        std::vector<Scalar> e(m, Scalar::zero(f));
        e[cidx] = Scalar::one(f);
        rows.push_back(wedge(WedgeVector::from_vector(e), kappa));
      }
      return ThreePlaneU::from_rows(n, rows);
    }
    case PlaneConstraint::Sigma: {
      Subspace vn = random_subspace(m, n, f, rng);
      Subspace vn3 = random_subspace_of(vn, n - 3, rng);
      WedgeVector kappa = wedge_of_rows(vn3);
      auto ext = extension_vectors(vn3, vn, 3);
      std::vector<WedgeVector> rows;
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = a + 1; b < 3; ++b)
          rows.push_back(
              wedge(wedge(WedgeVector::from_vector(ext[a]),
                          WedgeVector::from_vector(ext[b])),
                    kappa));
      return ThreePlaneU::from_rows(n, rows);
    }
    case PlaneConstraint::Tau: {
      Quadric q = random_rank_quadric(n, 4, f, rng);
      auto fams = rulings_rank4(q);
      return (rng.below(2) == 0) ? fams.first.span_u : fams.second.span_u;
    }
  }
  throw InputError("unknown constraint");
}

FlagTuple random_f1(std::size_t n, const Field& f, TrialRng& rng) {
  std::size_t m = n + 1;
  for (;;) {
    Subspace vn = random_subspace(m, n, f, rng);
    Subspace vnp = random_subspace(m, n, f, rng);
    if (vn == vnp) continue;
    Subspace common = intersect(vn, vnp);
    if (common.dim() != n - 1) continue;
    Subspace vn2 = random_subspace_of(common, n - 2, rng);
    Subspace vn2p = random_subspace_of(common, n - 2, rng);
    FlagTuple t;
    t.kind = FlagTuple::Kind::F1;
    t.vn2 = vn2;
    t.vn2p = vn2p;
    t.vn = vn;
    t.vnp = vnp;
    if (t.is_diagonal()) continue;
    return t;
  }
}

ThreePlaneU random_double_line_plane(std::size_t n, const Field& f,
                                     TrialRng& rng) {
  std::size_t m = n + 1;
  // base point: lines E^e_{n-2}, E^e_{n-1} over E = e_0..e_{n-3}, plus a
  // third vector supported off the pencil
  std::vector<std::size_t> e_set;
  for (std::size_t i = 0; i + 2 < n; ++i) e_set.push_back(i);
  auto base = [&](const std::vector<std::size_t>& extra) {
    std::vector<std::size_t> s = e_set;
    for (auto x : extra) s.push_back(x);
    std::sort(s.begin(), s.end());
    return WedgeVector::basis_element(n - 1, m, s, f);
  };
  WedgeVector l1 = base({n - 2});
  WedgeVector l2 = base({n - 1});
  for (;;) {
    WedgeVector w(n - 1, m, f);
    Scalar a = random_scalar(f, rng);
    w = w + base({n}).scaled(a);
    bool nonzero = !a.is_zero();
    for (std::size_t i = 0; i + 2 < n; ++i) {
      Scalar ai = random_scalar(f, rng);
      if (ai.is_zero()) continue;
      nonzero = true;
      std::vector<std::size_t> s;
      for (auto x : e_set)
        if (x != i) s.push_back(x);
      s.push_back(n - 2);
      s.push_back(n - 1);
      std::sort(s.begin(), s.end());
      w = w + WedgeVector::basis_element(n - 1, m, s, f).scaled(ai);
    }
    if (!nonzero) continue;
    Matrix g = random_invertible(m, f, rng);
    std::vector<WedgeVector> rows = {push_forward(g, l1), push_forward(g, l2),
                                     push_forward(g, w)};
    std::vector<std::vector<Scalar>> data;
    for (const auto& r : rows) data.push_back(r.coords());
    Subspace s = Subspace::span_of(data, binomial(m, n - 1), f);
    if (s.dim() == 3) return ThreePlaneU(n, s);
  }
}

std::vector<Subspace> enumerate_subspaces(std::size_t ambient, std::size_t k,
                                          const Field& f) {
  if (f.is_rational()) throw InputError("enumeration needs a finite field");
  std::int64_t q = f.modulus();
  std::vector<Subspace> out;
  if (k == 0) {
    out.emplace_back(ambient, f);
    return out;
  }
  for (const auto& piv : lex_subsets(ambient, k)) {
    // free positions: (row i, col j) with j > piv[i], j not a pivot
    std::vector<std::pair<std::size_t, std::size_t>> free_pos;
    std::vector<bool> is_piv(ambient, false);
    for (auto p : piv) is_piv[p] = true;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = piv[i] + 1; j < ambient; ++j)
        if (!is_piv[j]) free_pos.emplace_back(i, j);
    std::vector<std::int64_t> vals(free_pos.size(), 0);
    for (;;) {
      Matrix b(k, ambient, f);
      for (std::size_t i = 0; i < k; ++i) b.set(i, piv[i], Scalar::one(f));
      for (std::size_t t = 0; t < free_pos.size(); ++t)
        b.set(free_pos[t].first, free_pos[t].second,
              Scalar::from_int(vals[t], f));
      out.push_back(Subspace::span(b));
      // odometer
      std::size_t t = 0;
      while (t < vals.size() && ++vals[t] == q) vals[t++] = 0;
      if (t == vals.size()) break;
      if (vals.empty()) break;
    }
  }
  return out;
}

std::uint64_t gaussian_count(std::uint64_t m, std::uint64_t k,
                             std::uint64_t q) {
  if (k > m) return 0;
  // prod_{i=0}^{k-1} (q^{m-i} - 1) / (q^{i+1} - 1)
  std::uint64_t num = 1, den = 1;
  auto qpow = [&](std::uint64_t e) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r *= q;
    return r;
  };
  for (std::uint64_t i = 0; i < k; ++i) {
    num *= qpow(m - i) - 1;
    den *= qpow(i + 1) - 1;
  }
  return num / den;
}

// ---------------------------------------------------------------------------
// verification suites

VerifyReport verify_prop_b(std::size_t n, const Field& f,
                           std::uint64_t trials, std::uint64_t seed) {
  VerifyReport rep;
  rep.suite = "propB(n=" + std::to_string(n) + "," + f.name() + ")";
  Stopwatch sw;
  for (std::uint64_t t = 0; t < trials; ++t) {
    TrialRng rng(seed, t);
    std::optional<ThreePlaneU> u;
    switch (t % 8) {
      case 0:
      case 7:
        u = random_3plane(n, PlaneConstraint::Generic, 0, f, rng);
        break;
      case 1: {
        std::size_t d = 1 + rng.below(n - 2);
        u = random_3plane(n, PlaneConstraint::Annihilated, d, f, rng);
        break;
      }
      case 2:
        u = random_3plane(n, PlaneConstraint::Rho, 0, f, rng);
        break;
      case 3:
        u = random_3plane(n, PlaneConstraint::Sigma, 0, f, rng);
        break;
      case 4:
        u = random_3plane(n, PlaneConstraint::Tau, 0, f, rng);
        break;
      case 5: {
        FlagTuple fl = random_f1(n, f, rng);
        u = flags_to_conic(fl, n).u;
        break;
      }
      case 6:
        u = random_double_line_plane(n, f, rng);
        break;
    }
    ++rep.trials;
    std::size_t adim = annihilator(*u).dim();
    std::size_t rphi = phi_analysis(*u).rank_phi;
    bool lhs = adim + 3 >= n;  // dim a_U >= n-3
    bool rhs = rphi <= 1;
    std::string fail;
    if (lhs != rhs) fail = "equivalence";
    // the classification partition must agree with the raw data
    if (fail.empty()) {
      ConicClass cls = classify(*u);
      if (std::holds_alternative<NotOnYbar>(cls)) {
        if (rphi <= 1 || adim + 4 > n) fail = "off-locus class";
      } else if (std::holds_alternative<TauConic>(cls)) {
        if (rphi != 1) fail = "tau class";
      } else if (std::holds_alternative<RhoPlane>(cls)) {
        if (rphi != 0 || adim != n - 2) fail = "rho class";
      } else {
        if (rphi != 0 || adim != n - 3) fail = "sigma class";
      }
    }
    if (!fail.empty()) {
      ++rep.failures;
      if (rep.first_counterexample.empty()) {
        std::ostringstream os;
        os << "trial " << t << " (" << fail << "): dim a_U = " << adim
           << ", rank phi = " << rphi << "\nU =\n"
           << u->space().str();
        rep.first_counterexample = os.str();
      }
    }
  }
  rep.elapsed_ms = sw.ms();
  return rep;
}

VerifyReport verify_jacobian(std::size_t n, std::size_t r, const Field& f,
                             std::uint64_t trials, std::uint64_t seed) {
  VerifyReport rep;
  rep.suite = "jacobian(n=" + std::to_string(n) + ",r=" + std::to_string(r) +
              "," + f.name() + ")";
  Stopwatch sw;
  if (r < 2 || r > n) throw InputError("jacobian suite needs 2 <= r <= n");
  std::size_t codim = (n + 1 - r) * (n + 2 - r) / 2;
  for (std::uint64_t t = 0; t < trials; ++t) {
    TrialRng rng(seed, t);
    Quadric smooth_pt = random_rank_quadric(n, r, f, rng);
    Quadric sing_pt = random_rank_quadric(n, r - 1, f, rng);
    ++rep.trials;
    std::size_t rk_smooth = rank(minor_jacobian(smooth_pt.b(), r + 1));
    std::size_t rk_sing = rank(minor_jacobian(sing_pt.b(), r + 1));
    bool ok = (rk_smooth == codim) && (rk_sing < codim);
    if (!ok) {
      ++rep.failures;
      if (rep.first_counterexample.empty()) {
        std::ostringstream os;
        os << "trial " << t << ": jacobian ranks " << rk_smooth << " (want "
           << codim << ") / " << rk_sing << " (want < " << codim << ")\nB =\n"
           << dump_matrix(smooth_pt.b());
        rep.first_counterexample = os.str();
      }
    }
  }
  rep.elapsed_ms = sw.ms();
  return rep;
}

VerifyReport verify_plucker36(const Field& f, std::uint64_t trials,
                              std::uint64_t seed) {
  VerifyReport rep;
  rep.suite = "plucker36(" + f.name() + ")";
  Stopwatch sw;
  for (std::uint64_t t = 0; t < trials; ++t) {
    TrialRng rng(seed, t);
    Subspace u3 = random_subspace(6, 3, f, rng);
    ++rep.trials;
    auto p = spin36::plucker20(u3);
    auto [v, w] = spin36::split(p, f);
    bool ok = spin36::on_g36(v, w);
    if (ok) ok = spin36::check_identities(v, w).all_ok();
    if (!ok) {
      ++rep.failures;
      if (rep.first_counterexample.empty())
        rep.first_counterexample =
            "trial " + std::to_string(t) + "\nU' =\n" + u3.str();
    }
  }
  rep.elapsed_ms = sw.ms();
  return rep;
}

VerifyReport verify_plucker36_negative(const Field& f, std::uint64_t trials,
                                       std::uint64_t seed) {
  VerifyReport rep;
  rep.suite = "plucker36-negative(" + f.name() + ")";
  Stopwatch sw;
  for (std::uint64_t t = 0; t < trials; ++t) {
    TrialRng rng(seed, t);
    spin36::Coords20 p;
    bool nonzero = false;
    for (auto& x : p) {
      x = random_scalar(f, rng);
      nonzero = nonzero || !x.is_zero();
    }
    if (!nonzero) p[0] = Scalar::one(f);
    ++rep.trials;
    auto [v, w] = spin36::split(p, f);
    if (spin36::on_g36(v, w)) {
      ++rep.failures;
      if (rep.first_counterexample.empty())
        rep.first_counterexample =
            "trial " + std::to_string(t) + ": generic vector on the chart";
    }
  }
  rep.elapsed_ms = sw.ms();
  return rep;
}

namespace {

// scaling factor mu with a = mu * b (both nonzero, proportional), or null.
std::optional<Scalar> proportionality(const Matrix& a, const Matrix& b) {
  std::optional<Scalar> mu;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a.at(i, j);
      const Scalar& y = b.at(i, j);
      if (y.is_zero()) {
        if (!x.is_zero()) return std::nullopt;
        continue;
      }
      Scalar ratio = x / y;
      if (!mu)
        mu = ratio;
      else if (*mu != ratio)
        return std::nullopt;
    }
  return mu;
}

}  // namespace

VerifyReport verify_rulings(std::size_t n, const Field& f,
                            std::uint64_t trials, std::uint64_t seed) {
  VerifyReport rep;
  rep.suite = "rulings(n=" + std::to_string(n) + "," + f.name() + ")";
  Stopwatch sw;
  for (std::uint64_t t = 0; t < trials; ++t) {
    TrialRng rng(seed, t);
    Quadric q = random_rank_quadric(n, 4, f, rng);
    ++rep.trials;
    std::string fail;
    try {
      auto [fam1, fam2] = rulings_rank4(q);
      // parameter values
      std::vector<std::pair<Scalar, Scalar>> params;
      params.emplace_back(Scalar::one(f), Scalar::zero(f));
      params.emplace_back(Scalar::zero(f), Scalar::one(f));
      std::size_t extra =
        f.is_rational() ? 8
                        : std::min<std::size_t>(8, std::size_t(f.modulus()) - 1);
      for (std::size_t k = 1; k <= extra; ++k)
        params.emplace_back(Scalar::one(f), Scalar::from_int(k, f));

      std::vector<Subspace> planes1, planes2;
      for (const auto& [s, u] : params) {
        planes1.push_back(fam1.plane_at(s, u));
        planes2.push_back(fam2.plane_at(s, u));
      }
      for (const auto* planes : {&planes1, &planes2})
        for (const auto& pl : *planes) {
          if (pl.dim() != n - 1) fail = "plane dimension";
          for (std::size_t i = 0; i < pl.dim() && fail.empty(); ++i)
            for (std::size_t j = i; j < pl.dim(); ++j)
              if (!q.pair(pl.basis_row(i), pl.basis_row(j)).is_zero())
                fail = "plane not isotropic";
        }
      // two components with the stated parity
      for (std::size_t i = 0; i < planes1.size() && fail.empty(); ++i)
        for (std::size_t j = i + 1; j < planes1.size(); ++j) {
          if (!same_ruling(q, planes1[i], planes1[j]))
            fail = "family 1 not one component";
          if (!same_ruling(q, planes2[i], planes2[j]))
            fail = "family 2 not one component";
        }
      for (std::size_t i = 0; i < planes1.size() && fail.empty(); ++i)
        for (std::size_t j = 0; j < planes2.size(); ++j)
          if (same_ruling(q, planes1[i], planes2[j]))
            fail = "families not separated";
      // quadric recovery
      if (fail.empty()) {
        if (quadric_from_family(fam1) != q) fail = "family 1 recovery";
        if (quadric_from_family(fam2) != q) fail = "family 2 recovery";
      }
      // chart correspondence for n = 3
      if (fail.empty() && n == 3) {
        auto p1 = spin36::plucker20(spin36::to_spin_plane(fam1.span_u));
        auto p2 = spin36::plucker20(spin36::to_spin_plane(fam2.span_u));
        auto [v1, w1] = spin36::split(p1, f);
        auto [v2, w2] = spin36::split(p2, f);
        auto mu1 = proportionality(w1, q.b());
        auto mu2 = proportionality(w2, q.b());
        if (!mu1 || !mu2 || mu1->is_zero() || mu2->is_zero())
          fail = "chart w-component not the quadric";
        if (fail.empty()) {
          Matrix v1n = v1.scaled(mu1->inverse());
          Matrix v2n = v2.scaled(mu2->inverse());
          Matrix wb = q.b();
          auto sd = det(wb).sqrt();
          if (!sd) {
            fail = "determinant of a split quadric is not a square";
          } else {
            int s1 = spin36::sheet_sign(v1n, wb, *sd);
            int s2 = spin36::sheet_sign(v2n, wb, *sd);
            if (s1 == 0 || s2 == 0 || s1 == s2)
              fail = "sheet signs do not separate the rulings";
            auto probe = spin36::fiber_probe(wb, v1n);
            if (probe.type != spin36::FiberType::TwoPoints || !probe.member)
              fail = "fiber probe rejects a ruling point";
            if (fail.empty() && probe.points.size() == 2) {
              bool match = (probe.points[0] == v1n && probe.points[1] == v2n) ||
                           (probe.points[0] == v2n && probe.points[1] == v1n);
              if (!match) fail = "fiber points do not match the rulings";
            }
            // parity agreement on a mixed pair
            if (fail.empty() &&
                same_ruling(q, planes1[0], planes2[0]) != (s1 == s2))
              fail = "sheet sign parity disagrees with the component test";
          }
        }
      }
    } catch (const Error& e) {
      fail = std::string("exception: ") + e.what();
    }
    if (!fail.empty()) {
      ++rep.failures;
      if (rep.first_counterexample.empty())
        rep.first_counterexample = "trial " + std::to_string(t) + ": " + fail +
                                   "\nB =\n" + dump_matrix(q.b());
    }
  }
  rep.elapsed_ms = sw.ms();
  return rep;
}

VerifyReport verify_flags_roundtrip(std::size_t n, const Field& f,
                                    std::uint64_t trials, std::uint64_t seed) {
  VerifyReport rep;
  rep.suite = "flags-roundtrip(n=" + std::to_string(n) + "," + f.name() + ")";
  Stopwatch sw;
  for (std::uint64_t t = 0; t < trials; ++t) {
    TrialRng rng(seed, t);
    FlagTuple tuple = random_f1(n, f, rng);
    ++rep.trials;
    std::string fail;
    try {
      GrassConic g = flags_to_conic(tuple, n);
      if (!y0_validate(g)) fail = "constructed conic fails validity";
      if (rank(g.c) != 2) fail = "constructed conic rank != 2";
      FlagTuple back = conic_to_flags(g);
      auto eq = [](const Subspace& a, const Subspace& b) { return a == b; };
      bool same = (eq(*back.vn2, *tuple.vn2) && eq(*back.vn, *tuple.vn) &&
                   eq(*back.vn2p, *tuple.vn2p) && eq(*back.vnp, *tuple.vnp)) ||
                  (eq(*back.vn2, *tuple.vn2p) && eq(*back.vn, *tuple.vnp) &&
                   eq(*back.vn2p, *tuple.vn2) && eq(*back.vnp, *tuple.vn));
      if (!same && fail.empty()) fail = "tuple not recovered up to swap";
      GrassConic g2 = flags_to_conic(back, n);
      if ((g2.u != g.u || g2.c != g.c) && fail.empty())
        fail = "conic not recovered";
    } catch (const Error& e) {
      fail = std::string("exception: ") + e.what();
    }
    if (!fail.empty()) {
      ++rep.failures;
      if (rep.first_counterexample.empty())
        rep.first_counterexample = "trial " + std::to_string(t) + ": " + fail;
    }
  }
  rep.elapsed_ms = sw.ms();
  return rep;
}

VerifyReport verify_springer_count(std::uint64_t trials, std::uint64_t seed) {
  VerifyReport rep;
  rep.suite = "springer-count(n=4,F3)";
  Stopwatch sw;
  Field f3 = Field::prime(3);
  std::vector<Subspace> lines = enumerate_subspaces(5, 1, f3);
  for (std::uint64_t t = 0; t < trials; ++t) {
    TrialRng rng(seed, t);
    Quadric q = random_rank_quadric(4, 3, f3, rng);
    ++rep.trials;
    std::string fail;
    SpringerLift lift = springer_lift(q, 4);
    if (lift.unique) fail = "rank-3 lift reported unique";
    Subspace ker = classify_quadric(q).vertex;
    std::uint64_t count = 0;
    bool saw_distinguished = false;
    for (const auto& l : lines)
      if (ker.contains(l)) {
        ++count;
        if (l == lift.kernel_space) saw_distinguished = true;
      }
    if (count != 4 && fail.empty())
      fail = "kernel line count " + std::to_string(count) + " != 4";
    if (!saw_distinguished && fail.empty())
      fail = "distinguished lift not among the valid lines";
    if (springer_push(lift, 4) != q && fail.empty())
      fail = "push-forward does not recover the quadric";
    if (!fail.empty()) {
      ++rep.failures;
      if (rep.first_counterexample.empty())
        rep.first_counterexample = "trial " + std::to_string(t) + ": " + fail +
                                   "\nB =\n" + dump_matrix(q.b());
    }
  }
  rep.elapsed_ms = sw.ms();
  return rep;
}

VerifyReport verify_fiber_count() {
  VerifyReport rep;
  rep.suite = "fiber-count(F2,F3;n=3,4)";
  Stopwatch sw;
  for (std::int64_t q : {2, 3}) {
    Field f = Field::prime(q);
    for (std::size_t n : {std::size_t(3), std::size_t(4)}) {
      std::size_t m = n + 1;
      // fixed distinct n-spaces
      Matrix bn(n, m, f), bnp(n, m, f);
      for (std::size_t i = 0; i < n; ++i) bn.set(i, i, Scalar::one(f));
      for (std::size_t i = 0; i + 1 < n; ++i) bnp.set(i, i, Scalar::one(f));
      bnp.set(n - 1, n, Scalar::one(f));
      Subspace vn = Subspace::span(bn), vnp = Subspace::span(bnp);
      Subspace common = intersect(vn, vnp);

      std::uint64_t valid = 0;
      std::vector<Subspace> all = enumerate_subspaces(m, n - 2, f);
      std::vector<const Subspace*> inside;
      for (const auto& s : all)
        if (common.contains(s)) inside.push_back(&s);
      for (const auto* a : inside)
        for (const auto* b : inside) {
          FlagTuple t;
          t.kind = FlagTuple::Kind::F1;
          t.vn2 = *a;
          t.vn2p = *b;
          t.vn = vn;
          t.vnp = vnp;
          t.diagonal_tag = t.is_diagonal();
          if (validate_flag(t, n).ok) ++valid;
        }
      std::uint64_t fiber = gaussian_count(n - 1, n - 2, std::uint64_t(q));
      std::uint64_t want = fiber * fiber;
      ++rep.trials;
      if (valid != want) {
        ++rep.failures;
        if (rep.first_counterexample.empty())
          rep.first_counterexample =
              "q=" + std::to_string(q) + " n=" + std::to_string(n) +
              ": count " + std::to_string(valid) + " != " +
              std::to_string(want);
      }
    }
  }
  rep.elapsed_ms = sw.ms();
  return rep;
}

VerifyReport verify_rho_sigma_images(std::uint64_t count, std::uint64_t seed) {
  VerifyReport rep;
  rep.suite = "rho-sigma-images(n=3)";
  Stopwatch sw;
  Field fq = Field::prime(10007);
  for (std::uint64_t t = 0; t < count; ++t) {
    TrialRng rng(seed, t);
    Field f = (t % 4 == 3) ? Field::rationals() : fq;
    ++rep.trials;
    std::string fail;
    // sigma: v = 0, w rank 1 with kernel the recovered enveloping 3-space
    ThreePlaneU us = random_3plane(3, PlaneConstraint::Sigma, 0, f, rng);
    ConicClass cs = classify(us);
    if (!std::holds_alternative<SigmaPlane>(cs)) {
      fail = "sigma generator misclassified";
    } else {
      auto [v, w] = spin36::split(
          spin36::plucker20(spin36::to_spin_plane(us)), f);
      if (!v.is_zero()) fail = "sigma image has nonzero v";
      if (rank(w) != 1 && fail.empty()) fail = "sigma image w rank != 1";
      if (fail.empty() &&
          reduce(w).kernel != std::get<SigmaPlane>(cs).vn)
        fail = "sigma image kernel differs from the recovered 3-space";
    }
    // rho: w = 0, v rank 1
    if (fail.empty()) {
      ThreePlaneU ur = random_3plane(3, PlaneConstraint::Rho, 0, f, rng);
      auto [v, w] = spin36::split(
          spin36::plucker20(spin36::to_spin_plane(ur)), f);
      if (!w.is_zero()) fail = "rho image has nonzero w";
      if (rank(v) != 1 && fail.empty()) fail = "rho image v rank != 1";
    }
    if (!fail.empty()) {
      ++rep.failures;
      if (rep.first_counterexample.empty())
        rep.first_counterexample = "trial " + std::to_string(t) + ": " + fail;
    }
  }
  rep.elapsed_ms = sw.ms();
  return rep;
}

std::string render_report(const VerifyReport& r) {
  std::ostringstream os;
  os << "suite: " << r.suite << "\ntrials: " << r.trials
     << "\nfailures: " << r.failures << "\nelapsed_ms: " << r.elapsed_ms;
  if (!r.first_counterexample.empty())
    os << "\nfirst_counterexample:\n" << r.first_counterexample;
  return os.str();
}

}  // namespace symdet
