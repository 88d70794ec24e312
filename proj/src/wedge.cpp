#include "symdet/wedge.hpp"

#include <algorithm>

namespace symdet {

WedgeVector::WedgeVector(std::size_t degree, std::size_t ambient,
                         const Field& f)
    : degree_(degree),
      ambient_(ambient),
      field_(f),
      coords_(binomial(ambient, degree), Scalar::zero(f)) {}

WedgeVector::WedgeVector(std::size_t degree, std::size_t ambient,
                         std::vector<Scalar> coords)
    : degree_(degree),
      ambient_(ambient),
      field_(coords.empty() ? Field::rationals() : coords[0].field()),
      coords_(std::move(coords)) {
  if (coords_.size() != binomial(ambient, degree))
    throw DimensionMismatch("wedge coordinate count");
}

WedgeVector WedgeVector::basis_element(std::size_t degree, std::size_t ambient,
                                       const std::vector<std::size_t>& subset,
                                       const Field& f) {
  WedgeVector v(degree, ambient, f);
  v.coords_[subset_rank(ambient, subset)] = Scalar::one(f);
  return v;
}

WedgeVector WedgeVector::from_vector(const std::vector<Scalar>& v) {
  if (v.empty()) throw DimensionMismatch("empty vector");
  return WedgeVector(1, v.size(), v);
}

bool WedgeVector::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

WedgeVector WedgeVector::operator+(const WedgeVector& o) const {
  if (degree_ != o.degree_ || ambient_ != o.ambient_)
    throw DimensionMismatch("wedge sum shapes");
  std::vector<Scalar> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] + o.coords_[i];
  return WedgeVector(degree_, ambient_, std::move(c));
}

WedgeVector WedgeVector::operator-(const WedgeVector& o) const {
  if (degree_ != o.degree_ || ambient_ != o.ambient_)
    throw DimensionMismatch("wedge difference shapes");
  std::vector<Scalar> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] - o.coords_[i];
  return WedgeVector(degree_, ambient_, std::move(c));
}

WedgeVector WedgeVector::scaled(const Scalar& s) const {
  std::vector<Scalar> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] * s;
  return WedgeVector(degree_, ambient_, std::move(c));
}

bool WedgeVector::operator==(const WedgeVector& o) const {
  return degree_ == o.degree_ && ambient_ == o.ambient_ &&
         coords_ == o.coords_;
}

std::size_t subset_rank(std::size_t m,
                        const std::vector<std::size_t>& subset) {
  // Number of k-subsets lexicographically before `subset`.
  std::size_t k = subset.size();
  std::size_t rank = 0;
  std::size_t prev = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = prev; c < subset[i]; ++c)
      rank += binomial(m - c - 1, k - i - 1);
    prev = subset[i] + 1;
  }
  return rank;
}

int merge_sign(const std::vector<std::size_t>& a,
               const std::vector<std::size_t>& b) {
  // Inversions between the two sorted sequences.
  std::size_t inv = 0;
  for (auto x : a)
    for (auto y : b)
      if (x > y) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

WedgeVector wedge(const WedgeVector& a, const WedgeVector& b) {
  if (a.ambient() != b.ambient())
    throw DimensionMismatch("wedge product ambient");
  if (a.field() != b.field()) throw FieldMismatch("wedge product fields");
  std::size_t m = a.ambient();
  std::size_t k = a.degree() + b.degree();
  if (k > m) throw InputError("wedge degree overflow");
  WedgeVector out(k, m, a.field());
  const auto& sa = lex_subsets(m, a.degree());
  const auto& sb = lex_subsets(m, b.degree());
  std::vector<Scalar> acc(binomial(m, k), Scalar::zero(a.field()));
  for (std::size_t ia = 0; ia < sa.size(); ++ia) {
    if (a.coord(ia).is_zero()) continue;
    for (std::size_t ib = 0; ib < sb.size(); ++ib) {
      if (b.coord(ib).is_zero()) continue;
      const auto& S = sa[ia];
      const auto& T = sb[ib];
      // disjointness
      bool disjoint = true;
      {
        std::size_t i = 0, j = 0;
        while (i < S.size() && j < T.size()) {
          if (S[i] == T[j]) {
            disjoint = false;
            break;
          }
          (S[i] < T[j]) ? ++i : ++j;
        }
      }
      if (!disjoint) continue;
      std::vector<std::size_t> merged(S.size() + T.size());
      std::merge(S.begin(), S.end(), T.begin(), T.end(), merged.begin());
      int sgn = merge_sign(S, T);
      Scalar term = a.coord(ia) * b.coord(ib);
      std::size_t r = subset_rank(m, merged);
      acc[r] = (sgn > 0) ? acc[r] + term : acc[r] - term;
    }
  }
  return WedgeVector(k, m, std::move(acc));
}

namespace {

std::vector<std::size_t> complement(std::size_t m,
                                    const std::vector<std::size_t>& s) {
  std::vector<bool> in(m, false);
  for (auto x : s) in[x] = true;
  std::vector<std::size_t> c;
  for (std::size_t i = 0; i < m; ++i)
    if (!in[i]) c.push_back(i);
  return c;
}

}  // namespace

WedgeVector dual_two_form(const WedgeVector& omega) {
  std::size_t m = omega.ambient();
  if (omega.degree() != m - 2)
    throw InputError("dual_two_form expects degree ambient-2");
  WedgeVector out(2, m, omega.field());
  const auto& subsets = lex_subsets(m, m - 2);
  std::vector<Scalar> acc(binomial(m, 2), Scalar::zero(omega.field()));
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    if (omega.coord(i).is_zero()) continue;
    auto cmpl = complement(m, subsets[i]);
    int sgn = merge_sign(subsets[i], cmpl);
    std::size_t r = subset_rank(m, cmpl);
    acc[r] = (sgn > 0) ? acc[r] + omega.coord(i) : acc[r] - omega.coord(i);
  }
  return WedgeVector(2, m, std::move(acc));
}

WedgeVector dual_two_form_inverse(const WedgeVector& beta) {
  std::size_t m = beta.ambient();
  if (beta.degree() != 2) throw InputError("inverse duality expects degree 2");
  const auto& subsets = lex_subsets(m, 2);
  std::vector<Scalar> acc(binomial(m, m - 2), Scalar::zero(beta.field()));
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    if (beta.coord(i).is_zero()) continue;
    auto cmpl = complement(m, subsets[i]);  // the (m-2)-subset
    int sgn = merge_sign(cmpl, subsets[i]);
    std::size_t r = subset_rank(m, cmpl);
    acc[r] = (sgn > 0) ? acc[r] + beta.coord(i) : acc[r] - beta.coord(i);
  }
  return WedgeVector(m - 2, m, std::move(acc));
}

Subspace wedge_annihilator(const WedgeVector& omega) {
  std::size_t m = omega.ambient();
  const Field& f = omega.field();
  if (omega.degree() + 1 > m) return Subspace(m, f);
  std::size_t ncoords = binomial(m, omega.degree() + 1);
  Matrix sys(ncoords, m, f);
  for (std::size_t i = 0; i < m; ++i) {
    WedgeVector ei = WedgeVector::basis_element(1, m, {i}, f);
    WedgeVector prod = wedge(ei, omega);
    for (std::size_t t = 0; t < ncoords; ++t) sys.set(t, i, prod.coord(t));
  }
  Echelon e = echelon(sys);
  return Subspace::span(e.kernel_rows);
}

WedgeVector push_forward(const Matrix& g, const WedgeVector& omega) {
  std::size_t m = omega.ambient();
  if (g.rows() != m || g.cols() != m)
    throw DimensionMismatch("push-forward matrix shape");
  std::size_t k = omega.degree();
  const auto& subsets = lex_subsets(m, k);
  std::vector<Scalar> acc(binomial(m, k), Scalar::zero(omega.field()));
  for (std::size_t is = 0; is < subsets.size(); ++is) {
    if (omega.coord(is).is_zero()) continue;
    for (std::size_t it = 0; it < subsets.size(); ++it) {
      Scalar minor = det(g.submatrix(subsets[it], subsets[is]));
      if (minor.is_zero()) continue;
      acc[it] = acc[it] + minor * omega.coord(is);
    }
  }
  return WedgeVector(k, m, std::move(acc));
}

}  // namespace symdet
