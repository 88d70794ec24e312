// Command-line front end: exact classification, verification suites, and
// invariant tables over Q or F_p. Input documents are JSON; scalars are
// integers or "a/b" strings (floats are rejected). Reports end with a
// machine-parsable section introduced by ---RESULT---.
//
// Exit codes: 0 success / all checks pass; 1 a mathematically meaningful
// refusal (non-split, degenerate, wrong rank) or a verification failure;
// 2 malformed input.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "symdet/grassconic.hpp"
#include "symdet/invariants.hpp"
#include "symdet/sampler.hpp"
#include "symdet/spin36.hpp"

using json = nlohmann::json;
using namespace symdet;

namespace {

constexpr const char* kResultMarker = "---RESULT---";

Scalar parse_scalar(const json& j, const Field& f) {
  if (j.is_number_integer())
    return Scalar::from_int(j.get<std::int64_t>(), f);
  if (j.is_number_float())
    throw InputError("decimal floats are rejected; use integers or \"a/b\"");
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) {
        BigInt num(s);
        return Scalar::from_bigint(num, f);
      }
      BigInt num(s.substr(0, slash)), den(s.substr(slash + 1));
      if (f.is_rational()) return Scalar::rational(num, den);
      return Scalar::from_bigint(num, f) / Scalar::from_bigint(den, f);
    } catch (const std::runtime_error&) {
      throw InputError("bad scalar literal: " + s);
    }
  }
  throw InputError("scalar must be an integer or an \"a/b\" string");
}

Matrix parse_matrix(const json& j, const Field& f, const char* name) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw InputError(std::string(name) + " must be an array of rows");
  std::vector<std::vector<Scalar>> rows;
  for (const auto& r : j) {
    std::vector<Scalar> row;
    for (const auto& x : r) row.push_back(parse_scalar(x, f));
    rows.push_back(std::move(row));
  }
  return Matrix::from_rows(rows, f);
}

Subspace parse_subspace(const json& j, const Field& f, std::size_t ambient,
                        const char* name) {
  if (j.is_array() && j.empty()) return Subspace(ambient, f);
  Matrix m = parse_matrix(j, f, name);
  if (m.cols() != ambient)
    throw InputError(std::string(name) + " rows must have length " +
                     std::to_string(ambient));
  return Subspace::span(m);
}

std::vector<std::size_t> parse_subset_key(const std::string& key) {
  std::vector<std::size_t> subset;
  std::stringstream ss(key);
  std::string tok;
  while (std::getline(ss, tok, ','))
    subset.push_back(std::size_t(std::stoul(tok)) - 1);  // 1-based keys
  for (std::size_t i = 1; i < subset.size(); ++i)
    if (subset[i] <= subset[i - 1])
      throw InputError("subset key not strictly increasing: " + key);
  return subset;
}

ThreePlaneU parse_threeplane(const json& doc, const Field& f, std::size_t n) {
  if (!doc.contains("U")) throw InputError("missing field: U");
  const json& ju = doc["U"];
  if (!ju.is_array() || ju.size() != 3)
    throw InputError("U must be an array of exactly 3 wedge vectors");
  std::size_t m = n + 1;
  std::vector<WedgeVector> rows;
  for (const auto& entry : ju) {
    if (!entry.is_object())
      throw InputError("wedge vector must be a {subset: coefficient} object");
    WedgeVector v(n - 1, m, f);
    std::vector<Scalar> coords = v.coords();
    for (auto it = entry.begin(); it != entry.end(); ++it) {
      auto subset = parse_subset_key(it.key());
      if (subset.size() != n - 1)
        throw InputError("subset key " + it.key() + " must have n-1 indices");
      for (auto x : subset)
        if (x >= m) throw InputError("subset index out of range: " + it.key());
      coords[subset_rank(m, subset)] = parse_scalar(it.value(), f);
    }
    rows.emplace_back(n - 1, m, coords);
  }
  return ThreePlaneU::from_rows(n, rows);
}

json load_doc(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InputError(std::string("JSON parse error: ") + e.what());
  }
  return j;
}

Field doc_field(const json& doc) {
  if (!doc.contains("field")) return Field::rationals();
  return Field::parse(doc["field"].get<std::string>());
}

std::size_t doc_n(const json& doc) {
  if (!doc.contains("n")) throw InputError("missing field: n");
  if (!doc["n"].is_number_integer()) throw InputError("n must be an integer");
  auto n = doc["n"].get<std::int64_t>();
  if (n < 1 || n > 16) throw InputError("n out of range");
  return std::size_t(n);
}

std::string row_str(const std::vector<Scalar>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += v[i].str() + (i + 1 < v.size() ? "," : "");
  return s + "]";
}

std::string rows_str(const Matrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i)
    s += row_str(m.row(i)) + (i + 1 < m.rows() ? "," : "");
  return s + "]";
}

std::string wedge_str(const WedgeVector& w) {
  const auto& subs = lex_subsets(w.ambient(), w.degree());
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (w.coord(i).is_zero()) continue;
    if (!first) s += ", ";
    first = false;
    for (std::size_t k = 0; k < subs[i].size(); ++k)
      s += std::to_string(subs[i][k] + 1) + (k + 1 < subs[i].size() ? "," : "");
    s += ": " + w.coord(i).str();
  }
  return s + "}";
}

struct Report {
  std::ostringstream human;
  std::vector<std::pair<std::string, std::string>> machine;
  void kv(const std::string& k, const std::string& v) {
    machine.emplace_back(k, v);
  }
  int finish(int code) {
    std::cout << human.str() << kResultMarker << "\n";
    for (const auto& [k, v] : machine) std::cout << k << ": " << v << "\n";
    std::cout << "exit: " << code << "\n";
    return code;
  }
};

// --- subcommand bodies ----------------------------------------------------

int cmd_classify_quadric(const std::string& path) {
  json doc = load_doc(path);
  Field f = doc_field(doc);
  std::size_t n = doc_n(doc);
  if (!doc.contains("matrix")) throw InputError("missing field: matrix");
  Quadric q(n, parse_matrix(doc["matrix"], f, "matrix"));
  QuadricClass cls = classify_quadric(q);
  Report rep;
  rep.human << "quadric in P^" << n << " over " << f.name() << "\n"
            << "rank " << cls.rank << ", singular locus of projective dimension "
            << (cls.vertex.dim() == 0 ? std::string("(empty)")
                                      : std::to_string(cls.vertex.dim() - 1))
            << "\n";
  rep.kv("field", f.name());
  rep.kv("n", std::to_string(n));
  rep.kv("rank", std::to_string(cls.rank));
  rep.kv("stratum", std::to_string(cls.stratum));
  rep.kv("codim", std::to_string(cls.codim));
  rep.kv("vertex_dim", std::to_string(cls.vertex.dim()));
  rep.kv("vertex_basis", rows_str(cls.vertex.basis()));
  return rep.finish(0);
}

int cmd_rulings(const std::string& path) {
  json doc = load_doc(path);
  Field f = doc_field(doc);
  std::size_t n = doc_n(doc);
  Quadric q(n, parse_matrix(doc.at("matrix"), f, "matrix"));
  auto [fam1, fam2] = rulings_rank4(q);
  Report rep;
  rep.human << "two rulings of a split rank-4 quadric in P^" << n << "\n";
  auto emit = [&](const char* tag, const PlaneFamily& fam) {
    rep.kv(std::string(tag) + "_moving_a", rows_str(fam.moving_a));
    rep.kv(std::string(tag) + "_moving_b", rows_str(fam.moving_b));
    rep.kv(std::string(tag) + "_fixed", rows_str(fam.fixed));
    rep.kv(std::string(tag) + "_span",
           rows_str(fam.span_u.space().basis()));
    rep.kv(std::string(tag) + "_conic", rows_str(fam.conic));
  };
  emit("family1", fam1);
  emit("family2", fam2);
  return rep.finish(0);
}

int cmd_same_ruling(const std::string& path) {
  json doc = load_doc(path);
  Field f = doc_field(doc);
  std::size_t n = doc_n(doc);
  Quadric q(n, parse_matrix(doc.at("matrix"), f, "matrix"));
  Subspace p = parse_subspace(doc.at("P"), f, n + 1, "P");
  Subspace p2 = parse_subspace(doc.at("P2"), f, n + 1, "P2");
  bool same = same_ruling(q, p, p2);
  Report rep;
  rep.human << (same ? "same ruling\n" : "opposite rulings\n");
  rep.kv("same_ruling", same ? "true" : "false");
  return rep.finish(0);
}

int cmd_classify_conic(const std::string& path) {
  json doc = load_doc(path);
  Field f = doc_field(doc);
  std::size_t n = doc_n(doc);
  ThreePlaneU u = parse_threeplane(doc, f, n);
  ConicClass cls = classify(u);
  Report rep;
  rep.human << "plane class: " << conic_class_name(cls) << "\n";
  rep.kv("class", conic_class_name(cls));
  if (const auto* tau = std::get_if<TauConic>(&cls)) {
    rep.kv("conic", rows_str(tau->c));
    rep.kv("conic_rank", std::to_string(tau->conic_rank));
  } else if (const auto* rho = std::get_if<RhoPlane>(&cls)) {
    rep.kv("vn2", rows_str(rho->vn2.basis()));
  } else if (const auto* sig = std::get_if<SigmaPlane>(&cls)) {
    rep.kv("vn3", rows_str(sig->vn3.basis()));
    rep.kv("vn", rows_str(sig->vn.basis()));
  } else {
    rep.kv("rank_phi",
           std::to_string(std::get<NotOnYbar>(cls).rank_phi));
  }
  return rep.finish(0);
}

int cmd_y0_validate(const std::string& path) {
  json doc = load_doc(path);
  Field f = doc_field(doc);
  std::size_t n = doc_n(doc);
  ThreePlaneU u = parse_threeplane(doc, f, n);
  GrassConic g(u, parse_matrix(doc.at("c"), f, "c"));
  bool ok = y0_validate(g);
  Report rep;
  rep.human << (ok ? "valid conic point\n" : "not a conic point\n");
  rep.kv("valid", ok ? "true" : "false");
  return rep.finish(ok ? 0 : 1);
}

int cmd_y3_member(const std::string& path) {
  json doc = load_doc(path);
  Field f = doc_field(doc);
  std::size_t n = doc_n(doc);
  ThreePlaneU u = parse_threeplane(doc, f, n);
  Subspace w = parse_subspace(doc.at("W"), f, n + 1, "W");
  bool ok = y3_member(u, w);
  Report rep;
  rep.human << (ok ? "member\n" : "not a member\n");
  rep.kv("member", ok ? "true" : "false");
  return rep.finish(ok ? 0 : 1);
}

FlagTuple parse_flags(const json& doc, const Field& f, std::size_t n) {
  if (!doc.contains("kind")) throw InputError("missing field: kind");
  std::string kind = doc["kind"].get<std::string>();
  FlagTuple t;
  if (kind == "F1")
    t.kind = FlagTuple::Kind::F1;
  else if (kind == "F2")
    t.kind = FlagTuple::Kind::F2;
  else if (kind == "D3")
    t.kind = FlagTuple::Kind::D3;
  else if (kind == "D4")
    t.kind = FlagTuple::Kind::D4;
  else
    throw InputError("kind must be one of F1, F2, D3, D4");
  auto grab = [&](const char* name,
                  std::optional<Subspace>& slot) {
    if (doc.contains(name))
      slot = parse_subspace(doc[name], f, n + 1, name);
  };
  grab("Vn3", t.vn3);
  grab("Vn2", t.vn2);
  grab("Vn2p", t.vn2p);
  grab("Vn1", t.vn1);
  grab("Vn", t.vn);
  grab("Vnp", t.vnp);
  if (doc.contains("diagonal_tag"))
    t.diagonal_tag = doc["diagonal_tag"].get<bool>();
  return t;
}

int cmd_flags_validate(const std::string& path) {
  json doc = load_doc(path);
  Field f = doc_field(doc);
  std::size_t n = doc_n(doc);
  FlagTuple t = parse_flags(doc, f, n);
  FlagCheck chk = validate_flag(t, n);
  Report rep;
  rep.human << (chk.ok ? "valid tuple\n" : "invalid tuple\n");
  for (const auto& v : chk.violations) rep.human << "violated: " << v << "\n";
  rep.kv("valid", chk.ok ? "true" : "false");
  rep.kv("violations", std::to_string(chk.violations.size()));
  for (std::size_t i = 0; i < chk.violations.size(); ++i)
    rep.kv("violation" + std::to_string(i), chk.violations[i]);
  return rep.finish(chk.ok ? 0 : 1);
}

int cmd_flags_to_conic(const std::string& path) {
  json doc = load_doc(path);
  Field f = doc_field(doc);
  std::size_t n = doc_n(doc);
  FlagTuple t = parse_flags(doc, f, n);
  GrassConic g = flags_to_conic(t, n);
  Report rep;
  rep.human << "rank-2 conic spanned by the two lines\n";
  rep.kv("span", rows_str(g.u.space().basis()));
  rep.kv("conic", rows_str(g.c));
  return rep.finish(0);
}

int cmd_flags_from_conic(const std::string& path) {
  json doc = load_doc(path);
  Field f = doc_field(doc);
  std::size_t n = doc_n(doc);
  ThreePlaneU u = parse_threeplane(doc, f, n);
  GrassConic g(u, parse_matrix(doc.at("c"), f, "c"));
  FlagTuple t = conic_to_flags(g);
  Report rep;
  rep.human << "recovered line-pair flags\n";
  rep.kv("Vn2", rows_str(t.vn2->basis()));
  rep.kv("Vn", rows_str(t.vn->basis()));
  rep.kv("Vn2p", rows_str(t.vn2p->basis()));
  rep.kv("Vnp", rows_str(t.vnp->basis()));
  return rep.finish(0);
}

spin36::Coords20 parse_p20(const json& doc, const Field& f) {
  if (!doc.contains("p")) throw InputError("missing field: p");
  const json& jp = doc["p"];
  spin36::Coords20 p;
  p.fill(Scalar::zero(f));
  if (jp.is_array()) {
    if (jp.size() != 20) throw InputError("p array must have 20 entries");
    for (std::size_t i = 0; i < 20; ++i) p[i] = parse_scalar(jp[i], f);
    return p;
  }
  if (!jp.is_object())
    throw InputError("p must be a 20-array or a {\"abc\": coeff} object");
  for (auto it = jp.begin(); it != jp.end(); ++it) {
    const std::string& key = it.key();
    if (key.size() != 3) throw InputError("p key must have 3 symbol digits");
    int a = key[0] - '0', b = key[1] - '0', c = key[2] - '0';
    if (a < 1 || a >= b || b >= c || c > 6)
      throw InputError("p key must be an increasing triple over 1..6: " + key);
    p[spin36::triple_rank(a, b, c)] = parse_scalar(it.value(), f);
  }
  return p;
}

std::pair<Matrix, Matrix> parse_vw(const json& doc, const Field& f) {
  if (doc.contains("v") && doc.contains("w"))
    return {parse_matrix(doc["v"], f, "v"), parse_matrix(doc["w"], f, "w")};
  auto p = parse_p20(doc, f);
  return spin36::split(p, f);
}

int cmd_spin36_split(const std::string& path) {
  json doc = load_doc(path);
  Field f = doc_field(doc);
  auto p = parse_p20(doc, f);
  auto [v, w] = spin36::split(p, f);
  Report rep;
  rep.human << "v =\n" << v.str() << "\nw =\n" << w.str() << "\n";
  rep.kv("v", rows_str(v));
  rep.kv("w", rows_str(w));
  return rep.finish(0);
}

int cmd_spin36_residuals(const std::string& path) {
  json doc = load_doc(path);
  Field f = doc_field(doc);
  auto [v, w] = parse_vw(doc, f);
  auto res = spin36::g36_residuals(v, w);
  std::size_t nonzero = 0;
  for (const auto& r : res)
    if (!r.is_zero()) ++nonzero;
  Report rep;
  rep.human << res.size() << " generators, " << nonzero << " nonzero\n";
  rep.kv("generators", std::to_string(res.size()));
  rep.kv("nonzero", std::to_string(nonzero));
  rep.kv("on_chart", nonzero == 0 ? "true" : "false");
  std::string all = "[";
  for (std::size_t i = 0; i < res.size(); ++i)
    all += res[i].str() + (i + 1 < res.size() ? "," : "");
  rep.kv("residuals", all + "]");
  return rep.finish(nonzero == 0 ? 0 : 1);
}

int cmd_spin36_identities(const std::string& path) {
  json doc = load_doc(path);
  Field f = doc_field(doc);
  auto [v, w] = parse_vw(doc, f);
  spin36::IdentityReport idr = spin36::check_identities(v, w);
  Report rep;
  rep.human << "identities " << (idr.all_ok() ? "hold" : "FAIL") << "\n";
  rep.kv("d", idr.d.str());
  rep.kv("det_v", idr.det_v.str());
  rep.kv("det_w", idr.det_w.str());
  rep.kv("rank_v", std::to_string(idr.rank_v));
  rep.kv("rank_w", std::to_string(idr.rank_w));
  rep.kv("dets_equal", idr.dets_equal ? "true" : "false");
  rep.kv("product_scalar", idr.product_scalar ? "true" : "false");
  rep.kv("no_rank3", idr.no_rank3 ? "true" : "false");
  rep.kv("rank2_paired", idr.rank2_paired ? "true" : "false");
  rep.kv("rank_le1_paired", idr.rank_le1_paired ? "true" : "false");
  if (doc.contains("sqrt_det")) {
    Scalar sd = parse_scalar(doc["sqrt_det"], f);
    rep.kv("sheet_sign", std::to_string(spin36::sheet_sign(v, w, sd)));
  }
  return rep.finish(idr.all_ok() ? 0 : 1);
}

int cmd_spin36_fiber(const std::string& path) {
  json doc = load_doc(path);
  Field f = doc_field(doc);
  Matrix w = parse_matrix(doc.at("w"), f, "w");
  Matrix v = parse_matrix(doc.at("v"), f, "v");
  spin36::FiberProbe probe = spin36::fiber_probe(w, v);
  const char* type = nullptr;
  switch (probe.type) {
    case spin36::FiberType::TwoPoints: type = "two-points"; break;
    case spin36::FiberType::OnePoint: type = "one-point"; break;
    case spin36::FiberType::SegreQuadric: type = "p1xp1"; break;
    case spin36::FiberType::VeroneseCone: type = "weighted-cone"; break;
  }
  Report rep;
  rep.human << "fiber type " << type << ", candidate "
            << (probe.member ? "member" : "non-member") << "\n";
  rep.kv("type", type);
  rep.kv("member", probe.member ? "true" : "false");
  rep.kv("structured_member", probe.structured_member ? "true" : "false");
  rep.kv("normal_form_available",
         probe.normal_form_available ? "true" : "false");
  for (std::size_t i = 0; i < probe.points.size(); ++i)
    rep.kv("point" + std::to_string(i), rows_str(probe.points[i]));
  if (!probe.axis.empty()) rep.kv("axis", row_str(probe.axis));
  return rep.finish(0);
}

std::string rat_str(const BigRat& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

int cmd_table(std::size_t n) {
  Report rep;
  rep.human << "stratum invariants for n = " << n << "\n"
            << "side r dim codim fano disc gor cy_codim cy_dim cy_smooth\n";
  auto emit = [&](Side side, const char* tag, std::size_t r) {
    StratumInvariants s = strata_invariants(n, r, side);
    bool smooth = (side == Side::T) ? s.cy_smooth_t : s.cy_smooth_s;
    rep.human << tag << " " << r << " " << s.dim << " " << s.codim << " "
              << rat_str(s.fano_index) << " " << rat_str(s.discrepancy) << " "
              << s.gorenstein_index << " " << rat_str(s.cy_codim) << " "
              << rat_str(s.cy_dim) << " " << (smooth ? "yes" : "no") << "\n";
    std::string key = std::string(tag) + "[r=" + std::to_string(r) + "]";
    std::ostringstream v;
    v << "dim=" << s.dim << " codim=" << s.codim
      << " fano=" << rat_str(s.fano_index)
      << " K=(" << s.k_coeffs.first << "," << s.k_coeffs.second << ")"
      << " E=(" << s.er_coeffs.first << "," << s.er_coeffs.second << ")"
      << " disc=" << rat_str(s.discrepancy) << " gor=" << s.gorenstein_index
      << " cy_codim=" << rat_str(s.cy_codim)
      << " cy_dim=" << rat_str(s.cy_dim)
      << " cy_smooth=" << (smooth ? "true" : "false");
    if (s.f_discrepancy) v << " F_disc=" << *s.f_discrepancy;
    rep.kv(key, v.str());
  };
  for (std::size_t r = 1; r <= n + 1; ++r) emit(Side::S, "S", r);
  for (std::size_t r = 1; r <= n + 1; ++r) emit(Side::SDual, "S*", r);
  for (std::size_t r = 2; r <= n + 1; r += 2) emit(Side::T, "T", r);
  for (std::size_t r = 2; r <= n; ++r) {
    DualityRow d = duality_row(n, r);
    rep.kv("duality[r=" + std::to_string(r) + "]",
           rat_str(d.cy_dim_s) + "=" + rat_str(d.cy_dim_dual) +
               (d.equal ? " ok" : " MISMATCH"));
    if (!d.equal) return rep.finish(1);
  }
  return rep.finish(0);
}

int cmd_verify(const std::string& suite, std::size_t n,
               const std::string& field_spec, std::uint64_t trials,
               std::uint64_t seed, std::size_t r) {
  Field f = Field::parse(field_spec);
  VerifyReport report;
  if (suite == "propB")
    report = verify_prop_b(n, f, trials, seed);
  else if (suite == "plucker36") {
    report = verify_plucker36(f, trials, seed);
    VerifyReport neg = verify_plucker36_negative(f, trials, seed);
    report.suite += "+negative";
    report.trials += neg.trials;
    report.failures += neg.failures;
    report.elapsed_ms += neg.elapsed_ms;
    if (report.first_counterexample.empty())
      report.first_counterexample = neg.first_counterexample;
  } else if (suite == "rulings")
    report = verify_rulings(n, f, trials, seed);
  else if (suite == "flags-roundtrip")
    report = verify_flags_roundtrip(n, f, trials, seed);
  else if (suite == "jacobian")
    report = verify_jacobian(n, r, f, trials, seed);
  else if (suite == "springer-count")
    report = verify_springer_count(trials, seed);
  else if (suite == "fiber-count")
    report = verify_fiber_count();
  else if (suite == "rho-sigma")
    report = verify_rho_sigma_images(trials, seed);
  else
    throw InputError("unknown suite: " + suite);
  Report rep;
  rep.human << render_report(report) << "\n";
  rep.kv("suite", report.suite);
  rep.kv("trials", std::to_string(report.trials));
  rep.kv("failures", std::to_string(report.failures));
  return rep.finish(report.failures == 0 ? 0 : 1);
}

const char* condition_name(const ConditionError& e) {
  if (dynamic_cast<const NonSplitQuadric*>(&e)) return "NonSplitQuadric";
  if (dynamic_cast<const NonSplitForm*>(&e)) return "NonSplitForm";
  if (dynamic_cast<const WrongRank*>(&e)) return "WrongRank";
  if (dynamic_cast<const RankTooHigh*>(&e)) return "RankTooHigh";
  if (dynamic_cast<const NotIsotropic*>(&e)) return "NotIsotropic";
  if (dynamic_cast<const AmbiguousQuadric*>(&e)) return "AmbiguousQuadric";
  if (dynamic_cast<const DegenerateFlags*>(&e)) return "DegenerateFlags";
  if (dynamic_cast<const WrongConicRank*>(&e)) return "WrongConicRank";
  if (dynamic_cast<const NotOnG36*>(&e)) return "NotOnG36";
  return "Condition";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with symmetric determinantal loci and "
               "conics on Grassmannians"};
  app.require_subcommand(1);

  std::string in_path, field_spec = "Fp:10007", suite;
  std::size_t n = 4, r = 3;
  std::uint64_t trials = 200, seed = 1;

  auto add_in = [&](CLI::App* cmd) {
    cmd->add_option("--in", in_path, "input JSON document")->required();
  };

  auto* c1 = app.add_subcommand("classify-quadric", "rank, vertex, stratum");
  add_in(c1);
  auto* c2 = app.add_subcommand("rulings", "the two plane families of a "
                                           "split rank-4 quadric");
  add_in(c2);
  auto* c3 = app.add_subcommand("same-ruling", "component test for two "
                                               "isotropic planes");
  add_in(c3);
  auto* c4 = app.add_subcommand("classify-conic", "tau/rho/sigma class of a "
                                                  "3-plane");
  add_in(c4);
  auto* c5 = app.add_subcommand("y0-validate", "conic-point validity");
  add_in(c5);
  auto* c6 = app.add_subcommand("y3-member", "annihilator membership");
  add_in(c6);

  auto* flags = app.add_subcommand("flags", "flag-tuple operations");
  flags->require_subcommand(1);
  auto* f1 = flags->add_subcommand("validate", "check tuple conditions");
  add_in(f1);
  auto* f2 = flags->add_subcommand("to-conic", "span the line pair");
  add_in(f2);
  auto* f3 = flags->add_subcommand("from-conic", "recover the flags");
  add_in(f3);

  auto* spin = app.add_subcommand("spin36", "double-spin chart of G(3,6)");
  spin->require_subcommand(1);
  auto* s1 = spin->add_subcommand("split", "p -> (v, w)");
  add_in(s1);
  auto* s2 = spin->add_subcommand("residuals", "chart generators");
  add_in(s2);
  auto* s3 = spin->add_subcommand("identities", "determinant and rank "
                                                "identities");
  add_in(s3);
  auto* s4 = spin->add_subcommand("fiber", "fiber type and membership");
  add_in(s4);

  auto* tbl = app.add_subcommand("table", "closed-form stratum invariants");
  tbl->add_option("--n", n, "projective dimension")->required();

  auto* ver = app.add_subcommand("verify", "seeded verification suites");
  ver->add_option("suite", suite,
                  "propB | plucker36 | rulings | flags-roundtrip | jacobian | "
                  "springer-count | fiber-count | rho-sigma")
      ->required();
  ver->add_option("--n", n, "projective dimension");
  ver->add_option("--field", field_spec, "Q or Fp:<p>");
  ver->add_option("--trials", trials, "trial count");
  ver->add_option("--seed", seed, "root seed");
  ver->add_option("--r", r, "rank (jacobian suite)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c1->parsed()) return cmd_classify_quadric(in_path);
    if (c2->parsed()) return cmd_rulings(in_path);
    if (c3->parsed()) return cmd_same_ruling(in_path);
    if (c4->parsed()) return cmd_classify_conic(in_path);
    if (c5->parsed()) return cmd_y0_validate(in_path);
    if (c6->parsed()) return cmd_y3_member(in_path);
    if (flags->parsed()) {
      if (f1->parsed()) return cmd_flags_validate(in_path);
      if (f2->parsed()) return cmd_flags_to_conic(in_path);
      if (f3->parsed()) return cmd_flags_from_conic(in_path);
    }
    if (spin->parsed()) {
      if (s1->parsed()) return cmd_spin36_split(in_path);
      if (s2->parsed()) return cmd_spin36_residuals(in_path);
      if (s3->parsed()) return cmd_spin36_identities(in_path);
      if (s4->parsed()) return cmd_spin36_fiber(in_path);
    }
    if (tbl->parsed()) return cmd_table(n);
    if (ver->parsed()) return cmd_verify(suite, n, field_spec, trials, seed, r);
  } catch (const InputError& e) {
    std::cout << "input error: " << e.what() << "\n"
              << kResultMarker << "\nerror: " << e.what() << "\nexit: 2\n";
    return 2;
  } catch (const ConditionError& e) {
    std::cout << "refused (" << condition_name(e) << "): " << e.what() << "\n"
              << kResultMarker << "\ncondition: " << condition_name(e)
              << "\nerror: " << e.what() << "\nexit: 1\n";
    return 1;
  } catch (const Error& e) {
    std::cout << "internal error: " << e.what() << "\n"
              << kResultMarker << "\nerror: " << e.what() << "\nexit: 2\n";
    return 2;
  }
  return 2;
}
