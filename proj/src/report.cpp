#include "toric/report.hpp"

#include <chrono>
#include <cstdlib>
#include <sstream>

#include "toric/divisor.hpp"
#include "toric/io.hpp"

namespace toric {

namespace {

constexpr const char* kNotNormal = "skipped: not normal";

class Checks {
 public:
  void record(const std::string& name, bool ok, Json detail = nullptr) {
    Json entry;
    entry["name"] = name;
    entry["status"] = ok ? "PASS" : "FAIL";
    if (!detail.is_null()) entry["detail"] = std::move(detail);
    failed_ = failed_ || !ok;
    list_.push_back(std::move(entry));
  }
  void equal(const std::string& name, const Json& lhs, const Json& rhs) {
    Json detail;
    detail["lhs"] = lhs;
    detail["rhs"] = rhs;
    record(name, lhs == rhs, std::move(detail));
  }
  void skip(const std::string& name, const std::string& reason) {
    Json entry;
    entry["name"] = name;
    entry["status"] = "SKIPPED";
    entry["reason"] = reason;
    list_.push_back(std::move(entry));
  }
  bool failed() const { return failed_; }
  const Json& list() const { return list_; }

 private:
  Json list_ = Json::array();
  bool failed_ = false;
};

class Stopwatch {
 public:
  explicit Stopwatch(bool enabled) : enabled_(enabled) {}
  void lap(const std::string& section) {
    if (!enabled_) return;
    const auto now = std::chrono::steady_clock::now();
    laps_[section] = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
  }
  bool enabled() const { return enabled_; }
  const Json& laps() const { return laps_; }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
  Json laps_ = Json::object();
};

Json bounds_json(const SimplicialComplex& c, const AnalysisOptions& o) {
  Json b;
  b["max_normality_height"] = o.max_normality_height > 0 ? o.max_normality_height : c.n();
  b["radical_bound"] = o.radical_bound;
  b["kernel_bound"] = o.kernel_bound;
  b["perfect_cap"] = o.perfect_cap;
  b["point_budget"] = o.point_budget;
  return b;
}

Json prime_json(const MonomialPrime& p) {
  Json j;
  j["form"] = vector_json(p.form.coeffs);
  j["kind"] = to_string(p.kind);
  if (p.kind == PrimeKind::Cover) j["cover"] = face_json(p.cover);
  if (p.kind == PrimeKind::Coordinate) j["coordinate"] = p.coordinate;
  j["t_coeff"] = p.t_coefficient;
  if (p.kind == PrimeKind::Extra) j["generators"] = faces_json(p.generators);
  return j;
}

Json binomial_json(const Binomial& b) {
  Json j;
  j["kind"] = b.kind() == BinomialKind::F ? "F" : "G";
  Json prov = Json::array();
  if (b.from_f) prov.push_back("F");
  if (b.from_g) prov.push_back("G");
  j["provenance"] = prov;
  j["lead"] = {b.lead.first + 1, b.lead.second + 1};
  j["trail"] = {b.trail.first + 1, b.trail.second + 1};
  if (b.x) j["x"] = *b.x;
  return j;
}

Json monomial_json(const Monomial& m) {
  Json out = Json::array();
  for (Eigen::Index k = 0; k < m.size(); ++k)
    for (int e = 0; e < m(k); ++e) out.push_back(k + 1);
  return out;
}

// The gb section; verdicts also go to `checks` when given.
Json gb_section(const SimplicialComplex& c, const AnalysisOptions& o, Checks* checks) {
  const FaceOrder fo = face_order(c);
  const auto basis = generate_basis(fo);
  Json j;
  j["leaf_order"] = faces_json(fo.facets);
  j["order"] = faces_json(fo.total);
  Json blocks = Json::array();
  for (std::size_t b = 0; b < fo.blocks.size(); ++b) {
    Json ids = Json::array();
    for (int k = 0; k < fo.size(); ++k)
      if (fo.block[static_cast<std::size_t>(k)] == static_cast<int>(b)) ids.push_back(k + 1);
    blocks.push_back(ids);
  }
  j["blocks"] = blocks;
  j["binomials"] = Json::array();
  for (const auto& b : basis) j["binomials"].push_back(binomial_json(b));

  bool leads_ok = true;
  std::string lead_error;
  try {
    for (const auto& b : basis) degrevlex_leading(b, fo);
  } catch (const Error& e) {
    leads_ok = false;
    lead_error = e.what();
  }
  j["leading_terms_verified"] = leads_ok;

  const auto bb = buchberger_verify(basis, fo);
  j["buchberger"] = bb.ok;
  j["buchberger_pairs"] = {{"reduced", bb.pairs_reduced}, {"skipped_coprime", bb.pairs_skipped}};
  const bool squarefree = initial_squarefree_quadratic(basis);
  j["initial_squarefree_quadratic"] = squarefree;
  j["koszul"] = bb.ok && squarefree;

  j["kernel_bound"] = o.kernel_bound;
  std::optional<InjectivityResult> inj;
  std::string inj_error;
  try {
    inj = standard_monomial_injectivity(kernel_oracle(fo, o.kernel_bound), basis);
    j["standard_monomials_injective"] = inj->injective;
    if (inj->collision)
      j["collision"] = {monomial_json(inj->collision->first), monomial_json(inj->collision->second)};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SizeCapExceeded) throw;
    inj_error = e.what();
    j["standard_monomials_injective"] = "skipped: " + inj_error;
  }

  if (checks) {
    checks->record("gb_leading_terms", leads_ok, leads_ok ? Json(nullptr) : Json(lead_error));
    checks->record("gb_buchberger", bb.ok);
    checks->record("gb_initial_squarefree_quadratic", squarefree);
    if (inj)
      checks->record("gb_standard_monomial_injectivity", inj->injective, Json{{"bound", o.kernel_bound}});
    else
      checks->skip("gb_standard_monomial_injectivity", inj_error);
  }
  return j;
}

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  const long x = std::strtol(v, &end, 10);
  return (end && *end == '\0' && x > 0) ? static_cast<int>(x) : fallback;
}

}  // namespace

AnalysisOptions options_from_environment() {
  AnalysisOptions o;
  o.max_normality_height = env_int("TORIC_MAX_NORMALITY_HEIGHT", o.max_normality_height);
  o.radical_bound = env_int("TORIC_RADICAL_BOUND", o.radical_bound);
  o.kernel_bound = env_int("TORIC_KERNEL_BOUND", o.kernel_bound);
  o.perfect_cap = env_int("TORIC_PERFECT_CAP", o.perfect_cap);
  o.point_budget = static_cast<std::size_t>(env_int("TORIC_POINT_BUDGET", static_cast<int>(o.point_budget)));
  return o;
}

Json analyze(const SimplicialComplex& c, const AnalysisOptions& o) {
  Stopwatch clock(o.timing);
  Checks checks;
  Json r;
  r["schema"] = kReportSchema;
  r["input"] = to_json(c);
  r["bounds"] = bounds_json(c, o);

  // graph side
  const SkeletonGraph g = skeleton(c);
  const bool flag = is_flag(c);
  const bool chordal = is_chordal(g);
  std::optional<bool> perfect;
  std::string perfect_note;
  try {
    perfect = is_perfect(g, o.perfect_cap);
  } catch (const Error& e) {
    perfect_note = e.what();
  }
  const auto lo = leaf_order(c);
  const bool quasi_forest = lo.has_value();
  const bool occ = odd_cycle_condition(g);
  Json s;
  s["flag"] = flag;
  s["chordal"] = chordal;
  s["perfect"] = perfect ? Json(*perfect) : Json("skipped: " + perfect_note);
  s["quasi_forest"] = quasi_forest;
  s["leaf_order"] = lo ? faces_json(lo->order) : Json(nullptr);
  s["odd_cycle_condition"] = occ;
  r["structure"] = s;
  checks.equal("quasi_forest_iff_flag_and_chordal", quasi_forest, flag && chordal);

  const auto covers = minimal_vertex_covers(g);
  r["covers"] = faces_json(covers.covers);
  r["unmixed"] = is_unmixed(covers);
  const auto cover = face_cover_number(c);
  r["face_cover_number"] = cover.size();
  r["face_cover"] = faces_json(cover.faces);
  clock.lap("graph");

  // cone side
  const ToricCone cone = build_cone(c);
  const auto primes = classify_primes(cone, covers);
  r["primes"] = Json::array();
  int counts[3] = {0, 0, 0};
  for (const auto& p : primes) {
    r["primes"].push_back(prime_json(p));
    ++counts[static_cast<int>(p.kind)];
  }
  r["prime_counts"] = {{"coordinate", counts[0]}, {"cover", counts[1]}, {"extra", counts[2]}};
  clock.lap("primes");

  std::optional<bool> normal;
  Json nj;
  const int bound = o.max_normality_height > 0 ? o.max_normality_height : c.n();
  nj["bound"] = bound;
  try {
    const auto res = is_normal(cone, {bound, o.point_budget});
    normal = res.normal;
    nj["normal"] = res.normal;
    nj["witness"] = res.witness ? vector_json(*res.witness) : Json(nullptr);
    nj["points_checked"] = res.points_checked;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SizeCapExceeded) throw;
    nj["normal"] = std::string("skipped: ") + e.what();
  }
  r["normality"] = nj;
  clock.lap("normality");
  const bool is_norm = normal.value_or(false);
  const std::string norm_skip = normal ? kNotNormal : "skipped: normality undecided";

  if (!normal || !perfect) {
    checks.skip("prime_characterization", normal ? "perfect test skipped" : "normality undecided");
  } else {
    const auto pc = prime_characterization(primes, c, *normal, o.perfect_cap);
    Json lhs = {{"no_extra_primes", pc.no_extra}, {"normal", pc.normal}};
    Json rhs = {{"flag", pc.flag}, {"perfect", pc.perfect}};
    checks.record("prime_characterization", pc.agrees(), Json{{"prime_side", lhs}, {"graph_side", rhs}});
  }

  if (c.facets().back().size() <= 2 &&
      std::all_of(c.facets().begin(), c.facets().end(), [](Face f) { return f.size() <= 2; })) {
    if (!normal)
      checks.skip("odd_cycle_necessity", "normality undecided");
    else
      checks.record("odd_cycle_necessity", !*normal || occ, Json{{"normal", *normal}, {"odd_cycle_condition", occ}});
  }

  // radicality of (t)
  RadicalityResult rad;
  Json rj;
  try {
    rad = t_is_radical(c, cone, primes, is_norm, o.radical_bound);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SizeCapExceeded) throw;
    rad = t_is_radical(c, cone, primes, false, o.radical_bound);
    rj["semantic_note"] = std::string("skipped: ") + e.what();
  }
  rj["radical"] = rad.radical ? Json(*rad.radical) : Json(nullptr);
  rj["structural"] = rad.structural ? Json(*rad.structural) : Json(nullptr);
  rj["semantic"] = rad.semantic ? Json(*rad.semantic) : Json(nullptr);
  rj["bound"] = rad.bound;
  rj["witness"] = rad.witness ? vector_json(*rad.witness) : Json(nullptr);
  r["t_radical"] = rj;
  if (rad.structural && rad.semantic)
    checks.equal("t_radical_routes_agree", *rad.structural, *rad.semantic);
  else
    checks.skip("t_radical_routes_agree", rad.structural ? "semantic route not run" : "not a quasi-forest");
  clock.lap("t_radical");

  // divisor side
  const std::vector<std::string> divisor_checks = {
      "t_subgroup_free_rank",          "t_divisor_principal",          "coordinate_divisors_principal",
      "canonical_formula_flag_perfect", "canonical_formula_quasi_forest", "coordinate_prime_classes",
      "a_invariant_face_cover",         "gorenstein_equivalence"};
  if (!is_norm) {
    for (const char* key : {"cl_rank", "cl_torsion", "omega_class", "a_invariant", "gorenstein", "gorenstein_evidence"})
      r[key] = norm_skip;
    for (const auto& name : divisor_checks) checks.skip(name, norm_skip);
  } else {
    const auto cl = class_group(primes, true);
    r["cl_rank"] = cl.rank;
    r["cl_torsion"] = integers_json(cl.torsion);
    r["t_prime_count"] = cl.t_prime_count;
    r["t_subgroup_rank"] = cl.t_subgroup_rank;
    r["t_subgroup_torsion"] = integers_json(cl.t_subgroup_torsion);
    checks.equal("t_subgroup_free_rank", Json{{"rank", cl.t_subgroup_rank}, {"torsion", integers_json(cl.t_subgroup_torsion)}},
                 Json{{"rank", cl.t_prime_count - 1}, {"torsion", Json::array()}});
    checks.record("t_divisor_principal", t_divisor(cl, primes).is_zero());
    bool coords_ok = true;
    for (Eigen::Index j = 0; j < cl.relations.cols(); ++j)
      coords_ok = coords_ok && cl.principal.contains(cl.relations.col(j));
    checks.record("coordinate_divisors_principal", coords_ok);

    const auto omega = canonical_class_general(cl, primes);
    r["omega_class"] = vector_json(omega.normal_form);
    r["omega_class_convention"] = "coefficients over the prime list after Hermite reduction modulo principal divisors";

    const bool flag_perfect = flag && perfect.value_or(false);
    if (flag_perfect) {
      const auto f = canonical_class_formula(cl, primes, c, CanonicalFormula::FlagPerfect, o.perfect_cap);
      checks.equal("canonical_formula_flag_perfect", vector_json(f.normal_form), vector_json(omega.normal_form));
      // [Q_i] against the sum of the cover primes missing i
      Json lhs = Json::array(), rhs = Json::array();
      for (std::size_t i = 0; i < primes.size(); ++i) {
        if (primes[i].kind != PrimeKind::Coordinate) continue;
        const auto m = static_cast<Eigen::Index>(primes.size());
        VectorX<Integer> q = VectorX<Integer>::Zero(m), sum = VectorX<Integer>::Zero(m);
        q(static_cast<Eigen::Index>(i)) = 1;
        for (std::size_t j = 0; j < primes.size(); ++j)
          if (primes[j].kind == PrimeKind::Cover && !primes[j].cover.contains(primes[i].coordinate))
            sum(static_cast<Eigen::Index>(j)) = 1;
        lhs.push_back(vector_json(make_class(cl, q).normal_form));
        rhs.push_back(vector_json(make_class(cl, sum).normal_form));
      }
      checks.equal("coordinate_prime_classes", lhs, rhs);
    } else {
      checks.skip("canonical_formula_flag_perfect", "not flag with perfect skeleton");
      checks.skip("coordinate_prime_classes", "not flag with perfect skeleton");
    }
    if (quasi_forest) {
      const auto f = canonical_class_formula(cl, primes, c, CanonicalFormula::QuasiForest);
      checks.equal("canonical_formula_quasi_forest", vector_json(f.normal_form), vector_json(omega.normal_form));
    } else {
      checks.skip("canonical_formula_quasi_forest", "not a quasi-forest");
    }
    clock.lap("class_group");

    try {
      const auto a = a_invariant(c, cone, rad.radical.value_or(false), true);
      r["a_invariant"] = a.value;
      r["a_invariant_method"] = a.method;
      Json ev;
      ev["min_interior_height"] = a.interior_height;
      ev["face_cover_number"] = a.face_cover_number ? Json(*a.face_cover_number) : Json(nullptr);
      r["a_invariant_evidence"] = ev;
      if (a.face_cover_number)
        checks.equal("a_invariant_face_cover", -(*a.face_cover_number + 1), -a.interior_height);
      else
        checks.skip("a_invariant_face_cover", "(t) not known to be radical");
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SearchBudgetExceeded) throw;
      r["a_invariant"] = std::string("skipped: ") + e.what();
      checks.skip("a_invariant_face_cover", e.what());
    }
    clock.lap("a_invariant");

    const auto gor = is_gorenstein(c, cl, primes);
    r["gorenstein"] = gor.gorenstein;
    Json ev;
    ev["omega_zero"] = gor.evidence.omega_zero;
    ev["quasi_forest"] = gor.evidence.quasi_forest;
    if (gor.evidence.quasi_forest) {
      ev["unmixed"] = *gor.evidence.unmixed;
      ev["cohen_macaulay"] = "implied";
      ev["free_vertex_partition"] = *gor.evidence.partition ? faces_json(gor.evidence.partition_facets) : Json(nullptr);
      ev["consistent"] = gor.evidence.consistent;
      checks.record("gorenstein_equivalence", gor.evidence.consistent,
                    Json{{"omega_zero", gor.evidence.omega_zero},
                         {"unmixed", *gor.evidence.unmixed},
                         {"free_vertex_partition", *gor.evidence.partition}});
    } else {
      checks.skip("gorenstein_equivalence", "not a quasi-forest");
    }
    r["gorenstein_evidence"] = ev;
    clock.lap("gorenstein");
  }

  if (quasi_forest) {
    r["gb"] = gb_section(c, o, &checks);
  } else {
    r["gb"] = "skipped: not a quasi-forest";
    for (const char* name : {"gb_leading_terms", "gb_buchberger", "gb_initial_squarefree_quadratic",
                             "gb_standard_monomial_injectivity"})
      checks.skip(name, "not a quasi-forest");
  }
  clock.lap("gb");

  r["checks"] = checks.list();
  r["status"] = checks.failed() ? "FAIL" : "PASS";
  if (clock.enabled()) r["timing_ms"] = clock.laps();
  return r;
}

Json gb_report(const SimplicialComplex& c, const AnalysisOptions& o) {
  if (!is_quasi_forest(c)) throw Error(ErrorCode::NotQuasiForest, "complex has no leaf order");
  Checks checks;
  Json r;
  r["schema"] = kReportSchema;
  r["input"] = to_json(c);
  const Json section = gb_section(c, o, &checks);
  for (auto it = section.begin(); it != section.end(); ++it) r[it.key()] = *it;
  r["checks"] = checks.list();
  r["status"] = checks.failed() ? "FAIL" : "PASS";
  return r;
}

std::string render_text(const Json& report) {
  std::ostringstream out;
  for (const auto& [key, value] : report.items()) {
    if (key == "checks") {
      out << "checks:\n";
      for (const auto& c : value) {
        out << "  " << c["status"].get<std::string>() << "  " << c["name"].get<std::string>();
        if (c.contains("reason")) out << "  (" << c["reason"].get<std::string>() << ")";
        out << '\n';
      }
    } else {
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }
  return out.str();
}

bool passed(const Json& report) { return !report.contains("status") || report["status"] == "PASS"; }

}  // namespace toric
