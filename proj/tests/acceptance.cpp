// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any failure.
// All tolerances are exact (integer and boolean equality).
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "toric/divisor.hpp"
#include "toric/fixtures.hpp"
#include "toric/grobner.hpp"
#include "toric/oracle.hpp"

using namespace toric;
namespace fx = toric::fixtures;

namespace {

constexpr int kQuasiForests = 50;
constexpr int kFlagPerfect = 20;
constexpr int kOneDimensional = 60;
constexpr int kKernelDegree = 4;
constexpr int kOracleFacetMaxN = 4;
constexpr int kOracleHilbertMaxN = 5;

struct Analysis {
  SimplicialComplex c;
  ToricCone cone;
  std::vector<MonomialPrime> primes;
  bool normal = false;
};

Analysis analysis(const SimplicialComplex& c) {
  Analysis a{c, build_cone(c), {}, false};
  a.primes = classify_primes(a.cone, minimal_vertex_covers(skeleton(c)));
  a.normal = is_normal(a.cone).normal;
  return a;
}

/// Collects the first few failure notes of one criterion.
class Criterion {
 public:
  void expect(bool ok, const std::string& note) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ << (failures_ > 1 ? "; " : "") << note;
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream out;
    out << checks_ << " checks";
    if (failures_) out << ", " << failures_ << " failed: " << notes_.str();
    return out.str();
  }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::ostringstream notes_;
};

std::string seed_note(const char* what, std::uint64_t seed) { return std::string(what) + " seed " + std::to_string(seed); }

std::vector<std::vector<Coeff>> sorted_rows(const std::vector<LatticePoint>& pts) {
  std::vector<std::vector<Coeff>> out;
  for (const auto& p : pts) out.emplace_back(p.data(), p.data() + p.size());
  std::sort(out.begin(), out.end());
  return out;
}

LatticePoint point(std::initializer_list<Coeff> xs) {
  LatticePoint u(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (Coeff x : xs) u(i++) = x;
  return u;
}

std::vector<SimplicialComplex> quasi_forests() {
  std::vector<SimplicialComplex> out;
  for (std::uint64_t s = 1; s <= kQuasiForests; ++s) out.push_back(testing::random_quasi_forest(s));
  return out;
}

std::vector<SimplicialComplex> flag_perfect() {
  std::vector<SimplicialComplex> out;
  for (std::uint64_t s = 1; s <= kFlagPerfect; ++s) out.push_back(testing::random_flag_perfect(s));
  return out;
}

void extra_prime_of_triangle_boundary(Criterion& cr) {
  const auto a = analysis(fx::e2());
  std::vector<const MonomialPrime*> extra;
  for (const auto& p : a.primes)
    if (p.kind == PrimeKind::Extra) extra.push_back(&p);
  cr.expect(extra.size() == 1, "expected exactly one extra prime");
  if (extra.size() == 1) {
    const auto& p = *extra.front();
    cr.expect(p.form.coeffs == point({-1, -1, -1, 2}), "extra form");
    cr.expect(p.t_coefficient == 2 && p.contains_t(), "extra t-coefficient");
    auto gens = p.generators;
    std::sort(gens.begin(), gens.end(), lex_less);
    std::vector<Face> want{Face(), Face{1}, Face{2}, Face{3}};
    std::sort(want.begin(), want.end(), lex_less);
    cr.expect(gens == want, "extra generators");
  }
  const auto rad = t_is_radical(a.c, a.cone, a.primes, a.normal);
  cr.expect(rad.radical == false, "(t) reported radical");
  cr.expect(rad.witness && *rad.witness == point({1, 1, 1, 2}), "radical witness");
}

void four_example_complexes(Criterion& cr) {
  const std::vector<std::pair<const char*, SimplicialComplex>> ds{
      {"D1", fx::d1()}, {"D2", fx::d2()}, {"D3", fx::d3()}, {"D4", fx::d4()}};
  const VertexSet w{1, 2, 3, 4, 5, 6, 10};
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const auto& [name, c] = ds[i];
    const std::string tag(name);
    cr.expect(is_flag(c) == (i == 0), tag + " flag");
    cr.expect(skeleton(c) == skeleton(fx::d1()), tag + " skeleton differs");
    cr.expect(is_perfect(skeleton(c)), tag + " perfect");
    const auto nr = is_normal(build_cone(c));
    cr.expect(nr.bound == c.n(), tag + " normality bound");
    cr.expect(nr.normal == (i < 2), tag + " normality");
    if (i >= 2) cr.expect(!odd_cycle_condition(skeleton_of(c.n(), restriction(c, w))), tag + " restricted odd cycles");
  }
}

void class_group_freeness(Criterion& cr) {
  auto check = [&](const SimplicialComplex& c, const std::string& note) {
    const auto a = analysis(c);
    cr.expect(a.normal, note + " not normal");
    if (!a.normal) return;
    const auto cl = class_group(a.primes, true);
    int r = 0;
    for (const auto& f : a.cone.forms) r += f.t_coefficient() > 0;
    cr.expect(cl.t_prime_count == r, note + " t-prime count");
    cr.expect(cl.t_subgroup_rank == r - 1 && cl.t_subgroup_torsion.empty(), note + " t-subgroup");
    cr.expect(cl.rank == r - 1 && cl.torsion.empty(), note + " class group");
  };
  const auto qf = quasi_forests();
  for (std::size_t i = 0; i < qf.size(); ++i) check(qf[i], seed_note("quasi-forest", i + 1));
  const auto fp = flag_perfect();
  for (std::size_t i = 0; i < fp.size(); ++i) check(fp[i], seed_note("flag+perfect", i + 1));
}

void canonical_class_agreement(Criterion& cr) {
  auto check = [&](const SimplicialComplex& c, CanonicalFormula mode, const std::string& note) {
    const auto a = analysis(c);
    if (!a.normal) return cr.expect(false, note + " not normal");
    const auto cl = class_group(a.primes, true);
    const auto formula = canonical_class_formula(cl, a.primes, c, mode);
    const Integer shift = mode == CanonicalFormula::FlagPerfect ? 1 : 0;
    bool coeffs_ok = true;
    for (std::size_t i = 0; i < a.primes.size(); ++i) {
      const auto& p = a.primes[i];
      const Integer want = p.kind == PrimeKind::Cover ? Integer(c.n() - p.cover.size()) + shift : Integer(0);
      coeffs_ok = coeffs_ok && formula.coeffs(static_cast<Eigen::Index>(i)) == want;
    }
    cr.expect(coeffs_ok, note + " coefficients");
    cr.expect(same_class(formula, canonical_class_general(cl, a.primes)), note + " class");
  };
  auto fp = flag_perfect();
  for (auto c : {fx::e1(), fx::e3(), fx::d1()}) fp.push_back(c);
  for (std::size_t i = 0; i < fp.size(); ++i) check(fp[i], CanonicalFormula::FlagPerfect, seed_note("flag+perfect", i + 1));
  auto qf = quasi_forests();
  for (auto c : {fx::e1(), fx::e3(), fx::d1()}) qf.push_back(c);
  for (std::size_t i = 0; i < qf.size(); ++i) check(qf[i], CanonicalFormula::QuasiForest, seed_note("quasi-forest", i + 1));
}

void a_invariant_of_quasi_forests(Criterion& cr) {
  auto qf = quasi_forests();
  for (auto c : {fx::e1(), fx::e3(), fx::d1()}) qf.push_back(c);
  for (std::size_t i = 0; i < qf.size(); ++i) {
    const auto& c = qf[i];
    const int cover = face_cover_number(c).size();
    const int height = min_interior_height(build_cone(c)).height;
    cr.expect(-(cover + 1) == -height, seed_note("quasi-forest", i + 1));
  }
  auto value = [](const SimplicialComplex& c) {
    const auto a = analysis(c);
    return a_invariant(c, a.cone, true, a.normal).value;
  };
  cr.expect(value(fx::e1()) == -2, "E1 a-invariant");
  cr.expect(value(fx::e3()) == -3, "E3 a-invariant");
}

void quadratic_grobner_bases(Criterion& cr) {
  const auto qf = quasi_forests();
  for (std::size_t i = 0; i < qf.size(); ++i) {
    const auto note = seed_note("quasi-forest", i + 1);
    const auto fo = face_order(qf[i]);
    const auto basis = generate_basis(fo);
    cr.expect(buchberger_verify(basis, fo).ok, note + " Buchberger");
    cr.expect(initial_squarefree_quadratic(basis), note + " initial ideal");
    cr.expect(standard_monomial_injectivity(kernel_oracle(fo, kKernelDegree), basis).injective, note + " injectivity");
  }
  const auto e3 = generate_basis(face_order(fx::e3()));
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> got;
  for (const auto& b : e3) got.emplace_back(b.lead, b.trail);
  // y2y3 - y1y4, y3y5 - y1y6, y4y5 - y2y6 with 0-based variable indices
  cr.expect(got == decltype(got){{{1, 2}, {0, 3}}, {{2, 4}, {0, 5}}, {{3, 4}, {1, 5}}}, "E3 basis");
}

void gorenstein_equivalences(Criterion& cr) {
  const auto qf = quasi_forests();
  for (std::size_t i = 0; i < qf.size(); ++i) {
    const auto a = analysis(qf[i]);
    const auto g = is_gorenstein(a.c, class_group(a.primes, a.normal), a.primes);
    const bool agree = g.evidence.unmixed && g.evidence.partition && g.evidence.omega_zero == *g.evidence.unmixed &&
                       *g.evidence.unmixed == *g.evidence.partition;
    cr.expect(agree, seed_note("quasi-forest", i + 1));
  }
  auto gor = [](const SimplicialComplex& c) {
    const auto a = analysis(c);
    return is_gorenstein(c, class_group(a.primes, a.normal), a.primes).gorenstein;
  };
  cr.expect(gor(fx::e1()), "E1 not Gorenstein");
  cr.expect(!gor(fx::e3()), "E3 Gorenstein");
}

void odd_cycle_necessity(Criterion& cr) {
  const auto cone = build_cone(fx::t2());
  const auto nr = is_normal(cone);
  cr.expect(!nr.normal, "T2 normal");
  if (nr.witness) {
    const auto& u = *nr.witness;
    cr.expect(u(u.size() - 1) == 3, "T2 witness height");
    cr.expect(cone.contains(u) && !membership(u, cone), "T2 witness is not a decomposition failure");
  } else {
    cr.expect(false, "T2 witness missing");
  }
  int normal = 0;
  for (std::uint64_t s = 1; s <= kOneDimensional; ++s) {
    const auto c = testing::random_complex(GeneratorMode::OneDimensional, 3 + static_cast<int>(s % 6), 2, s);
    if (!is_normal(build_cone(c)).normal) continue;
    ++normal;
    cr.expect(odd_cycle_condition(skeleton(c)), seed_note("graph", s));
  }
  cr.expect(normal > 0, "no normal graph drawn");
}

void oracle_equivalence(Criterion& cr) {
  std::vector<std::pair<std::string, SimplicialComplex>> small;
  for (const auto& [name, c] : fx::all()) small.emplace_back(name, c);
  for (std::uint64_t s = 1; s <= 40; ++s)
    small.emplace_back("seed " + std::to_string(s),
                       testing::random_complex(s % 2 ? GeneratorMode::Any : GeneratorMode::OneDimensional,
                                               2 + static_cast<int>(s % 4), 3, s));
  for (const auto& [name, c] : small) {
    if (c.n() <= kOracleFacetMaxN) {
      std::vector<LatticePoint> forms;
      for (const auto& f : build_cone(c).forms) forms.push_back(f.coeffs);
      cr.expect(sorted_rows(forms) == sorted_rows(oracle::facet_normals(oracle::generator_matrix(c))), name + " facets");
    }
    if (c.n() <= kOracleHilbertMaxN)
      cr.expect(is_normal(build_cone(c)).normal == oracle::hilbert_normality(c).normal, name + " normality");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Criterion&)>>> criteria{
      {"triangle boundary: one extra prime (-1,-1,-1,2), t-coefficient 2; (t) not radical, witness (1,1,1,2)",
       extra_prime_of_triangle_boundary},
      {"D1-D4: flag only D1, perfect skeleton, normal exactly D1 and D2, odd cycles fail on D3/D4 restriction",
       four_example_complexes},
      {"class group of 50 quasi-forests and 20 flag+perfect complexes is free of rank r-1", class_group_freeness},
      {"canonical class formulas equal the sum of all primes", canonical_class_agreement},
      {"a-invariant -(face cover + 1) equals minus the interior height; E1 -2, E3 -3", a_invariant_of_quasi_forests},
      {"quadratic Groebner bases of 50 quasi-forests; E3 basis exact", quadratic_grobner_bases},
      {"Gorenstein conditions agree on 50 quasi-forests; E1 yes, E3 no", gorenstein_equivalences},
      {"T2 non-normal at height 3; normal graphs satisfy the odd cycle condition", odd_cycle_necessity},
      {"facets and normality agree with brute-force oracles", oracle_equivalence},
  };

  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion cr;
    try {
      criteria[i].second(cr);
    } catch (const std::exception& e) {
      cr.expect(false, std::string("exception: ") + e.what());
    }
    failed += !cr.ok();
    std::printf("%s  criterion %zu: %s (%s)\n", cr.ok() ? "PASS" : "FAIL", i + 1, criteria[i].first,
                cr.summary().c_str());
    std::fflush(stdout);
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of %zu criteria passed in %.1f s\n", static_cast<int>(criteria.size()) - failed, criteria.size(), seconds);
  return failed == 0 ? 0 : 1;
}
