#include "toric/grobner.hpp"
#include "toric/io.hpp"
#include "toric/oracle.hpp"

namespace toric::oracle {

namespace {

using Json = nlohmann::ordered_json;

Json monomial_json(const Monomial& m) {
  Json out = Json::array();
  for (Eigen::Index k = 0; k < m.size(); ++k)
    for (int e = 0; e < m(k); ++e) out.push_back(k + 1);
  return out;
}

}  // namespace

Json report(const SimplicialComplex& c, int kernel_bound) {
  Json r;
  r["schema"] = 1;
  r["input"] = to_json(c);
  const int n = c.n();
  const SkeletonGraph g = skeleton(c);
  if (n <= 16) {
    r["covers"] = faces_json(oracle::minimal_vertex_covers(g));
    r["chordal"] = oracle::is_chordal(g);
    r["perfect"] = oracle::is_perfect(g);
    r["odd_cycle_condition"] = oracle::odd_cycle_condition(g);
    r["flag"] = oracle::is_flag(c);
  } else {
    r["graph"] = "skipped: more than 16 vertices";
  }
  r["face_cover_number"] = c.facets().size() <= 20 ? Json(oracle::face_cover_number(c)) : Json("skipped: more than 20 facets");
  r["quasi_forest"] = c.facets().size() <= 8 ? Json(oracle::is_quasi_forest(c)) : Json("skipped: more than 8 facets");
  if (n <= 6) {
    const auto gens = oracle::generator_matrix(c);
    const auto normals = oracle::facet_normals(gens);
    Json fs = Json::array();
    for (const auto& f : normals) fs.push_back(vector_json(f));
    r["facets"] = fs;
    r["interior_height"] = oracle::interior_height(c, 2 * n + 2);
    MatrixX<Coeff> m(static_cast<Eigen::Index>(normals.size()), n + 1);
    for (std::size_t i = 0; i < normals.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = normals[i].transpose();
    if (normals.size() <= 24) {
      const auto inv = oracle::determinantal_invariants(m);
      r["relation_invariants"] = integers_json(inv);
      r["cl_rank_if_normal"] = static_cast<int>(normals.size() - inv.size());
    }
  } else {
    r["facets"] = "skipped: n > 6";
  }
  if (n <= 5) {
    const auto h = oracle::hilbert_normality(c);
    r["hilbert_normal"] = h.normal;
    Json hb = Json::array();
    for (const auto& u : h.hilbert_basis) hb.push_back(vector_json(u));
    r["hilbert_basis"] = hb;
  } else {
    r["hilbert_normal"] = "skipped: n > 5";
  }
  if (toric::is_quasi_forest(c)) {
    const auto fo = face_order(c);
    try {
      const auto ko = kernel_oracle(fo, std::min(kernel_bound, 2));
      Json pairs = Json::array();
      for (const auto& [u, v] : kernel_pairs(ko, 2)) pairs.push_back({monomial_json(u), monomial_json(v)});
      r["kernel_pairs_degree_2"] = pairs;
    } catch (const Error& e) {
      r["kernel_pairs_degree_2"] = std::string("skipped: ") + e.what();
    }
  }
  return r;
}

}  // namespace toric::oracle
