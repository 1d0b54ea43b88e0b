#include "toric/generator.hpp"

#include <algorithm>
#include <numeric>

#include "toric/graph.hpp"

namespace toric {

std::string to_string(GeneratorMode mode) {
  switch (mode) {
    case GeneratorMode::Any: return "any";
    case GeneratorMode::Flag: return "flag";
    case GeneratorMode::QuasiForest: return "quasi_forest";
    case GeneratorMode::OneDimensional: return "one_dimensional";
  }
  return "any";
}

GeneratorMode parse_generator_mode(const std::string& name) {
  for (auto m : {GeneratorMode::Any, GeneratorMode::Flag, GeneratorMode::QuasiForest, GeneratorMode::OneDimensional})
    if (to_string(m) == name) return m;
  throw Error(ErrorCode::InfeasibleConfig, "unknown mode " + name);
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

namespace {

[[noreturn]] void infeasible(const std::string& why) { throw Error(ErrorCode::InfeasibleConfig, why); }

void shuffle(std::vector<int>& v, std::mt19937_64& rng) {
  for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) std::swap(v[i], v[uniform_int(rng, 0, i)]);
}

std::vector<std::pair<int, int>> all_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) out.emplace_back(u, v);
  return out;
}

// `count` distinct edges; count < 0 picks each pair with probability 1/2.
SkeletonGraph random_graph(int n, int count, std::mt19937_64& rng) {
  SkeletonGraph g(n);
  auto pairs = all_pairs(n);
  if (count < 0) {
    for (auto [u, v] : pairs)
      if (rng() % 2 == 0) g.add_edge(u, v);
    return g;
  }
  for (int i = 0; i < count; ++i) {
    const int k = uniform_int(rng, i, static_cast<int>(pairs.size()) - 1);
    std::swap(pairs[i], pairs[k]);
    g.add_edge(pairs[i].first, pairs[i].second);
  }
  return g;
}

SimplicialComplex with_singletons(std::vector<Face> facets, int n) {
  VertexSet covered;
  for (Face f : facets) covered = covered | f;
  for (int v = 1; v <= n; ++v)
    if (!covered.contains(v)) facets.push_back(VertexSet{v});
  return validate(facets, n);
}

SimplicialComplex generate_any(const GeneratorConfig& cfg, std::mt19937_64& rng) {
  const int m = cfg.facets > 0 ? cfg.facets : uniform_int(rng, 1, cfg.n);
  std::vector<int> verts(static_cast<std::size_t>(cfg.n));
  std::iota(verts.begin(), verts.end(), 1);
  std::vector<Face> facets;
  for (int i = 0; i < m; ++i) {
    shuffle(verts, rng);
    const int size = uniform_int(rng, 1, std::min(cfg.max_size, cfg.n));
    facets.push_back(Face::from_vertices({verts.begin(), verts.begin() + size}));
  }
  return with_singletons(std::move(facets), cfg.n);
}

SimplicialComplex generate_flag(const GeneratorConfig& cfg, std::mt19937_64& rng) {
  const int max_edges = cfg.n * (cfg.n - 1) / 2;
  if (cfg.facets > max_edges) infeasible("more edges requested than vertex pairs");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const SkeletonGraph g = random_graph(cfg.n, cfg.facets > 0 ? cfg.facets : -1, rng);
    const auto cliques = maximal_cliques(g);
    if (std::all_of(cliques.begin(), cliques.end(), [&](VertexSet c) { return c.size() <= cfg.max_size; }))
      return validate(cliques, cfg.n);
  }
  infeasible("no clique complex with facets of size <= " + std::to_string(cfg.max_size) + " found");
}

SimplicialComplex generate_quasi_forest(const GeneratorConfig& cfg, std::mt19937_64& rng) {
  const int fewest = (cfg.n + cfg.max_size - 1) / cfg.max_size;
  const int m = cfg.facets > 0 ? cfg.facets : uniform_int(rng, fewest, cfg.n);
  if (m > cfg.n) infeasible("each facet needs a new vertex, so facets <= n");
  if (cfg.n > m * cfg.max_size) infeasible("n vertices do not fit into the facets");
  // fresh vertices per facet: a random composition of n into m parts of size 1..max_size
  std::vector<int> fresh(static_cast<std::size_t>(m), 1);
  for (int left = cfg.n - m; left > 0;) {
    const int i = uniform_int(rng, 0, m - 1);
    if (fresh[i] < cfg.max_size) {
      ++fresh[i];
      --left;
    }
  }
  std::vector<int> labels(static_cast<std::size_t>(cfg.n));
  std::iota(labels.begin(), labels.end(), 1);
  shuffle(labels, rng);

  std::vector<Face> facets;
  int next = 0;
  for (int i = 0; i < m; ++i) {
    Face f;
    if (!facets.empty()) {
      const Face branch = facets[uniform_int(rng, 0, static_cast<int>(facets.size()) - 1)];
      auto bv = branch.vertices();
      shuffle(bv, rng);
      const int room = std::min(cfg.max_size - fresh[i], static_cast<int>(bv.size()) - 1);
      const int keep = room > 0 ? uniform_int(rng, 0, room) : 0;
      for (int k = 0; k < keep; ++k) f.insert(bv[k]);
    }
    for (int k = 0; k < fresh[i]; ++k) f.insert(labels[next++]);
    facets.push_back(f);
  }
  return validate(facets, cfg.n);
}

SimplicialComplex generate_one_dimensional(const GeneratorConfig& cfg, std::mt19937_64& rng) {
  if (cfg.max_size < 2 && cfg.facets > 0) infeasible("edges need max_size >= 2");
  const int max_edges = cfg.n * (cfg.n - 1) / 2;
  if (cfg.facets > max_edges) infeasible("more edges requested than vertex pairs");
  const int count = cfg.facets > 0 ? cfg.facets : cfg.max_size < 2 ? 0 : uniform_int(rng, 0, max_edges);
  const SkeletonGraph g = random_graph(cfg.n, count, rng);
  std::vector<Face> facets;
  for (auto [u, v] : g.edges()) facets.push_back(VertexSet{u, v});
  return with_singletons(std::move(facets), cfg.n);
}

}  // namespace

SimplicialComplex generate(const GeneratorConfig& config) {
  if (config.n < 1 || config.n > kMaxVertices) infeasible("n must lie in [1, " + std::to_string(kMaxVertices) + "]");
  if (config.max_size < 1) infeasible("max_size must be positive");
  if (config.facets < 0) infeasible("facet count must be non-negative");
  std::mt19937_64 rng(config.seed);
  switch (config.mode) {
    case GeneratorMode::Any: return generate_any(config, rng);
    case GeneratorMode::Flag: return generate_flag(config, rng);
    case GeneratorMode::QuasiForest: return generate_quasi_forest(config, rng);
    case GeneratorMode::OneDimensional: return generate_one_dimensional(config, rng);
  }
  infeasible("unknown mode");
}

}  // namespace toric
