// Seeded generators and helpers shared by the test binaries.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "toric/complex.hpp"
#include "toric/generator.hpp"
#include "toric/graph.hpp"

namespace toric::testing {

inline SkeletonGraph random_graph(int n, std::mt19937_64& rng, int percent = 50) {
  SkeletonGraph g(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (uniform_int(rng, 0, 99) < percent) g.add_edge(u, v);
  return g;
}

inline std::vector<VertexSet> all_faces_brute(const SimplicialComplex& c) {
  std::vector<VertexSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c.n()); ++mask) {
    const VertexSet s(mask);
    for (Face f : c.facets())
      if (s.is_subset_of(f)) {
        out.push_back(s);
        break;
      }
  }
  return out;
}

inline SimplicialComplex random_complex(GeneratorMode mode, int n, int max_size, std::uint64_t seed, int facets = 0) {
  GeneratorConfig cfg;
  cfg.n = n;
  cfg.max_size = max_size;
  cfg.mode = mode;
  cfg.seed = seed;
  cfg.facets = facets;
  return generate(cfg);
}

/// Quasi-forest with 2 <= n <= 7 drawn from `seed`.
inline SimplicialComplex random_quasi_forest(std::uint64_t seed) {
  std::mt19937_64 rng(seed * 7919 + 17);
  const int n = uniform_int(rng, 2, 7);
  const int max_size = uniform_int(rng, 2, 4);
  const int lo = (n + max_size - 1) / max_size;
  const int facets = uniform_int(rng, lo, n);
  return random_complex(GeneratorMode::QuasiForest, n, max_size, seed, facets);
}

/// Flag complex with a perfect skeleton, 3 <= n <= 7; the k-th accepted draw for `seed`.
inline SimplicialComplex random_flag_perfect(std::uint64_t seed) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    std::mt19937_64 rng(seed * 104729 + attempt);
    const int n = uniform_int(rng, 3, 7);
    auto c = random_complex(GeneratorMode::Flag, n, n, seed * 1000 + attempt);
    if (is_perfect(skeleton(c))) return c;
  }
}

}  // namespace toric::testing
