// Seeded random complexes. The same configuration always yields the same complex.
#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "toric/complex.hpp"

namespace toric {

enum class GeneratorMode { Any, Flag, QuasiForest, OneDimensional };

std::string to_string(GeneratorMode mode);
/// Throws `InfeasibleConfig` for an unknown name.
GeneratorMode parse_generator_mode(const std::string& name);

struct GeneratorConfig {
  int n = 5;
  int facets = 0;  ///< 0 picks a count from the seed
  int max_size = 3;
  GeneratorMode mode = GeneratorMode::Any;
  std::uint64_t seed = 1;
};

/// Any: random subsets, uncovered vertices become singletons.
/// Flag: clique complex of a random graph (`facets` edges, or each pair with
/// probability 1/2) whose cliques fit in max_size.
/// QuasiForest: each new facet meets the earlier ones inside a proper subset
/// of one earlier facet, so the construction order is a leaf order.
/// OneDimensional: a random graph with `facets` edges, isolated vertices as singletons.
///
/// Throws `InfeasibleConfig`.
SimplicialComplex generate(const GeneratorConfig& config);

/// Draw in [lo, hi] by modulo, so results do not depend on the standard library.
int uniform_int(std::mt19937_64& rng, int lo, int hi);

}  // namespace toric
