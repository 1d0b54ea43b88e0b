// Brute-force reference computations. Exponential on purpose; they share no
// algorithm with the code they check and are only meant for small inputs.
#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "toric/complex.hpp"
#include "toric/integer.hpp"

namespace toric::oracle {

/// Facet normals from every (d-1)-subset of the rows via cofactors, primitive, sorted.
std::vector<LatticePoint> facet_normals(const MatrixX<Coeff>& points);

/// Generator rows of R_Δ for every subset F of [n] that is a face (subset scan).
MatrixX<Coeff> generator_matrix(const SimplicialComplex& c);

bool in_cone(const std::vector<LatticePoint>& normals, const LatticePoint& u, Coeff min_value = 0);

/// Lattice points of height k with every normal >= min_value, by a full box scan.
std::vector<LatticePoint> box_points(const std::vector<LatticePoint>& normals, int n, int k, Coeff min_value = 0);

struct HilbertResult {
  bool normal = true;
  std::vector<LatticePoint> hilbert_basis;  ///< irreducible cone points up to height n
};

/// Hilbert basis of the cone up to height n (which contains all of it).
/// Normal iff it consists of the generators.
HilbertResult hilbert_normality(const SimplicialComplex& c);

/// Smallest k with a lattice point of height k strictly inside the cone.
int interior_height(const SimplicialComplex& c, int cap);

std::vector<VertexSet> minimal_vertex_covers(const SkeletonGraph& g);
bool is_chordal(const SkeletonGraph& g);
/// Induced cycles as vertex sets, from a subset scan.
std::vector<VertexSet> induced_cycles(const SkeletonGraph& g);
bool is_perfect(const SkeletonGraph& g);
bool odd_cycle_condition(const SkeletonGraph& g);
bool is_flag(const SimplicialComplex& c);
int face_cover_number(const SimplicialComplex& c);
/// Tries every facet permutation; at most 8 facets.
bool is_quasi_forest(const SimplicialComplex& c);

/// Everything above that fits the size limits, as JSON.
nlohmann::ordered_json report(const SimplicialComplex& c, int kernel_bound);

/// Invariant factors d_k / d_{k-1}, where d_k is the gcd of the k x k minors.
std::vector<Integer> determinantal_invariants(const MatrixX<Coeff>& m);

}  // namespace toric::oracle
