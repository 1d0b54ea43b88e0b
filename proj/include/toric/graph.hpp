// Decision procedures on the 1-skeleton: covers, chordality, perfectness,
// odd cycles, unmixedness and the face cover number.
#pragma once

#include <vector>

#include "toric/complex.hpp"

namespace toric {

/// Maximal cliques, sorted by (cardinality, lexicographic).
std::vector<VertexSet> maximal_cliques(const SkeletonGraph& g);

/// Minimal vertex covers, as complements of maximal independent sets.
struct VertexCoverSet {
  std::vector<VertexSet> covers;  ///< sorted lexicographically; {∅} for an edgeless graph
  friend bool operator==(const VertexCoverSet&, const VertexCoverSet&) = default;
};

VertexCoverSet minimal_vertex_covers(const SkeletonGraph& g);

bool is_vertex_cover(const SkeletonGraph& g, VertexSet c);

/// Default vertex cap for the perfect graph test.
inline constexpr int kDefaultPerfectCap = 12;

/// Induced cycles of length >= min_length, as vertex sets (each cycle once).
std::vector<VertexSet> induced_cycles(const SkeletonGraph& g, int min_length);

/// Neither g nor its complement has an induced odd cycle of length >= 5.
/// Throws `SizeCapExceeded` when n exceeds `cap`.
bool is_perfect(const SkeletonGraph& g, int cap = kDefaultPerfectCap);

/// Perfect elimination ordering via maximum cardinality search.
bool is_chordal(const SkeletonGraph& g);

/// Any two vertex-disjoint induced odd cycles are joined by an edge.
bool odd_cycle_condition(const SkeletonGraph& g);

bool is_unmixed(const VertexCoverSet& covers);

struct FaceCover {
  std::vector<Face> faces;
  int size() const { return static_cast<int>(faces.size()); }
};

/// Minimum face cover by exact branch and bound over the facets.
FaceCover face_cover_number(const SimplicialComplex& c);

}  // namespace toric
