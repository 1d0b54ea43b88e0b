// Simplicial complexes on [n], their faces, 1-skeleton and leaf orders.
#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toric/error.hpp"

namespace toric {

/// Largest vertex count representable by `VertexSet`.
inline constexpr int kMaxVertices = 64;

/// A subset of [n] stored as a bitmask; vertex v occupies bit v - 1.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) insert(v);
  }
  static VertexSet from_vertices(const std::vector<int>& vertices) {
    VertexSet s;
    for (int v : vertices) s.insert(v);
    return s;
  }
  /// {1, ..., n}
  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> (v - 1)) & 1U; }
  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
  /// Largest vertex, or 0 when empty.
  constexpr int max_vertex() const { return 64 - std::countl_zero(bits_); }
  constexpr int min_vertex() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

  void insert(int v) { bits_ |= std::uint64_t{1} << (v - 1); }
  void erase(int v) { bits_ &= ~(std::uint64_t{1} << (v - 1)); }

  /// Sorted, strictly increasing vertex list.
  std::vector<int> vertices() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

using Face = VertexSet;

/// Lexicographic comparison of the sorted vertex lists.
bool lex_less(VertexSet a, VertexSet b);

/// Cardinality first, then lexicographic; the default face order.
bool size_then_lex_less(VertexSet a, VertexSet b);

std::string to_string(VertexSet s);

/// A simplicial complex on [n], stored by its facets.
///
/// Invariants: facets are non-empty and pairwise incomparable, every vertex of
/// [n] lies in some facet, and facets are sorted lexicographically.
class SimplicialComplex {
 public:
  int n() const { return n_; }
  const std::vector<Face>& facets() const { return facets_; }
  bool has_face(Face f) const;
  bool is_facet(Face f) const;

  friend SimplicialComplex validate(const std::vector<std::vector<int>>& raw_facets, int n);
  friend SimplicialComplex validate(const std::vector<Face>& raw_facets, int n);
  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  int n_ = 0;
  std::vector<Face> facets_;
};

/// Normalize a raw facet list into a complex on [n].
///
/// Keeps inclusion-maximal sets only. Throws `EmptyInput`, `VertexOutOfRange`
/// or `UncoveredVertex`.
SimplicialComplex validate(const std::vector<std::vector<int>>& raw_facets, int n);

SimplicialComplex validate(const std::vector<Face>& raw_facets, int n);

/// All faces including the empty face, ordered by cardinality then lexicographically.
std::vector<Face> faces(const SimplicialComplex& c);

/// Faces of `faces_of` (all subsets of the given facets), same order as `faces`.
std::vector<Face> faces_of(const std::vector<Face>& facets);

/// Faces of c contained in W. Throws `VertexOutOfRange` if W is not inside [n].
std::vector<Face> restriction(const SimplicialComplex& c, VertexSet w);

/// Simple graph on [n] given by adjacency bitmasks.
class SkeletonGraph {
 public:
  SkeletonGraph() = default;
  explicit SkeletonGraph(int n);
  SkeletonGraph(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const { return adjacency_[u - 1].contains(v); }
  VertexSet neighbors(int v) const { return adjacency_[v - 1]; }
  /// Edges {u, v} with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;
  std::size_t edge_count() const;
  SkeletonGraph complement() const;
  SkeletonGraph induced(VertexSet w) const;

  friend bool operator==(const SkeletonGraph&, const SkeletonGraph&) = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> adjacency_;
};

/// The 1-skeleton: edges are the 2-element faces.
SkeletonGraph skeleton(const SimplicialComplex& c);

/// Graph on [n] whose edges are the 2-element members of a face family.
SkeletonGraph skeleton_of(int n, const std::vector<Face>& face_family);

/// True when every clique of the 1-skeleton is a face.
bool is_flag(const SimplicialComplex& c);

/// Vertices of the facet F lying in no other facet. Throws `NotAFacet`.
VertexSet free_vertices(const SimplicialComplex& c, Face facet);

/// True when `f` is a leaf of the complex spanned by `facets` (f must be one of them).
/// A lone facet counts as a leaf.
bool is_leaf(const std::vector<Face>& facets, Face f);

/// A facet order F_1 < ... < F_m with F_i a leaf of <F_1, ..., F_i>.
struct LeafOrder {
  std::vector<Face> order;
  friend bool operator==(const LeafOrder&, const LeafOrder&) = default;
};

bool is_leaf_order(const SimplicialComplex& c, const LeafOrder& lo);

/// Leaf order by peeling leaves; empty when c is not a quasi-forest.
std::optional<LeafOrder> leaf_order(const SimplicialComplex& c);

inline bool is_quasi_forest(const SimplicialComplex& c) { return leaf_order(c).has_value(); }

}  // namespace toric
