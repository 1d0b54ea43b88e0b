#include "toric/complex.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "toric/graph.hpp"

namespace toric {

std::vector<int> VertexSet::vertices() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

bool lex_less(VertexSet a, VertexSet b) {
  const auto va = a.vertices();
  const auto vb = b.vertices();
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

bool size_then_lex_less(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

std::string to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s.vertices()) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

bool SimplicialComplex::has_face(Face f) const {
  return std::any_of(facets_.begin(), facets_.end(), [f](Face g) { return f.is_subset_of(g); });
}

bool SimplicialComplex::is_facet(Face f) const {
  return std::find(facets_.begin(), facets_.end(), f) != facets_.end();
}

SimplicialComplex validate(const std::vector<Face>& raw, int n) {
  if (raw.empty()) throw Error(ErrorCode::EmptyInput, "facet list is empty");
  if (n < 1 || n > kMaxVertices)
    throw Error(ErrorCode::VertexOutOfRange, "vertex count " + std::to_string(n) + " outside [1, 64]");
  const VertexSet ground = VertexSet::full(n);
  VertexSet covered;
  std::vector<Face> sets;
  for (Face f : raw) {
    if (!f.is_subset_of(ground))
      throw Error(ErrorCode::VertexOutOfRange, "facet " + to_string(f) + " leaves [" + std::to_string(n) + "]");
    if (f.empty()) continue;
    covered = covered | f;
    sets.push_back(f);
  }
  if (sets.empty()) throw Error(ErrorCode::EmptyInput, "no non-empty facet");
  for (int v = 1; v <= n; ++v)
    if (!covered.contains(v))
      throw Error(ErrorCode::UncoveredVertex, "vertex " + std::to_string(v) + " lies in no facet");

  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Face> maximal;
  for (Face f : sets) {
    const bool dominated =
        std::any_of(sets.begin(), sets.end(), [f](Face g) { return g != f && f.is_subset_of(g); });
    if (!dominated) maximal.push_back(f);
  }
  std::sort(maximal.begin(), maximal.end(), lex_less);

  SimplicialComplex c;
  c.n_ = n;
  c.facets_ = std::move(maximal);
  return c;
}

SimplicialComplex validate(const std::vector<std::vector<int>>& raw_facets, int n) {
  if (raw_facets.empty()) throw Error(ErrorCode::EmptyInput, "facet list is empty");
  std::vector<Face> sets;
  for (const auto& raw : raw_facets) {
    Face f;
    for (int v : raw) {
      if (v < 1 || v > n || v > kMaxVertices)
        throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " outside [" + std::to_string(n) + "]");
      f.insert(v);
    }
    sets.push_back(f);
  }
  return validate(sets, n);
}

std::vector<Face> faces_of(const std::vector<Face>& facets) {
  std::set<Face> all;
  for (Face f : facets) {
    // enumerate submasks
    const std::uint64_t bits = f.bits();
    std::uint64_t sub = bits;
    while (true) {
      all.insert(Face(sub));
      if (sub == 0) break;
      sub = (sub - 1) & bits;
    }
  }
  if (all.empty()) all.insert(Face());
  std::vector<Face> out(all.begin(), all.end());
  std::sort(out.begin(), out.end(), size_then_lex_less);
  return out;
}

std::vector<Face> faces(const SimplicialComplex& c) { return faces_of(c.facets()); }

std::vector<Face> restriction(const SimplicialComplex& c, VertexSet w) {
  if (!w.is_subset_of(VertexSet::full(c.n())))
    throw Error(ErrorCode::VertexOutOfRange, "restriction set " + to_string(w) + " leaves [n]");
  std::vector<Face> restricted;
  for (Face f : c.facets()) restricted.push_back(f & w);
  return faces_of(restricted);
}

SkeletonGraph::SkeletonGraph(int n) : n_(n), adjacency_(static_cast<std::size_t>(n)) {}

SkeletonGraph::SkeletonGraph(int n, const std::vector<std::pair<int, int>>& edges) : SkeletonGraph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void SkeletonGraph::add_edge(int u, int v) {
  if (u < 1 || v < 1 || u > n_ || v > n_ || u == v)
    throw Error(ErrorCode::VertexOutOfRange, "bad edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  adjacency_[u - 1].insert(v);
  adjacency_[v - 1].insert(u);
}

std::vector<std::pair<int, int>> SkeletonGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= n_; ++u)
    for (int v : adjacency_[u - 1].vertices())
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::size_t SkeletonGraph::edge_count() const {
  std::size_t total = 0;
  for (auto a : adjacency_) total += static_cast<std::size_t>(a.size());
  return total / 2;
}

SkeletonGraph SkeletonGraph::complement() const {
  SkeletonGraph g(n_);
  const VertexSet all = VertexSet::full(n_);
  for (int v = 1; v <= n_; ++v) {
    VertexSet self;
    self.insert(v);
    g.adjacency_[v - 1] = all - adjacency_[v - 1] - self;
  }
  return g;
}

SkeletonGraph SkeletonGraph::induced(VertexSet w) const {
  SkeletonGraph g(n_);
  for (int v = 1; v <= n_; ++v)
    if (w.contains(v)) g.adjacency_[v - 1] = adjacency_[v - 1] & w;
  return g;
}

SkeletonGraph skeleton_of(int n, const std::vector<Face>& face_family) {
  SkeletonGraph g(n);
  for (Face f : face_family) {
    const auto vs = f.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) g.add_edge(vs[i], vs[j]);
  }
  return g;
}

SkeletonGraph skeleton(const SimplicialComplex& c) { return skeleton_of(c.n(), c.facets()); }

bool is_flag(const SimplicialComplex& c) {
  // faces are closed under subsets, so checking maximal cliques suffices
  for (VertexSet clique : maximal_cliques(skeleton(c)))
    if (!c.has_face(clique)) return false;
  return true;
}

VertexSet free_vertices(const SimplicialComplex& c, Face facet) {
  if (!c.is_facet(facet)) throw Error(ErrorCode::NotAFacet, to_string(facet) + " is not a facet");
  VertexSet shared;
  for (Face g : c.facets())
    if (g != facet) shared = shared | g;
  return facet - shared;
}

bool is_leaf(const std::vector<Face>& facets, Face f) {
  if (facets.size() == 1) return facets.front() == f;
  for (Face branch : facets) {
    if (branch == f) continue;
    bool ok = true;
    for (Face h : facets) {
      if (h == f) continue;
      if (!(f & h).is_subset_of(branch)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool is_leaf_order(const SimplicialComplex& c, const LeafOrder& lo) {
  std::vector<Face> sorted = lo.order;
  std::sort(sorted.begin(), sorted.end(), lex_less);
  if (sorted != c.facets()) return false;
  std::vector<Face> prefix;
  for (Face f : lo.order) {
    prefix.push_back(f);
    if (!is_leaf(prefix, f)) return false;
  }
  return true;
}

std::optional<LeafOrder> leaf_order(const SimplicialComplex& c) {
  // Peel leaves from the end. Among several leaves the lexicographically
  // largest is peeled first, so small facets tend to come first in the order.
  std::set<std::vector<Face>> dead_ends;
  std::vector<Face> peeled;
  std::function<bool(std::vector<Face>&)> peel = [&](std::vector<Face>& remaining) -> bool {
    if (remaining.empty()) return true;
    if (dead_ends.count(remaining)) return false;
    for (std::size_t k = remaining.size(); k-- > 0;) {
      const Face f = remaining[k];
      if (!is_leaf(remaining, f)) continue;
      std::vector<Face> rest = remaining;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
      peeled.push_back(f);
      if (peel(rest)) return true;
      peeled.pop_back();
    }
    dead_ends.insert(remaining);
    return false;
  };
  std::vector<Face> all = c.facets();  // already lexicographic
  if (!peel(all)) return std::nullopt;
  LeafOrder lo;
  lo.order.assign(peeled.rbegin(), peeled.rend());
  return lo;
}

}  // namespace toric
