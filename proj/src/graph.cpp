#include "toric/graph.hpp"

#include <algorithm>
#include <functional>

namespace toric {

namespace {

void bron_kerbosch(const SkeletonGraph& g, VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  // pivot with the most neighbours in p
  int pivot = 0;
  int best = -1;
  for (int u : (p | x).vertices()) {
    const int k = (g.neighbors(u) & p).size();
    if (k > best) {
      best = k;
      pivot = u;
    }
  }
  for (int v : (p - g.neighbors(pivot)).vertices()) {
    VertexSet nv = g.neighbors(v);
    VertexSet rv = r;
    rv.insert(v);
    bron_kerbosch(g, rv, p & nv, x & nv, out);
    p.erase(v);
    x.insert(v);
  }
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const SkeletonGraph& g) {
  std::vector<VertexSet> out;
  bron_kerbosch(g, VertexSet(), VertexSet::full(g.n()), VertexSet(), out);
  std::sort(out.begin(), out.end(), size_then_lex_less);
  return out;
}

bool is_vertex_cover(const SkeletonGraph& g, VertexSet c) {
  for (auto [u, v] : g.edges())
    if (!c.contains(u) && !c.contains(v)) return false;
  return true;
}

VertexCoverSet minimal_vertex_covers(const SkeletonGraph& g) {
  VertexCoverSet out;
  const VertexSet all = VertexSet::full(g.n());
  for (VertexSet independent : maximal_cliques(g.complement())) out.covers.push_back(all - independent);
  std::sort(out.covers.begin(), out.covers.end(), lex_less);
  return out;
}

std::vector<VertexSet> induced_cycles(const SkeletonGraph& g, int min_length) {
  std::vector<VertexSet> out;
  std::vector<int> path;
  VertexSet on_path;
  // path[0] is the smallest vertex of the cycle; path[1] < last closes each cycle once
  std::function<void(VertexSet)> extend = [&](VertexSet interior) {
    const int s = path.front();
    const int last = path.back();
    for (int w : g.neighbors(last).vertices()) {
      if (w <= s || on_path.contains(w)) continue;
      if (g.neighbors(w).intersects(interior)) continue;
      if (path.size() >= 2 && g.has_edge(w, s)) {
        const int length = static_cast<int>(path.size()) + 1;
        if (length >= min_length && path[1] < w) {
          VertexSet cyc = on_path;
          cyc.insert(w);
          out.push_back(cyc);
        }
        continue;
      }
      VertexSet next_interior = interior;
      if (path.size() >= 2) next_interior.insert(last);
      path.push_back(w);
      on_path.insert(w);
      extend(next_interior);
      on_path.erase(w);
      path.pop_back();
    }
  };
  for (int s = 1; s <= g.n(); ++s) {
    path = {s};
    on_path = VertexSet{s};
    extend(VertexSet());
  }
  std::sort(out.begin(), out.end(), size_then_lex_less);
  return out;
}

namespace {

bool has_odd_hole(const SkeletonGraph& g) {
  for (VertexSet c : induced_cycles(g, 5))
    if (c.size() % 2 == 1) return true;
  return false;
}

}  // namespace

bool is_perfect(const SkeletonGraph& g, int cap) {
  if (g.n() > cap)
    throw Error(ErrorCode::SizeCapExceeded,
                "perfect graph test limited to " + std::to_string(cap) + " vertices, got " + std::to_string(g.n()));
  return !has_odd_hole(g) && !has_odd_hole(g.complement());
}

bool is_chordal(const SkeletonGraph& g) {
  const int n = g.n();
  std::vector<int> weight(static_cast<std::size_t>(n) + 1, 0);
  VertexSet visited;
  for (int step = 0; step < n; ++step) {
    int pick = 0;
    for (int v = 1; v <= n; ++v)
      if (!visited.contains(v) && (pick == 0 || weight[v] > weight[pick])) pick = v;
    // earlier neighbours must form a clique
    const VertexSet earlier = g.neighbors(pick) & visited;
    for (int u : earlier.vertices()) {
      VertexSet others = earlier;
      others.erase(u);
      if (!others.is_subset_of(g.neighbors(u))) return false;
    }
    visited.insert(pick);
    for (int u : g.neighbors(pick).vertices())
      if (!visited.contains(u)) ++weight[u];
  }
  return true;
}

bool odd_cycle_condition(const SkeletonGraph& g) {
  std::vector<VertexSet> odd;
  for (VertexSet c : induced_cycles(g, 3))
    if (c.size() % 2 == 1) odd.push_back(c);
  for (std::size_t i = 0; i < odd.size(); ++i) {
    for (std::size_t j = i + 1; j < odd.size(); ++j) {
      if (odd[i].intersects(odd[j])) continue;
      bool joined = false;
      for (int u : odd[i].vertices())
        if (g.neighbors(u).intersects(odd[j])) {
          joined = true;
          break;
        }
      if (!joined) return false;
    }
  }
  return true;
}

bool is_unmixed(const VertexCoverSet& covers) {
  if (covers.covers.empty()) return true;
  const int k = covers.covers.front().size();
  return std::all_of(covers.covers.begin(), covers.covers.end(), [k](VertexSet c) { return c.size() == k; });
}

FaceCover face_cover_number(const SimplicialComplex& c) {
  const VertexSet all = VertexSet::full(c.n());
  const auto& facets = c.facets();
  int max_size = 0;
  for (Face f : facets) max_size = std::max(max_size, f.size());

  // greedy upper bound
  std::vector<Face> best;
  {
    VertexSet covered;
    while (covered != all) {
      Face pick = facets.front();
      for (Face f : facets)
        if ((f - covered).size() > (pick - covered).size()) pick = f;
      best.push_back(pick);
      covered = covered | pick;
    }
  }

  std::vector<Face> chosen;
  std::function<void(VertexSet)> search = [&](VertexSet covered) {
    if (covered == all) {
      if (chosen.size() < best.size()) best = chosen;
      return;
    }
    const int remaining = (all - covered).size();
    const int lower = static_cast<int>(chosen.size()) + (remaining + max_size - 1) / max_size;
    if (lower >= static_cast<int>(best.size())) return;
    const int v = (all - covered).min_vertex();
    std::vector<Face> options;
    for (Face f : facets)
      if (f.contains(v)) options.push_back(f);
    std::sort(options.begin(), options.end(), [covered](Face a, Face b) {
      return (a - covered).size() > (b - covered).size();
    });
    for (Face f : options) {
      chosen.push_back(f);
      search(covered | f);
      chosen.pop_back();
    }
  };
  search(VertexSet());
  std::sort(best.begin(), best.end(), lex_less);
  return FaceCover{best};
}

}  // namespace toric
