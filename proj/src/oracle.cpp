#include "toric/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace toric::oracle {

namespace {

using Wide = __int128;

Wide det_wide(std::vector<std::vector<Wide>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Wide sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Coeff gcd_coeff(Coeff a, Coeff b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

void for_each_subset(int total, int k, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  if (k > total) return;
  while (true) {
    visit(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == total - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Coeff> key(const LatticePoint& u) { return {u.data(), u.data() + u.size()}; }

bool is_cycle(const SkeletonGraph& g, VertexSet s) {
  if (s.size() < 3) return false;
  for (int v : s.vertices())
    if ((g.neighbors(v) & s).size() != 2) return false;
  // connected
  VertexSet seen{s.min_vertex()};
  for (bool grew = true; grew;) {
    grew = false;
    for (int v : seen.vertices()) {
      const VertexSet next = seen | (g.neighbors(v) & s);
      if (next != seen) {
        seen = next;
        grew = true;
      }
    }
  }
  return seen == s;
}

bool face_of(const SimplicialComplex& c, VertexSet s) {
  return std::any_of(c.facets().begin(), c.facets().end(), [s](Face f) { return s.is_subset_of(f); });
}

VertexSet subset_from_mask(std::uint64_t mask) {
  VertexSet s;
  for (int v = 1; mask != 0; ++v, mask >>= 1)
    if (mask & 1U) s.insert(v);
  return s;
}

}  // namespace

std::vector<LatticePoint> facet_normals(const MatrixX<Coeff>& points) {
  const int d = static_cast<int>(points.cols());
  const int rows = static_cast<int>(points.rows());
  std::set<std::vector<Coeff>> found;
  for_each_subset(rows, d - 1, [&](const std::vector<int>& sub) {
    LatticePoint normal(d);
    for (int j = 0; j < d; ++j) {
      std::vector<std::vector<Wide>> minor;
      for (int r : sub) {
        std::vector<Wide> row;
        for (int c = 0; c < d; ++c)
          if (c != j) row.push_back(points(r, c));
        minor.push_back(std::move(row));
      }
      const Wide v = det_wide(std::move(minor));
      normal(j) = static_cast<Coeff>((j % 2 == 0) ? v : -v);
    }
    if (normal.isZero()) return;
    Coeff g = 0;
    for (int j = 0; j < d; ++j) g = gcd_coeff(g, normal(j));
    normal /= g;
    const LatticePoint values = points * normal;
    if (values.minCoeff() < 0) {
      if (values.maxCoeff() > 0) return;
      normal = -normal;
    }
    found.insert(key(normal));
  });
  std::vector<LatticePoint> out;
  for (const auto& k : found) out.push_back(Eigen::Map<const LatticePoint>(k.data(), static_cast<Eigen::Index>(k.size())));
  return out;
}

MatrixX<Coeff> generator_matrix(const SimplicialComplex& c) {
  const int n = c.n();
  std::vector<LatticePoint> rows;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const VertexSet s = subset_from_mask(mask);
    if (!face_of(c, s)) continue;
    LatticePoint p = LatticePoint::Zero(n + 1);
    for (int v : s.vertices()) p(v - 1) = 1;
    p(n) = 1;
    rows.push_back(p);
  }
  MatrixX<Coeff> m(static_cast<Eigen::Index>(rows.size()), n + 1);
  for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  return m;
}

bool in_cone(const std::vector<LatticePoint>& normals, const LatticePoint& u, Coeff min_value) {
  return std::all_of(normals.begin(), normals.end(), [&](const LatticePoint& f) { return f.dot(u) >= min_value; });
}

std::vector<LatticePoint> box_points(const std::vector<LatticePoint>& normals, int n, int k, Coeff min_value) {
  std::vector<LatticePoint> out;
  LatticePoint u = LatticePoint::Zero(n + 1);
  u(n) = k;
  while (true) {
    if (in_cone(normals, u, min_value)) out.push_back(u);
    int i = n - 1;
    while (i >= 0 && u(i) == k) u(i--) = 0;
    if (i < 0) return out;
    ++u(i);
  }
}

HilbertResult hilbert_normality(const SimplicialComplex& c) {
  const int n = c.n();
  const MatrixX<Coeff> gens = generator_matrix(c);
  const auto normals = facet_normals(gens);
  std::set<std::vector<Coeff>> generator_keys;
  for (Eigen::Index i = 0; i < gens.rows(); ++i) generator_keys.insert(key(gens.row(i).transpose()));

  HilbertResult out;
  std::vector<LatticePoint> lower;
  for (int k = 1; k <= n; ++k) {
    const auto level = box_points(normals, n, k, 0);
    for (const auto& u : level) {
      const bool reducible = std::any_of(lower.begin(), lower.end(), [&](const LatticePoint& v) {
        return in_cone(normals, u - v);
      });
      if (!reducible) out.hilbert_basis.push_back(u);
    }
    lower.insert(lower.end(), level.begin(), level.end());
  }
  for (const auto& h : out.hilbert_basis)
    if (!generator_keys.contains(key(h))) out.normal = false;
  return out;
}

int interior_height(const SimplicialComplex& c, int cap) {
  const auto normals = facet_normals(generator_matrix(c));
  for (int k = 1; k <= cap; ++k)
    if (!box_points(normals, c.n(), k, 1).empty()) return k;
  return -1;
}

std::vector<VertexSet> minimal_vertex_covers(const SkeletonGraph& g) {
  const int n = g.n();
  auto covers = [&](VertexSet s) {
    for (auto [u, v] : g.edges())
      if (!s.contains(u) && !s.contains(v)) return false;
    return true;
  };
  std::vector<VertexSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const VertexSet s = subset_from_mask(mask);
    if (!covers(s)) continue;
    bool minimal = true;
    for (int v : s.vertices()) {
      VertexSet t = s;
      t.erase(v);
      if (covers(t)) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<VertexSet> induced_cycles(const SkeletonGraph& g) {
  std::vector<VertexSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.n()); ++mask) {
    const VertexSet s = subset_from_mask(mask);
    if (is_cycle(g, s)) out.push_back(s);
  }
  return out;
}

bool is_chordal(const SkeletonGraph& g) {
  const auto cycles = induced_cycles(g);
  return std::none_of(cycles.begin(), cycles.end(), [](VertexSet s) { return s.size() >= 4; });
}

bool is_perfect(const SkeletonGraph& g) {
  for (const auto& h : {g, g.complement()})
    for (VertexSet s : induced_cycles(h))
      if (s.size() >= 5 && s.size() % 2 == 1) return false;
  return true;
}

bool odd_cycle_condition(const SkeletonGraph& g) {
  std::vector<VertexSet> odd;
  for (VertexSet s : induced_cycles(g))
    if (s.size() % 2 == 1) odd.push_back(s);
  for (VertexSet a : odd)
    for (VertexSet b : odd) {
      if (a.intersects(b)) continue;
      bool edge = false;
      for (int u : a.vertices())
        for (int v : b.vertices())
          if (g.has_edge(u, v)) edge = true;
      if (!edge) return false;
    }
  return true;
}

bool is_flag(const SimplicialComplex& c) {
  const int n = c.n();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const VertexSet s = subset_from_mask(mask);
    bool clique = true;
    for (int u : s.vertices())
      for (int v : s.vertices())
        if (u < v && !face_of(c, VertexSet{u, v})) clique = false;
    if (clique && !face_of(c, s)) return false;
  }
  return true;
}

int face_cover_number(const SimplicialComplex& c) {
  const auto& facets = c.facets();
  const int m = static_cast<int>(facets.size());
  const VertexSet all = VertexSet::full(c.n());
  for (int k = 1; k <= m; ++k) {
    bool hit = false;
    for_each_subset(m, k, [&](const std::vector<int>& sub) {
      VertexSet u;
      for (int i : sub) u = u | facets[static_cast<std::size_t>(i)];
      if (u == all) hit = true;
    });
    if (hit) return k;
  }
  return m;
}

bool is_quasi_forest(const SimplicialComplex& c) {
  std::vector<Face> order = c.facets();
  if (order.size() > 8) throw Error(ErrorCode::SizeCapExceeded, "leaf-order oracle limited to 8 facets");
  std::sort(order.begin(), order.end());
  auto leaf = [](const std::vector<Face>& fs, std::size_t i) {
    if (fs.size() == 1) return true;
    for (std::size_t b = 0; b < fs.size(); ++b) {
      if (b == i) continue;
      bool branch = true;
      for (std::size_t h = 0; h < fs.size(); ++h)
        if (h != i && !(fs[i] & fs[h]).is_subset_of(fs[b])) branch = false;
      if (branch) return true;
    }
    return false;
  };
  do {
    bool ok = true;
    for (std::size_t i = 1; i <= order.size() && ok; ++i) {
      std::vector<Face> prefix(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(i));
      ok = leaf(prefix, i - 1);
    }
    if (ok) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

std::vector<Integer> determinantal_invariants(const MatrixX<Coeff>& m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  std::vector<Integer> divisors{Integer(1)};
  for (int k = 1; k <= std::min(rows, cols); ++k) {
    Integer g = 0;
    for_each_subset(rows, k, [&](const std::vector<int>& rs) {
      for_each_subset(cols, k, [&](const std::vector<int>& cs) {
        std::vector<std::vector<Wide>> minor;
        for (int r : rs) {
          std::vector<Wide> row;
          for (int c : cs) row.push_back(m(r, c));
          minor.push_back(std::move(row));
        }
        Wide d = det_wide(std::move(minor));
        if (d < 0) d = -d;
        g = boost::multiprecision::gcd(g, Integer(static_cast<long long>(d)));
      });
    });
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<Integer> out;
  for (std::size_t k = 1; k < divisors.size(); ++k) out.push_back(divisors[k] / divisors[k - 1]);
  return out;
}

}  // namespace toric::oracle
