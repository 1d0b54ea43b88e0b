#include "toric/cone.hpp"

#include <algorithm>

#include "toric/double_description.hpp"

namespace toric {

LatticePoint lattice_point(Face f, int n) {
  LatticePoint p = LatticePoint::Zero(n + 1);
  for (int v : f.vertices()) p(v - 1) = 1;
  p(n) = 1;
  return p;
}

std::vector<LatticePoint> generators(const SimplicialComplex& c) {
  std::vector<LatticePoint> out;
  for (Face f : faces(c)) out.push_back(lattice_point(f, c.n()));
  return out;
}

MatrixX<Coeff> point_matrix(const std::vector<LatticePoint>& points) {
  if (points.empty()) return MatrixX<Coeff>(0, 0);
  MatrixX<Coeff> m(static_cast<Eigen::Index>(points.size()), points.front().size());
  for (std::size_t i = 0; i < points.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = points[i].transpose();
  return m;
}

std::vector<SupportForm> facets(const MatrixX<Coeff>& points) {
  const MatrixX<Integer> exact = points.cast<Integer>();
  std::vector<SupportForm> out;
  for (const auto& facet : facet_normals<Integer>(exact)) {
    SupportForm form;
    form.coeffs = narrow_vector<Coeff>(facet.normal);
    for (auto i = facet.incident.find_first(); i != boost::dynamic_bitset<>::npos; i = facet.incident.find_next(i))
      form.incident.push_back(i);
    out.push_back(std::move(form));
  }
  return out;
}

bool ToricCone::contains(const LatticePoint& u) const {
  return std::all_of(forms.begin(), forms.end(), [&u](const SupportForm& f) { return f(u) >= 0; });
}

ToricCone build_cone(const SimplicialComplex& c) {
  ToricCone cone;
  cone.n = c.n();
  cone.faces = faces(c);
  std::vector<LatticePoint> pts;
  for (Face f : cone.faces) pts.push_back(lattice_point(f, c.n()));
  cone.points = point_matrix(pts);
  cone.forms = facets(cone.points);
  return cone;
}

std::string to_string(PrimeKind kind) {
  switch (kind) {
    case PrimeKind::Coordinate: return "coordinate";
    case PrimeKind::Cover: return "cover";
    case PrimeKind::Extra: return "extra";
  }
  return "extra";
}

LatticePoint cover_form(VertexSet cover, int n) {
  LatticePoint f = LatticePoint::Zero(n + 1);
  for (int i = 1; i <= n; ++i)
    if (!cover.contains(i)) f(i - 1) = -1;
  f(n) = 1;
  return f;
}

std::vector<MonomialPrime> classify_primes(const ToricCone& cone, const VertexCoverSet& covers) {
  const int n = cone.n;
  auto make = [&](const SupportForm& form) {
    MonomialPrime p;
    p.form = form;
    p.t_coefficient = form.t_coefficient();
    for (Eigen::Index i = 0; i < cone.points.rows(); ++i)
      if (cone.points.row(i).dot(form.coeffs) > 0) p.generators.push_back(cone.faces[static_cast<std::size_t>(i)]);
    return p;
  };
  auto find_form = [&](const LatticePoint& target) -> const SupportForm* {
    for (const auto& f : cone.forms)
      if (f.coeffs == target) return &f;
    return nullptr;
  };

  std::vector<MonomialPrime> out;
  std::vector<bool> used(cone.forms.size(), false);
  auto mark = [&](const SupportForm* f) { used[static_cast<std::size_t>(f - cone.forms.data())] = true; };

  for (int i = 1; i <= n; ++i) {
    LatticePoint e = LatticePoint::Zero(n + 1);
    e(i - 1) = 1;
    const SupportForm* f = find_form(e);
    if (f == nullptr) throw Error(ErrorCode::MissingCoordinateFacet, "x_" + std::to_string(i));
    mark(f);
    MonomialPrime p = make(*f);
    p.kind = PrimeKind::Coordinate;
    p.coordinate = i;
    out.push_back(std::move(p));
  }
  for (VertexSet c : covers.covers) {
    const SupportForm* f = find_form(cover_form(c, n));
    if (f == nullptr) throw Error(ErrorCode::MissingCoverFacet, to_string(c));
    mark(f);
    MonomialPrime p = make(*f);
    p.kind = PrimeKind::Cover;
    p.cover = c;
    out.push_back(std::move(p));
  }
  for (std::size_t k = 0; k < cone.forms.size(); ++k) {
    if (used[k]) continue;
    MonomialPrime p = make(cone.forms[k]);
    p.kind = PrimeKind::Extra;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<std::size_t> t_primes(const std::vector<MonomialPrime>& primes) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < primes.size(); ++i)
    if (primes[i].contains_t()) out.push_back(i);
  return out;
}

PrimeCharacterization prime_characterization(const std::vector<MonomialPrime>& primes, const SimplicialComplex& c,
                                         bool normal, int perfect_cap) {
  PrimeCharacterization out;
  out.no_extra = std::none_of(primes.begin(), primes.end(), [](const auto& p) { return p.kind == PrimeKind::Extra; });
  out.normal = normal;
  out.flag = is_flag(c);
  out.perfect = is_perfect(skeleton(c), perfect_cap);
  return out;
}

namespace {

// Depth-first enumeration of lattice points of a height slice of the cone.
// Each coordinate range is derived from every form, so every leaf satisfies
// all inequalities.
class SliceScanner {
 public:
  SliceScanner(const ToricCone& cone, int k, Coeff min_value)
      : n_(cone.n), m_(static_cast<int>(cone.forms.size())), k_(k), min_value_(min_value) {
    coeffs_.resize(static_cast<std::size_t>(m_) * (n_ + 1));
    for (int f = 0; f < m_; ++f)
      for (int j = 0; j <= n_; ++j) coeffs_[idx(f, j)] = cone.forms[static_cast<std::size_t>(f)].coeffs(j);
    // suffix_[f][i]: best possible contribution of coordinates i..n-1
    suffix_.assign(static_cast<std::size_t>(m_) * (n_ + 1), 0);
    for (int f = 0; f < m_; ++f)
      for (int i = n_ - 1; i >= 0; --i)
        suffix_[idx(f, i)] = suffix_[idx(f, i + 1)] + std::max<Coeff>(coeffs_[idx(f, i)], 0) * k_;
    values_.assign(static_cast<std::size_t>(m_) * (n_ + 1), 0);
    for (int f = 0; f < m_; ++f) values_[idx(f, 0)] = coeffs_[idx(f, n_)] * k_;
    point_ = LatticePoint::Zero(n_ + 1);
    point_(n_) = k_;
  }

  template <typename Visit>
  std::size_t run(Visit&& visit) {
    stopped_ = false;
    visited_ = 0;
    descend(0, visit);
    return visited_;
  }

  /// Value of form f at the current leaf.
  Coeff leaf_value(int f) const { return values_[idx(f, n_)]; }

 private:
  std::size_t idx(int f, int j) const { return static_cast<std::size_t>(f) * (n_ + 1) + j; }

  template <typename Visit>
  void descend(int i, Visit& visit) {
    if (stopped_) return;
    if (i == n_) {
      ++visited_;
      if (!visit(point_, *this)) stopped_ = true;
      return;
    }
    Coeff lo = 0;
    Coeff hi = k_;
    for (int f = 0; f < m_; ++f) {
      const Coeff a = coeffs_[idx(f, i)];
      const Coeff slack = values_[idx(f, i)] + suffix_[idx(f, i + 1)] - min_value_;
      if (a == 0) {
        if (slack < 0) return;
      } else if (a < 0) {
        hi = std::min(hi, floor_div<Coeff>(slack, -a));
      } else {
        lo = std::max(lo, -floor_div<Coeff>(slack, a));
      }
      if (lo > hi) return;
    }
    for (Coeff x = lo; x <= hi && !stopped_; ++x) {
      point_(i) = x;
      for (int f = 0; f < m_; ++f) values_[idx(f, i + 1)] = values_[idx(f, i)] + coeffs_[idx(f, i)] * x;
      descend(i + 1, visit);
    }
    point_(i) = 0;
  }

  int n_;
  int m_;
  Coeff k_;
  Coeff min_value_;
  std::vector<Coeff> coeffs_;
  std::vector<Coeff> suffix_;
  std::vector<Coeff> values_;
  LatticePoint point_;
  bool stopped_ = false;
  std::size_t visited_ = 0;
};

}  // namespace

std::size_t for_each_cone_point(const ToricCone& cone, int k, Coeff min_value,
                                const std::function<bool(const LatticePoint&)>& visit) {
  SliceScanner scanner(cone, k, min_value);
  return scanner.run([&](const LatticePoint& u, const SliceScanner&) { return visit(u); });
}

NormalityResult is_normal(const ToricCone& cone, const NormalityOptions& options) {
  NormalityResult out;
  out.bound = options.max_height > 0 ? options.max_height : cone.n;
  const int m = static_cast<int>(cone.forms.size());
  const auto p = static_cast<std::size_t>(cone.points.rows());

  // values of every form on every generator, generator-major
  std::vector<Coeff> on_generator(p * static_cast<std::size_t>(m));
  for (std::size_t g = 0; g < p; ++g)
    for (int f = 0; f < m; ++f)
      on_generator[g * m + f] = cone.points.row(static_cast<Eigen::Index>(g)).dot(cone.forms[static_cast<std::size_t>(f)].coeffs);
  std::vector<std::uint64_t> support(p);
  for (std::size_t g = 0; g < p; ++g) support[g] = cone.faces[g].bits();

  std::vector<Coeff> values(static_cast<std::size_t>(m));
  for (int k = 2; k <= out.bound; ++k) {
    SliceScanner scanner(cone, k, 0);
    std::size_t last_hit = 0;
    bool over_budget = false;
    scanner.run([&](const LatticePoint& u, const SliceScanner& s) {
      if (out.points_checked >= options.point_budget) {
        over_budget = true;
        return false;
      }
      ++out.points_checked;
      std::uint64_t supp = 0;
      for (int i = 0; i < cone.n; ++i)
        if (u(i) > 0) supp |= std::uint64_t{1} << i;
      for (int f = 0; f < m; ++f) values[static_cast<std::size_t>(f)] = s.leaf_value(f);
      // try the generator that worked last time first
      for (std::size_t step = 0; step < p; ++step) {
        const std::size_t g = (last_hit + step) % p;
        if ((support[g] & ~supp) != 0) continue;
        const Coeff* gv = &on_generator[g * m];
        bool ok = true;
        for (int f = 0; f < m; ++f)
          if (values[static_cast<std::size_t>(f)] < gv[f]) {
            ok = false;
            break;
          }
        if (ok) {
          last_hit = g;
          return true;
        }
      }
      out.normal = false;
      out.witness = u;
      return false;
    });
    if (!out.normal) return out;
    if (over_budget)
      throw Error(ErrorCode::SizeCapExceeded, "normality scan exceeded " + std::to_string(options.point_budget) + " points");
  }
  return out;
}

Coeff valuation(const LatticePoint& u, const SupportForm& form) { return form(u); }
Coeff valuation(const LatticePoint& u, const MonomialPrime& prime) { return prime.form(u); }

SemigroupMembership::SemigroupMembership(const ToricCone& cone) : cone_(&cone) {}

bool SemigroupMembership::contains(const LatticePoint& u) {
  std::vector<Coeff> key(u.data(), u.data() + u.size());
  return search(key);
}

bool SemigroupMembership::search(std::vector<Coeff>& u) {
  const int n = cone_->n;
  const Coeff k = u[static_cast<std::size_t>(n)];
  if (k < 0) return false;
  for (int i = 0; i < n; ++i)
    if (u[static_cast<std::size_t>(i)] < 0 || u[static_cast<std::size_t>(i)] > k) return false;
  if (k == 0) return true;  // all coordinates are zero here
  if (auto it = memo_.find(u); it != memo_.end()) return it->second;
  const LatticePoint point = Eigen::Map<const LatticePoint>(u.data(), static_cast<Eigen::Index>(u.size()));
  bool found = false;
  if (cone_->contains(point)) {
    for (std::size_t g = 0; g < cone_->faces.size() && !found; ++g) {
      const Face f = cone_->faces[g];
      bool fits = true;
      for (int v : f.vertices())
        if (u[static_cast<std::size_t>(v - 1)] == 0) {
          fits = false;
          break;
        }
      if (!fits) continue;
      std::vector<Coeff> rest = u;
      for (int v : f.vertices()) --rest[static_cast<std::size_t>(v - 1)];
      --rest[static_cast<std::size_t>(n)];
      found = search(rest);
    }
  }
  memo_.emplace(u, found);
  return found;
}

bool membership(const LatticePoint& u, const ToricCone& cone) {
  SemigroupMembership oracle(cone);
  return oracle.contains(u);
}

std::vector<LatticePoint> semigroup_step(const ToricCone& cone, const std::vector<LatticePoint>& layer,
                                         std::size_t budget) {
  auto less = [](const LatticePoint& a, const LatticePoint& b) {
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
  };
  std::vector<LatticePoint> next;
  for (const auto& u : layer)
    for (Eigen::Index g = 0; g < cone.points.rows(); ++g) {
      next.push_back(u + cone.points.row(g).transpose());
      if (next.size() > budget)
        throw Error(ErrorCode::SizeCapExceeded, "semigroup layer exceeded " + std::to_string(budget) + " points");
    }
  std::sort(next.begin(), next.end(), less);
  next.erase(std::unique(next.begin(), next.end()), next.end());
  return next;
}

std::vector<LatticePoint> semigroup_layer(const ToricCone& cone, int k, std::size_t budget) {
  std::vector<LatticePoint> layer{LatticePoint::Zero(cone.n + 1)};
  for (int h = 1; h <= k; ++h) layer = semigroup_step(cone, layer, budget);
  return layer;
}

InteriorPoint min_interior_height(const ToricCone& cone, int cap) {
  const int limit = cap > 0 ? cap : 2 * cone.n + 2;
  for (int k = 1; k <= limit; ++k) {
    std::optional<LatticePoint> hit;
    for_each_cone_point(cone, k, 1, [&](const LatticePoint& u) {
      hit = u;
      return false;
    });
    if (hit) return InteriorPoint{k, *hit};
  }
  throw Error(ErrorCode::SearchBudgetExceeded, "no interior point up to height " + std::to_string(limit));
}

}  // namespace toric
