#include "toric/grobner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toric {

int FaceOrder::index_of(Face f) const {
  auto it = std::find(total.begin(), total.end(), f);
  return it == total.end() ? -1 : static_cast<int>(it - total.begin());
}

FaceOrder face_order(const SimplicialComplex& c, const LeafOrder& lo) {
  if (!is_leaf_order(c, lo)) throw Error(ErrorCode::NotQuasiForest, "facet sequence is not a leaf order");
  FaceOrder fo;
  fo.n = c.n();
  fo.facets = lo.order;
  for (std::size_t i = 0; i < lo.order.size(); ++i) {
    std::vector<Face> block;
    for (Face g : faces_of({lo.order[i]})) {
      const bool earlier = std::any_of(lo.order.begin(), lo.order.begin() + static_cast<std::ptrdiff_t>(i),
                                       [g](Face f) { return g.is_subset_of(f); });
      if (!earlier) block.push_back(g);
    }
    for (Face g : block) {
      fo.total.push_back(g);
      fo.block.push_back(static_cast<int>(i));
    }
    fo.blocks.push_back(std::move(block));
  }
  return fo;
}

FaceOrder face_order(const SimplicialComplex& c) {
  auto lo = leaf_order(c);
  if (!lo) throw Error(ErrorCode::NotQuasiForest, "complex has no leaf order");
  return face_order(c, *lo);
}

namespace {

std::pair<int, int> ordered(int a, int b) { return a <= b ? std::pair{a, b} : std::pair{b, a}; }

bool is_face_of(const std::vector<Face>& facets, Face g) {
  return std::any_of(facets.begin(), facets.end(), [g](Face f) { return g.is_subset_of(f); });
}

bool divides(const Monomial& m, const Monomial& a) { return (a - m).minCoeff() >= 0; }

}  // namespace

std::vector<Binomial> generate_basis(const FaceOrder& fo) {
  std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, Binomial> found;
  auto add = [&](int i, int j, Face r, Face s, bool f_type, std::optional<int> x) {
    Binomial b;
    b.lead = ordered(i, j);
    b.trail = ordered(fo.index_of(r), fo.index_of(s));
    auto [it, fresh] = found.try_emplace({b.lead, b.trail}, b);
    Binomial& e = it->second;
    if (f_type) e.from_f = true;
    if (!f_type) {
      if (!e.from_g) e.x = x;
      e.from_g = true;
    }
  };
  const int p = fo.size();
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      const Face a = fo.total[i];
      const Face b = fo.total[j];
      if (!a.is_subset_of(b) && !b.is_subset_of(a) && is_face_of(fo.facets, a | b)) add(i, j, a & b, a | b, true, {});
      if (fo.block[i] < fo.block[j]) {
        const Face later = fo.facets[static_cast<std::size_t>(fo.block[j])];
        for (int x : ((a & later) - b).vertices()) {
          Face r = a;
          r.erase(x);
          Face s = b;
          s.insert(x);
          add(i, j, r, s, false, x);
        }
      }
    }
  }
  std::vector<Binomial> out;
  out.reserve(found.size());
  for (auto& [key, b] : found) out.push_back(b);
  return out;
}

Monomial monomial(int p, std::pair<int, int> vars) {
  Monomial m = Monomial::Zero(p);
  m(vars.first) += 1;
  m(vars.second) += 1;
  return m;
}

std::strong_ordering degrevlex_compare(const Monomial& a, const Monomial& b) {
  const int da = a.sum();
  const int db = b.sum();
  if (da != db) return da <=> db;
  for (Eigen::Index k = a.size() - 1; k >= 0; --k) {
    const int d = a(k) - b(k);
    if (d != 0) return d < 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

Monomial degrevlex_leading(const Binomial& b, const FaceOrder& fo) {
  const Monomial lead = monomial(fo.size(), b.lead);
  const Monomial trail = monomial(fo.size(), b.trail);
  if (degrevlex_compare(lead, trail) != std::strong_ordering::greater)
    throw Error(ErrorCode::LeadingTermMismatch, "declared lead y" + std::to_string(b.lead.first + 1) + "y" +
                                                    std::to_string(b.lead.second + 1) + " is not the larger term");
  return lead;
}

LatticePoint image(const Monomial& a, const FaceOrder& fo) {
  LatticePoint u = LatticePoint::Zero(fo.n + 1);
  for (Eigen::Index k = 0; k < a.size(); ++k)
    if (a(k) != 0) u += a(k) * lattice_point(fo.total[static_cast<std::size_t>(k)], fo.n);
  return u;
}

void check_in_kernel(const std::vector<Binomial>& basis, const FaceOrder& fo) {
  for (const auto& b : basis)
    if (image(monomial(fo.size(), b.lead), fo) != image(monomial(fo.size(), b.trail), fo))
      throw Error(ErrorCode::NotInKernel, "y" + std::to_string(b.lead.first + 1) + "y" +
                                              std::to_string(b.lead.second + 1) + " and y" +
                                              std::to_string(b.trail.first + 1) + "y" +
                                              std::to_string(b.trail.second + 1) + " have different images");
}

namespace {

struct Reducer {
  Monomial lead;
  Monomial trail;
};

std::vector<Reducer> reducers(const std::vector<Binomial>& basis, int p) {
  std::vector<Reducer> out;
  out.reserve(basis.size());
  for (const auto& b : basis) out.push_back({monomial(p, b.lead), monomial(p, b.trail)});
  return out;
}

// u - v reduces to zero: rewrite the larger term until the two meet.
bool reduces_to_zero(Monomial u, Monomial v, const std::vector<Reducer>& rs) {
  while (true) {
    const auto cmp = degrevlex_compare(u, v);
    if (cmp == std::strong_ordering::equal) return true;
    Monomial& big = cmp == std::strong_ordering::greater ? u : v;
    auto it = std::find_if(rs.begin(), rs.end(), [&](const Reducer& r) { return divides(r.lead, big); });
    if (it == rs.end()) return false;
    big += it->trail - it->lead;
  }
}

}  // namespace

BuchbergerResult buchberger_verify(const std::vector<Binomial>& basis, const FaceOrder& fo, bool exhaustive) {
  check_in_kernel(basis, fo);
  for (const auto& b : basis) degrevlex_leading(b, fo);
  const auto rs = reducers(basis, fo.size());
  BuchbergerResult out;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    for (std::size_t j = i + 1; j < rs.size(); ++j) {
      const Monomial lcm = rs[i].lead.cwiseMax(rs[j].lead);
      const bool coprime = lcm.sum() == rs[i].lead.sum() + rs[j].lead.sum();
      if (coprime && !exhaustive) {
        ++out.pairs_skipped;
        continue;
      }
      ++out.pairs_reduced;
      if (!reduces_to_zero(lcm - rs[i].lead + rs[i].trail, lcm - rs[j].lead + rs[j].trail, rs)) {
        out.ok = false;
        out.failing = std::pair{i, j};
        return out;
      }
    }
  }
  return out;
}

Monomial normal_form(Monomial a, const std::vector<Binomial>& basis, const ReducerChoice& choose) {
  const auto rs = reducers(basis, static_cast<int>(a.size()));
  std::vector<std::size_t> candidates;
  while (true) {
    candidates.clear();
    for (std::size_t k = 0; k < rs.size(); ++k)
      if (divides(rs[k].lead, a)) candidates.push_back(k);
    if (candidates.empty()) return a;
    const std::size_t pick = choose ? choose(candidates) : candidates.front();
    a += rs[pick].trail - rs[pick].lead;
  }
}

bool is_standard(const Monomial& a, const std::vector<Binomial>& basis) {
  for (const auto& b : basis)
    if (divides(monomial(static_cast<int>(a.size()), b.lead), a)) return false;
  return true;
}

bool initial_squarefree_quadratic(const std::vector<Binomial>& basis) {
  return std::all_of(basis.begin(), basis.end(), [](const Binomial& b) { return b.lead.first != b.lead.second; });
}

RadicalityResult t_is_radical(const SimplicialComplex& c, const ToricCone& cone,
                              const std::vector<MonomialPrime>& primes, bool normal, int bound) {
  RadicalityResult out;
  out.bound = bound;
  if (is_quasi_forest(c)) out.structural = true;
  if (normal) {
    const auto tp = t_primes(primes);
    const LatticePoint t = LatticePoint::Unit(cone.n + 1, cone.n);
    std::set<std::vector<Coeff>> below{std::vector<Coeff>(static_cast<std::size_t>(cone.n) + 1, 0)};
    std::vector<LatticePoint> layer{LatticePoint::Zero(cone.n + 1)};
    out.semantic = true;
    for (int k = 1; k <= bound && !out.witness; ++k) {
      layer = semigroup_step(cone, layer);
      for (const auto& u : layer) {
        const bool in_all = std::all_of(tp.begin(), tp.end(), [&](std::size_t i) { return valuation(u, primes[i]) > 0; });
        if (!in_all) continue;
        const LatticePoint w = u - t;
        if (!below.contains(std::vector<Coeff>(w.data(), w.data() + w.size()))) {
          out.semantic = false;
          out.witness = u;
          break;
        }
      }
      below.clear();
      for (const auto& u : layer) below.emplace(u.data(), u.data() + u.size());
    }
  }
  if (out.semantic == false)
    out.radical = false;
  else if (out.structural || out.semantic)
    out.radical = true;
  return out;
}

namespace {

std::size_t multiset_count(std::size_t p, int k, std::size_t cap) {
  // C(p + k - 1, k), saturating above cap
  long double v = 1;
  for (int i = 1; i <= k; ++i) v = v * static_cast<long double>(p + static_cast<std::size_t>(i) - 1) / i;
  return v > static_cast<long double>(cap) ? cap + 1 : static_cast<std::size_t>(v + 0.5L);
}

}  // namespace

KernelOracle kernel_oracle(const FaceOrder& fo, int d, std::size_t cap) {
  const int p = fo.size();
  std::size_t total = 0;
  for (int k = 1; k <= d; ++k) total += multiset_count(static_cast<std::size_t>(p), k, cap);
  if (total > cap)
    throw Error(ErrorCode::SizeCapExceeded, "kernel oracle needs more than " + std::to_string(cap) + " monomials");

  std::vector<LatticePoint> gens;
  for (Face f : fo.total) gens.push_back(lattice_point(f, fo.n));

  std::map<std::vector<Coeff>, std::vector<Monomial>> groups;
  std::vector<int> vars;
  Monomial expo = Monomial::Zero(p);
  LatticePoint acc = LatticePoint::Zero(fo.n + 1);
  KernelOracle out;
  out.degree_bound = d;
  auto rec = [&](auto&& self, int start) -> void {
    if (!vars.empty()) {
      groups[std::vector<Coeff>(acc.data(), acc.data() + acc.size())].push_back(expo);
      ++out.monomials;
    }
    if (static_cast<int>(vars.size()) == d) return;
    for (int v = start; v < p; ++v) {
      vars.push_back(v);
      expo(v) += 1;
      acc += gens[static_cast<std::size_t>(v)];
      self(self, v);
      acc -= gens[static_cast<std::size_t>(v)];
      expo(v) -= 1;
      vars.pop_back();
    }
  };
  rec(rec, 0);

  for (auto& [key, fiber] : groups) {
    std::sort(fiber.begin(), fiber.end(),
              [](const Monomial& a, const Monomial& b) { return degrevlex_compare(a, b) == std::strong_ordering::greater; });
    out.fibers.push_back(std::move(fiber));
  }
  return out;
}

std::vector<std::pair<Monomial, Monomial>> kernel_pairs(const KernelOracle& oracle, int degree) {
  std::vector<std::pair<Monomial, Monomial>> out;
  for (const auto& fiber : oracle.fibers) {
    if (fiber.front().sum() != degree) continue;
    for (std::size_t i = 0; i < fiber.size(); ++i)
      for (std::size_t j = i + 1; j < fiber.size(); ++j) out.emplace_back(fiber[i], fiber[j]);
  }
  return out;
}

InjectivityResult standard_monomial_injectivity(const KernelOracle& oracle, const std::vector<Binomial>& basis) {
  InjectivityResult out;
  for (const auto& fiber : oracle.fibers) {
    ++out.fibers_checked;
    const Monomial* first = nullptr;
    for (const auto& m : fiber) {
      if (!is_standard(m, basis)) continue;
      if (first) {
        out.injective = false;
        out.collision = std::pair{*first, m};
        return out;
      }
      first = &m;
    }
  }
  return out;
}

}  // namespace toric
