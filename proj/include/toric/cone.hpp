// The affine semigroup S generated by p_F = sum_{i in F} e_i + e_{n+1} and its cone.
#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toric/complex.hpp"
#include "toric/graph.hpp"
#include "toric/integer.hpp"

namespace toric {

/// p_F in Z^{n+1}; the last coordinate is the t-degree.
LatticePoint lattice_point(Face f, int n);

/// One point per face, in the order of `faces(c)`.
std::vector<LatticePoint> generators(const SimplicialComplex& c);

/// Rows are the given points.
MatrixX<Coeff> point_matrix(const std::vector<LatticePoint>& points);

/// Primitive integer linear form defining a facet of the cone.
struct SupportForm {
  LatticePoint coeffs;
  std::vector<std::size_t> incident;  ///< indices of generators where the form vanishes

  Coeff operator()(const LatticePoint& u) const { return coeffs.dot(u); }
  Coeff t_coefficient() const { return coeffs(coeffs.size() - 1); }
};

/// Facets of the cone spanned by the rows of `points`, by exact double description.
///
/// Sorted lexicographically by coefficient vector. Throws `DegenerateCone`
/// when the points do not span.
std::vector<SupportForm> facets(const MatrixX<Coeff>& points);

/// The semigroup data of a complex: generators in face order plus the facet forms.
struct ToricCone {
  int n = 0;
  std::vector<Face> faces;
  MatrixX<Coeff> points;  ///< row i is p_{faces[i]}
  std::vector<SupportForm> forms;

  int dimension() const { return n + 1; }
  bool contains(const LatticePoint& u) const;  ///< u in the real cone
};

ToricCone build_cone(const SimplicialComplex& c);

enum class PrimeKind { Coordinate, Cover, Extra };

std::string to_string(PrimeKind kind);

/// Height-one monomial prime, described by its facet.
struct MonomialPrime {
  PrimeKind kind = PrimeKind::Extra;
  int coordinate = 0;  ///< i for Coordinate(i)
  VertexSet cover;     ///< C for Cover(C)
  SupportForm form;
  std::vector<Face> generators;  ///< faces F with f(p_F) > 0
  Coeff t_coefficient = 0;

  bool contains_t() const { return t_coefficient > 0; }
};

/// The support form -sum_{i not in C} x_i + x_{n+1}.
LatticePoint cover_form(VertexSet cover, int n);

/// Tag each facet. Order: coordinate facets by i, cover facets in cover order,
/// then extra facets by coefficient vector.
///
/// Throws `MissingCoordinateFacet` or `MissingCoverFacet` if an expected facet is absent.
std::vector<MonomialPrime> classify_primes(const ToricCone& cone, const VertexCoverSet& covers);

/// Indices of the primes containing t (the minimal primes of (t)).
std::vector<std::size_t> t_primes(const std::vector<MonomialPrime>& primes);

/// Both sides of the characterization of complexes whose height-one monomial
/// primes are exactly the cover and coordinate primes.
struct PrimeCharacterization {
  bool no_extra = false;
  bool normal = false;
  bool flag = false;
  bool perfect = false;

  bool prime_side() const { return no_extra && normal; }
  bool graph_side() const { return flag && perfect; }
  bool agrees() const { return prime_side() == graph_side(); }
};

PrimeCharacterization prime_characterization(const std::vector<MonomialPrime>& primes, const SimplicialComplex& c,
                                         bool normal, int perfect_cap = kDefaultPerfectCap);

inline constexpr std::size_t kDefaultPointBudget = 400'000'000;

struct NormalityOptions {
  int max_height = 0;  ///< 0 means n
  std::size_t point_budget = kDefaultPointBudget;
};

struct NormalityResult {
  bool normal = true;
  int bound = 0;  ///< heights 2..bound were checked
  std::optional<LatticePoint> witness;
  std::size_t points_checked = 0;
};

/// Every cone lattice point of height 2..bound is a sum of generators.
///
/// Heights are scanned in increasing order; a point u of height k is accepted
/// when u - p_F lies in the cone for some face F, which by induction on k
/// means u - p_F is in S. Throws `SizeCapExceeded` past the point budget.
NormalityResult is_normal(const ToricCone& cone, const NormalityOptions& options = {});

Coeff valuation(const LatticePoint& u, const SupportForm& form);
Coeff valuation(const LatticePoint& u, const MonomialPrime& prime);

/// Exact membership in S with a shared memo; safe for concurrent use only
/// through distinct instances.
class SemigroupMembership {
 public:
  explicit SemigroupMembership(const ToricCone& cone);
  bool contains(const LatticePoint& u);

 private:
  bool search(std::vector<Coeff>& u);

  const ToricCone* cone_;
  std::map<std::vector<Coeff>, bool> memo_;
};

/// u is a sum of k generators, where k is the last coordinate of u.
bool membership(const LatticePoint& u, const ToricCone& cone);

/// All points of S at height exactly k, sorted lexicographically.
std::vector<LatticePoint> semigroup_layer(const ToricCone& cone, int k, std::size_t budget = 5'000'000);

/// The layer one above `layer` (which must be a full layer of S), sorted.
std::vector<LatticePoint> semigroup_step(const ToricCone& cone, const std::vector<LatticePoint>& layer,
                                         std::size_t budget = 5'000'000);

struct InteriorPoint {
  int height = 0;
  LatticePoint point;
};

/// Smallest height of a lattice point strictly inside the cone.
/// Throws `SearchBudgetExceeded` past `cap` (0 means 2n + 2).
InteriorPoint min_interior_height(const ToricCone& cone, int cap = 0);

/// Visit the lattice points u at height k with f(u) >= min_value for every
/// facet form f, in lexicographic order. The visitor returns false to stop.
/// Returns the number of points visited.
std::size_t for_each_cone_point(const ToricCone& cone, int k, Coeff min_value,
                                const std::function<bool(const LatticePoint&)>& visit);

}  // namespace toric
