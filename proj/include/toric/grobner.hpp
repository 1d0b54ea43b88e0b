// Quadratic Gröbner basis of the toric ideal of a quasi-forest.
//
// Variables y_1 > y_2 > ... > y_p correspond to the faces G_1, ..., G_p in
// face order; in code variable k (0-based) is y_{k+1}. The monomial order is
// degree reverse lexicographic: equal degrees are compared by the last
// non-zero entry of the exponent difference, which is negative for the larger
// monomial.
#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "toric/cone.hpp"

namespace toric {

struct FaceOrder {
  int n = 0;
  std::vector<Face> facets;               ///< leaf order F_1, ..., F_m
  std::vector<std::vector<Face>> blocks;  ///< A_i = <F_i> minus <F_1, ..., F_{i-1}>
  std::vector<Face> total;                ///< G_1 > G_2 > ... > G_p
  std::vector<int> block;                 ///< block index of total[k]

  int size() const { return static_cast<int>(total.size()); }
  /// Variable index of a face, or -1.
  int index_of(Face f) const;
};

/// Blocks in leaf order, then cardinality, then lexicographic within a block.
/// Throws `NotQuasiForest` when `lo` is not a leaf order of c.
FaceOrder face_order(const SimplicialComplex& c, const LeafOrder& lo);

/// Uses `leaf_order(c)`. Throws `NotQuasiForest`.
FaceOrder face_order(const SimplicialComplex& c);

enum class BinomialKind { F, G };

/// y_lead.first * y_lead.second - y_trail.first * y_trail.second (pairs sorted).
struct Binomial {
  std::pair<int, int> lead;
  std::pair<int, int> trail;
  bool from_f = false;  ///< incomparable faces of one facet
  bool from_g = false;  ///< vertex moved into a later block
  std::optional<int> x;

  BinomialKind kind() const { return from_f ? BinomialKind::F : BinomialKind::G; }
  friend bool operator==(const Binomial&, const Binomial&) = default;
};

/// All F- and G-type binomials, one entry per (lead, trail), sorted by lead then trail.
std::vector<Binomial> generate_basis(const FaceOrder& fo);

using Monomial = Eigen::VectorXi;

Monomial monomial(int p, std::pair<int, int> vars);

/// Degree first, then reverse lexicographic.
std::strong_ordering degrevlex_compare(const Monomial& a, const Monomial& b);

/// The larger of the two monomials. Throws `LeadingTermMismatch` unless it is the declared lead.
Monomial degrevlex_leading(const Binomial& b, const FaceOrder& fo);

/// The image sum_k a_k p_{G_k} in Z^{n+1}.
LatticePoint image(const Monomial& a, const FaceOrder& fo);

/// Throws `NotInKernel` for the first binomial whose two sides have different images.
void check_in_kernel(const std::vector<Binomial>& basis, const FaceOrder& fo);

struct BuchbergerResult {
  bool ok = true;
  std::size_t pairs_reduced = 0;
  std::size_t pairs_skipped = 0;  ///< coprime leading terms
  std::optional<std::pair<std::size_t, std::size_t>> failing;
};

/// Every S-pair reduces to zero. Pairs with coprime leads are skipped unless
/// `exhaustive`. Checks the kernel condition first.
BuchbergerResult buchberger_verify(const std::vector<Binomial>& basis, const FaceOrder& fo, bool exhaustive = false);

/// Picks which reducer to apply among the indices whose lead divides the monomial.
using ReducerChoice = std::function<std::size_t(const std::vector<std::size_t>& candidates)>;

/// Rewrite lead -> trail until no lead divides. The default choice is the first candidate.
Monomial normal_form(Monomial a, const std::vector<Binomial>& basis, const ReducerChoice& choose = {});

bool is_standard(const Monomial& a, const std::vector<Binomial>& basis);

/// Every lead is a product of two distinct variables.
bool initial_squarefree_quadratic(const std::vector<Binomial>& basis);

inline constexpr int kDefaultRadicalBound = 6;

struct RadicalityResult {
  std::optional<bool> radical;     ///< empty when neither route applied
  std::optional<bool> structural;  ///< true for quasi-forests
  std::optional<bool> semantic;    ///< bounded check, normal rings only
  int bound = 0;
  std::optional<LatticePoint> witness;
};

/// (t) is radical. The bounded route looks for u in S up to height `bound`
/// with positive valuation on every minimal prime of (t) and u - e_{n+1} not in S.
RadicalityResult t_is_radical(const SimplicialComplex& c, const ToricCone& cone,
                              const std::vector<MonomialPrime>& primes, bool normal,
                              int bound = kDefaultRadicalBound);

inline constexpr int kDefaultKernelBound = 4;
inline constexpr std::size_t kKernelMonomialCap = 3'000'000;

/// Monomials of degree 1..d grouped by image.
struct KernelOracle {
  int degree_bound = 0;
  std::size_t monomials = 0;
  std::vector<std::vector<Monomial>> fibers;  ///< each sorted, larger monomial first
};

/// Throws `SizeCapExceeded` when more than `cap` monomials would be enumerated.
KernelOracle kernel_oracle(const FaceOrder& fo, int d = kDefaultKernelBound, std::size_t cap = kKernelMonomialCap);

/// Pairs (u, v) with u > v and equal image, for monomials of degree exactly `degree`.
std::vector<std::pair<Monomial, Monomial>> kernel_pairs(const KernelOracle& oracle, int degree);

struct InjectivityResult {
  bool injective = true;
  std::size_t fibers_checked = 0;
  std::optional<std::pair<Monomial, Monomial>> collision;
};

/// Distinct standard monomials have distinct images.
InjectivityResult standard_monomial_injectivity(const KernelOracle& oracle, const std::vector<Binomial>& basis);

}  // namespace toric
