// Divisor class group of a normal R_Δ, canonical class, a-invariant and the
// Gorenstein test.
//
// Cl(R) is presented as Z^m / im(M), where m is the number of height-one
// monomial primes and row i of M is the support form of prime i: column j of
// M is div(x_j) (and the last column is div(t)). Classes are reduced to a
// canonical representative using the Hermite form of im(M) with rows in prime
// order, i.e. coordinate primes first, then cover primes, then extra primes.
// That representative is a convention of this library.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/cone.hpp"
#include "toric/lattice.hpp"

namespace toric {

struct ClassGroupPresentation {
  MatrixX<Integer> relations;  ///< m x (n+1)
  SmithForm<Integer> smith;
  int prime_count = 0;
  int rank = 0;                  ///< free rank of Z^m / im(M)
  std::vector<Integer> torsion;  ///< invariant factors > 1
  HermiteLattice<Integer> principal;

  // subgroup generated by the minimal primes of (t): Z^r / (a_1, ..., a_r)
  int t_prime_count = 0;
  int t_subgroup_rank = 0;
  std::vector<Integer> t_subgroup_torsion;
};

/// Throws `NotNormal` when `normal` is false.
ClassGroupPresentation class_group(const std::vector<MonomialPrime>& primes, bool normal);

struct DivisorClass {
  VectorX<Integer> coeffs;       ///< over the prime list
  VectorX<Integer> normal_form;  ///< canonical representative modulo im(M)

  bool is_zero() const { return normal_form.isZero(); }
};

DivisorClass make_class(const ClassGroupPresentation& cl, const VectorX<Integer>& coeffs);

inline bool same_class(const DivisorClass& a, const DivisorClass& b) { return a.normal_form == b.normal_form; }

/// div(t): coefficient f_i(e_{n+1}) on every prime. Its class is zero.
DivisorClass t_divisor(const ClassGroupPresentation& cl, const std::vector<MonomialPrime>& primes);

/// Class of the sum of all height-one monomial primes.
DivisorClass canonical_class_general(const ClassGroupPresentation& cl, const std::vector<MonomialPrime>& primes);

enum class CanonicalFormula { FlagPerfect, QuasiForest };

std::string to_string(CanonicalFormula mode);

/// Canonical class written over the cover primes: coefficient n - |C| + 1
/// (flag + perfect) or n - |C| (quasi-forest).
/// Throws `PreconditionViolated` when the complex does not meet the mode.
DivisorClass canonical_class_formula(const ClassGroupPresentation& cl, const std::vector<MonomialPrime>& primes,
                                     const SimplicialComplex& c, CanonicalFormula mode,
                                     int perfect_cap = kDefaultPerfectCap);

struct AInvariant {
  int value = 0;
  std::string method;  ///< "face_cover" or "interior_height"
  int interior_height = 0;
  std::optional<int> face_cover_number;
  bool consistent = true;  ///< formula and interior search agree (when both ran)
};

/// a-invariant. With (t) radical both -(c_Δ + 1) and the interior search are
/// computed and compared; otherwise only the interior search runs.
/// Throws `NotNormal`.
AInvariant a_invariant(const SimplicialComplex& c, const ToricCone& cone, bool t_radical, bool normal);

/// A partition of [n] into pairwise disjoint facets each having a free vertex.
std::optional<std::vector<Face>> free_vertex_partition(const SimplicialComplex& c);

struct GorensteinEvidence {
  bool omega_zero = false;
  bool quasi_forest = false;
  std::optional<bool> unmixed;           ///< quasi-forests only
  std::optional<bool> partition;         ///< quasi-forests only
  std::vector<Face> partition_facets;
  bool consistent = true;                ///< the computed conditions agree
};

struct GorensteinResult {
  bool gorenstein = false;
  GorensteinEvidence evidence;
};

GorensteinResult is_gorenstein(const SimplicialComplex& c, const ClassGroupPresentation& cl,
                               const std::vector<MonomialPrime>& primes);

}  // namespace toric
