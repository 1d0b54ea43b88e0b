#include "toric/divisor.hpp"

#include <functional>

namespace toric {

namespace {

void require_normal(bool normal, const char* what) {
  if (!normal) throw Error(ErrorCode::NotNormal, std::string(what) + " requires a normal semigroup ring");
}

}  // namespace

ClassGroupPresentation class_group(const std::vector<MonomialPrime>& primes, bool normal) {
  require_normal(normal, "class group");
  if (primes.empty()) throw Error(ErrorCode::EmptyInput, "no primes");

  ClassGroupPresentation out;
  const auto m = static_cast<Eigen::Index>(primes.size());
  const Eigen::Index d = primes.front().form.coeffs.size();
  out.prime_count = static_cast<int>(m);
  out.relations.resize(m, d);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < d; ++j) out.relations(i, j) = Integer(primes[i].form.coeffs(j));

  out.smith = smith_normal_form(out.relations);
  out.rank = static_cast<int>(m - out.smith.rank());
  for (const Integer& x : out.smith.invariants)
    if (x > 1) out.torsion.push_back(x);
  out.principal = HermiteLattice<Integer>(out.relations);

  // Subgroup of Cl generated by the t-primes is Z^r / K with
  // K = { M y restricted to t rows : M y vanishes on the other rows }.
  std::vector<Eigen::Index> t_rows, other_rows;
  for (Eigen::Index i = 0; i < m; ++i) (primes[i].contains_t() ? t_rows : other_rows).push_back(i);
  out.t_prime_count = static_cast<int>(t_rows.size());
  MatrixX<Integer> others(static_cast<Eigen::Index>(other_rows.size()), d);
  for (std::size_t k = 0; k < other_rows.size(); ++k) others.row(k) = out.relations.row(other_rows[k]);
  const MatrixX<Integer> ker = others.rows() == 0 ? MatrixX<Integer>(MatrixX<Integer>::Identity(d, d))
                                                  : integer_kernel(others);
  MatrixX<Integer> t_part(static_cast<Eigen::Index>(t_rows.size()), d);
  for (std::size_t k = 0; k < t_rows.size(); ++k) t_part.row(k) = out.relations.row(t_rows[k]);
  const MatrixX<Integer> k_gens = t_part * ker;
  const auto t_smith = smith_normal_form(k_gens);
  out.t_subgroup_rank = out.t_prime_count - static_cast<int>(t_smith.rank());
  for (const Integer& x : t_smith.invariants)
    if (x > 1) out.t_subgroup_torsion.push_back(x);
  return out;
}

DivisorClass make_class(const ClassGroupPresentation& cl, const VectorX<Integer>& coeffs) {
  return DivisorClass{coeffs, cl.principal.reduce(coeffs)};
}

DivisorClass t_divisor(const ClassGroupPresentation& cl, const std::vector<MonomialPrime>& primes) {
  VectorX<Integer> v(static_cast<Eigen::Index>(primes.size()));
  for (std::size_t i = 0; i < primes.size(); ++i) v(i) = primes[i].contains_t() ? Integer(primes[i].t_coefficient) : 0;
  return make_class(cl, v);
}

DivisorClass canonical_class_general(const ClassGroupPresentation& cl, const std::vector<MonomialPrime>& primes) {
  return make_class(cl, VectorX<Integer>::Constant(static_cast<Eigen::Index>(primes.size()), Integer(1)));
}

std::string to_string(CanonicalFormula mode) {
  return mode == CanonicalFormula::FlagPerfect ? "flag_perfect" : "quasi_forest";
}

DivisorClass canonical_class_formula(const ClassGroupPresentation& cl, const std::vector<MonomialPrime>& primes,
                                     const SimplicialComplex& c, CanonicalFormula mode, int perfect_cap) {
  int shift = 0;
  if (mode == CanonicalFormula::FlagPerfect) {
    if (!is_flag(c) || !is_perfect(skeleton(c), perfect_cap))
      throw Error(ErrorCode::PreconditionViolated, "flag_perfect: complex is not flag with perfect skeleton");
    shift = 1;
  } else if (!is_quasi_forest(c)) {
    throw Error(ErrorCode::PreconditionViolated, "quasi_forest: complex has no leaf order");
  }
  VectorX<Integer> v = VectorX<Integer>::Zero(static_cast<Eigen::Index>(primes.size()));
  for (std::size_t i = 0; i < primes.size(); ++i)
    if (primes[i].kind == PrimeKind::Cover) v(i) = c.n() - primes[i].cover.size() + shift;
  return make_class(cl, v);
}

AInvariant a_invariant(const SimplicialComplex& c, const ToricCone& cone, bool t_radical, bool normal) {
  require_normal(normal, "a-invariant");
  AInvariant out;
  out.interior_height = min_interior_height(cone).height;
  if (t_radical) {
    const int cover = face_cover_number(c).size();
    out.face_cover_number = cover;
    out.value = -(cover + 1);
    out.method = "face_cover";
    out.consistent = out.value == -out.interior_height;
  } else {
    out.value = -out.interior_height;
    out.method = "interior_height";
  }
  return out;
}

std::optional<std::vector<Face>> free_vertex_partition(const SimplicialComplex& c) {
  std::vector<Face> usable;
  for (Face f : c.facets())
    if (!free_vertices(c, f).empty()) usable.push_back(f);
  const VertexSet all = VertexSet::full(c.n());
  std::vector<Face> chosen;
  std::function<bool(VertexSet)> search = [&](VertexSet covered) {
    if (covered == all) return true;
    const int v = (all - covered).min_vertex();
    for (Face f : usable) {
      if (!f.contains(v) || f.intersects(covered)) continue;
      chosen.push_back(f);
      if (search(covered | f)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!search(VertexSet())) return std::nullopt;
  std::sort(chosen.begin(), chosen.end(), lex_less);
  return chosen;
}

GorensteinResult is_gorenstein(const SimplicialComplex& c, const ClassGroupPresentation& cl,
                               const std::vector<MonomialPrime>& primes) {
  GorensteinResult out;
  auto& ev = out.evidence;
  ev.omega_zero = canonical_class_general(cl, primes).is_zero();
  out.gorenstein = ev.omega_zero;
  ev.quasi_forest = is_quasi_forest(c);
  if (!ev.quasi_forest) return out;

  VertexCoverSet covers;
  for (const auto& p : primes)
    if (p.kind == PrimeKind::Cover) covers.covers.push_back(p.cover);
  ev.unmixed = is_unmixed(covers);
  auto part = free_vertex_partition(c);
  ev.partition = part.has_value();
  if (part) ev.partition_facets = std::move(*part);
  ev.consistent = ev.omega_zero == *ev.unmixed && ev.omega_zero == *ev.partition;
  return out;
}

}  // namespace toric
