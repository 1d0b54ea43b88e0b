// Incremental double description for full-dimensional cones given by generators.
#pragma once

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

template <typename Scalar>
struct ConeFacet {
  VectorX<Scalar> normal;            ///< primitive, non-negative on every generator
  boost::dynamic_bitset<> incident;  ///< generators on which the normal vanishes
};

namespace detail {

template <typename Scalar>
MatrixX<Scalar> drop(const MatrixX<Scalar>& a, Eigen::Index row, Eigen::Index col) {
  const Eigen::Index n = a.rows();
  MatrixX<Scalar> m(n - 1, n - 1);
  for (Eigen::Index i = 0, r = 0; i < n; ++i) {
    if (i == row) continue;
    for (Eigen::Index j = 0, c = 0; j < n; ++j) {
      if (j == col) continue;
      m(r, c++) = a(i, j);
    }
    ++r;
  }
  return m;
}

template <typename Scalar>
bool lex_less(const VectorX<Scalar>& a, const VectorX<Scalar>& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return a(i) < b(i);
  return false;
}

}  // namespace detail

/// Facet normals of the cone spanned by the rows of `points`.
///
/// The cone must be full-dimensional; otherwise `DegenerateCone` is thrown.
/// Output is sorted lexicographically by normal vector.
template <typename Scalar>
std::vector<ConeFacet<Scalar>> facet_normals(const MatrixX<Scalar>& points) {
  const Eigen::Index d = points.cols();
  const Eigen::Index count = points.rows();

  // greedy choice of d independent generators
  std::vector<Eigen::Index> basis_rows;
  MatrixX<Scalar> chosen(0, d);
  for (Eigen::Index i = 0; i < count && static_cast<Eigen::Index>(basis_rows.size()) < d; ++i) {
    MatrixX<Scalar> trial(chosen.rows() + 1, d);
    trial.topRows(chosen.rows()) = chosen;
    trial.row(chosen.rows()) = points.row(i);
    if (rank<Scalar>(trial) == trial.rows()) {
      chosen = trial;
      basis_rows.push_back(i);
    }
  }
  if (static_cast<Eigen::Index>(basis_rows.size()) < d)
    throw Error(ErrorCode::DegenerateCone, "generators do not span the ambient space");

  // rays of {c : B c >= 0} are the signed columns of adj(B)
  const Scalar det = determinant<Scalar>(chosen);
  struct Ray {
    VectorX<Scalar> v;
    boost::dynamic_bitset<> zeros;
  };
  std::vector<Ray> rays;
  for (Eigen::Index j = 0; j < d; ++j) {
    VectorX<Scalar> r(d);
    for (Eigen::Index k = 0; k < d; ++k) {
      Scalar cof = determinant<Scalar>(detail::drop(chosen, j, k));
      if ((j + k) % 2 == 1) cof = -cof;
      r(k) = det > 0 ? cof : Scalar(-cof);
    }
    Ray ray{make_primitive<Scalar>(r), boost::dynamic_bitset<>(count)};
    for (Eigen::Index i = 0; i < d; ++i)
      if (i != j) ray.zeros.set(basis_rows[i]);
    rays.push_back(std::move(ray));
  }

  std::vector<bool> done(count, false);
  for (auto r : basis_rows) done[r] = true;

  for (Eigen::Index row = 0; row < count; ++row) {
    if (done[row]) continue;
    done[row] = true;
    const VectorX<Scalar> a = points.row(row).transpose();
    std::vector<Scalar> value(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      value[i] = a.dot(rays[i].v);
      if (value[i] > 0) pos.push_back(i);
      else if (value[i] < 0) neg.push_back(i);
      else rays[i].zeros.set(row);
    }
    if (neg.empty()) continue;
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (value[i] >= 0) next.push_back(rays[i]);
    for (auto p : pos) {
      for (auto q : neg) {
        boost::dynamic_bitset<> common = rays[p].zeros & rays[q].zeros;
        if (static_cast<Eigen::Index>(common.count()) < d - 2) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        VectorX<Scalar> w = value[p] * rays[q].v - value[q] * rays[p].v;
        common.set(row);
        next.push_back(Ray{make_primitive<Scalar>(std::move(w)), std::move(common)});
      }
    }
    rays = std::move(next);
  }

  std::vector<ConeFacet<Scalar>> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(ConeFacet<Scalar>{std::move(r.v), std::move(r.zeros)});
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return detail::lex_less<Scalar>(x.normal, y.normal);
  });
  return out;
}

}  // namespace toric
