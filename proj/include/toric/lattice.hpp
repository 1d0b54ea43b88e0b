// Exact integer linear algebra over dense Eigen matrices.
//
// Everything here is templated on the scalar so the same code runs on
// machine integers (fast, for small inputs) and on `toric::Integer`
// (unbounded). No routine ever divides unless the division is exact.
#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "toric/integer.hpp"

namespace toric {

/// Divide a vector by the gcd of its entries. The zero vector is returned unchanged.
template <typename Scalar>
VectorX<Scalar> make_primitive(VectorX<Scalar> v) {
  Scalar g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd_value<Scalar>(g, v(i));
  if (g > 1)
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) /= g;
  return v;
}

/// Bareiss fraction-free determinant.
template <typename Scalar>
Scalar determinant(MatrixX<Scalar> a) {
  const Eigen::Index n = a.rows();
  if (n == 0) return Scalar(1);
  Scalar sign = 1;
  Scalar prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return Scalar(0);
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Rank by fraction-free row reduction.
template <typename Scalar>
Eigen::Index rank(MatrixX<Scalar> a) {
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < a.cols() && r < a.rows(); ++c) {
    Eigen::Index p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.row(r).swap(a.row(p));
    for (Eigen::Index i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      const Scalar f = a(i, c);
      const Scalar piv = a(r, c);
      a.row(i) = (piv * a.row(i) - f * a.row(r)).eval();
      // keep entries small
      Scalar g = 0;
      for (Eigen::Index j = 0; j < a.cols(); ++j) g = gcd_value<Scalar>(g, a(i, j));
      if (g > 1) a.row(i) /= g;
    }
    ++r;
  }
  return r;
}

template <typename Scalar>
struct ColumnEchelon {
  MatrixX<Scalar> reduced;       ///< input * transform, in column echelon form
  MatrixX<Scalar> transform;     ///< unimodular
  std::vector<Eigen::Index> pivot_rows;  ///< pivot row of column i, for i < rank
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivot_rows.size()); }
};

/// Column-style Hermite normal form via unimodular column operations.
///
/// The first `rank()` columns of `reduced` are a basis of the column lattice;
/// column i vanishes above `pivot_rows[i]`, carries a positive pivot there, and
/// every earlier column has its entry in that row reduced into [0, pivot).
/// The remaining columns are zero and the matching columns of `transform`
/// span the integer kernel.
template <typename Scalar>
ColumnEchelon<Scalar> column_echelon(const MatrixX<Scalar>& input) {
  ColumnEchelon<Scalar> out;
  out.reduced = input;
  out.transform = MatrixX<Scalar>::Identity(input.cols(), input.cols());
  auto& h = out.reduced;
  auto& u = out.transform;
  const Eigen::Index cols = h.cols();
  Eigen::Index col = 0;
  auto col_op = [&](Eigen::Index target, Eigen::Index source, const Scalar& q) {
    h.col(target) -= q * h.col(source);
    u.col(target) -= q * u.col(source);
  };
  auto col_swap = [&](Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    h.col(a).swap(h.col(b));
    u.col(a).swap(u.col(b));
  };
  for (Eigen::Index row = 0; row < h.rows() && col < cols; ++row) {
    while (true) {
      Eigen::Index best = -1;
      for (Eigen::Index c = col; c < cols; ++c)
        if (h(row, c) != 0 && (best < 0 || abs_value<Scalar>(h(row, c)) < abs_value<Scalar>(h(row, best))))
          best = c;
      if (best < 0) break;
      bool clean = true;
      for (Eigen::Index c = col; c < cols; ++c) {
        if (c == best || h(row, c) == 0) continue;
        col_op(c, best, h(row, c) / h(row, best));
        if (h(row, c) != 0) clean = false;
      }
      if (clean) {
        col_swap(col, best);
        break;
      }
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) {
      h.col(col) = (-h.col(col)).eval();
      u.col(col) = (-u.col(col)).eval();
    }
    const Scalar pivot = h(row, col);
    for (Eigen::Index prev = 0; prev < col; ++prev) {
      const Scalar q = floor_div<Scalar>(h(row, prev), pivot);
      if (q != 0) col_op(prev, col, q);
    }
    out.pivot_rows.push_back(row);
    ++col;
  }
  return out;
}

/// A full-rank-or-not sublattice of Z^m in Hermite form, with canonical reduction.
template <typename Scalar>
class HermiteLattice {
 public:
  HermiteLattice() = default;

  /// Lattice spanned by the columns of `generators`.
  explicit HermiteLattice(const MatrixX<Scalar>& generators) {
    auto ech = column_echelon(generators);
    basis_ = ech.reduced.leftCols(ech.rank());
    pivots_ = std::move(ech.pivot_rows);
  }

  Eigen::Index dimension() const { return basis_.rows(); }
  Eigen::Index rank() const { return basis_.cols(); }
  const MatrixX<Scalar>& basis() const { return basis_; }
  const std::vector<Eigen::Index>& pivot_rows() const { return pivots_; }

  /// Canonical coset representative of v modulo the lattice.
  VectorX<Scalar> reduce(VectorX<Scalar> v) const {
    for (Eigen::Index i = 0; i < basis_.cols(); ++i) {
      const Scalar q = floor_div<Scalar>(v(pivots_[i]), basis_(pivots_[i], i));
      if (q != 0) v -= q * basis_.col(i);
    }
    return v;
  }

  bool contains(const VectorX<Scalar>& v) const { return reduce(v).isZero(); }

 private:
  MatrixX<Scalar> basis_;
  std::vector<Eigen::Index> pivots_;
};

/// Basis (as columns) of the integer kernel {x : a x = 0}.
template <typename Scalar>
MatrixX<Scalar> integer_kernel(const MatrixX<Scalar>& a) {
  auto ech = column_echelon(a);
  return ech.transform.rightCols(a.cols() - ech.rank());
}

template <typename Scalar>
struct SmithForm {
  std::vector<Scalar> invariants;  ///< non-zero diagonal entries, d_1 | d_2 | ...
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  Eigen::Index rank() const { return static_cast<Eigen::Index>(invariants.size()); }
};

/// Smith normal form invariants by alternating row and column elimination.
template <typename Scalar>
SmithForm<Scalar> smith_normal_form(MatrixX<Scalar> a) {
  SmithForm<Scalar> out;
  out.rows = a.rows();
  out.cols = a.cols();
  const Eigen::Index limit = std::min(a.rows(), a.cols());
  for (Eigen::Index t = 0; t < limit; ++t) {
    while (true) {
      // smallest non-zero entry of the trailing block becomes the pivot
      Eigen::Index pr = -1, pc = -1;
      for (Eigen::Index i = t; i < a.rows(); ++i)
        for (Eigen::Index j = t; j < a.cols(); ++j)
          if (a(i, j) != 0 && (pr < 0 || abs_value<Scalar>(a(i, j)) < abs_value<Scalar>(a(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr < 0) {
        std::sort(out.invariants.begin(), out.invariants.end());
        return out;
      }
      a.row(t).swap(a.row(pr));
      a.col(t).swap(a.col(pc));
      bool dirty = false;
      for (Eigen::Index i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        const Scalar q = a(i, t) / a(t, t);
        a.row(i) -= q * a.row(t);
        if (a(i, t) != 0) dirty = true;
      }
      for (Eigen::Index j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        const Scalar q = a(t, j) / a(t, t);
        a.col(j) -= q * a.col(t);
        if (a(t, j) != 0) dirty = true;
      }
      if (dirty) continue;
      // pivot must divide the rest of the block
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < a.rows() && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < a.cols(); ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad >= 0) {
        a.row(t) += a.row(bad);
        continue;
      }
      out.invariants.push_back(abs_value<Scalar>(a(t, t)));
      break;
    }
  }
  std::sort(out.invariants.begin(), out.invariants.end());
  return out;
}

}  // namespace toric
