#include "flatcx/linalg.hpp"

#include <algorithm>
#include <utility>

namespace flatcx {

RowEchelon row_echelon(RMatrix m) {
  RowEchelon out;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    m.row(pivot).swap(m.row(row));
    const Rational inv = Rational(1) / m(row, col);
    for (Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const Rational f = m(i, col);
      for (Index j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

RVector solve_exact_linear(const RMatrix& a, const RVector& b) {
  if (a.rows() != a.cols()) throw ShapeError("solve_exact_linear: matrix is not square");
  if (b.size() != a.rows()) throw ShapeError("solve_exact_linear: right-hand side length mismatch");
  const Index n = a.rows();
  RMatrix aug(n, n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  const RowEchelon e = row_echelon(std::move(aug));
  if (e.rank() < n || e.pivots.back() >= n) throw SingularMatrix("solve_exact_linear: singular matrix");
  return e.reduced.col(n);
}

LinearSystemSolution solve_linear_system(const RMatrix& a, const RVector& b) {
  if (b.size() != a.rows()) throw ShapeError("solve_linear_system: right-hand side length mismatch");
  const Index n = a.cols();
  RMatrix aug(a.rows(), n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  const RowEchelon e = row_echelon(std::move(aug));

  LinearSystemSolution out;
  out.consistent = e.pivots.empty() || e.pivots.back() < n;
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : e.pivots) {
    if (p < n) is_pivot[static_cast<std::size_t>(p)] = true;
  }
  out.particular = RVector::Zero(n);
  if (out.consistent) {
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      out.particular(e.pivots[r]) = e.reduced(static_cast<Index>(r), n);
    }
  }
  std::vector<Index> free_cols;
  for (Index j = 0; j < n; ++j) {
    if (!is_pivot[static_cast<std::size_t>(j)]) free_cols.push_back(j);
  }
  out.nullspace = RMatrix::Zero(n, static_cast<Index>(free_cols.size()));
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    const Index col = static_cast<Index>(f);
    out.nullspace(free_cols[f], col) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      if (e.pivots[r] >= n) break;
      out.nullspace(e.pivots[r], col) = -e.reduced(static_cast<Index>(r), free_cols[f]);
    }
  }
  return out;
}

Rational determinant(const RMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("determinant: matrix is not square");
  RMatrix a = m;
  const Index n = a.rows();
  Rational det(1);
  for (Index col = 0; col < n; ++col) {
    Index pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    for (Index i = col + 1; i < n; ++i) {
      if (a(i, col).is_zero()) continue;
      const Rational f = a(i, col) / a(col, col);
      for (Index j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

RMatrix inverse(const RMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse: matrix is not square");
  const Index n = m.rows();
  RMatrix aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = RMatrix::Identity(n, n);
  const RowEchelon e = row_echelon(std::move(aug));
  if (e.rank() < n || e.pivots[static_cast<std::size_t>(n - 1)] >= n) {
    throw SingularMatrix("inverse: singular matrix");
  }
  return e.reduced.rightCols(n);
}

Polynomial poly_matrix_det(const PMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("poly_matrix_det: matrix is not square");
  const Index n = m.rows();
  if (n == 0) return Polynomial(1);
  PMatrix a = m;
  Polynomial previous(1);
  bool negate = false;
  for (Index k = 0; k < n - 1; ++k) {
    if (a(k, k).is_zero()) {
      Index swap = k + 1;
      while (swap < n && a(swap, k).is_zero()) ++swap;
      if (swap == n) return Polynomial(Rational(0), m(0, 0).num_vars());
      a.row(swap).swap(a.row(k));
      negate = !negate;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        a(i, j) = divide_exact(a(i, j) * a(k, k) - a(i, k) * a(k, j), previous);
      }
    }
    previous = a(k, k);
  }
  Polynomial det = a(n - 1, n - 1);
  return negate ? -det : det;
}

PMatrix invert_unimodular_matrix(const PMatrix& m) {
  const Polynomial det = poly_matrix_det(m);
  if (det.is_zero() || !det.is_constant()) throw NonConstantDeterminant(det);
  const Rational inv_det = Rational(1) / det.constant_term();
  const Index n = m.rows();
  PMatrix out(n, n);
  PMatrix minor(n - 1, n - 1);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      // Cofactor C(i,j) lands at (j,i) of the adjugate.
      for (Index r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (Index c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = m(r, c);
        }
        ++mr;
      }
      const Polynomial cof = n == 1 ? Polynomial(1) : poly_matrix_det(minor);
      const Rational sign = ((i + j) % 2 == 0) ? Rational(1) : Rational(-1);
      out(j, i) = (sign * inv_det) * cof;
    }
  }
  return out;
}

}  // namespace flatcx
