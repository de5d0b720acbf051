#pragma once

#include <vector>

#include <Eigen/Core>

#include "flatcx/errors.hpp"
#include "flatcx/polynomial.hpp"
#include "flatcx/rational.hpp"

namespace flatcx {

using Index = Eigen::Index;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RMatrix = Matrix<Rational>;
using RVector = Vector<Rational>;
using PMatrix = Matrix<Polynomial>;
using PVector = Vector<Polynomial>;

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (!is_zero(m(i, j))) return false;
    }
  }
  return true;
}

inline RVector unit_vector(Index n, Index k) {
  RVector v = RVector::Zero(n);
  v(k) = 1;
  return v;
}

// Reduced row echelon form over Q.
struct RowEchelon {
  RMatrix reduced;
  std::vector<Index> pivots;  // pivot column of each nonzero row
  Index rank() const { return static_cast<Index>(pivots.size()); }
};
RowEchelon row_echelon(RMatrix m);

// Exact solution of A x = b for square invertible A.
// Throws ShapeError on mismatched shapes, SingularMatrix when A is singular.
RVector solve_exact_linear(const RMatrix& a, const RVector& b);

// General (possibly over/under-determined) system A x = b.
struct LinearSystemSolution {
  bool consistent = false;
  RVector particular;  // valid only when consistent
  RMatrix nullspace;   // columns span {x : A x = 0}
};
LinearSystemSolution solve_linear_system(const RMatrix& a, const RVector& b);

Rational determinant(const RMatrix& m);
RMatrix inverse(const RMatrix& m);

// Determinant over Q[x] by fraction-free (Bareiss) elimination.
// Throws ShapeError for non-square input.
Polynomial poly_matrix_det(const PMatrix& m);

// Inverse of a polynomial matrix whose determinant is a nonzero constant.
// Throws NonConstantDeterminant otherwise.
PMatrix invert_unimodular_matrix(const PMatrix& m);

class NonConstantDeterminant : public Error {
 public:
  explicit NonConstantDeterminant(Polynomial det)
      : Error("determinant is not a nonzero constant: " + det.str()), det_(std::move(det)) {}
  const Polynomial& determinant() const { return det_; }

 private:
  Polynomial det_;
};

}  // namespace flatcx
