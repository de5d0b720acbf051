#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "flatcx/lie_algebra.hpp"

namespace flatcx {

// Constant endomorphism J with J^2 = -I.
class LinearComplexStructure {
 public:
  LinearComplexStructure() = default;
  // Throws OddDimension, ShapeError or InvalidComplexStructure.
  explicit LinearComplexStructure(RMatrix j);

  // J e_a = e_b and J e_b = -e_a for each listed pair.
  static LinearComplexStructure from_pairs(Index dim, const std::vector<std::pair<Index, Index>>& pairs);
  // [[0, -I], [I, 0]]: J e_k = e_{k+n}.
  static LinearComplexStructure standard(Index dim);

  Index dim() const { return j_.rows(); }
  const RMatrix& matrix() const { return j_; }
  RVector operator*(const RVector& v) const { return j_ * v; }

  friend bool operator==(const LinearComplexStructure& a, const LinearComplexStructure& b) {
    return a.j_ == b.j_;
  }

 private:
  RMatrix j_;
};

// True iff J*J == -I. Throws OddDimension for odd size.
bool validate_j(const RMatrix& j);

// Symmetric positive definite Gram matrix G(x,y) = x^T G y.
class InnerMetric {
 public:
  InnerMetric() = default;
  // Throws InvalidMetric unless symmetric with positive leading minors.
  explicit InnerMetric(RMatrix g);
  static InnerMetric identity(Index dim) { return InnerMetric(RMatrix::Identity(dim, dim)); }

  Index dim() const { return g_.rows(); }
  const RMatrix& matrix() const { return g_; }
  Rational operator()(const RVector& x, const RVector& y) const { return x.dot(g_ * y); }

  friend bool operator==(const InnerMetric& a, const InnerMetric& b) { return a.g_ == b.g_; }

 private:
  RMatrix g_;
};

bool is_positive_definite(const RMatrix& g);

// N(x,y) = [Jx,Jy] - J[x,Jy] - J[Jx,y] - [x,y]
RVector nijenhuis(const LieAlgebra& g, const LinearComplexStructure& j, const RVector& x,
                  const RVector& y);

struct StructureWitness {
  std::string check;  // "integrable", "abelian" or "bi_invariant"
  Index i;
  Index j;
  RVector defect;
};

struct ClassificationVerdict {
  bool integrable = true;
  bool abelian = true;
  bool bi_invariant = true;
  std::vector<StructureWitness> witnesses;  // first failing basis pair per false verdict
};

// integrable: N = 0; abelian: [Jx,Jy] = [x,y]; bi_invariant: J[x,y] = [x,Jy].
ClassificationVerdict classify_structure(const LieAlgebra& g, const LinearComplexStructure& j);

bool is_hermitian(const InnerMetric& g, const LinearComplexStructure& j);

// A^T A + J^T A^T A J.
RMatrix hermitian_average(const RMatrix& a, const RMatrix& j);

// Deterministic in `seed`; averages a random invertible integer matrix.
InnerMetric random_hermitian_metric(const LinearComplexStructure& j, std::uint64_t seed);

// P J0 P^-1 for a seeded random invertible integer matrix P.
LinearComplexStructure random_complex_structure(Index dim, std::uint64_t seed);

// P^-1 J P: the same endomorphism in the basis given by the columns of P.
LinearComplexStructure conjugate(const LinearComplexStructure& j, const RMatrix& p);

}  // namespace flatcx
