#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "flatcx/linalg.hpp"
#include "flatcx/tensor.hpp"

namespace flatcx {

// One bracket [e_i, e_j] = sum_k coeffs[k] e_k with i < j.
struct BracketEntry {
  Index i;
  Index j;
  std::vector<std::pair<Index, Rational>> coeffs;
};

// Real Lie algebra given by structure constants [e_i, e_j] = sum_k c(i,j,k) e_k.
//
// Construction never validates. Analysis entry points require an algebra
// obtained through validated(), which throws InvalidLieAlgebra on failure.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(Index dim) : constants_(dim) {}
  explicit LieAlgebra(BilinearMap<Rational> constants) : constants_(std::move(constants)) {}

  // Fills c(i,j,.) and c(j,i,.) = -c(i,j,.) from the listed i < j entries.
  static LieAlgebra from_brackets(Index dim, const std::vector<BracketEntry>& brackets);

  Index dim() const { return constants_.dim(); }
  const BilinearMap<Rational>& structure_constants() const { return constants_; }
  const Rational& c(Index i, Index j, Index k) const { return constants_(i, j, k); }

  // Matrix of ad(e_i): column j is [e_i, e_j].
  const RMatrix& ad(Index i) const { return constants_.slice(i); }
  RMatrix ad(const RVector& x) const;

  bool is_abelian() const { return constants_.is_zero(); }

  bool is_validated() const { return validated_; }
  LieAlgebra validated() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.constants_ == b.constants_;
  }

 private:
  BilinearMap<Rational> constants_;
  bool validated_ = false;
};

RVector bracket(const LieAlgebra& g, const RVector& x, const RVector& y);

struct AntisymmetryFailure {
  Index i;
  Index j;
  RVector defect;  // [e_i,e_j] + [e_j,e_i]
};

// Jacobiator J(x,y,z) = [[x,y],z] + [[y,z],x] + [[z,x],y].
struct JacobiFailure {
  Index i;
  Index j;
  Index k;
  RVector jacobiator;
};

struct LieValidationReport {
  bool valid = true;
  std::vector<AntisymmetryFailure> antisymmetry;
  std::vector<JacobiFailure> jacobi;
};

RVector jacobiator(const LieAlgebra& g, const RVector& x, const RVector& y, const RVector& z);

// All n^3 basis triples are evaluated. When the constants are antisymmetric
// the Jacobiator is alternating, so failures are reported for i < j < k only.
LieValidationReport validate(const LieAlgebra& g);

// Linear subspace of Q^n held as the nonzero rows of a reduced row echelon
// basis; equal subspaces have identical bases.
class Subspace {
 public:
  Subspace() = default;
  // Span of the rows of `generators` inside Q^ambient_dim.
  Subspace(Index ambient_dim, const RMatrix& generators);
  static Subspace whole(Index n) { return Subspace(n, RMatrix::Identity(n, n)); }

  Index ambient_dim() const { return ambient_dim_; }
  Index dim() const { return basis_.rows(); }
  const RMatrix& basis() const { return basis_; }
  bool contains(const RVector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_.rows() == b.basis_.rows() && a.basis_ == b.basis_;
  }

 private:
  Index ambient_dim_ = 0;
  RMatrix basis_;
};

// g, [g,g], [[g,g],[g,g]], ... until the series reaches 0 or repeats; the
// repeated term is included, so a perfect algebra yields two equal entries.
std::vector<Subspace> derived_series(const LieAlgebra& g);

bool is_two_step_solvable(const LieAlgebra& g);

// trace ad(e_i) = sum_j c(i,j,j).
Rational ad_trace(const LieAlgebra& g, Index i);
bool is_unimodular(const LieAlgebra& g);

// Structure constants in the basis f_j = sum_i p(i,j) e_i.
LieAlgebra change_basis(const LieAlgebra& g, const RMatrix& p);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

}  // namespace flatcx
