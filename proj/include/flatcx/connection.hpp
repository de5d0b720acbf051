#pragma once

#include <array>
#include <optional>
#include <vector>

#include "flatcx/complex_structure.hpp"
#include "flatcx/lie_algebra.hpp"
#include "flatcx/tensor.hpp"
#include "flatcx/torsion_type.hpp"

namespace flatcx {

using Tensor12 = BilinearMap<Rational>;

// Left-invariant affine connection: nabla_{e_i} e_j = sum_k gamma(i,j,k) e_k.
class Connection {
 public:
  Connection() = default;
  Connection(LieAlgebra algebra, BilinearMap<Rational> gamma);

  Index dim() const { return algebra_.dim(); }
  const LieAlgebra& algebra() const { return algebra_; }
  const BilinearMap<Rational>& gamma() const { return gamma_; }

  RVector covariant(const RVector& x, const RVector& y) const { return gamma_(x, y); }

  friend bool operator==(const Connection& a, const Connection& b) {
    return a.algebra_ == b.algebra_ && a.gamma_ == b.gamma_;
  }

 private:
  LieAlgebra algebra_;
  BilinearMap<Rational> gamma_;
};

// R(e_i,e_j) e_k = sum_l r(i,j,k,l) e_l; matrix(i,j) is R(e_i,e_j) as an
// endomorphism (column k is R(e_i,e_j)e_k).
class Tensor13 {
 public:
  explicit Tensor13(Index dim)
      : dim_(dim), blocks_(static_cast<std::size_t>(dim * dim), RMatrix::Zero(dim, dim)) {}

  Index dim() const { return dim_; }
  const RMatrix& matrix(Index i, Index j) const { return blocks_[static_cast<std::size_t>(i * dim_ + j)]; }
  RMatrix& matrix(Index i, Index j) { return blocks_[static_cast<std::size_t>(i * dim_ + j)]; }
  const Rational& operator()(Index i, Index j, Index k, Index l) const { return matrix(i, j)(l, k); }

  bool is_zero() const;
  std::optional<std::array<Index, 3>> first_nonzero() const;  // (i, j, k)

 private:
  Index dim_;
  std::vector<RMatrix> blocks_;
};

// nabla_X Y = 0 on left-invariant fields.
Connection minus_connection(const LieAlgebra& g);

// T(e_i,e_j) = gamma(i,j) - gamma(j,i) - [e_i,e_j].
Tensor12 torsion(const Connection& c);

// (nabla_{e_i} J) e_j.
Tensor12 covariant_derivative_J(const Connection& c, const LinearComplexStructure& j);

// (nabla_{e_i} G)(e_j, e_k) = -G(nabla_i e_j, e_k) - G(e_j, nabla_i e_k).
TrilinearForm<Rational> covariant_derivative_g(const Connection& c, const InnerMetric& g);

// R(x,y)z = nabla_x nabla_y z - nabla_y nabla_x z - nabla_[x,y] z.
Tensor13 curvature(const Connection& c);
inline bool is_flat(const Connection& c) { return curvature(c).is_zero(); }

// (nabla_{e_i} T)(e_j, e_k) as column k of matrix(i, j).
Tensor13 covariant_derivative_torsion(const Connection& c);
inline bool is_torsion_parallel(const Connection& c) { return covariant_derivative_torsion(c).is_zero(); }

// T2(a,b,c,d) = T(T(e_a,e_b), T(e_c,e_d)), flattened with index
// (((a*n + b)*n + c)*n + d)*n + k.
struct T2Tensor {
  Index dim = 0;
  std::vector<Rational> values;
  bool is_t2_zero = true;
  std::optional<std::array<Index, 4>> witness;
  RVector witness_value;

  const Rational& operator()(Index a, Index b, Index c, Index d, Index k) const {
    return values[static_cast<std::size_t>((((a * dim + b) * dim + c) * dim + d) * dim + k)];
  }
};
T2Tensor t2_tensor(const Connection& c);

// Torsion-free metric connection from the left-invariant Koszul formula
// 2G(nabla_x y, z) = G([x,y],z) - G([y,z],x) + G([z,x],y).
Connection levi_civita(const LieAlgebra& g, const InnerMetric& metric);

// omega(x,y) = G(Jx,y); matrix entry (a,b) = omega(e_a,e_b).
RMatrix kahler_form(const InnerMetric& metric, const LinearComplexStructure& j);

// d omega(x,y,z) = -omega([x,y],z) + omega([x,z],y) - omega([y,z],x).
// Throws NotHermitian.
TrilinearForm<Rational> kahler_form_d(const LieAlgebra& g, const InnerMetric& metric,
                                      const LinearComplexStructure& j);

// G(nabla1_x y, z) = G(nablaLC_x y, z) + 1/4 (d omega(x,Jy,z) + d omega(x,y,Jz)).
Connection first_canonical(const LieAlgebra& g, const InnerMetric& metric,
                           const LinearComplexStructure& j);

// G(nabla2_x y, z) = G(nablaLC_x y, z) - 1/2 d omega(Jx,y,z).
// Throws NotIntegrable or NotHermitian.
Connection chern(const LieAlgebra& g, const InnerMetric& metric, const LinearComplexStructure& j);

// Solves nabla G = 0, nabla J = 0, T(x,y) + T(Jx,Jy) = 0 directly as a
// linear system in the n^3 coefficients.
struct ChernSystemSolution {
  bool consistent = false;
  Index nullity = 0;
  std::optional<Connection> unique;
};
ChernSystemSolution solve_chern_conditions(const LieAlgebra& g, const InnerMetric& metric,
                                           const LinearComplexStructure& j);

// nabla_x y = 1/2 (nablabar_x y - J nablabar_x Jy). Throws NotTorsionFree.
Connection complexify_torsion_free(const Connection& c, const LinearComplexStructure& j);

// N(x,y) minus the right-hand side of the torsion/nabla J expansion of N;
// vanishes identically for every connection and every J.
Tensor12 nijen1_residual(const Connection& c, const LinearComplexStructure& j);

}  // namespace flatcx
