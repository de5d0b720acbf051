#include "flatcx/complex_structure.hpp"

#include "flatcx/sampling.hpp"

namespace flatcx {

namespace {

void require_validated(const LieAlgebra& g, const char* op) {
  if (!g.is_validated()) {
    throw InvalidLieAlgebra(std::string(op) + ": Lie algebra has not passed validation");
  }
}

void require_same_dim(const LieAlgebra& g, const LinearComplexStructure& j) {
  if (g.dim() != j.dim()) throw ShapeError("complex structure and Lie algebra dimensions differ");
}

}  // namespace

bool validate_j(const RMatrix& j) {
  if (j.rows() != j.cols()) throw ShapeError("complex structure must be square");
  if (j.rows() % 2 != 0) throw OddDimension("complex structure on an odd-dimensional space");
  return j * j == -RMatrix::Identity(j.rows(), j.cols());
}

LinearComplexStructure::LinearComplexStructure(RMatrix j) : j_(std::move(j)) {
  if (!validate_j(j_)) throw InvalidComplexStructure("J*J != -I");
}

LinearComplexStructure LinearComplexStructure::from_pairs(
    Index dim, const std::vector<std::pair<Index, Index>>& pairs) {
  RMatrix j = RMatrix::Zero(dim, dim);
  for (const auto& [a, b] : pairs) {
    j(b, a) = 1;
    j(a, b) = -1;
  }
  return LinearComplexStructure(std::move(j));
}

LinearComplexStructure LinearComplexStructure::standard(Index dim) {
  if (dim % 2 != 0) throw OddDimension("standard complex structure needs even dimension");
  std::vector<std::pair<Index, Index>> pairs;
  for (Index k = 0; k < dim / 2; ++k) pairs.emplace_back(k, k + dim / 2);
  return from_pairs(dim, pairs);
}

bool is_positive_definite(const RMatrix& g) {
  if (g.rows() != g.cols()) return false;
  for (Index k = 1; k <= g.rows(); ++k) {
    if (determinant(g.topLeftCorner(k, k)).sign() <= 0) return false;
  }
  return true;
}

InnerMetric::InnerMetric(RMatrix g) : g_(std::move(g)) {
  if (g_.rows() != g_.cols()) throw InvalidMetric("metric must be square");
  if (g_ != g_.transpose()) throw InvalidMetric("metric is not symmetric");
  if (!is_positive_definite(g_)) throw InvalidMetric("metric is not positive definite");
}

RVector nijenhuis(const LieAlgebra& g, const LinearComplexStructure& j, const RVector& x,
                  const RVector& y) {
  require_validated(g, "nijenhuis");
  require_same_dim(g, j);
  const RMatrix& J = j.matrix();
  const RVector jx = J * x;
  const RVector jy = J * y;
  return bracket(g, jx, jy) - J * bracket(g, x, jy) - J * bracket(g, jx, y) - bracket(g, x, y);
}

ClassificationVerdict classify_structure(const LieAlgebra& g, const LinearComplexStructure& j) {
  require_validated(g, "classify_structure");
  require_same_dim(g, j);
  ClassificationVerdict v;
  const Index n = g.dim();
  const RMatrix& J = j.matrix();
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      const RVector x = unit_vector(n, a);
      const RVector y = unit_vector(n, b);
      if (v.integrable) {
        RVector d = nijenhuis(g, j, x, y);
        if (!is_zero(d)) {
          v.integrable = false;
          v.witnesses.push_back({"integrable", a, b, std::move(d)});
        }
      }
      if (v.abelian) {
        RVector d = bracket(g, J * x, J * y) - bracket(g, x, y);
        if (!is_zero(d)) {
          v.abelian = false;
          v.witnesses.push_back({"abelian", a, b, std::move(d)});
        }
      }
    }
  }
  // J[x,y] = [x,Jy] is not symmetric in (x,y); all ordered pairs are checked.
  for (Index a = 0; a < n && v.bi_invariant; ++a) {
    for (Index b = 0; b < n; ++b) {
      const RVector x = unit_vector(n, a);
      const RVector y = unit_vector(n, b);
      RVector d = J * bracket(g, x, y) - bracket(g, x, J * y);
      if (!is_zero(d)) {
        v.bi_invariant = false;
        v.witnesses.push_back({"bi_invariant", a, b, std::move(d)});
        break;
      }
    }
  }
  return v;
}

bool is_hermitian(const InnerMetric& g, const LinearComplexStructure& j) {
  if (g.dim() != j.dim()) throw ShapeError("metric and complex structure dimensions differ");
  return j.matrix().transpose() * g.matrix() * j.matrix() == g.matrix();
}

RMatrix hermitian_average(const RMatrix& a, const RMatrix& j) {
  const RMatrix ata = a.transpose() * a;
  return ata + j.transpose() * ata * j;
}

InnerMetric random_hermitian_metric(const LinearComplexStructure& j, std::uint64_t seed) {
  Sampler s(seed);
  return InnerMetric(hermitian_average(s.invertible_matrix(j.dim(), 3), j.matrix()));
}

LinearComplexStructure random_complex_structure(Index dim, std::uint64_t seed) {
  Sampler s(seed);
  const RMatrix p = s.invertible_matrix(dim, 2);
  return LinearComplexStructure(p * LinearComplexStructure::standard(dim).matrix() * inverse(p));
}

LinearComplexStructure conjugate(const LinearComplexStructure& j, const RMatrix& p) {
  return LinearComplexStructure(inverse(p) * j.matrix() * p);
}

}  // namespace flatcx
