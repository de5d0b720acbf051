#include "flatcx/lie_algebra.hpp"

#include <string>

namespace flatcx {

namespace {

void require_validated(const LieAlgebra& g, const char* op) {
  if (!g.is_validated()) {
    throw InvalidLieAlgebra(std::string(op) + ": Lie algebra has not passed validation");
  }
}

}  // namespace

LieAlgebra LieAlgebra::from_brackets(Index dim, const std::vector<BracketEntry>& brackets) {
  BilinearMap<Rational> c(dim);
  for (const auto& b : brackets) {
    if (b.i < 0 || b.j < 0 || b.i >= dim || b.j >= dim) throw IndexError("bracket index out of range");
    if (b.i >= b.j) throw ShapeError("bracket entries must have i < j");
    for (const auto& [k, v] : b.coeffs) {
      if (k < 0 || k >= dim) throw IndexError("bracket coefficient index out of range");
      c(b.i, b.j, k) += v;
      c(b.j, b.i, k) -= v;
    }
  }
  return LieAlgebra(std::move(c));
}

RMatrix LieAlgebra::ad(const RVector& x) const {
  if (x.size() != dim()) throw ShapeError("ad: vector length mismatch");
  RMatrix out = RMatrix::Zero(dim(), dim());
  for (Index i = 0; i < dim(); ++i) {
    if (!x(i).is_zero()) out += x(i) * ad(i);
  }
  return out;
}

LieAlgebra LieAlgebra::validated() const {
  if (!validate(*this).valid) throw InvalidLieAlgebra("structure constants fail antisymmetry or Jacobi");
  LieAlgebra out = *this;
  out.validated_ = true;
  return out;
}

RVector bracket(const LieAlgebra& g, const RVector& x, const RVector& y) {
  if (x.size() != g.dim() || y.size() != g.dim()) throw ShapeError("bracket: vector length mismatch");
  return g.structure_constants()(x, y);
}

RVector jacobiator(const LieAlgebra& g, const RVector& x, const RVector& y, const RVector& z) {
  return bracket(g, bracket(g, x, y), z) + bracket(g, bracket(g, y, z), x) +
         bracket(g, bracket(g, z, x), y);
}

namespace {

// [v, e_k] = sum_l v_l [e_l, e_k]
RVector bracket_with_basis(const BilinearMap<Rational>& c, const RVector& v, Index k) {
  RVector out = RVector::Zero(c.dim());
  for (Index l = 0; l < c.dim(); ++l) {
    if (!v(l).is_zero()) out += v(l) * c.slice(l).col(k);
  }
  return out;
}

}  // namespace

LieValidationReport validate(const LieAlgebra& g) {
  LieValidationReport report;
  const Index n = g.dim();
  const auto& c = g.structure_constants();
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) {
      RVector defect = c.on_basis(i, j) + c.on_basis(j, i);
      if (!is_zero(defect)) report.antisymmetry.push_back({i, j, std::move(defect)});
    }
  }
  const bool alternating = report.antisymmetry.empty();
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (Index k = 0; k < n; ++k) {
        RVector jac = bracket_with_basis(c, c.on_basis(i, j), k) + bracket_with_basis(c, c.on_basis(j, k), i) +
                      bracket_with_basis(c, c.on_basis(k, i), j);
        if (is_zero(jac)) continue;
        if (alternating && !(i < j && j < k)) continue;
        report.jacobi.push_back({i, j, k, std::move(jac)});
      }
    }
  }
  report.valid = report.antisymmetry.empty() && report.jacobi.empty();
  return report;
}

Subspace::Subspace(Index ambient_dim, const RMatrix& generators) : ambient_dim_(ambient_dim) {
  if (generators.rows() > 0 && generators.cols() != ambient_dim) {
    throw ShapeError("subspace: generator length mismatch");
  }
  if (generators.rows() == 0) {
    basis_ = RMatrix(0, ambient_dim);
    return;
  }
  const RowEchelon e = row_echelon(generators);
  basis_ = e.reduced.topRows(e.rank());
}

bool Subspace::contains(const RVector& v) const {
  if (v.size() != ambient_dim_) throw ShapeError("subspace: vector length mismatch");
  RMatrix m(dim() + 1, ambient_dim_);
  m.topRows(dim()) = basis_;
  m.row(dim()) = v.transpose();
  return row_echelon(std::move(m)).rank() == dim();
}

std::vector<Subspace> derived_series(const LieAlgebra& g) {
  require_validated(g, "derived_series");
  const Index n = g.dim();
  std::vector<Subspace> series{Subspace::whole(n)};
  while (series.back().dim() > 0) {
    const RMatrix& b = series.back().basis();
    const Index d = b.rows();
    RMatrix gens(d * (d - 1) / 2, n);
    Index row = 0;
    for (Index a = 0; a < d; ++a) {
      for (Index c = a + 1; c < d; ++c) {
        gens.row(row++) = bracket(g, b.row(a).transpose(), b.row(c).transpose()).transpose();
      }
    }
    Subspace next(n, gens);
    const bool stable = next.dim() == series.back().dim();
    series.push_back(std::move(next));
    if (stable) break;
  }
  return series;
}

bool is_two_step_solvable(const LieAlgebra& g) {
  const auto series = derived_series(g);
  return series.size() <= 3 && series.back().dim() == 0;
}

Rational ad_trace(const LieAlgebra& g, Index i) { return g.ad(i).trace(); }

bool is_unimodular(const LieAlgebra& g) {
  require_validated(g, "is_unimodular");
  for (Index i = 0; i < g.dim(); ++i) {
    if (!ad_trace(g, i).is_zero()) return false;
  }
  return true;
}

LieAlgebra change_basis(const LieAlgebra& g, const RMatrix& p) {
  const Index n = g.dim();
  if (p.rows() != n || p.cols() != n) throw ShapeError("change_basis: matrix shape mismatch");
  const RMatrix p_inv = inverse(p);
  BilinearMap<Rational> c(n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      c.slice(a).col(b) = p_inv * bracket(g, p.col(a), p.col(b));
    }
  }
  LieAlgebra out(std::move(c));
  return g.is_validated() ? out.validated() : out;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const Index n = a.dim() + b.dim();
  BilinearMap<Rational> c(n);
  for (Index i = 0; i < a.dim(); ++i) c.slice(i).topLeftCorner(a.dim(), a.dim()) = a.ad(i);
  for (Index i = 0; i < b.dim(); ++i) {
    c.slice(a.dim() + i).bottomRightCorner(b.dim(), b.dim()) = b.ad(i);
  }
  LieAlgebra out(std::move(c));
  return a.is_validated() && b.is_validated() ? out.validated() : out;
}

}  // namespace flatcx
