#include "flatcx/connection.hpp"

#include <string>

namespace flatcx {

namespace {

void require_validated(const LieAlgebra& g, const char* op) {
  if (!g.is_validated()) {
    throw InvalidLieAlgebra(std::string(op) + ": Lie algebra has not passed validation");
  }
}

void require_dim(Index expected, Index got, const char* what) {
  if (expected != got) throw ShapeError(std::string(what) + ": dimension mismatch");
}

void require_hermitian(const InnerMetric& metric, const LinearComplexStructure& j) {
  if (!is_hermitian(metric, j)) throw NotHermitian("metric is not Hermitian for J");
}

Rational contract(const TrilinearForm<Rational>& t, const RVector& x, const RVector& y,
                  const RVector& z) {
  Rational sum;
  for (Index a = 0; a < t.dim(); ++a) {
    if (x(a).is_zero()) continue;
    sum += x(a) * y.dot(t.slice(a) * z);
  }
  return sum;
}

// Connection whose coefficients solve G(nabla_i e_j, e_k) = koszul/2 + extra(i,j,k).
template <class Extra>
Connection metric_connection(const LieAlgebra& g, const InnerMetric& metric, Extra extra) {
  const Index n = g.dim();
  const RMatrix& G = metric.matrix();
  BilinearMap<Rational> gamma(n);
  const Rational half(1, 2);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      RVector rhs(n);
      for (Index k = 0; k < n; ++k) {
        // G([x,y],z) - G([y,z],x) + G([z,x],y)
        const Rational koszul = g.ad(i).col(j).dot(G.col(k)) - g.ad(j).col(k).dot(G.col(i)) +
                                g.ad(k).col(i).dot(G.col(j));
        rhs(k) = half * koszul + extra(i, j, k);
      }
      gamma.slice(i).col(j) = solve_exact_linear(G, rhs);
    }
  }
  return Connection(g, std::move(gamma));
}

}  // namespace

Connection::Connection(LieAlgebra algebra, BilinearMap<Rational> gamma)
    : algebra_(std::move(algebra)), gamma_(std::move(gamma)) {
  require_dim(algebra_.dim(), gamma_.dim(), "Connection");
}

bool Tensor13::is_zero() const {
  for (const auto& b : blocks_) {
    if (!flatcx::is_zero(b)) return false;
  }
  return true;
}

std::optional<std::array<Index, 3>> Tensor13::first_nonzero() const {
  for (Index i = 0; i < dim_; ++i) {
    for (Index j = 0; j < dim_; ++j) {
      for (Index k = 0; k < dim_; ++k) {
        if (!flatcx::is_zero(matrix(i, j).col(k))) return std::array<Index, 3>{i, j, k};
      }
    }
  }
  return std::nullopt;
}

Connection minus_connection(const LieAlgebra& g) {
  require_validated(g, "minus_connection");
  return Connection(g, BilinearMap<Rational>(g.dim()));
}

Tensor12 torsion(const Connection& c) {
  const Index n = c.dim();
  Tensor12 t(n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      t.slice(i).col(j) = c.gamma().on_basis(i, j) - c.gamma().on_basis(j, i) - c.algebra().ad(i).col(j);
    }
  }
  return t;
}

Tensor12 covariant_derivative_J(const Connection& c, const LinearComplexStructure& j) {
  require_dim(c.dim(), j.dim(), "covariant_derivative_J");
  const RMatrix& J = j.matrix();
  Tensor12 out(c.dim());
  for (Index i = 0; i < c.dim(); ++i) {
    const RMatrix& gi = c.gamma().slice(i);
    out.slice(i) = gi * J - J * gi;
  }
  return out;
}

TrilinearForm<Rational> covariant_derivative_g(const Connection& c, const InnerMetric& metric) {
  require_dim(c.dim(), metric.dim(), "covariant_derivative_g");
  const RMatrix& G = metric.matrix();
  TrilinearForm<Rational> out(c.dim());
  for (Index i = 0; i < c.dim(); ++i) {
    const RMatrix& gi = c.gamma().slice(i);
    const RMatrix s = -(gi.transpose() * G + G * gi);
    for (Index j = 0; j < c.dim(); ++j) {
      for (Index k = 0; k < c.dim(); ++k) out(i, j, k) = s(j, k);
    }
  }
  return out;
}

Tensor13 curvature(const Connection& c) {
  const Index n = c.dim();
  const auto& gamma = c.gamma();
  Tensor13 r(n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      RMatrix m = gamma.slice(i) * gamma.slice(j) - gamma.slice(j) * gamma.slice(i);
      for (Index k = 0; k < n; ++k) {
        const Rational& ck = c.algebra().c(i, j, k);
        if (!ck.is_zero()) m -= ck * gamma.slice(k);
      }
      r.matrix(i, j) = std::move(m);
    }
  }
  return r;
}

Tensor13 covariant_derivative_torsion(const Connection& c) {
  const Index n = c.dim();
  const auto& gamma = c.gamma();
  const Tensor12 t = torsion(c);
  Tensor13 out(n);
  for (Index i = 0; i < n; ++i) {
    const RMatrix& gi = gamma.slice(i);
    for (Index j = 0; j < n; ++j) {
      RMatrix& m = out.matrix(i, j);
      for (Index k = 0; k < n; ++k) {
        m.col(k) = gi * t.on_basis(j, k) - t(RVector(gi.col(j)), unit_vector(n, k)) -
                   t(unit_vector(n, j), RVector(gi.col(k)));
      }
    }
  }
  return out;
}

T2Tensor t2_tensor(const Connection& c) {
  const Index n = c.dim();
  const Tensor12 t = torsion(c);
  T2Tensor out;
  out.dim = n;
  out.values.assign(static_cast<std::size_t>(n * n * n * n * n), Rational(0));
  std::size_t pos = 0;
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      const RVector tab = t.on_basis(a, b);
      for (Index cc = 0; cc < n; ++cc) {
        for (Index d = 0; d < n; ++d) {
          const RVector v = t(tab, t.on_basis(cc, d));
          for (Index k = 0; k < n; ++k) out.values[pos++] = v(k);
          if (out.is_t2_zero && !is_zero(v)) {
            out.is_t2_zero = false;
            out.witness = std::array<Index, 4>{a, b, cc, d};
            out.witness_value = v;
          }
        }
      }
    }
  }
  return out;
}

Connection levi_civita(const LieAlgebra& g, const InnerMetric& metric) {
  require_validated(g, "levi_civita");
  require_dim(g.dim(), metric.dim(), "levi_civita");
  if (!is_positive_definite(metric.matrix())) throw InvalidMetric("metric is not positive definite");
  return metric_connection(g, metric, [](Index, Index, Index) { return Rational(0); });
}

RMatrix kahler_form(const InnerMetric& metric, const LinearComplexStructure& j) {
  require_dim(metric.dim(), j.dim(), "kahler_form");
  return j.matrix().transpose() * metric.matrix();
}

TrilinearForm<Rational> kahler_form_d(const LieAlgebra& g, const InnerMetric& metric,
                                      const LinearComplexStructure& j) {
  require_validated(g, "kahler_form_d");
  require_dim(g.dim(), j.dim(), "kahler_form_d");
  require_hermitian(metric, j);
  const Index n = g.dim();
  const RMatrix omega = kahler_form(metric, j);
  auto w = [&](const RVector& x, Index b) { return x.dot(omega.col(b)); };
  TrilinearForm<Rational> d(n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      for (Index c = 0; c < n; ++c) {
        d(a, b, c) = -w(g.ad(a).col(b), c) + w(g.ad(a).col(c), b) - w(g.ad(b).col(c), a);
      }
    }
  }
  return d;
}

Connection first_canonical(const LieAlgebra& g, const InnerMetric& metric,
                           const LinearComplexStructure& j) {
  const TrilinearForm<Rational> d = kahler_form_d(g, metric, j);
  const Index n = g.dim();
  const RMatrix& J = j.matrix();
  const Rational quarter(1, 4);
  return metric_connection(g, metric, [&](Index a, Index b, Index c) {
    const RVector x = unit_vector(n, a);
    const RVector y = unit_vector(n, b);
    const RVector z = unit_vector(n, c);
    return quarter * (contract(d, x, J * y, z) + contract(d, x, y, J * z));
  });
}

Connection chern(const LieAlgebra& g, const InnerMetric& metric, const LinearComplexStructure& j) {
  require_validated(g, "chern");
  require_dim(g.dim(), j.dim(), "chern");
  require_hermitian(metric, j);
  if (!classify_structure(g, j).integrable) throw NotIntegrable("Chern connection requires integrable J");
  const TrilinearForm<Rational> d = kahler_form_d(g, metric, j);
  const Index n = g.dim();
  const RMatrix& J = j.matrix();
  const Rational minus_half(-1, 2);
  return metric_connection(g, metric, [&](Index a, Index b, Index c) {
    return minus_half * contract(d, J * unit_vector(n, a), unit_vector(n, b), unit_vector(n, c));
  });
}

ChernSystemSolution solve_chern_conditions(const LieAlgebra& g, const InnerMetric& metric,
                                           const LinearComplexStructure& j) {
  require_validated(g, "solve_chern_conditions");
  require_dim(g.dim(), j.dim(), "solve_chern_conditions");
  require_dim(g.dim(), metric.dim(), "solve_chern_conditions");
  const Index n = g.dim();
  const Index unknowns = n * n * n;
  const RMatrix& G = metric.matrix();
  const RMatrix& J = j.matrix();
  auto var = [n](Index i, Index jj, Index k) { return (i * n + jj) * n + k; };

  std::vector<RVector> rows;
  std::vector<Rational> rhs;
  auto push = [&](RVector row, Rational value) {
    if (is_zero(row) && value.is_zero()) return;
    rows.push_back(std::move(row));
    rhs.push_back(std::move(value));
  };

  for (Index i = 0; i < n; ++i) {
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        // G(nabla_i e_a, e_b) + G(e_a, nabla_i e_b) = 0
        RVector row = RVector::Zero(unknowns);
        for (Index l = 0; l < n; ++l) {
          row(var(i, a, l)) += G(l, b);
          row(var(i, b, l)) += G(a, l);
        }
        push(std::move(row), Rational(0));
        // (Gamma_i J - J Gamma_i)(b, a) = 0
        RVector row_j = RVector::Zero(unknowns);
        for (Index l = 0; l < n; ++l) {
          row_j(var(i, l, b)) += J(l, a);
          row_j(var(i, a, l)) -= J(b, l);
        }
        push(std::move(row_j), Rational(0));
      }
    }
  }
  // T(u,v)_k = sum_{p,q} (u_p v_q - u_q v_p) gamma(p,q,k) - [u,v]_k
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      const RVector x = unit_vector(n, a);
      const RVector y = unit_vector(n, b);
      const RVector jx = J * x;
      const RVector jy = J * y;
      const RVector target = bracket(g, x, y) + bracket(g, jx, jy);
      for (Index k = 0; k < n; ++k) {
        RVector row = RVector::Zero(unknowns);
        for (Index p = 0; p < n; ++p) {
          for (Index q = 0; q < n; ++q) {
            row(var(p, q, k)) += x(p) * y(q) - x(q) * y(p) + jx(p) * jy(q) - jx(q) * jy(p);
          }
        }
        push(std::move(row), target(k));
      }
    }
  }

  RMatrix a(static_cast<Index>(rows.size()), unknowns);
  RVector b(static_cast<Index>(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    a.row(static_cast<Index>(r)) = rows[r].transpose();
    b(static_cast<Index>(r)) = rhs[r];
  }
  const LinearSystemSolution sol = solve_linear_system(a, b);
  ChernSystemSolution out;
  out.consistent = sol.consistent;
  out.nullity = sol.nullspace.cols();
  if (out.consistent && out.nullity == 0) {
    BilinearMap<Rational> gamma(n);
    for (Index i = 0; i < n; ++i) {
      for (Index jj = 0; jj < n; ++jj) {
        for (Index k = 0; k < n; ++k) gamma(i, jj, k) = sol.particular(var(i, jj, k));
      }
    }
    out.unique = Connection(g, std::move(gamma));
  }
  return out;
}

Connection complexify_torsion_free(const Connection& c, const LinearComplexStructure& j) {
  require_dim(c.dim(), j.dim(), "complexify_torsion_free");
  if (!torsion(c).is_zero()) throw NotTorsionFree("complexify_torsion_free needs a torsion-free connection");
  const RMatrix& J = j.matrix();
  const Rational half(1, 2);
  BilinearMap<Rational> gamma(c.dim());
  for (Index i = 0; i < c.dim(); ++i) {
    const RMatrix& gi = c.gamma().slice(i);
    gamma.slice(i) = half * (gi - J * gi * J);
  }
  return Connection(c.algebra(), std::move(gamma));
}

Tensor12 nijen1_residual(const Connection& c, const LinearComplexStructure& j) {
  require_dim(c.dim(), j.dim(), "nijen1_residual");
  const Index n = c.dim();
  const RMatrix& J = j.matrix();
  const Tensor12 t = torsion(c);
  const Tensor12 dj = covariant_derivative_J(c, j);
  Tensor12 residual(n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      const RVector x = unit_vector(n, a);
      const RVector y = unit_vector(n, b);
      const RVector jx = J * x;
      const RVector jy = J * y;
      const RVector rhs = dj(jx, y) - dj(jy, x) + dj(x, jy) - dj(y, jx) + t(x, y) - t(jx, jy) +
                          J * (t(jx, y) + t(x, jy));
      residual.slice(a).col(b) = nijenhuis(c.algebra(), j, x, y) - rhs;
    }
  }
  return residual;
}

}  // namespace flatcx
