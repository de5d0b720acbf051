#pragma once

#include <array>
#include <optional>
#include <vector>

#include "flatcx/linalg.hpp"

namespace flatcx {

// Vector-valued bilinear map B on an n-dimensional space, stored as n
// matrices: slice(i) is the matrix of y -> B(e_i, y), so that
//   B(e_i, e_j) = slice(i).col(j),   B(e_i, e_j)_k = (*this)(i, j, k).
// Structure constants, connection coefficients, torsion, and the
// frame-level torsion (with polynomial entries) all use this layout.
template <class Scalar>
class BilinearMap {
 public:
  BilinearMap() = default;
  explicit BilinearMap(Index dim)
      : dim_(dim), slices_(static_cast<std::size_t>(dim), Matrix<Scalar>::Zero(dim, dim)) {}

  Index dim() const { return dim_; }

  Scalar& operator()(Index i, Index j, Index k) { return slices_[idx(i)](k, j); }
  const Scalar& operator()(Index i, Index j, Index k) const { return slices_[idx(i)](k, j); }

  const Matrix<Scalar>& slice(Index i) const { return slices_[idx(i)]; }
  Matrix<Scalar>& slice(Index i) { return slices_[idx(i)]; }

  Vector<Scalar> on_basis(Index i, Index j) const { return slices_[idx(i)].col(j); }

  template <class DX, class DY>
  Vector<Scalar> operator()(const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DY>& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw ShapeError("bilinear map: argument length mismatch");
    Vector<Scalar> out = Vector<Scalar>::Zero(dim_);
    const Vector<Scalar> yy = y.template cast<Scalar>();
    for (Index i = 0; i < dim_; ++i) {
      if (flatcx::is_zero(x(i))) continue;
      out += Scalar(x(i)) * (slices_[idx(i)] * yy);
    }
    return out;
  }

  bool is_zero() const {
    for (const auto& s : slices_) {
      if (!flatcx::is_zero(s)) return false;
    }
    return true;
  }

  bool is_antisymmetric() const {
    for (Index i = 0; i < dim_; ++i) {
      for (Index j = i; j < dim_; ++j) {
        for (Index k = 0; k < dim_; ++k) {
          if (!((*this)(i, j, k) == -(*this)(j, i, k))) return false;
        }
      }
    }
    return true;
  }

  // First basis pair (i, j) with B(e_i, e_j) != 0.
  std::optional<std::pair<Index, Index>> first_nonzero() const {
    for (Index i = 0; i < dim_; ++i) {
      for (Index j = 0; j < dim_; ++j) {
        if (!flatcx::is_zero(on_basis(i, j))) return std::pair{i, j};
      }
    }
    return std::nullopt;
  }

  friend bool operator==(const BilinearMap& a, const BilinearMap& b) {
    return a.dim_ == b.dim_ && a.slices_ == b.slices_;
  }

  BilinearMap& operator+=(const BilinearMap& o) {
    for (std::size_t i = 0; i < slices_.size(); ++i) slices_[i] += o.slices_[i];
    return *this;
  }
  BilinearMap& operator-=(const BilinearMap& o) {
    for (std::size_t i = 0; i < slices_.size(); ++i) slices_[i] -= o.slices_[i];
    return *this;
  }
  friend BilinearMap operator+(BilinearMap a, const BilinearMap& b) { return a += b; }
  friend BilinearMap operator-(BilinearMap a, const BilinearMap& b) { return a -= b; }

 private:
  std::size_t idx(Index i) const {
    if (i < 0 || i >= dim_) throw IndexError("bilinear map: basis index out of range");
    return static_cast<std::size_t>(i);
  }

  Index dim_ = 0;
  std::vector<Matrix<Scalar>> slices_;
};

// Scalar-valued 3-form component array t(i; j, k), stored as n matrices.
template <class Scalar>
class TrilinearForm {
 public:
  TrilinearForm() = default;
  explicit TrilinearForm(Index dim)
      : dim_(dim), slices_(static_cast<std::size_t>(dim), Matrix<Scalar>::Zero(dim, dim)) {}

  Index dim() const { return dim_; }
  Scalar& operator()(Index i, Index j, Index k) { return slices_[static_cast<std::size_t>(i)](j, k); }
  const Scalar& operator()(Index i, Index j, Index k) const {
    return slices_[static_cast<std::size_t>(i)](j, k);
  }
  const Matrix<Scalar>& slice(Index i) const { return slices_[static_cast<std::size_t>(i)]; }

  bool is_zero() const {
    for (const auto& s : slices_) {
      if (!flatcx::is_zero(s)) return false;
    }
    return true;
  }

  bool is_totally_antisymmetric() const {
    for (Index i = 0; i < dim_; ++i) {
      for (Index j = 0; j < dim_; ++j) {
        for (Index k = 0; k < dim_; ++k) {
          const Scalar& v = (*this)(i, j, k);
          if (!(v == -(*this)(j, i, k)) || !(v == -(*this)(i, k, j)) || !(v == -(*this)(k, j, i))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::optional<std::array<Index, 3>> first_nonzero() const {
    for (Index i = 0; i < dim_; ++i) {
      for (Index j = 0; j < dim_; ++j) {
        for (Index k = 0; k < dim_; ++k) {
          if (!flatcx::is_zero((*this)(i, j, k))) return std::array<Index, 3>{i, j, k};
        }
      }
    }
    return std::nullopt;
  }

 private:
  Index dim_ = 0;
  std::vector<Matrix<Scalar>> slices_;
};

}  // namespace flatcx
