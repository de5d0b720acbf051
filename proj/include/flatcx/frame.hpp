#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "flatcx/lie_algebra.hpp"
#include "flatcx/linalg.hpp"
#include "flatcx/tensor.hpp"
#include "flatcx/torsion_type.hpp"

namespace flatcx {

// Vector field on R^m with polynomial components in x1..xm.
class PolyVectorField {
 public:
  PolyVectorField() = default;
  explicit PolyVectorField(std::size_t ambient_dim);
  explicit PolyVectorField(std::vector<Polynomial> components);

  // d/dx_{k+1}
  static PolyVectorField coordinate(std::size_t k, std::size_t ambient_dim);

  std::size_t ambient_dim() const { return components_.size(); }
  const std::vector<Polynomial>& components() const { return components_; }
  const Polynomial& operator[](std::size_t i) const { return components_.at(i); }
  bool is_zero() const;

  PVector as_vector() const;
  static PolyVectorField from_vector(const PVector& v);

  // Derivative of f along the field.
  Polynomial apply(const Polynomial& f) const;

  PolyVectorField& operator+=(const PolyVectorField& o);
  PolyVectorField& operator-=(const PolyVectorField& o);
  friend PolyVectorField operator+(PolyVectorField a, const PolyVectorField& b) { return a += b; }
  friend PolyVectorField operator-(PolyVectorField a, const PolyVectorField& b) { return a -= b; }
  friend PolyVectorField operator-(const PolyVectorField& a);
  friend PolyVectorField operator*(const Polynomial& f, const PolyVectorField& v);

  friend bool operator==(const PolyVectorField& a, const PolyVectorField& b) {
    return a.components_ == b.components_;
  }

 private:
  std::vector<Polynomial> components_;
};

// [X,Y]^i = sum_j (X^j d_j Y^i - Y^j d_j X^i). Throws ShapeError.
PolyVectorField field_bracket(const PolyVectorField& x, const PolyVectorField& y);

// Ordered parallelism (X_1..X_n, JX_1..JX_n) on R^{2n}; J is implied by
// position: J(field_k) = field_{k+n}, J(field_{k+n}) = -field_k.
class Frame {
 public:
  Frame() = default;
  Frame(std::size_t half_dim, std::vector<PolyVectorField> fields);

  std::size_t half_dim() const { return half_dim_; }
  std::size_t dim() const { return fields_.size(); }
  const std::vector<PolyVectorField>& fields() const { return fields_; }
  const PolyVectorField& field(std::size_t a) const { return fields_.at(a); }

  // Columns are the fields.
  PMatrix matrix() const;

  bool is_validated() const { return inverse_ != nullptr; }
  // Copy carrying the inverse frame matrix. Throws FrameNotValidated with
  // the determinant as witness unless it is a nonzero constant.
  Frame validated() const;
  // Throws FrameNotValidated when not validated.
  const PMatrix& inverse() const;

  friend bool operator==(const Frame& a, const Frame& b) {
    return a.half_dim_ == b.half_dim_ && a.fields_ == b.fields_;
  }

 private:
  std::size_t half_dim_ = 0;
  std::vector<PolyVectorField> fields_;
  std::shared_ptr<const PMatrix> inverse_;
};

class FrameNotValidated : public Error {
 public:
  explicit FrameNotValidated(const std::string& what, std::optional<Polynomial> det = std::nullopt)
      : Error(what), det_(std::move(det)) {}
  const std::optional<Polynomial>& determinant() const { return det_; }

 private:
  std::optional<Polynomial> det_;
};

struct FrameValidation {
  bool valid = false;
  Polynomial determinant;
  std::string reason;
  // Non-certifying: whether the determinant vanished at some point of the
  // lattice {-2..2}^m. Only filled when the determinant is non-constant.
  std::optional<bool> sampled_zero_found;
};

FrameValidation validate_frame(const Frame& f);

// Coordinates c with v = sum_a c_a field_a.
PVector express_in_frame(const PolyVectorField& v, const Frame& f);

// Applies the frame-implied J pointwise.
PolyVectorField apply_j(const PolyVectorField& v, const Frame& f);

// T(field_a, field_b) = -[field_a, field_b] in frame coordinates.
using FrameTorsion = BilinearMap<Polynomial>;
FrameTorsion frame_torsion(const Frame& f);

// Same identities and priority as the Lie-algebra case, with exact
// polynomial-identity equality; J is the standard block matrix in frame
// coordinates.
TorsionClassification<Polynomial> frame_torsion_type(const Frame& f);

struct TorsionParallelism {
  bool parallel = true;
  // First non-constant component: T(field_a, field_b) has coefficient
  // `component` on field_k.
  std::optional<std::array<std::size_t, 3>> witness;
  Polynomial component;
};
TorsionParallelism is_torsion_parallel(const Frame& f);

class NotClosed : public Error {
 public:
  NotClosed(const std::string& what, TorsionParallelism witness)
      : Error(what), witness_(std::move(witness)) {}
  const TorsionParallelism& witness() const { return witness_; }

 private:
  TorsionParallelism witness_;
};

// Lie algebra spanned by the frame when brackets close with constant
// coefficients: c(a,b,k) = coefficient of field_k in [field_a, field_b].
// Throws NotClosed otherwise. The result is validated.
LieAlgebra export_to_lie_algebra(const Frame& f);

// N(X,Y) = [JX,JY] - J[X,JY] - J[JX,Y] - [X,Y] on field_a, field_b.
PolyVectorField frame_nijenhuis(const Frame& f, std::size_t a, std::size_t b);

// Abelian-connection relations on the raw fields, k < l:
//   [X_k,X_l] = [JX_k,JX_l],   [JX_k,X_l] = -[X_k,JX_l].
bool satisfies_abelian_relations(const Frame& f);
// Chern-type relations: [X_k,X_l] = -[JX_k,JX_l] (k < l),
//   [JX_k,X_l] = J[X_k,X_l] (k <= l).
bool satisfies_chern_relations(const Frame& f);

enum class FormType { Zero, Type11, Type20, Mixed };
std::string to_string(FormType t);

// Types of d theta_k for the (1,0)-coframe theta_k = alpha_k + i alpha_{k+n}
// dual to the frame, with d alpha_a(field_b, field_c) = -alpha_a([field_b, field_c]).
struct FormCriterion {
  std::vector<FormType> types;
  bool all_11 = true;
  bool all_20 = true;
  // all_11 <=> Type11 identity and all_20 <=> Type20 identity.
  bool agrees = false;
};
FormCriterion verify_form_criterion(const Frame& f);

}  // namespace flatcx
