#include "flatcx/frame.hpp"

#include <functional>

namespace flatcx {

// ---------------------------------------------------------------------------
// PolyVectorField

PolyVectorField::PolyVectorField(std::size_t ambient_dim)
    : components_(ambient_dim, Polynomial(Rational(0), ambient_dim)) {}

PolyVectorField::PolyVectorField(std::vector<Polynomial> components) : components_(std::move(components)) {
  const std::size_t m = components_.size();
  for (auto& p : components_) {
    try {
      p = p.with_num_vars(m);
    } catch (const IndexError&) {
      throw ShapeError("vector field component uses variables beyond the ambient dimension");
    }
  }
}

PolyVectorField PolyVectorField::coordinate(std::size_t k, std::size_t ambient_dim) {
  if (k >= ambient_dim) throw IndexError("coordinate field index out of range");
  PolyVectorField v(ambient_dim);
  v.components_[k] = Polynomial(Rational(1), ambient_dim);
  return v;
}

bool PolyVectorField::is_zero() const {
  for (const auto& p : components_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

PVector PolyVectorField::as_vector() const {
  PVector v(static_cast<Index>(components_.size()));
  for (std::size_t i = 0; i < components_.size(); ++i) v(static_cast<Index>(i)) = components_[i];
  return v;
}

PolyVectorField PolyVectorField::from_vector(const PVector& v) {
  std::vector<Polynomial> comps(v.data(), v.data() + v.size());
  return PolyVectorField(std::move(comps));
}

Polynomial PolyVectorField::apply(const Polynomial& f) const {
  Polynomial out(Rational(0), ambient_dim());
  for (std::size_t j = 0; j < components_.size(); ++j) {
    if (components_[j].is_zero()) continue;
    out += components_[j] * poly_partial(f.with_num_vars(ambient_dim()), j);
  }
  return out;
}

PolyVectorField& PolyVectorField::operator+=(const PolyVectorField& o) {
  if (o.ambient_dim() != ambient_dim()) throw ShapeError("vector field dimension mismatch");
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] += o.components_[i];
  return *this;
}

PolyVectorField& PolyVectorField::operator-=(const PolyVectorField& o) {
  if (o.ambient_dim() != ambient_dim()) throw ShapeError("vector field dimension mismatch");
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] -= o.components_[i];
  return *this;
}

PolyVectorField operator-(const PolyVectorField& a) {
  PolyVectorField r = a;
  for (auto& p : r.components_) p = -p;
  return r;
}

PolyVectorField operator*(const Polynomial& f, const PolyVectorField& v) {
  PolyVectorField r = v;
  for (auto& p : r.components_) p = f * p;
  return r;
}

PolyVectorField field_bracket(const PolyVectorField& x, const PolyVectorField& y) {
  if (x.ambient_dim() != y.ambient_dim()) throw ShapeError("field_bracket: dimension mismatch");
  std::vector<Polynomial> out;
  out.reserve(x.ambient_dim());
  for (std::size_t i = 0; i < x.ambient_dim(); ++i) out.push_back(x.apply(y[i]) - y.apply(x[i]));
  return PolyVectorField(std::move(out));
}

// ---------------------------------------------------------------------------
// Frame

Frame::Frame(std::size_t half_dim, std::vector<PolyVectorField> fields)
    : half_dim_(half_dim), fields_(std::move(fields)) {
  if (fields_.size() != 2 * half_dim_) throw ShapeError("frame must contain exactly 2n fields");
  for (const auto& f : fields_) {
    if (f.ambient_dim() != 2 * half_dim_) throw ShapeError("frame field ambient dimension must be 2n");
  }
}

PMatrix Frame::matrix() const {
  const Index m = static_cast<Index>(dim());
  PMatrix out(m, m);
  for (Index j = 0; j < m; ++j) out.col(j) = fields_[static_cast<std::size_t>(j)].as_vector();
  return out;
}

Frame Frame::validated() const {
  const Polynomial det = poly_matrix_det(matrix());
  if (det.is_zero() || !det.is_constant()) {
    throw FrameNotValidated("frame determinant is not a nonzero constant: " + det.str(), det);
  }
  Frame out = *this;
  out.inverse_ = std::make_shared<const PMatrix>(invert_unimodular_matrix(matrix()));
  return out;
}

const PMatrix& Frame::inverse() const {
  if (!inverse_) throw FrameNotValidated("frame has not been validated");
  return *inverse_;
}

FrameValidation validate_frame(const Frame& f) {
  FrameValidation out;
  out.determinant = poly_matrix_det(f.matrix()).with_num_vars(f.dim());
  if (out.determinant.is_zero()) {
    out.reason = "frame determinant vanishes identically";
    return out;
  }
  if (!out.determinant.is_constant()) {
    out.reason = "frame determinant is not constant: " + out.determinant.str();
    const std::size_t m = f.dim();
    if (m <= 6) {
      std::vector<Rational> point(m, Rational(-2));
      bool found = false;
      // Odometer over {-2..2}^m.
      for (;;) {
        if (out.determinant.evaluate(point).is_zero()) {
          found = true;
          break;
        }
        std::size_t k = 0;
        while (k < m && point[k] == Rational(2)) point[k++] = Rational(-2);
        if (k == m) break;
        point[k] += Rational(1);
      }
      out.sampled_zero_found = found;
    }
    return out;
  }
  out.valid = true;
  return out;
}

PVector express_in_frame(const PolyVectorField& v, const Frame& f) {
  if (v.ambient_dim() != f.dim()) throw ShapeError("express_in_frame: dimension mismatch");
  return f.inverse() * v.as_vector();
}

PolyVectorField apply_j(const PolyVectorField& v, const Frame& f) {
  const PVector c = express_in_frame(v, f);
  const std::size_t n = f.half_dim();
  PolyVectorField out(f.dim());
  for (std::size_t k = 0; k < n; ++k) {
    const Polynomial& ck = c(static_cast<Index>(k));
    const Polynomial& cjk = c(static_cast<Index>(k + n));
    if (!ck.is_zero()) out += ck * f.field(k + n);
    if (!cjk.is_zero()) out -= cjk * f.field(k);
  }
  return out;
}

FrameTorsion frame_torsion(const Frame& f) {
  const Index m = static_cast<Index>(f.dim());
  f.inverse();
  FrameTorsion t(m);
  for (Index a = 0; a < m; ++a) {
    for (Index b = a + 1; b < m; ++b) {
      const auto sa = static_cast<std::size_t>(a);
      const auto sb = static_cast<std::size_t>(b);
      const PVector c = express_in_frame(-field_bracket(f.field(sa), f.field(sb)), f);
      t.slice(a).col(b) = c;
      t.slice(b).col(a) = -c;
    }
  }
  return t;
}

TorsionClassification<Polynomial> frame_torsion_type(const Frame& f) {
  const auto j = [&] {
    const Index m = static_cast<Index>(f.dim());
    const Index n = static_cast<Index>(f.half_dim());
    RMatrix out = RMatrix::Zero(m, m);
    for (Index k = 0; k < n; ++k) {
      out(k + n, k) = 1;
      out(k, k + n) = -1;
    }
    return out;
  }();
  return torsion_type(frame_torsion(f), j);
}

TorsionParallelism is_torsion_parallel(const Frame& f) {
  const FrameTorsion t = frame_torsion(f);
  TorsionParallelism out;
  const std::size_t m = f.dim();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      for (std::size_t k = 0; k < m; ++k) {
        const Polynomial& p = t(static_cast<Index>(a), static_cast<Index>(b), static_cast<Index>(k));
        if (!p.is_constant()) {
          out.parallel = false;
          out.witness = std::array<std::size_t, 3>{a, b, k};
          out.component = p;
          return out;
        }
      }
    }
  }
  return out;
}

LieAlgebra export_to_lie_algebra(const Frame& f) {
  const TorsionParallelism par = is_torsion_parallel(f);
  if (!par.parallel) throw NotClosed("frame span is not closed under the bracket with constant coefficients", par);
  const FrameTorsion t = frame_torsion(f);
  const Index m = static_cast<Index>(f.dim());
  BilinearMap<Rational> c(m);
  for (Index a = 0; a < m; ++a) {
    for (Index b = 0; b < m; ++b) {
      for (Index k = 0; k < m; ++k) c(a, b, k) = -t(a, b, k).constant_term();
    }
  }
  return LieAlgebra(std::move(c)).validated();
}

PolyVectorField frame_nijenhuis(const Frame& f, std::size_t a, std::size_t b) {
  const PolyVectorField& x = f.field(a);
  const PolyVectorField& y = f.field(b);
  const PolyVectorField jx = apply_j(x, f);
  const PolyVectorField jy = apply_j(y, f);
  return field_bracket(jx, jy) - apply_j(field_bracket(x, jy), f) - apply_j(field_bracket(jx, y), f) -
         field_bracket(x, y);
}

bool satisfies_abelian_relations(const Frame& f) {
  const std::size_t n = f.half_dim();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      const auto& xk = f.field(k);
      const auto& xl = f.field(l);
      const auto& jxk = f.field(k + n);
      const auto& jxl = f.field(l + n);
      if (!(field_bracket(xk, xl) == field_bracket(jxk, jxl))) return false;
      if (!(field_bracket(jxk, xl) == -field_bracket(xk, jxl))) return false;
    }
  }
  return true;
}

bool satisfies_chern_relations(const Frame& f) {
  const std::size_t n = f.half_dim();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      const auto& xk = f.field(k);
      const auto& xl = f.field(l);
      const auto& jxk = f.field(k + n);
      const auto& jxl = f.field(l + n);
      if (k < l && !(field_bracket(xk, xl) == -field_bracket(jxk, jxl))) return false;
      if (!(field_bracket(jxk, xl) == apply_j(field_bracket(xk, xl), f))) return false;
    }
  }
  return true;
}

std::string to_string(FormType t) {
  switch (t) {
    case FormType::Zero: return "Zero";
    case FormType::Type11: return "(1,1)";
    case FormType::Type20: return "(2,0)";
    case FormType::Mixed: return "Mixed";
  }
  return "Mixed";
}

FormCriterion verify_form_criterion(const Frame& f) {
  const Index m = static_cast<Index>(f.dim());
  const Index n = static_cast<Index>(f.half_dim());

  // d alpha_a(field_b, field_c) for every a, from brackets of the raw fields.
  std::vector<PMatrix> d_alpha(static_cast<std::size_t>(m), PMatrix::Zero(m, m));
  for (Index b = 0; b < m; ++b) {
    for (Index c = b + 1; c < m; ++c) {
      const PVector coords = express_in_frame(
          field_bracket(f.field(static_cast<std::size_t>(b)), f.field(static_cast<std::size_t>(c))), f);
      for (Index a = 0; a < m; ++a) {
        d_alpha[static_cast<std::size_t>(a)](b, c) = -coords(a);
        d_alpha[static_cast<std::size_t>(a)](c, b) = coords(a);
      }
    }
  }

  PMatrix j = PMatrix::Zero(m, m);
  for (Index k = 0; k < n; ++k) {
    j(k + n, k) = Polynomial(1);
    j(k, k + n) = Polynomial(-1);
  }
  const PMatrix jt = j.transpose();

  FormCriterion out;
  for (Index k = 0; k < n; ++k) {
    // d theta_k = re + i im
    const PMatrix& re = d_alpha[static_cast<std::size_t>(k)];
    const PMatrix& im = d_alpha[static_cast<std::size_t>(k + n)];
    // beta(Jx,Jy) = beta(x,y) for both parts.
    const bool is11 = jt * re * j == re && jt * im * j == im;
    // beta(Jx,y) = i beta(x,y).
    const bool is20 = jt * re == -im && jt * im == re;
    FormType type = FormType::Mixed;
    if (is_zero(re) && is_zero(im)) {
      type = FormType::Zero;
    } else if (is20) {
      type = FormType::Type20;
    } else if (is11) {
      type = FormType::Type11;
    }
    out.types.push_back(type);
    out.all_11 = out.all_11 && is11;
    out.all_20 = out.all_20 && is20;
  }
  const auto tt = frame_torsion_type(f);
  out.agrees = out.all_11 == tt.type11 && out.all_20 == tt.type20;
  return out;
}

}  // namespace flatcx
