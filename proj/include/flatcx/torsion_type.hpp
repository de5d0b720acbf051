#pragma once

#include <string>
#include <vector>

#include "flatcx/tensor.hpp"

namespace flatcx {

enum class TorsionType { Zero, Type20, Type11, Type2002, None };

// The three defining identities, checked on every ordered basis pair:
//   Type11:   T(Jx,Jy) =  T(x,y)
//   Type20:   T(Jx,y)  = J T(x,y)
//   Type2002: T(Jx,Jy) = -T(x,y)
enum class TorsionIdentity { Type11, Type20, Type2002 };

inline std::string to_string(TorsionType t) {
  switch (t) {
    case TorsionType::Zero: return "Zero";
    case TorsionType::Type20: return "Type20";
    case TorsionType::Type11: return "Type11";
    case TorsionType::Type2002: return "Type2002";
    case TorsionType::None: return "None";
  }
  return "None";
}

inline std::string to_string(TorsionIdentity t) {
  switch (t) {
    case TorsionIdentity::Type11: return "Type11";
    case TorsionIdentity::Type20: return "Type20";
    case TorsionIdentity::Type2002: return "Type2002";
  }
  return "";
}

template <class Scalar>
struct TorsionDefect {
  TorsionIdentity identity;
  Index i;
  Index j;
  Vector<Scalar> defect;  // lhs - rhs of the identity at (e_i, e_j)
};

template <class Scalar>
struct TorsionClassification {
  TorsionType type = TorsionType::None;
  bool zero = false;
  bool type11 = false;
  bool type20 = false;
  bool type2002 = false;
  std::vector<TorsionDefect<Scalar>> defects;  // first failing pair per violated identity

  bool satisfies(TorsionIdentity id) const {
    switch (id) {
      case TorsionIdentity::Type11: return type11;
      case TorsionIdentity::Type20: return type20;
      case TorsionIdentity::Type2002: return type2002;
    }
    return false;
  }
  std::vector<TorsionIdentity> satisfied() const {
    std::vector<TorsionIdentity> out;
    if (type20) out.push_back(TorsionIdentity::Type20);
    if (type11) out.push_back(TorsionIdentity::Type11);
    if (type2002) out.push_back(TorsionIdentity::Type2002);
    return out;
  }
};

// Classifies a torsion tensor against a constant J given in the same basis.
// Verdict priority: Zero > Type20 > Type11 > Type2002 > None.
template <class Scalar>
TorsionClassification<Scalar> torsion_type(const BilinearMap<Scalar>& t, const RMatrix& j) {
  const Index n = t.dim();
  if (j.rows() != n || j.cols() != n) throw ShapeError("torsion_type: J shape mismatch");
  const Matrix<Scalar> js = j.template cast<Scalar>();

  TorsionClassification<Scalar> out;
  out.zero = t.is_zero();
  out.type11 = out.type20 = out.type2002 = true;
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      const Vector<Scalar> jx = js.col(a);
      const Vector<Scalar> jy = js.col(b);
      const Vector<Scalar> txy = t.on_basis(a, b);
      const Vector<Scalar> tjxjy = t(jx, jy);
      if (out.type11) {
        Vector<Scalar> d = tjxjy - txy;
        if (!is_zero(d)) {
          out.type11 = false;
          out.defects.push_back({TorsionIdentity::Type11, a, b, std::move(d)});
        }
      }
      if (out.type2002) {
        Vector<Scalar> d = tjxjy + txy;
        if (!is_zero(d)) {
          out.type2002 = false;
          out.defects.push_back({TorsionIdentity::Type2002, a, b, std::move(d)});
        }
      }
      if (out.type20) {
        Vector<Scalar> d = t(jx, Vector<Scalar>(Vector<Scalar>::Unit(n, b))) - js * txy;
        if (!is_zero(d)) {
          out.type20 = false;
          out.defects.push_back({TorsionIdentity::Type20, a, b, std::move(d)});
        }
      }
    }
  }
  if (out.zero) {
    out.type = TorsionType::Zero;
  } else if (out.type20) {
    out.type = TorsionType::Type20;
  } else if (out.type11) {
    out.type = TorsionType::Type11;
  } else if (out.type2002) {
    out.type = TorsionType::Type2002;
  } else {
    out.type = TorsionType::None;
  }
  return out;
}

}  // namespace flatcx
