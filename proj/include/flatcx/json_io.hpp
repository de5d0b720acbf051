#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "flatcx/complex_structure.hpp"
#include "flatcx/connection.hpp"
#include "flatcx/frame.hpp"
#include "flatcx/lie_algebra.hpp"

namespace flatcx {

using Json = nlohmann::json;

// Wire formats. Every number is an exact rational string "p/q" (or "p").
//   rational    "p/q"
//   polynomial  [{"coeff": "p/q", "exponents": [e1, ..., em]}, ...]   (lex ascending)
//   matrix      [["p/q", ...], ...]                                      (row-major rows)
//   algebra     {"dim": n, "brackets": [{"i", "j", "coeffs": {"k": "p/q"}}]}  (i < j only)
//   connection  {"gamma": [{"i", "j", "coeffs": {"k": "p/q"}}]}
//   frame       {"half_dim": n, "fields": [[poly, ...], ...]}
// Parsers throw ParseError whose location is a JSON pointer.

Json to_json(const Rational& x);
Rational rational_from_json(const Json& j, const std::string& where = "");

Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j, std::size_t num_vars, const std::string& where = "");

Json to_json(const RVector& v);
Json to_json(const PVector& v);
Json to_json(const RMatrix& m);
RMatrix matrix_from_json(const Json& j, const std::string& where = "");

Json to_json(const LieAlgebra& g);
LieAlgebra lie_algebra_from_json(const Json& j, const std::string& where = "");

Json to_json(const Connection& c);
BilinearMap<Rational> gamma_from_json(const Json& j, Index dim, const std::string& where = "");

Json to_json(const Frame& f);
Frame frame_from_json(const Json& j, const std::string& where = "");

Json to_json(const ClassificationVerdict& v);

// Input documents accepted by `analyze`. Matrices are kept raw so that an
// invalid J or metric yields a report rather than a parse failure.
struct AlgebraDocument {
  LieAlgebra algebra;
  std::optional<RMatrix> j;
  std::optional<RMatrix> metric;
  friend bool operator==(const AlgebraDocument& a, const AlgebraDocument& b) {
    return a.algebra == b.algebra && a.j.has_value() == b.j.has_value() &&
           a.metric.has_value() == b.metric.has_value() && (!a.j || *a.j == *b.j) &&
           (!a.metric || *a.metric == *b.metric);
  }
};
struct FrameDocument {
  Frame frame;
  friend bool operator==(const FrameDocument& a, const FrameDocument& b) { return a.frame == b.frame; }
};
using Document = std::variant<AlgebraDocument, FrameDocument>;

// Algebra documents extend the algebra format with optional "J" and
// "metric" matrices; frame documents are frames.
Document document_from_json(const Json& j);
Json to_json(const Document& d);

// Parses text; syntax errors carry "line L, column C".
Json parse_json_text(std::string_view text);
Document parse_document(std::string_view text);

// Canonical text: two-space indentation, sorted keys, trailing newline.
std::string serialize(const Json& j);

}  // namespace flatcx
