#include <doctest.h>

#include "flatcx/catalog.hpp"
#include "flatcx/json_io.hpp"
#include "support/families.hpp"

using namespace flatcx;
using namespace flatcx::testing;

namespace {

std::string location_of(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e.location();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("scalar and polynomial round trips") {
  CHECK(to_json(Rational(-3, 6)) == "-1/2");
  CHECK(rational_from_json(Json("4/6")) == Rational(2, 3));
  CHECK_THROWS_AS(rational_from_json(Json(0.5)), ParseError);
  const Polynomial p = Rational(2) * Polynomial::variable(2, 4) * Polynomial::variable(2, 4) - Polynomial(Rational(1), 4);
  const Json j = to_json(p);
  CHECK(j.dump() == R"([{"coeff":"-1","exponents":[0,0,0,0]},{"coeff":"2","exponents":[0,0,2,0]}])");
  CHECK(polynomial_from_json(j, 4) == p);
  CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"([{"coeff":"1","exponents":[1,0]}])"), 4), ParseError);
  CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"([{"coeff":"0","exponents":[1,0]}])"), 2), ParseError);
}

TEST_CASE("algebra, matrix, connection and frame round trips") {
  Sampler s(3);
  for (const auto& entry : pool4(9)) {
    const LieAlgebra g = change_basis(entry.algebra, s.invertible_matrix(4, 2));
    CHECK(lie_algebra_from_json(to_json(g)) == g);
    const Connection c(g.validated(), random_gamma(4, s));
    CHECK(gamma_from_json(to_json(c), 4) == c.gamma());
  }
  const RMatrix m = s.integer_matrix(3, 2, 5);
  CHECK(matrix_from_json(to_json(m)) == m);
  for (const Frame& f : {r4_nonparallel_frame(), kt4_frame(), aff_c_frame(), coordinate_frame(3)}) {
    CHECK(frame_from_json(to_json(f)) == f);
  }
}

TEST_CASE("document serialization is canonical") {
  for (const auto& name : catalog_names()) {
    const Document d = load_example(name).payload;
    const std::string text = serialize(to_json(d));
    CHECK(parse_document(text) == d);
    CHECK(serialize(to_json(parse_document(text))) == text);
  }
  // Key order, whitespace and equivalent rationals do not matter.
  const std::string messy = R"({"brackets":[{"coeffs":{"2":"2/2"},"j":1,"i":0}],   "dim":4})";
  CHECK(serialize(to_json(parse_document(messy))) == serialize(to_json(AlgebraDocument{kt4_algebra(), {}, {}})));
}

TEST_CASE("syntax errors carry line and column") {
  CHECK(location_of("{\n  \"dim\": 2,\n  \"brackets\": [}") == "line 3, column 16");
  CHECK(location_of("").find("line 1") == 0);
}

TEST_CASE("schema errors carry a JSON pointer") {
  CHECK(location_of(R"([1, 2])") == "/");
  CHECK(location_of(R"({"foo": 1})") == "/");
  CHECK(location_of(R"({"dim": 0, "brackets": []})") == "/dim");
  CHECK(location_of(R"({"dim": 3})") == "/");
  CHECK(location_of(R"({"dim": 3, "brackets": [{"i": 1, "j": 0, "coeffs": {}}]})") == "/brackets/0");
  CHECK(location_of(R"({"dim": 3, "brackets": [{"i": 0, "j": 3, "coeffs": {}}]})") == "/brackets/0/j");
  CHECK(location_of(R"({"dim": 3, "brackets": [{"i": 0, "j": 1, "coeffs": {"2": "x"}}]})") == "/brackets/0/coeffs/2");
  CHECK(location_of(R"({"dim": 3, "brackets": [{"i": 0, "j": 1, "coeffs": {"7": "1"}}]})") == "/brackets/0/coeffs/7");
  CHECK(location_of(R"({"dim": 3, "brackets": [{"i": 0, "j": 1, "coeffs": {}}, {"i": 0, "j": 1, "coeffs": {}}]})") ==
        "/brackets/1");
  CHECK(location_of(R"({"dim": 2, "brackets": [], "J": [["0", "-1"], ["1"]]})") == "/J/1");
  CHECK(location_of(R"({"half_dim": 1, "fields": [[[], []]]})") == "/fields");
  CHECK(location_of(R"({"half_dim": 1, "fields": [[[], []], [[], [{"coeff": "1", "exponents": [0]}]]]})") ==
        "/fields/1/1/0/exponents");
}

TEST_CASE("invalid matrices survive parsing") {
  const Document d = parse_document(R"({"dim": 2, "brackets": [], "J": [["1", "0"], ["0", "1"]]})");
  const auto& a = std::get<AlgebraDocument>(d);
  REQUIRE(a.j);
  CHECK(*a.j == RMatrix(RMatrix::Identity(2, 2)));
}
