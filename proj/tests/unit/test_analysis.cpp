#include <doctest.h>

#include "flatcx/analysis.hpp"
#include "flatcx/catalog.hpp"
#include "support/families.hpp"
#include "support/oracles.hpp"

using namespace flatcx;
using namespace flatcx::testing;

namespace {

RVector rvec(const Json& j) {
  RVector v(static_cast<Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) v(static_cast<Index>(k)) = rational_from_json(j[k]);
  return v;
}

// Recomputes an algebra witness from scratch.
RVector reevaluate(const AlgebraDocument& doc, const ReportWitness& w) {
  const LieAlgebra g = doc.algebra.validated();
  const Index n = g.dim();
  const auto e = [n](Index k) { return unit_vector(n, k); };
  const auto& b = w.basis;
  if (w.check == "integrable") return oracle::nijenhuis(g, *doc.j, e(b[0]), e(b[1]));
  if (w.check == "abelian") {
    return oracle::raw_bracket(g, *doc.j * e(b[0]), *doc.j * e(b[1])) - oracle::raw_bracket(g, e(b[0]), e(b[1]));
  }
  if (w.check == "bi_invariant") {
    return *doc.j * oracle::raw_bracket(g, e(b[0]), e(b[1])) - oracle::raw_bracket(g, e(b[0]), *doc.j * e(b[1]));
  }
  if (w.check == "two_step_solvable") {
    // T = -[,] for the (-)-connection.
    return -oracle::raw_bracket(g, oracle::raw_bracket(g, e(b[0]), e(b[1])), oracle::raw_bracket(g, e(b[2]), e(b[3])));
  }
  if (w.check == "unimodular") {
    RVector v(1);
    v(0) = g.ad(b[0]).trace();
    return v;
  }
  if (w.check == "hermitian") {
    const RMatrix d = doc.j->transpose() * *doc.metric * *doc.j - *doc.metric;
    RVector v(1);
    v(0) = d(b[0], b[1]);
    return v;
  }
  FAIL("unexpected witness " << w.check);
  return {};
}

std::vector<AlgebraDocument> documents() {
  std::vector<AlgebraDocument> docs;
  Sampler s(60);
  for (const auto& entry : pool4(12)) {
    for (const auto& inst : random_structures(entry, 4, 13)) {
      const RMatrix a = s.invertible_matrix(4, 2);
      // Alternate Hermitian and generic metrics.
      const RMatrix metric = docs.size() % 2 == 0 ? random_hermitian_metric(inst.j, 2).matrix() : RMatrix(a.transpose() * a);
      docs.push_back({inst.algebra, inst.j.matrix(), metric});
    }
  }
  docs.push_back({so3_algebra(), std::nullopt, std::nullopt});
  docs.push_back({d4(), std::nullopt, std::nullopt});
  return docs;
}

}  // namespace

TEST_CASE("catalog verdicts") {
  const auto verdicts = [](const std::string& name) {
    return analyze(load_example(name).payload, "").to_json()["verdicts"];
  };
  const Json kt = verdicts("kt4");
  CHECK(kt["abelian"] == true);
  CHECK(kt["torsion_type"] == "Type11");
  CHECK(kt["two_step_solvable"] == true);
  const Json r4 = verdicts("r4_nonparallel");
  CHECK(r4["torsion_type"] == "Type11");
  CHECK(r4["torsion_parallel"] == false);
  const Json ab = verdicts("abelian4");
  for (const auto& name : verdict_names()) {
    if (name != "torsion_type") CHECK(ab[name] == true);
  }
}

TEST_CASE("abelian4 connections all vanish") {
  AnalysisOptions opts;
  opts.emit_connections = true;
  const Json r = analyze(load_example("abelian4").payload, "", opts).to_json();
  for (const auto& name : {"minus", "levi_civita", "first_canonical", "chern"}) {
    CAPTURE(name);
    CHECK(r["connection_outputs"][name]["gamma"] == Json::array());
  }
}

TEST_CASE("every false verdict has a witness that re-evaluates exactly") {
  for (const auto& doc : documents()) {
    const AnalysisReport r = analyze(doc, "");
    REQUIRE(r.valid);
    for (const auto& name : verdict_names()) {
      const Json& v = r.verdicts[name];
      if (v.is_boolean() && !v.get<bool>()) {
        CAPTURE(name);
        CHECK(std::any_of(r.witnesses.begin(), r.witnesses.end(), [&](const auto& w) { return w.check == name; }));
      }
    }
    for (const auto& w : r.witnesses) {
      CAPTURE(w.check);
      const RVector defect = rvec(w.defect);
      CHECK_FALSE(is_zero(defect));
      CHECK(reevaluate(doc, w) == defect);
    }
  }
}

TEST_CASE("frame witnesses re-evaluate exactly") {
  const Frame f = r4_nonparallel_frame().validated();
  const AnalysisReport r = analyze(FrameDocument{f}, "");
  bool saw_parallel = false;
  for (const auto& w : r.witnesses) {
    if (w.check == "torsion_parallel") {
      saw_parallel = true;
      const auto t = frame_torsion(f);
      CHECK(to_json(t(w.basis[0], w.basis[1], w.basis[2])) == w.defect[0]);
      CHECK(w.defect[0] == to_json(Rational(2) * Polynomial::variable(2, 4)));
    }
    if (w.check == "bi_invariant") {
      bool found = false;
      for (const auto& d : frame_torsion_type(f).defects) {
        if (d.identity == TorsionIdentity::Type20 && d.i == w.basis[0] && d.j == w.basis[1]) {
          found = to_json(d.defect) == w.defect;
        }
      }
      CHECK(found);
    }
  }
  CHECK(saw_parallel);
  CHECK(r.verdicts["flat"] == true);
  CHECK(r.extra["form_criterion"]["agrees"] == true);
}

TEST_CASE("invalid inputs yield reports with failing validations") {
  const LieAlgebra bad = LieAlgebra::from_brackets(3, {{0, 1, {{2, Rational(1)}}},
                                                       {1, 2, {{0, Rational(1)}}},
                                                       {0, 2, {{2, Rational(-1)}}}});
  const AnalysisReport r = analyze(AlgebraDocument{bad, std::nullopt, std::nullopt}, "");
  CHECK_FALSE(r.valid);
  CHECK(r.exit_code() == 2);
  CHECK(r.verdicts["abelian"].is_null());
  CHECK(r.to_json()["validations"][0]["detail"]["jacobi"][0]["defect"] == Json::array({"-1", "0", "0"}));

  const AnalysisReport rj = analyze(AlgebraDocument{kt4_algebra(), RMatrix(RMatrix::Identity(4, 4)), std::nullopt}, "");
  CHECK_FALSE(rj.valid);
  CHECK(rj.validations.back().check == "complex_structure");

  RMatrix neg = RMatrix::Identity(4, 4);
  neg(0, 0) = Rational(-1);
  CHECK_FALSE(analyze(AlgebraDocument{kt4_algebra(), kt4_j().matrix(), neg}, "").valid);
  CHECK_FALSE(analyze(AlgebraDocument{kt4_algebra(), RMatrix(RMatrix::Identity(2, 2)), std::nullopt}, "").valid);

  const auto x1 = Polynomial::variable(0, 4);
  const Frame degenerate(2, {x1 * PolyVectorField::coordinate(0, 4), PolyVectorField::coordinate(1, 4),
                             PolyVectorField::coordinate(2, 4), PolyVectorField::coordinate(3, 4)});
  const AnalysisReport rf = analyze(FrameDocument{degenerate}, "");
  CHECK_FALSE(rf.valid);
  CHECK(rf.validations[0].detail["determinant"] == to_json(x1));
}

TEST_CASE("selective runs") {
  AnalysisOptions opts;
  opts.only = {"abelian", "unimodular"};
  const Json r = analyze(load_example("aff_c").payload, "", opts).to_json();
  CHECK(r["verdicts"].size() == 2);
  for (const auto& w : r["witnesses"]) CHECK((w["check"] == "abelian" || w["check"] == "unimodular"));
  CHECK_FALSE(r.contains("connection_verdicts"));
  opts.only = {"nonsense"};
  CHECK_THROWS_AS(analyze(load_example("aff_c").payload, "", opts), std::invalid_argument);
}

TEST_CASE("reports are deterministic and digest their input") {
  const std::string text = serialize(to_json(load_example("aff_c").payload));
  const std::string a = serialize(analyze_text(text).to_json());
  CHECK(a == serialize(analyze_text(text).to_json()));
  CHECK(analyze_text(text).input_digest == content_digest(text));
  CHECK(content_digest("abc") == "sha256:ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("summary lists verdicts") {
  const std::string s = summarize(analyze(load_example("kt4").payload, ""));
  CHECK(s.find("abelian: true") != std::string::npos);
  CHECK(s.find("torsion_type: Type11") != std::string::npos);
  CHECK(s.find("hermitian: n/a") != std::string::npos);
}
