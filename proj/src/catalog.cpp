#include "flatcx/catalog.hpp"

#include "flatcx/analysis.hpp"

namespace flatcx {

namespace {

Polynomial x(std::size_t k) { return Polynomial::variable(k, 4); }
Polynomial constant(long v) { return Polynomial(Rational(v), 4); }

PolyVectorField field(std::vector<Polynomial> comps) { return PolyVectorField(std::move(comps)); }

CatalogEntry make_entry(const std::string& name) {
  if (name == "kt4") {
    return {name, "Heisenberg plus a line, with an abelian complex structure",
            AlgebraDocument{kt4_algebra(), kt4_j().matrix(), std::nullopt},
            {{"verdicts",
              {{"integrable", true}, {"abelian", true}, {"bi_invariant", false}, {"torsion_type", "Type11"},
               {"flat", true}, {"torsion_parallel", true}, {"two_step_solvable", true}, {"unimodular", true},
               {"hermitian", nullptr}}}}};
  }
  if (name == "aff_c") {
    return {name, "realified complex affine algebra with its bi-invariant complex structure",
            AlgebraDocument{aff_c_algebra(), aff_c_j().matrix(), RMatrix(RMatrix::Identity(4, 4))},
            {{"verdicts",
              {{"integrable", true}, {"abelian", false}, {"bi_invariant", true}, {"torsion_type", "Type20"},
               {"flat", true}, {"torsion_parallel", true}, {"two_step_solvable", true}, {"unimodular", false},
               {"hermitian", true}}},
             {"connection_verdicts", {{"chern", {{"flat", true}, {"torsion_type", "Type20"}}}}}}};
  }
  if (name == "abelian4") {
    return {name, "abelian R^4 with the standard complex structure and metric",
            AlgebraDocument{LieAlgebra(4), LinearComplexStructure::standard(4).matrix(),
                            RMatrix(RMatrix::Identity(4, 4))},
            {{"verdicts",
              {{"integrable", true}, {"abelian", true}, {"bi_invariant", true}, {"torsion_type", "Zero"},
               {"flat", true}, {"torsion_parallel", true}, {"two_step_solvable", true}, {"unimodular", true},
               {"hermitian", true}}},
             {"connection_verdicts",
              {{"levi_civita", {{"flat", true}}},
               {"first_canonical", {{"flat", true}, {"torsion_type", "Zero"}}},
               {"chern", {{"flat", true}, {"torsion_type", "Zero"}}}}}}};
  }
  if (name == "r4_nonparallel") {
    return {name, "frame on R^4 with (1,1) torsion that is not parallel",
            FrameDocument{r4_nonparallel_frame()},
            {{"verdicts",
              {{"integrable", true}, {"abelian", true}, {"bi_invariant", false}, {"torsion_type", "Type11"},
               {"flat", true}, {"torsion_parallel", false}, {"two_step_solvable", nullptr},
               {"unimodular", nullptr}, {"hermitian", nullptr}}}}};
  }
  if (name == "so3") {
    return {name, "so(3), a perfect algebra; negative control",
            AlgebraDocument{so3_algebra(), std::nullopt, std::nullopt},
            {{"verdicts",
              {{"integrable", nullptr}, {"abelian", nullptr}, {"bi_invariant", nullptr}, {"torsion_type", nullptr},
               {"flat", true}, {"torsion_parallel", true}, {"two_step_solvable", false}, {"unimodular", true},
               {"hermitian", nullptr}}}}};
  }
  std::string names;
  for (const auto& n : catalog_names()) names += (names.empty() ? "" : ", ") + n;
  throw NotFound("unknown catalog entry \"" + name + "\"; available: " + names);
}

}  // namespace

Json CatalogEntry::to_json() const {
  return {{"name", name}, {"description", description}, {"payload", flatcx::to_json(payload)}, {"expected", expected}};
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {"kt4", "aff_c", "abelian4", "r4_nonparallel", "so3"};
  return names;
}

CatalogEntry load_example(const std::string& name) {
  CatalogEntry entry = make_entry(name);
  const Json report = analyze(entry.payload, content_digest(serialize(to_json(entry.payload)))).to_json();
  if (!report["valid"].get<bool>() || !matches_fragment(report, entry.expected)) {
    throw Error("catalog entry \"" + name + "\" disagrees with a fresh analysis: " + report["verdicts"].dump());
  }
  return entry;
}

bool matches_fragment(const Json& report, const Json& fragment) {
  if (!fragment.is_object()) return report == fragment;
  if (!report.is_object()) return false;
  for (const auto& [key, value] : fragment.items()) {
    if (!report.contains(key) || !matches_fragment(report[key], value)) return false;
  }
  return true;
}

LieAlgebra kt4_algebra() { return LieAlgebra::from_brackets(4, {{0, 1, {{2, Rational(1)}}}}); }

LieAlgebra aff_c_algebra() {
  return LieAlgebra::from_brackets(4, {{0, 2, {{2, Rational(1)}}},
                                       {0, 3, {{3, Rational(1)}}},
                                       {1, 2, {{3, Rational(1)}}},
                                       {1, 3, {{2, Rational(-1)}}}});
}

LieAlgebra so3_algebra() {
  return LieAlgebra::from_brackets(3, {{0, 1, {{2, Rational(1)}}},
                                       {1, 2, {{0, Rational(1)}}},
                                       {0, 2, {{1, Rational(-1)}}}});
}

LinearComplexStructure kt4_j() { return LinearComplexStructure::from_pairs(4, {{0, 1}, {2, 3}}); }
LinearComplexStructure aff_c_j() { return LinearComplexStructure::from_pairs(4, {{0, 1}, {2, 3}}); }

Frame kt4_frame() {
  const auto e1 = field({constant(1), constant(0), constant(0), constant(0)});
  const auto e2 = field({constant(0), constant(1), x(0), constant(0)});
  const auto e3 = PolyVectorField::coordinate(2, 4);
  const auto e4 = PolyVectorField::coordinate(3, 4);
  return Frame(2, {e1, e3, e2, e4});
}

Frame aff_c_frame() {
  const auto e1 = field({constant(1), constant(0), -x(2), -x(3)});
  const auto e2 = field({constant(0), constant(1), x(3), -x(2)});
  const auto e3 = PolyVectorField::coordinate(2, 4);
  const auto e4 = PolyVectorField::coordinate(3, 4);
  return Frame(2, {e1, e3, e2, e4});
}

Frame coordinate_frame(std::size_t half_dim) {
  std::vector<PolyVectorField> fields;
  for (std::size_t k = 0; k < 2 * half_dim; ++k) fields.push_back(PolyVectorField::coordinate(k, 2 * half_dim));
  return Frame(half_dim, std::move(fields));
}

Frame r4_nonparallel_frame() {
  const auto d1 = PolyVectorField::coordinate(0, 4);
  const auto d2 = PolyVectorField::coordinate(1, 4);
  const auto d3 = PolyVectorField::coordinate(2, 4);
  const auto last = field({-(x(2) * x(2)), constant(0), constant(0), constant(1)});
  return Frame(2, {d1, d3, d2, last});
}

}  // namespace flatcx
