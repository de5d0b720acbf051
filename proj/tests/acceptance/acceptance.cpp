// One line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "flatcx/analysis.hpp"
#include "flatcx/catalog.hpp"
#include "flatcx/cli.hpp"
#include "support/families.hpp"
#include "support/oracles.hpp"

using namespace flatcx;
using namespace flatcx::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      note = what;
    }
  }
};

std::vector<Instance> catalog_structures() {
  std::vector<Instance> out;
  for (const auto& name : catalog_names()) {
    const CatalogEntry e = load_example(name);
    if (const auto* a = std::get_if<AlgebraDocument>(&e.payload); a && a->j) {
      out.push_back({name, a->algebra, LinearComplexStructure(*a->j)});
    }
  }
  return out;
}

// Catalog structures, 50 random J per pool algebra, and each of those
// rewritten in a random basis.
std::vector<Instance> equivalence_harness() {
  std::vector<Instance> out = catalog_structures();
  std::uint64_t seed = 11;
  for (const auto& entry : pool4(7)) {
    for (auto& inst : random_structures(entry, 50, seed++)) out.push_back(std::move(inst));
  }
  Sampler s(99);
  const std::size_t base = out.size();
  for (std::size_t k = 0; k < base; k += 5) out.push_back(rebase(out[k], s));
  return out;
}

std::string counts(std::size_t pos, std::size_t neg) {
  return std::to_string(pos) + " positive, " + std::to_string(neg) + " negative";
}

Outcome identity_suite() {
  Outcome o;
  std::size_t checked = 0;
  for (const Index dim : {2, 4, 6}) {
    Sampler s(1000 + static_cast<std::uint64_t>(dim));
    for (int k = 0; k < 100; ++k) {
      const LieAlgebra g = random_algebra(dim, s).validated();
      const Connection c(g, random_gamma(dim, s));
      const auto j = random_complex_structure(dim, static_cast<std::uint64_t>(dim * 1000 + k));
      o.require(nijen1_residual(c, j).is_zero(), "nonzero residual in dim " + std::to_string(dim));
      ++checked;
    }
  }
  o.note = o.pass ? std::to_string(checked) + " random (gamma, J) pairs" : o.note;
  return o;
}

Outcome abelian_equivalence(const std::vector<Instance>& harness) {
  Outcome o;
  std::size_t pos = 0, neg = 0;
  for (const auto& in : harness) {
    const LieAlgebra g = in.algebra.validated();
    const bool abelian = classify_structure(g, in.j).abelian;
    const auto t = torsion_type(torsion(minus_connection(g)), in.j.matrix());
    o.require(t.satisfies(TorsionIdentity::Type11) == abelian, in.label);
    if (!g.is_abelian()) o.require((t.type == TorsionType::Type11) == abelian, in.label + " (verdict)");
    (abelian ? pos : neg)++;
  }
  o.require(pos > 0 && neg > 0, "one side empty");
  if (o.pass) o.note = counts(pos, neg);
  return o;
}

Outcome bi_invariant_equivalence(const std::vector<Instance>& harness) {
  Outcome o;
  std::size_t pos = 0, neg = 0;
  for (const auto& in : harness) {
    const LieAlgebra g = in.algebra.validated();
    const bool bi = classify_structure(g, in.j).bi_invariant;
    const auto t = torsion_type(torsion(minus_connection(g)), in.j.matrix());
    o.require(t.satisfies(TorsionIdentity::Type20) == bi, in.label);
    if (!g.is_abelian()) o.require((t.type == TorsionType::Type20) == bi, in.label + " (verdict)");
    (bi ? pos : neg)++;
  }
  const LieAlgebra aff = aff_c_algebra().validated();
  const LieAlgebra kt = kt4_algebra().validated();
  o.require(classify_structure(aff, aff_c_j()).bi_invariant &&
                torsion_type(torsion(minus_connection(aff)), aff_c_j().matrix()).type == TorsionType::Type20,
            "aff_c with J_bi is not a positive instance");
  o.require(!classify_structure(kt, kt4_j()).bi_invariant &&
                torsion_type(torsion(minus_connection(kt)), kt4_j().matrix()).type != TorsionType::Type20,
            "kt4 with J_ab is not a negative instance");
  o.require(pos > 0 && neg > 0, "one side empty");
  if (o.pass) o.note = counts(pos, neg);
  return o;
}

Outcome chern_battery() {
  Outcome o;
  const std::vector<std::pair<LieAlgebra, LinearComplexStructure>> cases = {
      {kt4_algebra(), kt4_j()}, {aff_c_algebra(), aff_c_j()}, {LieAlgebra(4), LinearComplexStructure::standard(4)}};
  std::size_t runs = 0;
  for (const auto& [algebra, j] : cases) {
    const LieAlgebra g = algebra.validated();
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const InnerMetric metric = random_hermitian_metric(j, seed);
      const Connection ch = chern(g, metric, j);
      const auto tch = torsion_type(torsion(ch), j.matrix());
      o.require(covariant_derivative_g(ch, metric).is_zero(), "chern: nabla G != 0");
      o.require(covariant_derivative_J(ch, j).is_zero(), "chern: nabla J != 0");
      o.require(tch.satisfies(TorsionIdentity::Type20), "chern: torsion not (2,0)");
      o.require(tch.satisfies(TorsionIdentity::Type2002), "chern: torsion has a (1,1) part");
      const Connection fc = first_canonical(g, metric, j);
      const auto tfc = torsion_type(torsion(fc), j.matrix());
      o.require(covariant_derivative_g(fc, metric).is_zero(), "first canonical: nabla G != 0");
      o.require(covariant_derivative_J(fc, j).is_zero(), "first canonical: nabla J != 0");
      o.require(tfc.satisfies(TorsionIdentity::Type11), "first canonical: torsion not (1,1)");
      ++runs;
    }
  }
  if (o.pass) o.note = std::to_string(runs) + " metrics";
  return o;
}

Outcome chern_flat_instance() {
  Outcome o;
  const LieAlgebra g = aff_c_algebra().validated();
  const InnerMetric metric = InnerMetric::identity(4);
  const Connection ch = chern(g, metric, aff_c_j());
  o.require(ch.gamma().is_zero(), "gamma is not identically zero");
  o.require(curvature(ch).is_zero(), "curvature is not identically zero");
  o.require(ch == minus_connection(g), "differs from the (-)-connection");
  const ChernSystemSolution sol = solve_chern_conditions(g, metric, aff_c_j());
  o.require(sol.consistent && sol.nullity == 0 && sol.unique && *sol.unique == ch,
            "linear-system solve disagrees or is not unique");
  if (o.pass) o.note = "gamma = 0, R = 0, unique";
  return o;
}

Outcome solvability_equivalence() {
  Outcome o;
  std::vector<std::pair<std::string, LieAlgebra>> algebras;
  for (const auto& name : catalog_names()) {
    const CatalogEntry e = load_example(name);
    if (const auto* a = std::get_if<AlgebraDocument>(&e.payload)) algebras.emplace_back(name, a->algebra);
  }
  Sampler s(2024);
  for (int k = 0; k < 50; ++k) {
    const auto pool = pool4(static_cast<std::uint64_t>(k));
    const auto& pick = pool[static_cast<std::size_t>(k) % pool.size()];
    algebras.emplace_back(pick.name + "#" + std::to_string(k), change_basis(pick.algebra, s.invertible_matrix(4, 2)));
  }
  std::size_t pos = 0, neg = 0;
  for (const auto& [label, algebra] : algebras) {
    const LieAlgebra g = algebra.validated();
    const bool two_step = is_two_step_solvable(g);
    o.require(t2_tensor(minus_connection(g)).is_t2_zero == two_step, label);
    o.require(oracle::double_brackets_vanish(g) == two_step, label + " (brute force)");
    (two_step ? pos : neg)++;
  }
  o.require(!is_two_step_solvable(so3_algebra().validated()), "so3 reported 2-step solvable");
  o.require(pos > 0 && neg > 0, "one side empty");
  if (o.pass) o.note = std::to_string(algebras.size()) + " algebras, " + counts(pos, neg);
  return o;
}

Outcome abelian_implies_two_step(const std::vector<Instance>& harness) {
  Outcome o;
  std::size_t abelian = 0;
  for (const auto& in : harness) {
    const LieAlgebra g = in.algebra.validated();
    if (!classify_structure(g, in.j).abelian) continue;
    ++abelian;
    o.require(is_two_step_solvable(g), in.label);
  }
  o.require(abelian > 0, "no abelian instances generated");
  if (o.pass) o.note = std::to_string(abelian) + " abelian instances";
  return o;
}

Outcome frame_example() {
  Outcome o;
  const CatalogEntry e = load_example("r4_nonparallel");
  const Frame f = std::get<FrameDocument>(e.payload).frame.validated();
  o.require(frame_torsion_type(f).type == TorsionType::Type11, "torsion type is not (1,1)");
  const TorsionParallelism tp = is_torsion_parallel(f);
  const Polynomial two_x3 = Rational(2) * Polynomial::variable(2, 4);
  o.require(!tp.parallel, "torsion reported parallel");
  o.require(tp.component == two_x3 || tp.component == -two_x3, "witness is " + tp.component.str());
  for (std::size_t a = 0; a < f.dim(); ++a) {
    for (std::size_t b = 0; b < f.dim(); ++b) o.require(frame_nijenhuis(f, a, b).is_zero(), "nonzero Nijenhuis");
  }
  bool closed = true;
  try {
    export_to_lie_algebra(f);
  } catch (const NotClosed&) {
    closed = false;
  }
  o.require(!closed, "export closed into a Lie algebra");
  if (o.pass) o.note = "witness " + tp.component.str();
  return o;
}

Outcome cross_module() {
  Outcome o;
  const auto verdicts = [](const Document& d) { return analyze(d, "").to_json()["verdicts"]; };
  const Json from_algebra = verdicts(AlgebraDocument{kt4_algebra(), kt4_j().matrix(), std::nullopt});
  const Json from_frame = verdicts(FrameDocument{kt4_frame()});
  o.require(from_algebra == from_frame, "kt4: " + from_algebra.dump() + " vs " + from_frame.dump());
  const Json aff_algebra = verdicts(AlgebraDocument{aff_c_algebra(), aff_c_j().matrix(), std::nullopt});
  const Json aff_frame = verdicts(FrameDocument{aff_c_frame()});
  o.require(aff_algebra == aff_frame, "aff_c: " + aff_algebra.dump() + " vs " + aff_frame.dump());
  if (o.pass) o.note = "kt4 and aff_c verdicts identical";
  return o;
}

Outcome form_duality() {
  Outcome o;
  std::vector<std::pair<std::string, Frame>> frames;
  for (const auto& name : catalog_names()) {
    const CatalogEntry e = load_example(name);
    if (const auto* f = std::get_if<FrameDocument>(&e.payload)) frames.emplace_back(name, f->frame);
  }
  frames.emplace_back("kt4_frame", kt4_frame());
  frames.emplace_back("aff_c_frame", aff_c_frame());
  frames.emplace_back("coordinate_frame", coordinate_frame(2));
  for (const auto& [label, frame] : frames) {
    const Frame f = frame.validated();
    const FormCriterion fc = verify_form_criterion(f);
    const auto tt = frame_torsion_type(f);
    o.require(fc.agrees, label);
    o.require(fc.all_11 == tt.satisfies(TorsionIdentity::Type11), label + " (1,1)");
    o.require(fc.all_20 == tt.satisfies(TorsionIdentity::Type20), label + " (2,0)");
  }
  if (o.pass) o.note = std::to_string(frames.size()) + " frames";
  return o;
}

Outcome unimodularity() {
  Outcome o;
  o.require(!is_unimodular(aff_c_algebra().validated()), "aff_c reported unimodular");
  o.require(is_unimodular(kt4_algebra().validated()), "kt4 reported not unimodular");
  return o;
}

int cli(const std::vector<std::string>& args, std::string& out, std::string& err) {
  std::ostringstream o, e;
  const int code = run_cli(args, o, e);
  out = o.str();
  err = e.str();
  return code;
}

Outcome cli_contract() {
  Outcome o;
  std::string out1, out2, err;
  o.require(cli({"analyze", "catalog:kt4"}, out1, err) == 0, "analyze catalog:kt4 failed: " + err);
  o.require(cli({"analyze", "catalog:kt4"}, out2, err) == 0 && out1 == out2, "report not deterministic");
  const Json report = Json::parse(out1);
  o.require(report["verdicts"]["abelian"] == true && report["verdicts"]["torsion_type"] == "Type11" &&
                report["verdicts"]["two_step_solvable"] == true,
            "unexpected verdicts " + report["verdicts"].dump());

  const auto path = std::filesystem::temp_directory_path() / "flatcx_acceptance_malformed.json";
  {
    std::ofstream f(path);
    f << "{\"dim\": 4,\n \"brackets\": [ {\"i\": 0 \"j\": 1} ]}\n";
  }
  std::string out, perr;
  const int code = cli({"analyze", path.string()}, out, perr);
  std::filesystem::remove(path);
  o.require(code == 2, "malformed input exit code " + std::to_string(code));
  o.require(perr.find("line 2, column") != std::string::npos, "no parse location in: " + perr);

  for (const auto& name : catalog_names()) {
    const CatalogEntry e = load_example(name);
    const std::string text = serialize(to_json(e.payload));
    const Document back = parse_document(text);
    o.require(back == e.payload, name + ": parse(serialize(v)) != v");
    o.require(serialize(to_json(back)) == text, name + ": serialization not byte-identical");
  }
  if (o.pass) o.note = "deterministic, exit 2 with location, round-trip exact";
  return o;
}

}  // namespace

int main() {
  const std::vector<Instance> harness = equivalence_harness();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"identity suite", identity_suite},
      {"abelian equivalence", [&] { return abelian_equivalence(harness); }},
      {"bi-invariant equivalence", [&] { return bi_invariant_equivalence(harness); }},
      {"chern battery", chern_battery},
      {"chern-flat instance", chern_flat_instance},
      {"solvability equivalence", solvability_equivalence},
      {"abelian implies 2-step", [&] { return abelian_implies_two_step(harness); }},
      {"frame example", frame_example},
      {"cross-module consistency", cross_module},
      {"form-criterion duality", form_duality},
      {"unimodularity", unimodularity},
      {"cli contract", cli_contract},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    if (std::getenv("ACCEPTANCE_TIMING")) {
      std::cerr << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << "s\n";
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (k + 1) << ". " << criteria[k].first;
    if (!o.note.empty()) std::cout << " (" << o.note << ")";
    std::cout << "\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
