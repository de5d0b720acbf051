#include "flatcx/analysis.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>

namespace flatcx {

namespace {

Json witness_json(const ReportWitness& w) {
  return {{"check", w.check}, {"basis", w.basis}, {"defect", w.defect}};
}

class Run {
 public:
  Run(AnalysisReport& report, const AnalysisOptions& options) : report_(report), options_(options) {
    for (const auto& name : options.only) {
      if (name != "connections" && std::find(verdict_names().begin(), verdict_names().end(), name) ==
                                       verdict_names().end()) {
        throw std::invalid_argument("unknown check \"" + name + "\"");
      }
    }
  }

  bool want(const std::string& name) const { return options_.only.empty() || options_.only.count(name) > 0; }

  void set(const std::string& name, Json value) {
    if (want(name)) report_.verdicts[name] = std::move(value);
  }

  void witness(const std::string& check, std::vector<Index> basis, Json defect) {
    if (want(check)) report_.witnesses.push_back({check, std::move(basis), std::move(defect)});
  }

  void null_all() {
    for (const auto& name : verdict_names()) set(name, nullptr);
  }

  AnalysisReport& report() { return report_; }
  const AnalysisOptions& options() const { return options_; }

 private:
  AnalysisReport& report_;
  const AnalysisOptions& options_;
};

Json scalar_defect(const Rational& x) { return Json::array({to_json(x)}); }

void algebra_invariants(Run& run, const LieAlgebra& g) {
  if (run.want("two_step_solvable")) {
    const bool two_step = is_two_step_solvable(g);
    run.set("two_step_solvable", two_step);
    if (!two_step) {
      const T2Tensor t2 = t2_tensor(minus_connection(g));
      if (t2.witness) {
        const auto& w = *t2.witness;
        run.witness("two_step_solvable", {w[0], w[1], w[2], w[3]}, to_json(t2.witness_value));
      }
    }
  }
  if (run.want("unimodular")) {
    const bool unimodular = is_unimodular(g);
    run.set("unimodular", unimodular);
    for (Index i = 0; i < g.dim() && !unimodular; ++i) {
      const Rational tr = ad_trace(g, i);
      if (!tr.is_zero()) {
        run.witness("unimodular", {i}, scalar_defect(tr));
        break;
      }
    }
  }
}

void analyze_algebra(Run& run, const AlgebraDocument& doc) {
  AnalysisReport& r = run.report();
  r.kind = "lie_algebra";
  const Index n = doc.algebra.dim();

  const LieValidationReport lv = validate(doc.algebra);
  {
    Json antisym = Json::array();
    for (const auto& f : lv.antisymmetry) antisym.push_back({{"basis", {f.i, f.j}}, {"defect", to_json(f.defect)}});
    Json jacobi = Json::array();
    for (const auto& f : lv.jacobi) {
      jacobi.push_back({{"basis", {f.i, f.j, f.k}}, {"defect", to_json(f.jacobiator)}});
    }
    r.validations.push_back({"lie_algebra", lv.valid, {{"antisymmetry", antisym}, {"jacobi", jacobi}}});
  }

  std::optional<LinearComplexStructure> j;
  if (doc.j) {
    try {
      if (doc.j->rows() != n || doc.j->cols() != n) throw ShapeError("J must be dim x dim");
      j = LinearComplexStructure(*doc.j);
      r.validations.push_back({"complex_structure", true, Json::object()});
    } catch (const Error& e) {
      r.validations.push_back({"complex_structure", false, {{"reason", e.what()}}});
    }
  }
  std::optional<InnerMetric> metric;
  if (doc.metric) {
    try {
      if (doc.metric->rows() != n || doc.metric->cols() != n) throw ShapeError("metric must be dim x dim");
      metric = InnerMetric(*doc.metric);
      r.validations.push_back({"metric", true, Json::object()});
    } catch (const Error& e) {
      r.validations.push_back({"metric", false, {{"reason", e.what()}}});
    }
  }

  r.valid = std::all_of(r.validations.begin(), r.validations.end(), [](const auto& v) { return v.passed; });
  if (!r.valid) {
    run.null_all();
    return;
  }

  const LieAlgebra g = doc.algebra.validated();
  const Connection minus = minus_connection(g);
  const Tensor12 t = torsion(minus);

  std::optional<ClassificationVerdict> cls;
  if (j) {
    cls = classify_structure(g, *j);
    run.set("integrable", cls->integrable);
    run.set("abelian", cls->abelian);
    run.set("bi_invariant", cls->bi_invariant);
    for (const auto& w : cls->witnesses) run.witness(w.check, {w.i, w.j}, to_json(w.defect));
    run.set("torsion_type", to_string(torsion_type(t, j->matrix()).type));
  } else {
    run.set("integrable", nullptr);
    run.set("abelian", nullptr);
    run.set("bi_invariant", nullptr);
    run.set("torsion_type", nullptr);
  }

  if (run.want("flat")) {
    const Tensor13 curv = curvature(minus);
    run.set("flat", curv.is_zero());
    if (const auto w = curv.first_nonzero()) {
      run.witness("flat", {(*w)[0], (*w)[1], (*w)[2]}, to_json(RVector(curv.matrix((*w)[0], (*w)[1]).col((*w)[2]))));
    }
  }
  if (run.want("torsion_parallel")) {
    const Tensor13 dt = covariant_derivative_torsion(minus);
    run.set("torsion_parallel", dt.is_zero());
    if (const auto w = dt.first_nonzero()) {
      run.witness("torsion_parallel", {(*w)[0], (*w)[1], (*w)[2]},
                  to_json(RVector(dt.matrix((*w)[0], (*w)[1]).col((*w)[2]))));
    }
  }
  algebra_invariants(run, g);

  bool hermitian = false;
  if (j && metric) {
    hermitian = is_hermitian(*metric, *j);
    run.set("hermitian", hermitian);
    if (!hermitian) {
      const RMatrix d = j->matrix().transpose() * metric->matrix() * j->matrix() - metric->matrix();
      for (Index a = 0; a < n; ++a) {
        bool found = false;
        for (Index b = 0; b < n && !found; ++b) {
          if (!d(a, b).is_zero()) {
            run.witness("hermitian", {a, b}, scalar_defect(d(a, b)));
            found = true;
          }
        }
        if (found) break;
      }
    }
  } else {
    run.set("hermitian", nullptr);
  }

  Json outputs = Json::object();
  if (run.options().emit_connections) outputs["minus"] = to_json(minus);

  if (metric && run.want("connections")) {
    Json cv = Json::object();
    const Connection lc = levi_civita(g, *metric);
    cv["levi_civita"] = {{"torsion_free", torsion(lc).is_zero()},
                         {"metric", covariant_derivative_g(lc, *metric).is_zero()},
                         {"flat", is_flat(lc)}};
    if (run.options().emit_connections) outputs["levi_civita"] = to_json(lc);

    cv["first_canonical"] = nullptr;
    cv["chern"] = nullptr;
    if (j && hermitian) {
      const Connection fc = first_canonical(g, *metric, *j);
      cv["first_canonical"] = {{"metric", covariant_derivative_g(fc, *metric).is_zero()},
                               {"complex", covariant_derivative_J(fc, *j).is_zero()},
                               {"torsion_type", to_string(torsion_type(torsion(fc), j->matrix()).type)},
                               {"flat", is_flat(fc)}};
      if (run.options().emit_connections) outputs["first_canonical"] = to_json(fc);
      if (cls->integrable) {
        const Connection ch = chern(g, *metric, *j);
        const auto tc = torsion_type(torsion(ch), j->matrix());
        cv["chern"] = {{"metric", covariant_derivative_g(ch, *metric).is_zero()},
                       {"complex", covariant_derivative_J(ch, *j).is_zero()},
                       {"torsion_type", to_string(tc.type)},
                       {"torsion_11_part_zero", tc.type2002},
                       {"flat", is_flat(ch)}};
        if (run.options().emit_connections) outputs["chern"] = to_json(ch);
      }
    }
    r.connection_verdicts = std::move(cv);
  }
  if (run.options().emit_connections) r.connection_outputs = std::move(outputs);
}

void analyze_frame(Run& run, const FrameDocument& doc) {
  AnalysisReport& r = run.report();
  r.kind = "frame";
  const FrameValidation fv = validate_frame(doc.frame);
  Json detail = {{"determinant", to_json(fv.determinant)}};
  if (!fv.reason.empty()) detail["reason"] = fv.reason;
  if (fv.sampled_zero_found) detail["sampled_zero_found"] = *fv.sampled_zero_found;
  r.validations.push_back({"frame", fv.valid, std::move(detail)});
  r.valid = fv.valid;
  if (!r.valid) {
    run.null_all();
    return;
  }

  const Frame f = doc.frame.validated();
  const std::size_t m = f.dim();

  if (run.want("integrable")) {
    bool integrable = true;
    for (std::size_t a = 0; a < m && integrable; ++a) {
      for (std::size_t b = a + 1; b < m && integrable; ++b) {
        const PolyVectorField nab = frame_nijenhuis(f, a, b);
        if (!nab.is_zero()) {
          integrable = false;
          run.witness("integrable", {static_cast<Index>(a), static_cast<Index>(b)}, to_json(nab.as_vector()));
        }
      }
    }
    run.set("integrable", integrable);
  }

  const auto tc = frame_torsion_type(f);
  run.set("abelian", tc.type11);
  run.set("bi_invariant", tc.type20);
  for (const auto& d : tc.defects) {
    if (d.identity == TorsionIdentity::Type11) run.witness("abelian", {d.i, d.j}, to_json(d.defect));
    if (d.identity == TorsionIdentity::Type20) run.witness("bi_invariant", {d.i, d.j}, to_json(d.defect));
  }
  run.set("torsion_type", to_string(tc.type));
  // The frame is parallel for its own connection.
  run.set("flat", true);

  const TorsionParallelism tp = is_torsion_parallel(f);
  run.set("torsion_parallel", tp.parallel);
  if (tp.witness) {
    const auto& w = *tp.witness;
    run.witness("torsion_parallel",
                {static_cast<Index>(w[0]), static_cast<Index>(w[1]), static_cast<Index>(w[2])},
                Json::array({to_json(tp.component)}));
  }

  Json extra = Json::object();
  if (tp.parallel) {
    const LieAlgebra h = export_to_lie_algebra(f);
    algebra_invariants(run, h);
    extra["exported_algebra"] = to_json(h);
  } else {
    run.set("two_step_solvable", nullptr);
    run.set("unimodular", nullptr);
  }
  run.set("hermitian", nullptr);

  const FormCriterion fc = verify_form_criterion(f);
  Json types = Json::array();
  for (const auto t : fc.types) types.push_back(to_string(t));
  extra["form_criterion"] = {{"types", types}, {"agrees", fc.agrees}};
  r.extra = std::move(extra);
}

}  // namespace

const std::vector<std::string>& verdict_names() {
  static const std::vector<std::string> names = {"integrable",       "abelian",           "bi_invariant",
                                                 "torsion_type",     "flat",              "torsion_parallel",
                                                 "two_step_solvable", "unimodular",       "hermitian"};
  return names;
}

Json AnalysisReport::to_json() const {
  Json validations_json = Json::array();
  for (const auto& v : validations) {
    validations_json.push_back({{"check", v.check}, {"passed", v.passed}, {"detail", v.detail}});
  }
  Json witnesses_json = Json::array();
  for (const auto& w : witnesses) witnesses_json.push_back(witness_json(w));
  Json out = {{"input_digest", input_digest},
              {"kind", kind},
              {"valid", valid},
              {"validations", validations_json},
              {"verdicts", verdicts},
              {"witnesses", witnesses_json}};
  if (!connection_verdicts.is_null()) out["connection_verdicts"] = connection_verdicts;
  if (!connection_outputs.is_null()) out["connection_outputs"] = connection_outputs;
  if (!extra.is_null()) out["frame"] = extra;
  return out;
}

std::string content_digest(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 failed");
  }
  std::ostringstream os;
  os << "sha256:" << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < len; ++i) os << std::setw(2) << static_cast<int>(md[i]);
  return os.str();
}

AnalysisReport analyze(const Document& doc, const std::string& input_digest, const AnalysisOptions& options) {
  AnalysisReport report;
  report.input_digest = input_digest;
  Run run(report, options);
  if (const auto* a = std::get_if<AlgebraDocument>(&doc)) {
    analyze_algebra(run, *a);
  } else {
    analyze_frame(run, std::get<FrameDocument>(doc));
  }
  return report;
}

AnalysisReport analyze_text(std::string_view text, const AnalysisOptions& options) {
  return analyze(parse_document(text), content_digest(text), options);
}

std::string summarize(const AnalysisReport& report) {
  std::ostringstream os;
  os << report.kind << " " << (report.valid ? "valid" : "INVALID") << "\n";
  for (const auto& v : report.validations) {
    if (!v.passed) os << "  validation failed: " << v.check << "\n";
  }
  for (const auto& name : verdict_names()) {
    if (!report.verdicts.contains(name)) continue;
    const Json& v = report.verdicts[name];
    os << "  " << name << ": " << (v.is_null() ? "n/a" : v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
  if (!report.witnesses.empty()) os << "  witnesses: " << report.witnesses.size() << "\n";
  return os.str();
}

}  // namespace flatcx
