#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "flatcx/json_io.hpp"

namespace flatcx {

// Verdict keys, in report order. "connections" additionally selects the
// metric connection battery.
const std::vector<std::string>& verdict_names();

struct AnalysisOptions {
  // Restricts the run to these verdicts; empty means everything.
  std::set<std::string> only;
  bool emit_connections = false;
};

// A failed check at a basis tuple; `defect` is the exact nonzero residual
// (a vector of rationals, or of polynomials for frames).
struct ReportWitness {
  std::string check;
  std::vector<Index> basis;
  Json defect;
};

struct ValidationEntry {
  std::string check;
  bool passed = false;
  Json detail;
};

// Verdict values are true/false, a torsion type name, or null when the
// check does not apply to the input (e.g. no J, no metric).
struct AnalysisReport {
  std::string input_digest;
  std::string kind;  // "lie_algebra" or "frame"
  bool valid = false;
  std::vector<ValidationEntry> validations;
  Json verdicts = Json::object();
  std::vector<ReportWitness> witnesses;
  Json connection_verdicts;  // null unless a metric was analyzed
  Json connection_outputs;   // null unless emitted
  Json extra;                // frame-only details

  Json to_json() const;
  // 0 when the analysis ran, 2 when the input failed validation.
  int exit_code() const { return valid ? 0 : 2; }
};

// "sha256:<hex>" of the bytes.
std::string content_digest(std::string_view bytes);

// Throws std::invalid_argument on an unknown --only name.
AnalysisReport analyze(const Document& doc, const std::string& input_digest, const AnalysisOptions& options = {});

// Parses, digests the raw bytes, and analyzes. Throws ParseError.
AnalysisReport analyze_text(std::string_view text, const AnalysisOptions& options = {});

// Short human summary, one line per verdict.
std::string summarize(const AnalysisReport& report);

}  // namespace flatcx
