#include "flatcx/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "flatcx/analysis.hpp"
#include "flatcx/catalog.hpp"

namespace flatcx {

namespace {

constexpr int kInvalid = 2;
constexpr int kInternal = 1;

int cmd_analyze(const std::string& target, const AnalysisOptions& options, bool pretty, std::ostream& out,
                std::ostream& err) {
  AnalysisReport report;
  const std::string prefix = "catalog:";
  if (target.rfind(prefix, 0) == 0) {
    const CatalogEntry entry = load_example(target.substr(prefix.size()));
    report = analyze(entry.payload, content_digest(serialize(to_json(entry.payload))), options);
  } else {
    std::ifstream in(target, std::ios::binary);
    if (!in) {
      err << "error: cannot read " << target << "\n";
      return kInvalid;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    report = analyze_text(buf.str(), options);
  }
  out << serialize(report.to_json());
  if (pretty) err << summarize(report);
  return report.exit_code();
}

int cmd_catalog_list(std::ostream& out) {
  out << serialize(Json(catalog_names()));
  return 0;
}

int cmd_catalog_show(const std::string& name, std::ostream& out) {
  out << serialize(load_example(name).to_json());
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of left-invariant complex structures and their connections", "flatcx"};
  app.require_subcommand(1);

  std::string target;
  std::vector<std::string> only;
  bool emit = false;
  bool pretty = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a JSON document or catalog:NAME");
  analyze_cmd->add_option("input", target, "input file or catalog:NAME")->required();
  analyze_cmd->add_option("--only", only, "comma-separated verdicts to compute")->delimiter(',');
  analyze_cmd->add_flag("--emit-connections", emit, "include connection coefficients");
  analyze_cmd->add_flag("--pretty", pretty, "print a summary to standard error");

  std::string show_name;
  auto* catalog_cmd = app.add_subcommand("catalog", "List or show built-in examples");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "List entry names");
  auto* show_cmd = catalog_cmd->add_subcommand("show", "Show an entry");
  show_cmd->add_option("name", show_name)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kInvalid;
  }

  try {
    if (*analyze_cmd) {
      AnalysisOptions options;
      options.only.insert(only.begin(), only.end());
      options.emit_connections = emit;
      return cmd_analyze(target, options, pretty, out, err);
    }
    if (*list_cmd) return cmd_catalog_list(out);
    if (*show_cmd) return cmd_catalog_show(show_name, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kInvalid;
  } catch (const NotFound& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}

}  // namespace flatcx
