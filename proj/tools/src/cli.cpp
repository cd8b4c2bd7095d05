// Copyright 2026 The scitm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "scitm_cli/cli.hpp"

#include <exception>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "scitm/crime/mapping.hpp"
#include "scitm/dfd/dot.hpp"
#include "scitm/dfd/parser.hpp"
#include "scitm/dfd/validate.hpp"
#include "scitm/error.hpp"
#include "scitm/report/report.hpp"
#include "scitm/sci/template.hpp"
#include "scitm/stride/rules.hpp"

namespace scitm::cli {

namespace {

/// Raised for unreadable inputs and bad flag values; maps to kExitUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw UsageError("error reading '" + path + "'");
  return buf.str();
}

void write_artifact(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    out.flush();
    return;
  }
  std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
  if (!f) throw UsageError("cannot write '" + out_path + "'");
  f << text;
  if (!f) throw UsageError("error writing '" + out_path + "'");
}

/// Syntax errors are garbled input; every other parse failure is a model error.
int exit_for_parse_error(const Error& e) {
  return e.code() == ErrorCode::SyntaxError ? kExitUsage : kExitInvalid;
}

void print_diagnostics(const std::vector<dfd::Diagnostic>& diags, std::ostream& err) {
  for (const auto& d : diags) err << dfd::format_diagnostic(d) << '\n';
}

int cmd_validate(const std::string& model_path, std::ostream& err) {
  std::string source = read_file(model_path);
  dfd::LayeredModel model;
  try {
    model = dfd::parse_model(source);
  } catch (const Error& e) {
    err << dfd::format_diagnostic(dfd::diagnostic_from_error(e)) << '\n';
    return exit_for_parse_error(e);
  }
  auto diags = dfd::validate(model);
  print_diagnostics(diags, err);
  return dfd::has_errors(diags) ? kExitInvalid : kExitOk;
}

struct AnalyzeOptions {
  std::string model_path;
  std::string rules_path;
  std::string mappings_path;
  std::string out_path;
  std::string format = "json";
  int layer = 0;
};

int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err) {
  std::string source = read_file(opt.model_path);
  dfd::LayeredModel model;
  try {
    model = dfd::parse_model(source);
  } catch (const Error& e) {
    err << dfd::format_diagnostic(dfd::diagnostic_from_error(e)) << '\n';
    return exit_for_parse_error(e);
  }
  auto diags = dfd::validate(model);
  if (dfd::has_errors(diags)) {
    print_diagnostics(diags, err);
    return kExitInvalid;
  }

  if (opt.format == "dot") {
    std::string dot;
    try {
      dot = dfd::render_dot(model, opt.layer);
    } catch (const Error& e) {
      throw UsageError(e.detail());
    }
    write_artifact(dot, opt.out_path, out);
    return kExitOk;
  }

  std::optional<stride::RuleSet> custom_rules;
  std::optional<crime::CrimeMapping> custom_mapping;
  try {
    if (!opt.rules_path.empty()) custom_rules = stride::load_rules(read_file(opt.rules_path));
    if (!opt.mappings_path.empty()) {
      custom_mapping = crime::CrimeMapping::load(read_file(opt.mappings_path));
    }
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const stride::RuleSet& rules = custom_rules ? *custom_rules : stride::default_rules();
  const crime::CrimeMapping& mapping = custom_mapping ? *custom_mapping : crime::default_mapping();
  for (const auto& note : stride::lint_rules(rules)) err << "warning: " << note << '\n';

  report::Report r = report::build_report(model, rules, mapping);
  write_artifact(opt.format == "md" ? report::render_markdown(r) : report::render_json(r),
                 opt.out_path, out);
  return kExitOk;
}

int cmd_template(const std::string& assignment_path, const std::string& out_path,
                 std::ostream& out, std::ostream& err) {
  sci::GroupAssignment assignment;
  try {
    assignment = assignment_path.empty() ? sci::default_assignment()
                                         : sci::load_assignment(read_file(assignment_path));
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::SyntaxError ? kExitUsage : kExitInvalid;
  }
  write_artifact(sci::emit_template(sci::instantiate_template(assignment)), out_path, out);
  return kExitOk;
}

int cmd_map(const std::string& name, const std::string& mappings_path, std::ostream& out,
            std::ostream& err) {
  auto type = stride::parse_threat_type(name);
  if (!type) {
    err << "error: unknown threat type '" << name << "'; valid names:\n";
    for (auto t : stride::kAllThreatTypes) err << "  " << stride::threat_type_slug(t) << '\n';
    return kExitUsage;
  }
  std::optional<crime::CrimeMapping> custom;
  if (!mappings_path.empty()) {
    try {
      custom = crime::CrimeMapping::load(read_file(mappings_path));
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  const crime::CrimeMapping& mapping = custom ? *custom : crime::default_mapping();

  out << stride::threat_type_slug(*type) << ": " << stride::threat_type_title(*type) << " ("
      << stride::category_display_name(stride::parent_category(*type)) << ")\n\n";
  out << "Offences:\n";
  for (auto a : mapping.offences_for(*type)) {
    out << "  Article " << crime::article_number(a) << ": " << crime::article_name(a) << '\n';
  }
  const auto& row = mapping.evidence_for(*type);
  out << "\nEvidence checklist (most volatile first):\n";
  for (auto src : row.sources) {
    out << "  " << crime::source_display_name(src) << ":\n";
    for (const auto& item : row.items_for(src)) out << "    [ ] " << item.name << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Threat modeling as code for smart city infrastructure", "scitm"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "scitm 0.1.0");

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check a model file and print diagnostics");
  validate->add_option("model", validate_path, "Model file")->required();

  AnalyzeOptions analyze_opt;
  auto* analyze = app.add_subcommand("analyze", "Enumerate threats and render a report");
  analyze->add_option("model", analyze_opt.model_path, "Model file")->required();
  analyze->add_option("--rules", analyze_opt.rules_path, "Rule file (default: bundled rules)");
  analyze->add_option("--mappings", analyze_opt.mappings_path,
                      "Crime mapping file (default: bundled tables)");
  analyze->add_option("--format", analyze_opt.format, "Output format")
      ->check(CLI::IsMember({"json", "md", "dot"}));
  analyze->add_option("--out", analyze_opt.out_path, "Output file (default: standard output)");
  analyze->add_option("--layer", analyze_opt.layer, "Layer to render with --format dot")
      ->check(CLI::Range(0, 3));

  std::string assignment_path, template_out;
  auto* templ = app.add_subcommand("template", "Emit the smart city template model");
  templ->add_option("--assignment", assignment_path, "Clause-to-group assignment file");
  templ->add_option("--out", template_out, "Output file (default: standard output)");

  std::string map_type, map_mappings;
  auto* map = app.add_subcommand("map", "Show offences and evidence for a threat type");
  map->add_option("threat-type", map_type, "Kebab-case threat type name")->required();
  map->add_option("--mappings", map_mappings, "Crime mapping file (default: bundled tables)");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("scitm");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(validate_path, err);
    if (*analyze) return cmd_analyze(analyze_opt, out, err);
    if (*templ) return cmd_template(assignment_path, template_out, out, err);
    if (*map) return cmd_map(map_type, map_mappings, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::SyntaxError ? kExitUsage : kExitInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace scitm::cli
