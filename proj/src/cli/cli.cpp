#include "lnd/cli/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "lnd/cases/identity_suite.hpp"
#include "lnd/cases/printed_forms.hpp"
#include "lnd/parser/printer.hpp"
#include "lnd/parser/source_form.hpp"

#ifndef LND_DEFAULT_DATA_DIR
#define LND_DEFAULT_DATA_DIR "data"
#endif

namespace lnd::cli {

namespace {

using nlohmann::ordered_json;

struct Config {
  std::string format = "text";
  std::string data_dir = LND_DEFAULT_DATA_DIR;
  bool timings = false;
  unsigned cap = kDefaultNilpotencyCap;
  std::string variable;
  std::string element;
  unsigned times = 1;
  bool expanded = false;
  std::vector<std::string> paths;
  std::string vars = "tuxyz";
  std::string provenance;
  std::string target;
};

ordered_json terms_to_json(const Polynomial& p) {
  ordered_json arr = ordered_json::array();
  for (const Term& t : p.terms()) {
    ordered_json item;
    item["monomial"] = print_monomial(p.varset(), t.mono);
    item["coefficient"] = t.coeff.to_string();
    arr.push_back(std::move(item));
  }
  return arr;
}

void emit_polynomial(const Config& cfg, const Polynomial& p, std::ostream& out) {
  if (cfg.format == "json")
    out << terms_to_json(p).dump(2) << '\n';
  else
    out << print_polynomial(p) << '\n';
}

std::optional<Polynomial> parse_element(const std::string& text, std::ostream& err) {
  try {
    return parse_polynomial(text, VarSet::standard());
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return std::nullopt;
  }
}

int cmd_verify(const Config& cfg, std::ostream& out, std::ostream& err) {
  if (!std::filesystem::is_directory(cfg.data_dir)) {
    err << "error: data directory '" << cfg.data_dir << "' not found\n";
    return kUserError;
  }
  PaperInstance inst = build_paper_instance();
  VerificationReport report = run_identity_suite(inst);
  report.errata = compare_printed_forms(inst, load_source_dir(cfg.data_dir));
  if (cfg.format == "json")
    out << report_to_json(report, cfg.timings).dump(2) << '\n';
  else
    out << report_to_text(report, cfg.timings);
  if (!report.all_passed()) {
    err << "error: " << report.summary().fail << " identity check(s) failed\n";
    return kInternalError;
  }
  return kSuccess;
}

int cmd_phi(const Config& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.variable.size() != 1 || !VarSet::standard().contains(cfg.variable[0])) {
    err << "error: unknown variable '" << cfg.variable << "' (expected one of t, u, x, y, z)\n";
    return kUserError;
  }
  const char v = cfg.variable[0];
  PaperInstance inst = build_paper_instance();
  const Polynomial p = cfg.expanded
                           ? inst.phi->image(v)
                           : dixmier_closed_form(inst.D, Polynomial::variable(VarSet::standard(), v),
                                                 printed_varset(), 's', cfg.cap);
  emit_polynomial(cfg, p, out);
  return kSuccess;
}

int cmd_nilpotency(const Config& cfg, std::ostream& out, std::ostream& err) {
  auto p = parse_element(cfg.element, err);
  if (!p) return kUserError;
  const PaperInstance inst = assemble_instance(default_inputs());
  try {
    out << nilpotency_index(inst.D, *p, cfg.cap) << '\n';
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kUserError;
  }
  return kSuccess;
}

int cmd_apply(const Config& cfg, std::ostream& out, std::ostream& err) {
  auto p = parse_element(cfg.element, err);
  if (!p) return kUserError;
  const PaperInstance inst = assemble_instance(default_inputs());
  emit_polynomial(cfg, iterate(inst.D, *p, cfg.times), out);
  return kSuccess;
}

int cmd_diff_appendix(const Config& cfg, std::ostream& out, std::ostream& err) {
  std::vector<SourceForm> sources;
  for (const std::string& path : cfg.paths) {
    try {
      sources.push_back(load_source_file(path));
    } catch (const std::runtime_error& e) {
      err << "error: " << e.what() << '\n';
      return kUserError;
    }
  }
  const PaperInstance inst = build_paper_instance();
  VerificationReport report;
  report.errata = compare_printed_forms(inst, sources);
  if (cfg.format == "json")
    out << report_to_json(report, false).dump(2) << '\n';
  else
    out << report_to_text(report, false);
  return kSuccess;
}

int cmd_parse(const Config& cfg, std::ostream& out, std::ostream& err) {
  std::string body;
  try {
    body = read_polynomial_file(cfg.paths.front());
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kUserError;
  }
  const Normalized n = normalize_appendix(body);
  for (const auto& w : n.warnings) err << "warning: " << to_string(w) << '\n';
  try {
    const VarSet vars(cfg.vars);
    out << print_polynomial(parse_polynomial(n.text, vars)) << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUserError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUserError;
  }
  return kSuccess;
}

int cmd_normalize(const Config& cfg, std::ostream& out, std::ostream& err) {
  std::ifstream in(cfg.paths.front());
  if (!in) {
    err << "error: cannot read '" << cfg.paths.front() << "'\n";
    return kUserError;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  std::string raw = buf.str();
  while (!raw.empty() && (raw.back() == '\n' || raw.back() == '\r')) raw.pop_back();
  const Normalized n = normalize_appendix(raw);
  if (!cfg.provenance.empty()) out << "# provenance: " << cfg.provenance << '\n';
  if (!cfg.target.empty()) out << "# target: " << cfg.target << '\n';
  out << "# raw: " << raw << '\n';
  for (const auto& w : n.warnings) out << "# normalization-warning: " << to_string(w) << '\n';
  out << n.text << '\n';
  return kSuccess;
}

}  // namespace

ordered_json report_to_json(const VerificationReport& report, bool timings) {
  ordered_json j;
  j["schemaVersion"] = "1";
  j["checks"] = ordered_json::array();
  for (const CheckResult& c : report.checks) {
    ordered_json item;
    item["name"] = c.name;
    item["status"] = to_string(c.status);
    item["detail"] = c.detail;
    item["elapsedMs"] =
        timings ? std::chrono::duration_cast<std::chrono::milliseconds>(c.elapsed).count() : 0;
    j["checks"].push_back(std::move(item));
  }
  j["errata"] = ordered_json::array();
  for (const ErrataEntry& e : report.errata) {
    ordered_json item;
    item["location"] = e.location;
    item["printed"] = e.printed;
    item["computed"] = e.computed;
    item["note"] = e.note;
    j["errata"].push_back(std::move(item));
  }
  const ReportSummary s = report.summary();
  j["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"errata", s.errata}};
  return j;
}

std::string report_to_text(const VerificationReport& report, bool timings) {
  std::ostringstream os;
  if (!report.checks.empty()) {
    os << "status  check                       detail\n";
    for (const CheckResult& c : report.checks) {
      os << std::left << std::setw(8) << to_string(c.status) << std::setw(28) << c.name << c.detail;
      if (timings)
        os << "  [" << std::chrono::duration_cast<std::chrono::milliseconds>(c.elapsed).count()
           << " ms]";
      os << '\n';
    }
  }
  if (!report.errata.empty()) {
    os << "\nerrata (" << report.errata.size() << ")\n";
    for (const ErrataEntry& e : report.errata)
      os << "  " << e.location << ": printed " << e.printed << " | computed " << e.computed << " | "
         << e.note << '\n';
  }
  const ReportSummary s = report.summary();
  os << "\nsummary: " << s.pass << " pass, " << s.fail << " fail, " << s.errata << " errata\n";
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Exact verification of the trefoil locally nilpotent derivation and its Dixmier map",
               "lndverify"};
  app.require_subcommand(1);
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--cap", cfg.cap, "Nilpotency search bound")->check(CLI::PositiveNumber);
  };

  auto* verify = app.add_subcommand("verify", "Run the identity suite and diff the bundled printed formulas");
  add_format(verify);
  verify->add_option("--data-dir", cfg.data_dir, "Directory of printed-formula data files");
  verify->add_flag("--timings", cfg.timings, "Report wall-clock time per check");

  auto* phi = app.add_subcommand("phi", "Dixmier image of a variable (closed form in s by default)");
  phi->add_option("variable", cfg.variable, "One of t, u, x, y, z")->required();
  phi->add_flag("--expanded", cfg.expanded, "Expand s into t, u, x, y, z");
  add_format(phi);
  add_cap(phi);

  auto* nil = app.add_subcommand("nilpotency", "Smallest r with D^r(expr) = 0");
  nil->add_option("expr", cfg.element, "Polynomial in t, u, x, y, z")->required();
  add_cap(nil);

  auto* apply_cmd = app.add_subcommand("apply", "Apply D to a polynomial");
  apply_cmd->add_option("expr", cfg.element, "Polynomial in t, u, x, y, z")->required();
  apply_cmd->add_option("--times", cfg.times, "Number of applications");
  add_format(apply_cmd);

  auto* diff = app.add_subcommand("diff-appendix", "Diff printed-formula files against computed values");
  diff->add_option("files", cfg.paths, "Data files")->required();
  add_format(diff);

  auto* parse = app.add_subcommand("parse", "Parse a polynomial file and print its canonical form");
  parse->add_option("file", cfg.paths, "Polynomial file")->required()->expected(1);
  parse->add_option("--vars", cfg.vars, "Variable letters in precedence order");

  auto* normalize = app.add_subcommand("normalize", "Turn raw typeset text into a data file");
  normalize->add_option("file", cfg.paths, "Raw text file")->required()->expected(1);
  normalize->add_option("--provenance", cfg.provenance, "Provenance label");
  normalize->add_option("--target", cfg.target, "phi_t .. phi_z or s");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUserError;
  }

  try {
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (phi->parsed()) return cmd_phi(cfg, out, err);
    if (nil->parsed()) return cmd_nilpotency(cfg, out, err);
    if (apply_cmd->parsed()) return cmd_apply(cfg, out, err);
    if (diff->parsed()) return cmd_diff_appendix(cfg, out, err);
    if (parse->parsed()) return cmd_parse(cfg, out, err);
    if (normalize->parsed()) return cmd_normalize(cfg, out, err);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kUserError;
}

}  // namespace lnd::cli
