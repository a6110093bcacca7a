#include <CLI11.hpp>

#include <map>
#include <string>
#include <vector>

#include "newform_weyl/cli/cli.hpp"
#include "newform_weyl/cli/format.hpp"
#include "newform_weyl/error.hpp"
#include "newform_weyl/exactnum/numeric.hpp"
#include "newform_weyl/spectral/coefficients.hpp"

namespace nw::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

const std::map<std::string, CoefficientKind> kKinds = {{"full", CoefficientKind::Full},
                                                         {"newform", CoefficientKind::Newform}};

struct CoeffsArgs {
  std::uint64_t level = 1;
  std::string kind = "newform";
  std::string format = "text";
  unsigned precision = kDefaultPrecision;
};

struct ScanArgs {
  std::uint64_t max_level = 0;
  bool only_cocompact = false;
  std::string format = "text";
  std::string method = "theorem";
};

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t max_level = verify::VerifyOptions{}.max_level;
};

struct WeylArgs {
  std::uint64_t level = 1;
  double lambda = 0;
  std::string kind = "newform";
  unsigned precision = kDefaultPrecision;
};

int cmd_coeffs(const CoeffsArgs& args, std::ostream& out) {
  std::vector<CoefficientKind> kinds;
  if (args.kind == "both") {
    kinds = {CoefficientKind::Full, CoefficientKind::Newform};
  } else {
    kinds = {kKinds.at(args.kind)};
  }
  std::vector<OutputRecord> records;
  for (auto kind : kinds) records.push_back(make_record(args.level, kind, args.precision));

  if (args.format == "json") {
    if (records.size() == 1) {
      out << to_json(records.front()).dump(2) << "\n";
    } else {
      ordered_json all = ordered_json::array();
      for (const auto& r : records) all.push_back(to_json(r));
      out << all.dump(2) << "\n";
    }
  } else if (args.format == "csv") {
    out << csv_header() << "\n";
    for (const auto& r : records) out << to_csv_row(r) << "\n";
  } else {
    for (const auto& r : records) out << to_text(r);
  }
  return kExitOk;
}

int cmd_scan(const ScanArgs& args, std::ostream& out) {
  const auto method = args.method == "oracle" ? spectral::ClassifyMethod::Oracle : spectral::ClassifyMethod::Theorem;
  const auto rows = scan_levels(args.max_level, args.only_cocompact, method);
  if (args.format == "csv") {
    out << scan_csv(rows);
  } else if (args.format == "json") {
    out << scan_json(rows).dump(2) << "\n";
  } else {
    out << scan_text(rows);
  }
  return kExitOk;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  std::vector<verify::Suite> suites;
  if (args.suite == "all") {
    suites = {verify::Suite::Group, verify::Suite::ClosedForms, verify::Suite::Classifier,
              verify::Suite::DirichletSeries};
  } else {
    suites = {*verify::parse_suite(args.suite)};
  }
  verify::VerifyOptions options;
  options.max_level = args.max_level;
  bool all_passed = true;
  for (auto suite : suites) {
    const auto report = verify::run_suite(suite, options);
    out << verify_text(report) << std::flush;
    all_passed = all_passed && report.passed();
  }
  return all_passed ? kExitOk : kExitVerifyFailed;
}

int cmd_weyl(const WeylArgs& args, std::ostream& out) {
  const auto coeffs = kKinds.at(args.kind) == CoefficientKind::Full ? spectral::full_coeffs(args.level)
                                                                     : spectral::newform_coeffs(args.level);
  const auto terms = spectral::weyl_main_terms(coeffs, args.lambda);
  out << weyl_text(coeffs, terms, args.precision);
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weyl-law coefficients of Maass newform counting functions on Gamma_0(M)", "newform-weyl"};
  app.require_subcommand(1);

  const auto kind_check = CLI::IsMember({"full", "newform"});
  const auto precision_check = CLI::Range(1u, kMaxNumericPrecision);

  CoeffsArgs coeffs;
  auto* coeffs_cmd = app.add_subcommand("coeffs", "exact and approximate c1, c2, c3 at level M");
  coeffs_cmd->add_option("M", coeffs.level, "level")->required()->check(CLI::PositiveNumber);
  coeffs_cmd->add_option("--kind", coeffs.kind, "full, newform or both")
      ->check(CLI::IsMember({"full", "newform", "both"}))
      ->capture_default_str();
  coeffs_cmd->add_option("--format", coeffs.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  coeffs_cmd->add_option("--precision", coeffs.precision, "significant digits of the approximations")
      ->check(precision_check)
      ->capture_default_str();

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "classify levels 1..N as cocompact type or not");
  scan_cmd->add_option("--max", scan.max_level, "largest level (at most 1e6)")->required();
  scan_cmd->add_flag("--only-cocompact", scan.only_cocompact, "list only cocompact-type levels");
  scan_cmd->add_option("--format", scan.format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  scan_cmd->add_option("--method", scan.method, "theorem or oracle")
      ->check(CLI::IsMember({"theorem", "oracle"}))
      ->capture_default_str();

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "run property suites against the brute-force oracles");
  verify_cmd->add_option("--suite", verify_args.suite, "group, closed-forms, classifier, dirichlet-series or all")
      ->check(CLI::IsMember({"group", "closed-forms", "classifier", "dirichlet-series", "all"}))
      ->capture_default_str();
  verify_cmd->add_option("--max", verify_args.max_level, "largest level for range scans")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  WeylArgs weyl;
  auto* weyl_cmd = app.add_subcommand("weyl", "numeric main terms at a given lambda");
  weyl_cmd->add_option("M", weyl.level, "level")->required()->check(CLI::PositiveNumber);
  weyl_cmd->add_option("--lambda", weyl.lambda, "spectral parameter, > 1")->required();
  weyl_cmd->add_option("--kind", weyl.kind, "full or newform")->check(kind_check)->capture_default_str();
  weyl_cmd->add_option("--precision", weyl.precision, "significant digits (at most 17)")
      ->check(CLI::Range(1u, 17u))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    const bool help = dynamic_cast<const CLI::CallForHelp*>(&e) || dynamic_cast<const CLI::CallForAllHelp*>(&e) ||
                      dynamic_cast<const CLI::CallForVersion*>(&e);
    return help ? kExitOk : kExitUsage;
  }

  try {
    if (*coeffs_cmd) return cmd_coeffs(coeffs, out);
    if (*scan_cmd) return cmd_scan(scan, out);
    if (*verify_cmd) return cmd_verify(verify_args, out);
    if (*weyl_cmd) return cmd_weyl(weyl, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace nw::cli
