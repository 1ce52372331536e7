#include "commands.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "snorm/baernstein.hpp"
#include "snorm/experiments.hpp"
#include "snorm/json_io.hpp"
#include "snorm/tsirelson.hpp"
#include "snorm/verify.hpp"

namespace snorm::cli {
namespace {

using Json = nlohmann::ordered_json;

std::optional<std::string> slurp(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot read " << path << "\n";
    return std::nullopt;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int emit(const std::string& payload, const std::string& out_path, std::ostream& out,
         std::ostream& err) {
  if (out_path.empty()) {
    out << payload;
    return kExitOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot write " << out_path << "\n";
    return kExitFailure;
  }
  file << payload;
  return kExitOk;
}

int do_norm(const std::string& file, unsigned p, bool certify,
            const std::string& out_path, std::ostream& out, std::ostream& err) {
  const auto text = slurp(file, err);
  if (!text) return kExitFailure;
  const SparseVector x = vector_from_json(*text);
  const NormResult result = baernstein_norm(x, p);
  std::string payload;
  if (certify) {
    const Rational replayed = partition_power_sum(x, result.certificate, p);
    if (replayed != result.p_power) {
      err << "error: certificate does not replay to the computed value\n";
      return kExitFailure;
    }
    Json doc{{"certificate", Json::parse(partition_to_json(result.certificate))},
             {"p_power", fraction_string(result.p_power)},
             {"replayed_p_power", fraction_string(replayed)}};
    payload = doc.dump() + "\n";
  } else {
    payload = norm_result_to_json(result) + "\n";
  }
  return emit(payload, out_path, out, err);
}

int do_growth(const GrowthOptions& options, const std::string& format,
              const std::string& out_path, std::ostream& out, std::ostream& err) {
  const GrowthTable table = growth_table(options);
  std::string payload;
  if (format == "json") {
    Json rows = Json::array();
    for (const GrowthRow& row : table.rows)
      rows.push_back(Json{{"q", row.q},
                          {"norm_power", fraction_string(row.vector_norm_power)},
                          {"image_norm", fraction_string(row.image_norm)},
                          {"ratio_decimal", row.ratio_decimal}});
    payload = Json{{"rows", std::move(rows)}, {"complete", table.complete}}.dump() + "\n";
  } else {
    std::ostringstream csv;
    csv << "q,norm_power,image_norm,ratio_decimal\n";
    for (const GrowthRow& row : table.rows)
      csv << row.q << ',' << fraction_string(row.vector_norm_power) << ','
          << fraction_string(row.image_norm) << ',' << row.ratio_decimal << '\n';
    if (!table.complete) csv << "# truncated by runtime budget\n";
    payload = csv.str();
  }
  const int emitted = emit(payload, out_path, out, err);
  if (emitted != kExitOk) return emitted;
  return table.complete ? kExitOk : kExitBudgetTruncated;
}

int do_verify(const std::string& suite, const VerifyOptions& options,
              const std::string& format, const std::string& out_path,
              std::ostream& out, std::ostream& err) {
  if (!suite.empty()) {
    const auto& known = available_suites();
    if (std::find(known.begin(), known.end(), suite) == known.end()) {
      err << "error: unknown suite \"" << suite << "\"; available:";
      for (const std::string& name : known) err << ' ' << name;
      err << "\n";
      return kExitUnknownSuite;
    }
  }
  const std::vector<SuiteReport> reports =
      suite.empty() ? run_all_suites(options)
                    : std::vector<SuiteReport>{run_suite(suite, options)};

  std::string payload;
  if (format == "json") {
    Json doc = Json::array();
    for (const SuiteReport& report : reports) {
      Json failures = Json::array();
      for (const SuiteFailure& f : report.failures)
        failures.push_back(Json{{"case", f.case_name}, {"detail", f.detail}});
      doc.push_back(Json{{"suite", report.suite},
                         {"passed", report.passed},
                         {"total", report.total},
                         {"failures", std::move(failures)}});
    }
    payload = doc.dump() + "\n";
  } else if (format == "csv") {
    std::ostringstream csv;
    csv << "suite,passed,total,ok\n";
    for (const SuiteReport& report : reports)
      csv << report.suite << ',' << report.passed << ',' << report.total << ','
          << (report.ok() ? "true" : "false") << '\n';
    payload = csv.str();
  } else {
    std::ostringstream text;
    for (const SuiteReport& report : reports) {
      text << report.summary() << '\n';
      for (const SuiteFailure& f : report.failures)
        text << "  " << f.case_name << ": " << f.detail << '\n';
    }
    payload = text.str();
  }
  const int emitted = emit(payload, out_path, out, err);
  if (emitted != kExitOk) return emitted;
  for (const SuiteReport& report : reports)
    if (!report.ok()) return kExitFailure;
  return kExitOk;
}

int do_sandwich(std::uint64_t seed, std::size_t count, const std::string& format,
                const std::string& out_path, std::ostream& out, std::ostream& err) {
  const auto instances = sandwich_instances(seed, count);
  std::vector<SandwichReport> reports;
  reports.reserve(instances.size());
  std::size_t passed = 0;
  for (const auto& xs : instances) {
    reports.push_back(block_sandwich(xs));
    if (reports.back().lower_ok && reports.back().upper_ok) ++passed;
  }

  std::string payload;
  if (format == "json") {
    Json records = Json::array();
    for (const SandwichReport& report : reports)
      records.push_back(Json::parse(sandwich_report_to_json(report)));
    payload = Json{{"records", std::move(records)},
                   {"passed", passed},
                   {"total", reports.size()}}
                  .dump() +
              "\n";
  } else if (format == "csv") {
    std::ostringstream csv;
    csv << "A,B,ratio,lower_ok,upper_ok\n";
    for (const SandwichReport& report : reports)
      csv << fraction_string(report.a_value) << ',' << fraction_string(report.b_value)
          << ',' << fraction_string(report.ratio) << ','
          << (report.lower_ok ? "true" : "false") << ','
          << (report.upper_ok ? "true" : "false") << '\n';
    payload = csv.str();
  } else {
    std::ostringstream text;
    for (const SandwichReport& report : reports)
      text << sandwich_report_to_json(report) << '\n';
    text << "sandwich: " << passed << '/' << reports.size()
         << (passed == reports.size() ? " pass" : " FAIL") << '\n';
    payload = text.str();
  }
  const int emitted = emit(payload, out_path, out, err);
  if (emitted != kExitOk) return emitted;
  return passed == reports.size() ? kExitOk : kExitFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact norms, certificates and operator experiments on c00"};
  app.require_subcommand(1);

  std::string vector_file;
  unsigned p = 2;
  std::string format;
  std::string out_path;
  std::uint64_t seed = 1;

  auto* norm_cmd = app.add_subcommand("norm", "exact block norm of a vector file");
  norm_cmd->add_option("file", vector_file, "vector JSON file")->required();
  norm_cmd->add_option("--p", p, "integer exponent (>= 2)")->check(CLI::Range(2u, 16u));
  norm_cmd->add_option("--out", out_path, "write the report to this file");

  auto* certify_cmd = app.add_subcommand(
      "certify", "maximizing family of a vector file, with replayed value");
  certify_cmd->add_option("file", vector_file, "vector JSON file")->required();
  certify_cmd->add_option("--p", p, "integer exponent (>= 2)")
      ->check(CLI::Range(2u, 16u));
  certify_cmd->add_option("--out", out_path, "write the report to this file");

  GrowthOptions growth;
  auto* growth_cmd =
      app.add_subcommand("growth", "diagonal-vs-vector norm growth table");
  growth_cmd->add_option("--p", growth.p, "integer exponent (>= 2)")
      ->check(CLI::Range(2u, 16u));
  growth_cmd->add_option("--q-min", growth.q_min, "first row (>= 3)");
  growth_cmd->add_option("--q-max", growth.q_max, "last row (<= 8)");
  growth_cmd->add_flag("--large", growth.large,
                       "allow rows past q = 6 and lift the runtime budget");
  growth_cmd->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  growth_cmd->add_option("--out", out_path, "write the report to this file");
  growth_cmd->add_option("--seed", seed, "unused; accepted for uniformity");

  VerifyOptions verify;
  std::string suite;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite, "suite name (omit to run all)");
  verify_cmd->add_option("--seed", verify.seed, "sampling seed");
  verify_cmd->add_option("--exhaustive", verify.uep_exhaustive_max,
                         "exhaustive bound for the uep suite");
  verify_cmd->add_option("--format", format, "csv or json (default: plain text)")
      ->check(CLI::IsMember({"csv", "json"}));
  verify_cmd->add_option("--out", out_path, "write the report to this file");

  std::size_t sandwich_count = 50;
  auto* sandwich_cmd =
      app.add_subcommand("sandwich", "blockwise norm sandwich records");
  sandwich_cmd->add_option("--seed", seed, "sampling seed");
  sandwich_cmd->add_option("--count", sandwich_count, "number of instances");
  sandwich_cmd->add_option("--format", format, "csv or json (default: plain text)")
      ->check(CLI::IsMember({"csv", "json"}));
  sandwich_cmd->add_option("--out", out_path, "write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*norm_cmd) return do_norm(vector_file, p, false, out_path, out, err);
    if (*certify_cmd) return do_norm(vector_file, p, true, out_path, out, err);
    if (*growth_cmd) return do_growth(growth, format, out_path, out, err);
    if (*verify_cmd) return do_verify(suite, verify, format, out_path, out, err);
    if (*sandwich_cmd)
      return do_sandwich(seed, sandwich_count, format, out_path, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;  // unreachable: a subcommand is required
}

}  // namespace snorm::cli
