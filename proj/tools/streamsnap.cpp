#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "streamsnap/ensemble.hpp"
#include "streamsnap/exact.hpp"
#include "streamsnap/format.hpp"
#include "streamsnap/io.hpp"
#include "streamsnap/limits.hpp"
#include "streamsnap/verify.hpp"

namespace {

// Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
// 3 data error.
constexpr int kExitOk = 0;
constexpr int kExitTestFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

double parse_fraction(const std::string& token) {
  const auto slash = token.find('/');
  const auto to_double = [](std::string_view text) {
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
      throw std::invalid_argument("targets: expected a number, got '" +
                                  std::string(text) + "'");
    return v;
  };
  if (slash == std::string::npos) return to_double(token);
  const double num = to_double(std::string_view(token).substr(0, slash));
  const double den = to_double(std::string_view(token).substr(slash + 1));
  if (den == 0.0) throw std::invalid_argument("targets: zero denominator");
  return num / den;
}

streamsnap::TargetSet parse_targets(const std::string& text) {
  if (text.empty()) return streamsnap::TargetSet();
  std::vector<double> fractions;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string::npos ? text.size() : comma;
    fractions.push_back(parse_fraction(text.substr(start, end - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return streamsnap::TargetSet(std::move(fractions));
}

int cmd_run(const std::string& schedule_spec, std::size_t members,
            std::uint64_t seed, const std::string& targets_text, bool trace,
            bool endpoints, const std::string& format,
            const std::string& input_path) {
  streamsnap::RunConfig cfg;
  cfg.schedule = streamsnap::parse_schedule(schedule_spec);
  cfg.members = members;
  cfg.seed = seed;
  cfg.targets = parse_targets(targets_text);
  cfg.trace = trace;
  cfg.endpoints = endpoints;
  cfg.format = format == "json" ? streamsnap::OutputFormat::kJson
                                : streamsnap::OutputFormat::kCsv;

  std::vector<streamsnap::StreamRecord> records;
  if (input_path.empty() || input_path == "-") {
    records = streamsnap::read_stream(std::cin);
  } else {
    std::ifstream in(input_path);
    if (!in) {
      std::cerr << "error: cannot open input file '" << input_path << "'\n";
      return kExitData;
    }
    records = streamsnap::read_stream(in);
  }

  const auto result = streamsnap::run_stream(cfg, records);
  if (cfg.format == streamsnap::OutputFormat::kJson)
    streamsnap::write_snapshot_json(std::cout, cfg, result);
  else
    streamsnap::write_snapshot_csv(std::cout, result);
  return kExitOk;
}

int cmd_analyze(const std::string& schedule_spec, std::uint64_t n,
                const std::optional<std::uint64_t>& k) {
  using streamsnap::format_double;
  const auto s = streamsnap::parse_schedule(schedule_spec);
  const double ek = streamsnap::expected_age(s, n);
  const double el = static_cast<double>(n + 1) - ek;
  const auto regime = streamsnap::classify(s);

  std::ostringstream out;
  out << "schedule: " << s.spec() << '\n';
  out << "n: " << n << '\n';
  out << "regime: " << streamsnap::regime_name(regime.regime) << " (g="
      << format_double(regime.g) << ", alpha=" << format_double(regime.alpha)
      << ")\n";
  out << "expected_age: " << format_double(ek) << '\n';
  out << "expected_position: " << format_double(el) << '\n';
  if (streamsnap::has_limit_law(regime.regime)) {
    out << "asymptotic_age: "
        << format_double(streamsnap::expected_age_asymptotic(regime, n))
        << '\n';
  } else {
    out << "asymptotic_position: "
        << format_double(streamsnap::expected_position_asymptotic(regime, n))
        << '\n';
  }
  if (k.has_value()) {
    out << "k: " << *k << '\n';
    out << "pmf: " << format_double(streamsnap::age_pmf(s, n, *k)) << '\n';
    out << "survival: " << format_double(streamsnap::age_survival(s, n, *k))
        << '\n';
  } else {
    const auto pmf = streamsnap::age_pmf_all(s, n);
    const auto surv = streamsnap::age_survival_all(s, n);
    out << "k,pmf,survival\n";
    for (std::uint64_t kk = 1; kk <= n; ++kk)
      out << kk << ',' << format_double(pmf[kk - 1]) << ','
          << format_double(surv[kk - 1]) << '\n';
  }
  std::cout << out.str();
  return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed) {
  const auto reports = streamsnap::verify_suite(suite, seed);
  bool all_pass = true;
  for (const auto& r : reports) {
    std::cout << r.line() << '\n';
    all_pass = all_pass && r.pass;
  }
  return all_pass ? kExitOk : kExitTestFailure;
}

int cmd_coverage(double epsilon, double eta, std::uint64_t targets) {
  std::cout << streamsnap::coverage_size(epsilon, eta, targets) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"probabilistic snapshots of a data stream"};
  app.require_subcommand(1);

  std::string schedule_spec;
  std::size_t members = 1;
  std::uint64_t seed = 0;
  std::string targets_text;
  bool trace = false;
  bool endpoints = false;
  std::string format = "csv";
  std::string input_path;

  auto* run = app.add_subcommand("run", "run a snapshot ensemble over a stream");
  run->add_option("--schedule", schedule_spec,
                  "uniform | constant:<a> | power:<g>,<alpha>")
      ->required();
  run->add_option("--ensemble", members, "ensemble size M (default 1)");
  run->add_option("--seed", seed, "RNG seed (required)")->required();
  run->add_option("--targets", targets_text,
                  "comma-separated target fractions (default deciles)");
  run->add_flag("--trace", trace, "emit n,Q after every item");
  run->add_flag("--endpoints", endpoints,
                "include first and last records as pseudo-members");
  run->add_option("--format", format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  run->add_option("input-file", input_path, "input CSV (default stdin)");

  std::uint64_t n = 0;
  std::optional<std::uint64_t> k;
  auto* analyze = app.add_subcommand("analyze", "exact law and predictions");
  analyze->add_option("--schedule", schedule_spec,
                      "uniform | constant:<a> | power:<g>,<alpha>")
      ->required();
  analyze->add_option("--n", n, "stream length")->required();
  analyze->add_option("--k", k, "single age to report (default: full table)");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run self-verification suites");
  verify->add_option("--suite", suite, "all | exact | limits | ensemble")
      ->check(CLI::IsMember({"all", "exact", "limits", "ensemble"}));
  verify->add_option("--seed", seed, "RNG seed (required)")->required();

  double epsilon = 0.0, eta = 0.0;
  std::uint64_t num_targets = 9;
  auto* coverage =
      app.add_subcommand("coverage", "minimal ensemble size for coverage");
  coverage->add_option("--epsilon", epsilon, "coverage radius as a fraction")
      ->required();
  coverage->add_option("--eta", eta, "miss probability bound")->required();
  coverage->add_option("--targets", num_targets, "number of targets (default 9)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (run->parsed())
      return cmd_run(schedule_spec, members, seed, targets_text, trace,
                     endpoints, format, input_path);
    if (analyze->parsed()) return cmd_analyze(schedule_spec, n, k);
    if (verify->parsed()) return cmd_verify(suite, seed);
    if (coverage->parsed()) return cmd_coverage(epsilon, eta, num_targets);
  } catch (const streamsnap::DataError& e) {
    std::cerr << "error: " << e.what() << " (line " << e.line() << ")\n";
    return kExitData;
  } catch (const streamsnap::ScheduleParseError& e) {
    std::cerr << "error: " << e.what() << " (at position " << e.position()
              << ")\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
