// Acceptance gate: twelve numbered end-to-end criteria, one line each.
// Exit 0 iff every criterion passes. Tolerances are pinned in the code.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "streamsnap/ensemble.hpp"
#include "streamsnap/exact.hpp"
#include "streamsnap/io.hpp"
#include "streamsnap/limits.hpp"
#include "streamsnap/rng.hpp"
#include "streamsnap/simulate.hpp"
#include "streamsnap/stats.hpp"

using namespace streamsnap;

namespace {

constexpr std::uint64_t kMasterSeed = 42;

std::uint64_t seed_for(int criterion) {
  return draw_bits(seed_key(kMasterSeed),
                   0xACCE0000ull + static_cast<std::uint64_t>(criterion));
}

// FNV-1a-64 over the observable values a criterion computes; equal digests
// across re-runs are the determinism evidence for criterion 12.
class Digest {
 public:
  void add_bytes(const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
      h_ ^= p[i];
      h_ *= 0x100000001b3ull;
    }
  }
  void add(double v) {
    std::uint64_t bits = 0;
    std::memcpy(&bits, &v, sizeof bits);
    add_bytes(&bits, sizeof bits);
  }
  void add(std::uint64_t v) { add_bytes(&v, sizeof v); }
  void add(const std::string& s) { add_bytes(s.data(), s.size()); }
  std::uint64_t value() const { return h_; }

 private:
  std::uint64_t h_ = 0xcbf29ce484222325ull;
};

struct Outcome {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double elapsed = 0.0;
  double cap = 0.0;
  std::uint64_t digest = 0;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string pct(double ratio_err) { return fmt(100.0 * ratio_err) + "%"; }

void print_line(const Outcome& o) {
  char head[16];
  std::snprintf(head, sizeof head, "C%02d", o.id);
  std::cout << head << ' ' << o.name << ' ' << (o.pass ? "PASS" : "FAIL")
            << ' ' << o.detail << " (" << fmt(o.elapsed) << "s < " << fmt(o.cap)
            << "s)" << std::endl;
}

const std::vector<Schedule>& variants() {
  static const std::vector<Schedule> v = {
      Schedule::uniform(),          Schedule::constant(1.5),
      Schedule::constant(2.0),      Schedule::constant(10.0),
      Schedule::power_law(0.5, 0.0), Schedule::power_law(1.0, 0.5),
      Schedule::power_law(0.1, 0.5), Schedule::power_law(2.0, 1.0),
      Schedule::power_law(1.0, 1.5), Schedule::power_law(4.0, 2.0),
      Schedule::power_law(1.0, 3.0),
  };
  return v;
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

// 1. The uniform schedule keeps every stream position equally likely, so the
// age law is flat at 1/n and the mean age is (n+1)/2.
Outcome criterion_1() {
  Timer t;
  Outcome o{1, "uniform-law", false, "", 0.0, 1.0, 0};
  const Schedule u = Schedule::uniform();
  double pmf_err = 0.0, mean_err = 0.0;
  for (std::uint64_t n = 1; n <= 300; ++n) {
    const auto pmf = age_pmf_all(u, n);
    const double flat = 1.0 / static_cast<double>(n);
    for (std::uint64_t k = 1; k <= n; ++k)
      pmf_err = std::max(pmf_err, std::fabs(pmf[k - 1] - flat));
    mean_err = std::max(
        mean_err, std::fabs(expected_age(u, n) -
                            static_cast<double>(n + 1) / 2.0));
  }
  Digest d;
  d.add(pmf_err);
  d.add(mean_err);
  o.digest = d.value();
  o.elapsed = t.seconds();
  o.pass = pmf_err <= 1e-12 && mean_err <= 1e-9 && o.elapsed < o.cap;
  o.detail = "pmf_err=" + fmt(pmf_err) + " mean_err=" + fmt(mean_err);
  return o;
}

// 2. Two independent oracles reproduce the analytic age law: literal
// enumeration of all replace/keep paths (n <= 12) and the one-step
// recurrence carried as a full vector (n <= 300), on every variant.
Outcome criterion_2() {
  Timer t;
  Outcome o{2, "oracle-exactness", false, "", 0.0, 10.0, 0};
  double enum_err = 0.0, rec_err = 0.0;
  Digest d;
  for (const Schedule& s : variants()) {
    for (std::uint64_t n = 1; n <= 12; ++n) {
      const auto ref = age_pmf_all(s, n);
      const auto pmf = enumerate_age_pmf(s, n);
      for (std::uint64_t k = 0; k < n; ++k)
        enum_err = std::max(enum_err, std::fabs(pmf[k] - ref[k]));
    }
    for (std::uint64_t n = 1; n <= 300; ++n) {
      const auto ref = age_pmf_all(s, n);
      const auto pmf = recursion_age_pmf(s, n);
      for (std::uint64_t k = 0; k < n; ++k)
        rec_err = std::max(rec_err, std::fabs(pmf[k] - ref[k]));
    }
  }
  d.add(enum_err);
  d.add(rec_err);
  o.digest = d.value();
  o.elapsed = t.seconds();
  o.pass = enum_err <= 1e-12 && rec_err <= 1e-12 && o.elapsed < o.cap;
  o.detail = "enum_err=" + fmt(enum_err) + " recursion_err=" + fmt(rec_err);
  return o;
}

// 3. Constant replacement probability 1/a: E[K_n] = a(1 - ((a-1)/a)^n)
// exactly, and the sampled age at n = 50 is geometric.
Outcome criterion_3() {
  Timer t;
  Outcome o{3, "constant-schedule", false, "", 0.0, 30.0, 0};
  Digest d;
  double exact_err = 0.0, worst_ks = 0.0;
  for (const double a : {1.5, 2.0, 10.0}) {
    const Schedule s = Schedule::constant(a);
    for (std::uint64_t n = 1; n <= 300; ++n) {
      const double closed =
          a * (1.0 - std::pow((a - 1.0) / a, static_cast<double>(n)));
      exact_err = std::max(exact_err, std::fabs(expected_age(s, n) - closed));
    }
    const auto e = simulate_terminal(s, 50, 100000, seed_for(3));
    const auto regime = classify(s);
    const double ks = ks_distance(
        e, 1.0, [&](double x) { return limiting_cdf(regime, x); });
    worst_ks = std::max(worst_ks, ks);
    d.add(ks);
  }
  d.add(exact_err);
  o.digest = d.value();
  o.elapsed = t.seconds();
  o.pass = exact_err <= 1e-9 && worst_ks <= 0.02 && o.elapsed < o.cap;
  o.detail = "exact_err=" + fmt(exact_err) + " worst_ks=" + fmt(worst_ks);
  return o;
}

// 4. Sublinear decay (alpha = 1/2): K_n / n^alpha converges to Exp(g).
Outcome criterion_4() {
  Timer t;
  Outcome o{4, "exponential-limit", false, "", 0.0, 120.0, 0};
  Digest d;
  const std::uint64_t n = 10000, trials = 100000;
  const double scale = std::sqrt(static_cast<double>(n));
  double worst_ks = 0.0, worst_mean = 0.0;
  for (const double g : {0.5, 1.0}) {
    const Schedule s = Schedule::power_law(g, 0.5);
    const auto e = simulate_terminal(s, n, trials, seed_for(4));
    const auto regime = classify(s);
    const double ks = ks_distance(
        e, scale, [&](double x) { return limiting_cdf(regime, x); });
    const double mean_err = std::fabs(e.mean() / scale * g - 1.0);
    worst_ks = std::max(worst_ks, ks);
    worst_mean = std::max(worst_mean, mean_err);
    d.add(ks);
    d.add(mean_err);
  }
  o.digest = d.value();
  o.elapsed = t.seconds();
  o.pass = worst_ks <= 0.02 && worst_mean <= 0.05 && o.elapsed < o.cap;
  o.detail = "worst_ks=" + fmt(worst_ks) + " mean_err=" + pct(worst_mean);
  return o;
}

// 5. Linear decay (alpha = 1): K_n / n converges to Beta(1, g), with mean
// 1 / (g + 1).
Outcome criterion_5() {
  Timer t;
  Outcome o{5, "beta-limit", false, "", 0.0, 120.0, 0};
  Digest d;
  const std::uint64_t n = 10000, trials = 100000;
  double worst_ks = 0.0, worst_mean = 0.0;
  for (const double g : {1.0, 2.0}) {
    const Schedule s = Schedule::power_law(g, 1.0);
    const auto e = simulate_terminal(s, n, trials, seed_for(5));
    const auto regime = classify(s);
    const double ks =
        ks_distance(e, static_cast<double>(n),
                    [&](double x) { return limiting_cdf(regime, x); });
    const double mean_err =
        std::fabs(e.mean() / static_cast<double>(n) * (g + 1.0) - 1.0);
    worst_ks = std::max(worst_ks, ks);
    worst_mean = std::max(worst_mean, mean_err);
    d.add(ks);
    d.add(mean_err);
  }
  o.digest = d.value();
  o.elapsed = t.seconds();
  o.pass = worst_ks <= 0.02 && worst_mean <= 0.05 && o.elapsed < o.cap;
  o.detail = "worst_ks=" + fmt(worst_ks) + " mean_err=" + pct(worst_mean);
  return o;
}

// 6. Between linear and quadratic decay the retained position drifts as a
// power of n; the exact mean must sit within 10% of the explicit predictor
// terms at n = 10^4. Known gap: at alpha = 1.75 the dropped lower-order
// terms still contribute ~14% at this n, so that leg fails honestly.
Outcome criterion_6() {
  Timer t;
  Outcome o{6, "subquadratic-position", false, "", 0.0, 5.0, 0};
  Digest d;
  const std::uint64_t n = 10000;
  bool all = true;
  for (const double alpha : {1.25, 1.5, 1.75}) {
    const Schedule s = Schedule::power_law(1.0, alpha);
    const double exact =
        static_cast<double>(n + 1) - expected_age(s, n);
    const double pred =
        expected_position_asymptotic(classify(1.0, alpha), n);
    const double err = std::fabs(exact / pred - 1.0);
    all = all && err <= 0.10;
    o.detail += (o.detail.empty() ? "" : " ") + ("err[alpha=" + fmt(alpha) +
                                                 "]=" + pct(err));
    d.add(err);
  }
  o.digest = d.value();
  o.elapsed = t.seconds();
  o.pass = all && o.elapsed < o.cap;
  return o;
}

// 7. Quadratic decay: E[L_n] grows like g ln n; the log-slope over three
// decades recovers g within 10% and the offset stays bounded by 5.
Outcome criterion_7() {
  Timer t;
  Outcome o{7, "quadratic-position", false, "", 0.0, 5.0, 0};
  Digest d;
  const std::vector<std::uint64_t> grid{100, 1000, 10000};
  bool slopes = true;
  double band = 0.0;
  for (const double g : {1.0, 3.0}) {
    const auto r = regression_expected_position(g, grid, 0, seed_for(7));
    slopes = slopes && r.pass;
    const Schedule s = Schedule::power_law(g, 2.0);
    const auto ek = expected_age_sweep(s, grid.back());
    for (const std::uint64_t n : grid) {
      const double el = static_cast<double>(n + 1) - ek[n - 1];
      band = std::max(band,
                      std::fabs(el - g * std::log(static_cast<double>(n))));
    }
    d.add(r.observed);
  }
  d.add(band);
  o.digest = d.value();
  o.elapsed = t.seconds();
  o.pass = slopes && band <= 5.0 && o.elapsed < o.cap;
  o.detail = "slope_err<=10% " + std::string(slopes ? "yes" : "no") +
             " band=" + fmt(band);
  return o;
}

// 8. Past quadratic decay the position mean stays bounded: non-decreasing in
// n and below the closed-form ceiling 1 + zeta(2) for g = 1, alpha = 3.
Outcome criterion_8() {
  Timer t;
  Outcome o{8, "superquadratic-position", false, "", 0.0, 5.0, 0};
  Digest d;
  const std::uint64_t n_max = 10000;
  const Schedule s = Schedule::power_law(1.0, 3.0);
  const auto ek = expected_age_sweep(s, n_max);
  const double ceiling = 1.0 + zeta(2.0);
  double worst_drop = 0.0, max_el = 0.0, prev = 0.0;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const double el = static_cast<double>(n + 1) - ek[n - 1];
    if (n > 1) worst_drop = std::max(worst_drop, prev - el);
    max_el = std::max(max_el, el);
    prev = el;
  }
  d.add(worst_drop);
  d.add(max_el);
  o.digest = d.value();
  o.elapsed = t.seconds();
  o.pass = worst_drop <= 1e-12 && max_el <= ceiling && o.elapsed < o.cap;
  o.detail = "worst_drop=" + fmt(worst_drop) + " max=" + fmt(max_el) +
             " ceiling=" + fmt(ceiling);
  return o;
}

// 9. Pointwise-dominated schedules cannot have longer expected ages; five
// dominated pairs checked with the exact recurrence.
Outcome criterion_9() {
  Timer t;
  Outcome o{9, "schedule-monotonicity", false, "", 0.0, 1.0, 0};
  Digest d;
  const std::vector<std::pair<Schedule, Schedule>> pairs = {
      {Schedule::uniform(), Schedule::power_law(2.0, 1.0)},
      {Schedule::power_law(1.0, 1.0), Schedule::uniform()},
      {Schedule::power_law(1.0, 2.0), Schedule::power_law(1.0, 1.0)},
      {Schedule::constant(10.0), Schedule::constant(2.0)},
      {Schedule::power_law(0.5, 0.5), Schedule::power_law(1.0, 0.5)},
  };
  bool all = true;
  double worst = 0.0;
  for (const auto& [lo, hi] : pairs) {
    const auto r = check_monotonicity(lo, hi, 300);
    all = all && r.pass;
    worst = std::max(worst, r.observed);
    d.add(r.observed);
  }
  o.digest = d.value();
  o.elapsed = t.seconds();
  o.pass = all && o.elapsed < o.cap;
  o.detail = "pairs=5 worst_deficit=" + fmt(worst);
  return o;
}

// 10. Uniform ensemble coverage at scale: with M = 1250 members over
// n = 10^5 items the decile quality reaches 0.01 in at least 99 of 100
// seeded runs, and the closed-form size for that guarantee is 1249.
Outcome criterion_10() {
  Timer t;
  Outcome o{10, "linear-coverage", false, "", 0.0, 120.0, 0};
  Digest d;
  const std::uint64_t n = 100000, members = 1250;
  const TargetSet deciles;
  const std::uint64_t key = seed_key(seed_for(10));
  int failures = 0;
  for (int i = 0; i < 100; ++i) {
    const auto pos =
        terminal_positions(Schedule::uniform(), n, members, draw_bits(key, i));
    const double q = quality_from_positions(pos, n, deciles);
    if (q > 0.01) ++failures;
    d.add(q);
  }
  const std::uint64_t size = coverage_size(0.01, 1e-10, 9);
  d.add(size);
  o.digest = d.value();
  o.elapsed = t.seconds();
  o.pass = failures <= 1 && size == 1249 && o.elapsed < o.cap;
  o.detail = "q>0.01 in " + std::to_string(failures) +
             "/100 seeds coverage_size=" + std::to_string(size);
  return o;
}

// 11. Slow-decay downsampling pipeline: M = 100 samplers with power:0.1,0.5
// over a 1439-record stream. The first-order predictor for the mean age is
// 10 sqrt(1439) ~ 380; the demanded 10% band excludes the exact finite-n
// mean (~330, the next-order correction is -1/(2 g^2) = -50), so this
// criterion fails honestly against real pipeline output.
Outcome criterion_11() {
  Timer t;
  Outcome o{11, "slow-decay-downsampling", false, "", 0.0, 30.0, 0};
  Digest d;
  std::vector<StreamRecord> records(1439);
  for (std::uint64_t i = 0; i < records.size(); ++i) {
    records[i].index = i + 1;
    records[i].timestamp = "t" + std::to_string(i + 1);
    records[i].value = std::to_string(i + 1);
  }
  const std::uint64_t key = seed_key(seed_for(11));
  double sum_of_means = 0.0;
  for (int i = 0; i < 50; ++i) {
    RunConfig cfg;
    cfg.schedule = Schedule::power_law(0.1, 0.5);
    cfg.members = 100;
    cfg.seed = draw_bits(key, i);
    const auto result = run_stream(cfg, records);
    double sum_k = 0.0;
    for (const auto& row : result.rows) sum_k += static_cast<double>(row.k);
    sum_of_means += sum_k / static_cast<double>(result.rows.size());
  }
  const double mean_k = sum_of_means / 50.0;
  const double target = 10.0 * std::sqrt(1439.0);
  const double err = std::fabs(mean_k / target - 1.0);
  d.add(mean_k);
  o.digest = d.value();
  o.elapsed = t.seconds();
  o.pass = err <= 0.10 && o.elapsed < o.cap;
  o.detail = "mean_k=" + fmt(mean_k) + " target=" + fmt(target) +
             " err=" + pct(err);
  return o;
}

std::vector<Outcome> run_all_criteria(bool print) {
  std::vector<Outcome> out;
  out.push_back(criterion_1());
  if (print) print_line(out.back());
  out.push_back(criterion_2());
  if (print) print_line(out.back());
  out.push_back(criterion_3());
  if (print) print_line(out.back());
  out.push_back(criterion_4());
  if (print) print_line(out.back());
  out.push_back(criterion_5());
  if (print) print_line(out.back());
  out.push_back(criterion_6());
  if (print) print_line(out.back());
  out.push_back(criterion_7());
  if (print) print_line(out.back());
  out.push_back(criterion_8());
  if (print) print_line(out.back());
  out.push_back(criterion_9());
  if (print) print_line(out.back());
  out.push_back(criterion_10());
  if (print) print_line(out.back());
  out.push_back(criterion_11());
  if (print) print_line(out.back());
  return out;
}

#ifdef STREAMSNAP_BIN
std::string capture_cli(const std::string& args) {
  const std::string cmd = std::string(STREAMSNAP_BIN) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return "<popen failed>";
  std::string out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  pclose(pipe);
  return out;
}
#endif

// 12. Determinism: every criterion above re-runs to an identical digest, and
// each CLI command emits byte-identical output under a repeated seed.
Outcome criterion_12(const std::vector<Outcome>& first) {
  Timer t;
  Outcome o{12, "determinism", false, "", 0.0, 300.0, 0};
  const auto second = run_all_criteria(false);
  int same = 0;
  for (std::size_t i = 0; i < first.size(); ++i)
    if (first[i].digest == second[i].digest) ++same;

  int cli_same = 0, cli_total = 0;
#ifdef STREAMSNAP_BIN
  const auto data_path = std::filesystem::temp_directory_path() /
                         ("streamsnap_acceptance_" +
                          std::to_string(::getpid()) + ".csv");
  {
    std::ofstream f(data_path);
    f << "timestamp,value\n";
    for (int i = 1; i <= 200; ++i) f << "t" << i << ",v" << i << "\n";
  }
  const std::vector<std::string> commands = {
      "run --schedule power:0.1,0.5 --ensemble 10 --seed 7 --endpoints \"" +
          data_path.string() + "\"",
      "analyze --schedule power:1,2 --n 500",
      "coverage --epsilon 0.01 --eta 1e-10",
      "verify --suite exact --seed 42",
  };
  for (const auto& cmd : commands) {
    ++cli_total;
    if (capture_cli(cmd) == capture_cli(cmd)) ++cli_same;
  }
  std::error_code ec;
  std::filesystem::remove(data_path, ec);
#endif

  Digest d;
  for (const auto& oc : second) d.add(oc.digest);
  o.digest = d.value();
  o.elapsed = t.seconds();
  o.pass = same == static_cast<int>(first.size()) && cli_same == cli_total;
  o.detail = "digests=" + std::to_string(same) + "/" +
             std::to_string(first.size()) + " cli=" +
             std::to_string(cli_same) + "/" + std::to_string(cli_total);
  return o;
}

}  // namespace

int main() {
  std::cout << "acceptance gate: 12 criteria, master seed "
            << kMasterSeed << "\n";
  auto outcomes = run_all_criteria(true);
  outcomes.push_back(criterion_12(outcomes));
  print_line(outcomes.back());

  int passed = 0;
  for (const auto& o : outcomes) passed += o.pass ? 1 : 0;
  std::cout << "criteria passed: " << passed << "/" << outcomes.size()
            << std::endl;
  return passed == static_cast<int>(outcomes.size()) ? 0 : 1;
}
