#include "streamsnap/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "streamsnap/ensemble.hpp"
#include "streamsnap/exact.hpp"
#include "streamsnap/format.hpp"
#include "streamsnap/limits.hpp"
#include "streamsnap/rng.hpp"
#include "streamsnap/simulate.hpp"

namespace streamsnap {

namespace {

constexpr double kChiSquare9At999 = 27.877;  // chi^2_9 quantile at p = 0.999

const std::vector<Schedule>& law_variants() {
  static const std::vector<Schedule> v = {
      Schedule::uniform(),
      Schedule::constant(2.0),
      Schedule::constant(10.0),
      Schedule::power_law(0.5, 0.0),
      Schedule::power_law(1.0, 0.5),
      Schedule::power_law(0.1, 0.5),
      Schedule::power_law(2.0, 1.0),
      Schedule::power_law(1.0, 1.5),
      Schedule::power_law(4.0, 2.0),
      Schedule::power_law(1.0, 3.0),
  };
  return v;
}

// Distinct deterministic sub-seed per check, all derived from the user seed.
std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t id) {
  return draw_bits(seed_key(seed), 0xC0FFEE00ull + id);
}

double chi_square_deciles(const std::vector<std::uint64_t>& positions,
                          std::uint64_t n) {
  std::array<double, 10> obs{};
  for (const std::uint64_t p : positions) ++obs[((p - 1) * 10) / n];
  const double expect = static_cast<double>(positions.size()) / 10.0;
  double chi2 = 0.0;
  for (const double o : obs) chi2 += (o - expect) * (o - expect) / expect;
  return chi2;
}

}  // namespace

std::vector<TestReport> verify_exact(std::uint64_t seed) {
  std::vector<TestReport> out;
  const auto& variants = law_variants();
  constexpr std::uint64_t kNMax = 300;

  {  // Total mass of the age law is 1 for every variant and prefix length.
    double worst = 0.0;
    for (const Schedule& s : variants)
      for (std::uint64_t n = 1; n <= kNMax; ++n) {
        const auto pmf = age_pmf_all(s, n);
        const double sum = std::accumulate(pmf.begin(), pmf.end(), 0.0);
        worst = std::max(worst, std::fabs(sum - 1.0));
      }
    out.push_back(make_report("pmf-normalization", worst, 1e-9, 0, seed));
  }

  {  // The uniform schedule's age is exactly uniform on [1, n].
    const Schedule u = Schedule::uniform();
    double worst_pmf = 0.0, worst_mean = 0.0;
    for (std::uint64_t n = 1; n <= kNMax; ++n) {
      const auto pmf = age_pmf_all(u, n);
      for (std::uint64_t k = 1; k <= n; ++k)
        worst_pmf = std::max(
            worst_pmf, std::fabs(pmf[k - 1] - 1.0 / static_cast<double>(n)));
      worst_mean = std::max(
          worst_mean, std::fabs(expected_age(u, n) -
                                static_cast<double>(n + 1) / 2.0));
    }
    out.push_back(make_report("uniform-pmf-exact", worst_pmf, 1e-12, 0, seed));
    out.push_back(
        make_report("uniform-mean-closed-form", worst_mean, 1e-9, 0, seed));
  }

  {  // One-step law recurrence: next[k+1] = (1 - alpha_{n+1}) * cur[k],
     // next[1] = alpha_{n+1}.
    double worst = 0.0;
    for (const Schedule& s : variants) {
      auto cur = age_pmf_all(s, 1);
      for (std::uint64_t n = 1; n < 150; ++n) {
        const auto next = age_pmf_all(s, n + 1);
        const double a = s.alpha_at(n + 1);
        worst = std::max(worst, std::fabs(next[0] - a));
        for (std::uint64_t k = 1; k <= n; ++k)
          worst = std::max(worst, std::fabs(next[k] - (1.0 - a) * cur[k - 1]));
        cur = next;
      }
    }
    out.push_back(make_report("law-recurrence", worst, 1e-12, 0, seed));
  }

  {  // pmf(n,k) = survival(n,k) - survival(n,k+1), with survival(n,n+1) = 0.
    double worst = 0.0;
    for (const Schedule& s : variants)
      for (std::uint64_t n = 1; n <= kNMax;
           n = (n < 60 ? n + 1 : n + 40)) {
        const auto pmf = age_pmf_all(s, n);
        const auto surv = age_survival_all(s, n);
        for (std::uint64_t k = 1; k <= n; ++k) {
          const double next = k < n ? surv[k] : 0.0;
          worst = std::max(worst, std::fabs(pmf[k - 1] - (surv[k - 1] - next)));
        }
      }
    out.push_back(make_report("survival-coherence", worst, 1e-12, 0, seed));
  }

  {  // expected_age equals the pmf-weighted sum.
    double worst = 0.0;
    for (const Schedule& s : variants)
      for (std::uint64_t n = 1; n <= kNMax; ++n) {
        const auto pmf = age_pmf_all(s, n);
        double mean = 0.0;
        for (std::uint64_t k = 1; k <= n; ++k)
          mean += static_cast<double>(k) * pmf[k - 1];
        worst = std::max(worst, std::fabs(mean - expected_age(s, n)));
      }
    out.push_back(make_report("expectation-identity", worst, 1e-9, 0, seed));
  }

  {  // Constant schedule: E[K_n] = a (1 - ((a-1)/a)^n) in closed form.
    double worst = 0.0;
    for (const double a : {1.5, 2.0, 10.0}) {
      const Schedule s = Schedule::constant(a);
      for (std::uint64_t n = 1; n <= kNMax; ++n) {
        const double closed =
            a * (1.0 - std::pow((a - 1.0) / a, static_cast<double>(n)));
        worst = std::max(worst, std::fabs(expected_age(s, n) - closed));
      }
    }
    out.push_back(
        make_report("constant-mean-closed-form", worst, 1e-9, 0, seed));
  }

  {  // Brute-force oracle (literal paths, then recurrence construction).
    double worst = 0.0;
    for (const Schedule& s : variants)
      for (std::uint64_t n = 1; n <= 30; ++n) {
        const auto oracle = oracle_age_pmf(s, n);
        const auto pmf = age_pmf_all(s, n);
        for (std::uint64_t k = 0; k < n; ++k)
          worst = std::max(worst, std::fabs(oracle[k] - pmf[k]));
      }
    out.push_back(make_report("oracle-agreement", worst, 1e-12, 0, seed));
  }

  {  // Recurrence-built pmf matches the log-space pmf deeper in n.
    double worst = 0.0;
    for (const Schedule& s : variants)
      for (const std::uint64_t n : {50ull, 100ull, 200ull, 300ull}) {
        const auto oracle = recursion_age_pmf(s, n);
        const auto pmf = age_pmf_all(s, n);
        for (std::uint64_t k = 0; k < n; ++k)
          worst = std::max(worst, std::fabs(oracle[k] - pmf[k]));
      }
    out.push_back(make_report("recursion-oracle", worst, 1e-12, 0, seed));
  }

  {  // Schedule domination implies expected-age domination (5 pairs).
    const std::pair<Schedule, Schedule> pairs[] = {
        {Schedule::uniform(), Schedule::power_law(2.0, 1.0)},
        {Schedule::power_law(1.0, 1.0), Schedule::uniform()},
        {Schedule::power_law(1.0, 2.0), Schedule::power_law(1.0, 1.0)},
        {Schedule::constant(10.0), Schedule::constant(2.0)},
        {Schedule::power_law(0.5, 0.5), Schedule::power_law(1.0, 0.5)},
    };
    for (const auto& [s, sp] : pairs) {
      TestReport r = check_monotonicity(s, sp, kNMax);
      r.seed = seed;
      out.push_back(std::move(r));
    }
  }

  {  // Empirical pmf from seeded simulation stays within 4 binomial standard
     // errors of the exact law, per bin.
    const Schedule sims[] = {Schedule::uniform(), Schedule::constant(2.0),
                             Schedule::power_law(1.0, 0.5)};
    constexpr std::uint64_t kN = 50, kTrials = 100000;
    double worst = 0.0;
    std::uint64_t id = 0;
    for (const Schedule& s : sims) {
      const auto emp = simulate_terminal(s, kN, kTrials, derived_seed(seed, id++));
      const auto pmf = age_pmf_all(s, kN);
      for (std::uint64_t k = 1; k <= kN; ++k) {
        const double p = pmf[k - 1];
        const double se =
            std::sqrt(p * (1.0 - p) / static_cast<double>(kTrials));
        if (se == 0.0) continue;
        const double phat = static_cast<double>(emp.counts[k]) /
                            static_cast<double>(kTrials);
        worst = std::max(worst, std::fabs(phat - p) / (4.0 * se));
      }
    }
    out.push_back(
        make_report("simulation-agreement-4se", worst, 1.0, 300000, seed));
  }

  {  // Kernel and forward-reference simulators see the same draws, so their
     // histograms must be identical; repeat runs must be identical too.
    std::uint64_t diffs = 0;
    const Schedule s = Schedule::power_law(1.0, 0.5);
    const std::uint64_t sub = derived_seed(seed, 100);
    const auto a = simulate_terminal(s, 300, 5000, sub);
    const auto b = simulate_terminal_serial(s, 300, 5000, sub);
    const auto c = simulate_terminal(s, 300, 5000, sub);
    for (std::uint64_t k = 0; k <= 300; ++k) {
      diffs += a.counts[k] != b.counts[k];
      diffs += a.counts[k] != c.counts[k];
    }
    out.push_back(make_report("simulation-determinism",
                              static_cast<double>(diffs), 0.0, 5000, seed));
  }

  return out;
}

std::vector<TestReport> verify_limits(std::uint64_t seed) {
  std::vector<TestReport> out;

  {  // Regime boundaries are total and single-valued.
    struct Case {
      double g, alpha;
      Regime want;
    };
    const Case cases[] = {
        {1.0, 0.0, Regime::kConstantGeo},
        {0.5, 0.0, Regime::kConstantGeo},
        {0.1, 0.5, Regime::kSublinearExp},
        {1.0, 0.999, Regime::kSublinearExp},
        {1.0, 1.0, Regime::kLinearBeta},
        {2.0, 1.0, Regime::kLinearBeta},
        {1.0, 1.25, Regime::kSubquadraticL},
        {1.0, 1.999, Regime::kSubquadraticL},
        {1.0, 2.0, Regime::kQuadraticL},
        {1.0, 2.001, Regime::kSuperquadraticL},
        {1.0, 3.0, Regime::kSuperquadraticL},
    };
    std::uint64_t bad = 0;
    for (const auto& c : cases)
      bad += classify(c.g, c.alpha).regime != c.want;
    out.push_back(make_report("regime-boundaries", static_cast<double>(bad),
                              0.0, 0, seed));
  }

  out.push_back(make_report(
      "zeta-basel", std::fabs(zeta(2.0) - std::numbers::pi * std::numbers::pi / 6.0),
      1e-10, 0, seed));
  out.push_back(make_report(
      "zeta-apery", std::fabs(zeta(3.0) - 1.2020569031595942854), 1e-10, 0,
      seed));

  {  // H_n - ln n -> Euler-Mascheroni, with the 1/(2n) - 1/(12n^2) tail.
    constexpr std::uint64_t n = 1000000;
    const double nd = static_cast<double>(n);
    const double predicted = std::log(nd) + std::numbers::egamma +
                             1.0 / (2.0 * nd) - 1.0 / (12.0 * nd * nd);
    out.push_back(make_report("harmonic-asymptotic",
                              std::fabs(harmonic(n) - predicted), 1e-12, 0,
                              seed));
    out.push_back(make_report(
        "harmonic-pow-consistency",
        std::fabs(harmonic_pow(100000, 1.0) - harmonic(100000)), 1e-9, 0,
        seed));
  }

  {  // Limit CDFs: within [0,1], non-decreasing, correct support edges.
    double worst = 0.0;
    const auto scan = [&worst](const RegimeDescriptor& r, double lo, double hi,
                               int points) {
      double prev = -1.0;
      for (int i = 0; i <= points; ++i) {
        const double x =
            lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points);
        const double f = limiting_cdf(r, x);
        worst = std::max(worst, std::max(-f, f - 1.0));  // range
        if (i > 0) worst = std::max(worst, prev - f);    // monotone
        prev = f;
      }
    };
    const auto geo = classify(0.5, 0.0);
    const auto expo = classify(1.0, 0.5);
    const auto beta = classify(2.0, 1.0);
    scan(geo, -1.0, 60.0, 1000);
    scan(expo, -1.0, 40.0, 1000);
    scan(beta, -0.5, 1.5, 1000);
    worst = std::max(worst, std::fabs(limiting_cdf(geo, 0.999)));
    worst = std::max(worst, std::fabs(limiting_cdf(expo, 0.0)));
    worst = std::max(worst, std::fabs(limiting_cdf(beta, 0.0)));
    worst = std::max(worst, std::fabs(limiting_cdf(beta, 1.0) - 1.0));
    worst = std::max(worst, std::fabs(limiting_cdf(expo, 40.0) - 1.0));
    out.push_back(make_report("limit-cdf-validity", worst, 1e-12, 0, seed));
  }

  {  // Constant schedule vs its geometric limit, plus the closed-form mean.
    const Schedule s = Schedule::constant(2.0);
    constexpr std::uint64_t kN = 50, kTrials = 100000;
    const auto emp = simulate_terminal(s, kN, kTrials, derived_seed(seed, 1));
    const auto r = classify(s);
    out.push_back(make_report(
        "ks-geometric[a=2]",
        ks_distance(emp, 1.0, [&](double x) { return limiting_cdf(r, x); }),
        0.02, kTrials, seed));
    const double closed =
        2.0 * (1.0 - std::pow(0.5, static_cast<double>(kN)));
    out.push_back(make_report("geometric-mean-ratio[a=2]",
                              std::fabs(emp.mean() / closed - 1.0), 0.02,
                              kTrials, seed));
  }

  {  // Sublinear schedule vs the exponential limit.
    const Schedule s = Schedule::power_law(1.0, 0.5);
    constexpr std::uint64_t kN = 10000, kTrials = 100000;
    const double scale = std::sqrt(static_cast<double>(kN));
    const auto emp = simulate_terminal(s, kN, kTrials, derived_seed(seed, 2));
    const auto r = classify(s);
    out.push_back(make_report(
        "ks-exponential[g=1]",
        ks_distance(emp, scale, [&](double x) { return limiting_cdf(r, x); }),
        0.02, kTrials, seed));
    out.push_back(make_report(
        "exponential-mean-ratio[g=1]",
        std::fabs(emp.mean() / expected_age_asymptotic(r, kN) - 1.0), 0.05,
        kTrials, seed));
  }

  {  // Uniform schedule's normalized age against Beta(1,1).
    const Schedule s = Schedule::uniform();
    constexpr std::uint64_t kN = 10000, kTrials = 100000;
    const auto emp = simulate_terminal(s, kN, kTrials, derived_seed(seed, 3));
    const auto r = classify(s);
    out.push_back(make_report(
        "ks-beta-uniform",
        ks_distance(emp, static_cast<double>(kN),
                    [&](double x) { return limiting_cdf(r, x); }),
        0.01, kTrials, seed));
  }

  {  // Linear schedule vs Beta(1,2), and the n/(g+1) mean.
    const Schedule s = Schedule::power_law(2.0, 1.0);
    constexpr std::uint64_t kN = 10000, kTrials = 100000;
    const auto emp = simulate_terminal(s, kN, kTrials, derived_seed(seed, 4));
    const auto r = classify(s);
    out.push_back(make_report(
        "ks-beta[g=2]",
        ks_distance(emp, static_cast<double>(kN),
                    [&](double x) { return limiting_cdf(r, x); }),
        0.02, kTrials, seed));
    out.push_back(make_report(
        "beta-mean-ratio[g=2]",
        std::fabs(emp.mean() / expected_age_asymptotic(r, kN) - 1.0), 0.05,
        kTrials, seed));
  }

  {  // Exact means vs first-order predictors at n = 10^4.
    const auto expo = classify(1.0, 0.5);
    out.push_back(make_report(
        "exponential-exact-agreement",
        std::fabs(expected_age(Schedule::power_law(1.0, 0.5), 10000) /
                      expected_age_asymptotic(expo, 10000) -
                  1.0),
        0.05, 0, seed));
    const auto beta = classify(2.0, 1.0);
    out.push_back(make_report(
        "beta-exact-agreement",
        std::fabs(expected_age(Schedule::power_law(2.0, 1.0), 10000) /
                      expected_age_asymptotic(beta, 10000) -
                  1.0),
        0.05, 0, seed));
  }

  {  // Subquadratic predictors with their second-order terms.
    for (const double alpha : {1.25, 1.5}) {
      const auto r = classify(1.0, alpha);
      const double exact =
          expected_position(Schedule::power_law(1.0, alpha), 10000);
      const double pred = expected_position_asymptotic(r, 10000);
      out.push_back(make_report(
          "subquadratic-agreement[alpha=" + format_double(alpha) + "]",
          std::fabs(exact / pred - 1.0), 0.10, 0, seed));
    }
  }

  {  // Quadratic regime: O(1) band and log-slope.
    const double exact = expected_position(Schedule::power_law(1.0, 2.0), 10000);
    out.push_back(make_report(
        "quadratic-band[g=1]",
        std::fabs(exact - std::log(10000.0)), 3.0, 0, seed));
    const std::vector<std::uint64_t> grid = {100, 1000, 10000};
    TestReport r1 = regression_expected_position(1.0, grid, 0, seed);
    out.push_back(std::move(r1));
    TestReport r3 = regression_expected_position(3.0, grid, 0, seed);
    out.push_back(std::move(r3));
  }

  {  // Superquadratic regime: exact E[L_n] below the constant bound, and
     // non-decreasing in n (each increment is alpha_{n+1} E[K_n] >= 0).
    const Schedule s = Schedule::power_law(1.0, 3.0);
    const auto r = classify(s);
    const double bound = expected_position_asymptotic(r, 10000);
    const auto ek = expected_age_sweep(s, 10000);
    double worst_bound = -bound;
    double worst_drop = 0.0;
    double prev = 0.0;
    for (std::uint64_t n = 1; n <= 10000; ++n) {
      const double el = static_cast<double>(n + 1) - ek[n - 1];
      worst_bound = std::max(worst_bound, el - bound);
      if (n > 1) worst_drop = std::max(worst_drop, prev - el);
      prev = el;
    }
    out.push_back(
        make_report("superquadratic-bound", worst_bound, 0.0, 0, seed));
    out.push_back(
        make_report("superquadratic-monotone", worst_drop, 1e-12, 0, seed));

    // Same bound on seeded empirical means of L_n.
    double worst_emp = -bound;
    std::uint64_t id = 10;
    for (const std::uint64_t n : {10ull, 100ull, 1000ull}) {
      const auto emp = simulate_terminal(s, n, 20000, derived_seed(seed, id++));
      const double mean_l = static_cast<double>(n + 1) - emp.mean();
      worst_emp = std::max(worst_emp, mean_l - bound);
    }
    out.push_back(make_report("superquadratic-empirical-bound", worst_emp,
                              0.0, 60000, seed));
  }

  return out;
}

std::vector<TestReport> verify_ensemble(std::uint64_t seed) {
  std::vector<TestReport> out;

  {  // Full ensemble over 10^5 items: decile uniformity of retained
     // positions, and agreement with the scan kernel at full scale.
    constexpr std::uint64_t kN = 100000;
    constexpr std::size_t kM = 1250;
    const std::uint64_t sub = derived_seed(seed, 1);
    Ensemble<std::uint64_t> ens(Schedule::uniform(), kM, sub);
    std::vector<std::uint64_t> items(kN);
    std::iota(items.begin(), items.end(), 1ull);
    ens.run(items);
    const auto pos = ens.positions();
    out.push_back(make_report("decile-uniformity-chi2",
                              chi_square_deciles(pos, kN), kChiSquare9At999,
                              kM, seed));

    const auto kernel = terminal_positions(Schedule::uniform(), kN, kM, sub);
    std::uint64_t diffs = 0;
    for (std::size_t j = 0; j < kM; ++j) diffs += pos[j] != kernel[j];
    // Retained payload must be the item at the retained position.
    for (std::size_t j = 0; j < kM; ++j)
      diffs += *ens.member(j).payload != pos[j];
    out.push_back(make_report("kernel-equivalence",
                              static_cast<double>(diffs), 0.0, kM, seed));
  }

  {  // update-by-update, whole-stream, and serial paths coincide.
    constexpr std::uint64_t kN = 2048;
    constexpr std::size_t kM = 64;
    const std::uint64_t sub = derived_seed(seed, 2);
    const Schedule s = Schedule::power_law(1.0, 0.5);
    std::vector<std::uint64_t> items(kN);
    std::iota(items.begin(), items.end(), 1ull);
    Ensemble<std::uint64_t> by_update(s, kM, sub);
    for (const auto& it : items) by_update.update(it);
    Ensemble<std::uint64_t> by_run(s, kM, sub);
    by_run.run(items);
    Ensemble<std::uint64_t> by_serial(s, kM, sub);
    by_serial.run_serial(items);
    std::uint64_t diffs = 0;
    for (std::size_t j = 0; j < kM; ++j) {
      diffs += by_update.member(j).age != by_run.member(j).age;
      diffs += by_update.member(j).age != by_serial.member(j).age;
      diffs += *by_update.member(j).payload != *by_run.member(j).payload;
      diffs += *by_update.member(j).payload != *by_serial.member(j).payload;
    }
    out.push_back(make_report("update-path-equivalence",
                              static_cast<double>(diffs), 0.0, kM, seed));

    Ensemble<std::uint64_t> again(s, kM, sub);
    again.run(items);
    std::uint64_t rediffs = 0;
    for (std::size_t j = 0; j < kM; ++j)
      rediffs += by_run.member(j).age != again.member(j).age;
    out.push_back(make_report("ensemble-determinism",
                              static_cast<double>(rediffs), 0.0, kM, seed));
  }

  {  // Quality metric's two closed-form cases.
    const TargetSet deciles;
    std::vector<std::uint64_t> exact_deciles;
    for (std::uint64_t k = 1; k <= 9; ++k) exact_deciles.push_back(k * 100);
    out.push_back(make_report(
        "quality-exact-deciles",
        quality_from_positions(exact_deciles, 1000, deciles), 1e-12, 0, seed));
    const std::vector<std::uint64_t> single = {1000};
    out.push_back(make_report(
        "quality-worst-case",
        std::fabs(quality_from_positions(single, 1000,
                                         TargetSet({0.5})) -
                  0.5),
        1e-12, 0, seed));
  }

  {  // 1% precision proxy: Q <= 0.01 in at least 99 of 100 seeded runs.
    constexpr std::uint64_t kN = 100000;
    constexpr std::uint64_t kM = 1250;
    const TargetSet deciles;
    std::uint64_t failures = 0;
    for (std::uint64_t t = 0; t < 100; ++t) {
      const auto pos = terminal_positions(Schedule::uniform(), kN, kM,
                                          derived_seed(seed, 1000 + t));
      failures += quality_from_positions(pos, kN, deciles) > 0.01;
    }
    out.push_back(make_report("quality-100-seeds",
                              static_cast<double>(failures), 1.0, 100, seed));
  }

  {  // Coverage-size formula values and monotonicity.
    out.push_back(make_report(
        "coverage-size-1249",
        std::fabs(static_cast<double>(coverage_size(0.01, 1e-10, 9)) - 1249.0),
        0.0, 0, seed));
    out.push_back(make_report(
        "coverage-size-single",
        std::fabs(static_cast<double>(coverage_size(0.25, 0.5, 1)) - 1.0),
        0.0, 0, seed));

    std::uint64_t violations = 0;
    std::uint64_t prev = ~0ull;
    for (const double eps : {0.01, 0.05, 0.1, 0.2, 0.3, 0.4}) {
      const std::uint64_t m = coverage_size(eps, 1e-6, 9);
      violations += m > prev;
      prev = m;
    }
    std::uint64_t prev_t = 0;
    for (const std::uint64_t t : {1ull, 3ull, 9ull, 27ull, 81ull}) {
      const std::uint64_t m = coverage_size(0.01, 1e-6, t);
      violations += m < prev_t;
      prev_t = m;
    }
    std::uint64_t prev_eta = 0;
    for (const double eta : {0.1, 1e-2, 1e-4, 1e-8, 1e-12}) {
      const std::uint64_t m = coverage_size(0.01, eta, 9);
      violations += m < prev_eta;
      prev_eta = m;
    }
    out.push_back(make_report("coverage-size-monotone",
                              static_cast<double>(violations), 0.0, 0, seed));
  }

  {  // Empirical coverage at the formula's M: all deciles hit within
     // eps*n except a few-in-10^4 allowance around eta.
    constexpr double kEps = 0.01;
    constexpr std::uint64_t kN = 10000, kTrials = 10000;
    const std::uint64_t m = coverage_size(kEps, 1e-4, 9);
    const TargetSet deciles;
    std::uint64_t misses = 0;
    for (std::uint64_t t = 0; t < kTrials; ++t) {
      const auto pos = terminal_positions(Schedule::uniform(), kN, m,
                                          derived_seed(seed, 20000 + t));
      bool missed = false;
      for (const double f : deciles.fractions()) {
        const double want = f * static_cast<double>(kN);
        double best = static_cast<double>(kN);
        for (const std::uint64_t p : pos)
          best = std::min(best, std::fabs(want - static_cast<double>(p)));
        if (best > kEps * static_cast<double>(kN)) {
          missed = true;
          break;
        }
      }
      misses += missed;
    }
    out.push_back(make_report("empirical-coverage[M=" + std::to_string(m) + "]",
                              static_cast<double>(misses), 5.0, kTrials,
                              seed));
  }

  return out;
}

std::vector<TestReport> verify_suite(std::string_view selector,
                                     std::uint64_t seed) {
  if (selector == "exact") return verify_exact(seed);
  if (selector == "limits") return verify_limits(seed);
  if (selector == "ensemble") return verify_ensemble(seed);
  if (selector == "all") {
    auto out = verify_exact(seed);
    auto l = verify_limits(seed);
    auto e = verify_ensemble(seed);
    out.insert(out.end(), std::make_move_iterator(l.begin()),
               std::make_move_iterator(l.end()));
    out.insert(out.end(), std::make_move_iterator(e.begin()),
               std::make_move_iterator(e.end()));
    return out;
  }
  throw std::invalid_argument("verify: unknown suite '" + std::string(selector) +
                              "' (expected all, exact, limits or ensemble)");
}

}  // namespace streamsnap
