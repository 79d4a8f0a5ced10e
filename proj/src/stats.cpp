#include "streamsnap/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "streamsnap/exact.hpp"
#include "streamsnap/format.hpp"

namespace streamsnap {

double EmpiricalDistribution::mean() const {
  if (trials == 0)
    throw std::domain_error("EmpiricalDistribution::mean: no trials");
  double acc = 0.0;
  for (std::uint64_t k = 1; k < counts.size(); ++k)
    acc += static_cast<double>(k) * static_cast<double>(counts[k]);
  return acc / static_cast<double>(trials);
}

std::string TestReport::line() const {
  return name + " " + format_double(observed) + " " +
         format_double(threshold) + " " + (pass ? "PASS" : "FAIL") +
         " seed=" + std::to_string(seed);
}

TestReport make_report(std::string name, double observed, double threshold,
                       std::uint64_t trials, std::uint64_t seed) {
  TestReport r;
  r.name = std::move(name);
  r.observed = observed;
  r.threshold = threshold;
  r.pass = observed <= threshold;
  r.trials = trials;
  r.seed = seed;
  return r;
}

double ks_distance(const EmpiricalDistribution& e, double scale,
                   const std::function<double(double)>& cdf) {
  if (e.trials == 0 || e.n == 0)
    throw std::domain_error("ks_distance: empty distribution");
  if (!(scale > 0.0)) throw std::domain_error("ks_distance: scale must be > 0");
  const double trials = static_cast<double>(e.trials);
  double d = 0.0;
  std::uint64_t cum = 0;
  for (std::uint64_t k = 1; k <= e.n; ++k) {
    if (e.counts[k] == 0) continue;
    cum += e.counts[k];
    const double x = static_cast<double>(k) / scale;
    d = std::max(d, std::fabs(static_cast<double>(cum) / trials - cdf(x)));
  }
  return d;
}

TestReport check_monotonicity(const Schedule& s, const Schedule& s_prime,
                              std::uint64_t n_max) {
  if (n_max == 0)
    throw std::domain_error("check_monotonicity: n_max must be >= 1");
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    if (s.alpha_at(n) > s_prime.alpha_at(n))
      throw std::invalid_argument(
          "check_monotonicity: domination alpha_n <= alpha'_n violated at n=" +
          std::to_string(n));
  }
  // Lockstep exact recurrences; the dominated schedule must never hold the
  // larger expected age.
  double e = 1.0, ep = 1.0;
  double worst = ep - e;
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    e = 1.0 + (1.0 - s.alpha_at(n)) * e;
    ep = 1.0 + (1.0 - s_prime.alpha_at(n)) * ep;
    worst = std::max(worst, ep - e);
  }
  return make_report("monotonicity[" + s.spec() + "<=" + s_prime.spec() + "]",
                     worst, 1e-12, 0, 0);
}

TestReport regression_expected_position(double g,
                                        const std::vector<std::uint64_t>& n_grid,
                                        std::uint64_t trials,
                                        std::uint64_t seed) {
  if (n_grid.size() < 2)
    throw std::domain_error(
        "regression_expected_position: grid needs at least 2 points");
  std::vector<std::uint64_t> grid = n_grid;
  std::sort(grid.begin(), grid.end());
  if (grid.front() == 0)
    throw std::domain_error("regression_expected_position: n must be >= 1");
  if (static_cast<double>(grid.back()) <
      10.0 * static_cast<double>(grid.front()))
    throw std::domain_error(
        "regression_expected_position: grid must span at least a decade");

  const Schedule s = Schedule::power_law(g, 2.0);
  const auto ek = expected_age_sweep(s, grid.back());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const std::uint64_t n : grid) {
    const double x = std::log(static_cast<double>(n));
    const double y = static_cast<double>(n + 1) - ek[n - 1];
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(grid.size());
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return make_report("quadratic-slope[g=" + format_double(g) + "]",
                     std::fabs(slope - g), 0.1 * g, trials, seed);
}

std::vector<double> enumerate_age_pmf(const Schedule& s, std::uint64_t n) {
  if (n == 0) throw std::domain_error("enumerate_age_pmf: n must be >= 1");
  if (n > 20)
    throw std::domain_error(
        "enumerate_age_pmf: walks 2^(n-1) paths, refusing n > 20");
  const auto alpha = alpha_table(s, n);
  std::vector<double> pmf(n, 0.0);
  // Bit b of a pattern set <=> replacement at step b + 2; step 1 always
  // replaces (alpha_1 = 1).
  const std::uint64_t patterns = 1ull << (n - 1);
  for (std::uint64_t mask = 0; mask < patterns; ++mask) {
    double p = 1.0;
    std::uint64_t last = 1;
    for (std::uint64_t step = 2; step <= n; ++step) {
      if ((mask >> (step - 2)) & 1ull) {
        p *= alpha[step];
        last = step;
      } else {
        p *= 1.0 - alpha[step];
      }
    }
    pmf[n - last] += p;  // age = n - last + 1
  }
  return pmf;
}

std::vector<double> recursion_age_pmf(const Schedule& s, std::uint64_t n) {
  if (n == 0) throw std::domain_error("recursion_age_pmf: n must be >= 1");
  std::vector<double> p{1.0};
  for (std::uint64_t m = 2; m <= n; ++m) {
    std::vector<double> q(m);
    const double a = s.alpha_at(m);
    q[0] = a;
    for (std::uint64_t k = 1; k < m; ++k) q[k] = (1.0 - a) * p[k - 1];
    p = std::move(q);
  }
  return p;
}

std::vector<double> oracle_age_pmf(const Schedule& s, std::uint64_t n) {
  if (n == 0) throw std::domain_error("oracle_age_pmf: n must be >= 1");
  if (n > 30)
    throw std::domain_error("oracle_age_pmf: brute-force oracle capped at n = 30");
  return n <= 12 ? enumerate_age_pmf(s, n) : recursion_age_pmf(s, n);
}

}  // namespace streamsnap
