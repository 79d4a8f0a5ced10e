#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "streamsnap/schedule.hpp"

namespace streamsnap {

// Histogram of terminal snapshot ages over repeated seeded runs.
// counts[k] is the number of trials that ended with age k; counts[0] unused.
struct EmpiricalDistribution {
  std::vector<std::uint64_t> counts;
  std::uint64_t trials = 0;
  std::uint64_t n = 0;

  double mean() const;
};

// One check's outcome in the machine-readable harness format.
struct TestReport {
  std::string name;
  double observed = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;

  // "<name> <observed> <threshold> <PASS|FAIL> seed=<seed>"
  std::string line() const;
};

// pass = observed <= threshold.
TestReport make_report(std::string name, double observed, double threshold,
                       std::uint64_t trials, std::uint64_t seed);

// sup over the empirical jump points k/scale of |F_emp(k/scale) - cdf(k/scale)|.
double ks_distance(const EmpiricalDistribution& e, double scale,
                   const std::function<double(double)>& cdf);

// Pointwise schedule domination alpha_n <= alpha'_n (checked, violations are
// an invalid_argument) must give E[K_n](s) >= E[K_n](s') for every n.
// observed = max over n <= n_max of the deficit E'[K_n] - E[K_n].
TestReport check_monotonicity(const Schedule& s, const Schedule& s_prime,
                              std::uint64_t n_max);

// Least-squares slope of exact E[L_n] against ln n for the alpha = 2
// schedule with the given gain; pass iff |slope - g| <= 0.1 g. The grid
// needs >= 2 points spanning at least a decade. Values are exact recurrence
// results; trials and seed are recorded in the report only.
TestReport regression_expected_position(double g,
                                        const std::vector<std::uint64_t>& n_grid,
                                        std::uint64_t trials,
                                        std::uint64_t seed);

// Exhaustive oracle: walks all 2^(n-1) replacement patterns and accumulates
// literal probability products. Exponential; refuses n > 20.
std::vector<double> enumerate_age_pmf(const Schedule& s, std::uint64_t n);

// Independent oracle: the one-step law recurrence carried as a full pmf
// vector, O(n^2) time, no log-space products.
std::vector<double> recursion_age_pmf(const Schedule& s, std::uint64_t n);

// Combined brute-force oracle, capped at n = 30: literal path enumeration
// for n <= 12, the recurrence construction for 13 <= n <= 30. Two
// independently built references for the analytic pmf.
std::vector<double> oracle_age_pmf(const Schedule& s, std::uint64_t n);

}  // namespace streamsnap
