#pragma once

#include <cstdint>
#include <vector>

#include "streamsnap/schedule.hpp"

namespace streamsnap {

// Exact finite-n law of the snapshot age K_n (items since last replacement,
// in [1, n]) and of the retained position L_n = n + 1 - K_n. Products of
// (1 - alpha_i) factors are accumulated as sums of log1p(-alpha_i); any
// factor with alpha_i >= 1 short-circuits the product to zero.

// Pr[K_n = k] = alpha_{n-k+1} * prod_{i=n-k+2}^{n} (1 - alpha_i).
double age_pmf(const Schedule& s, std::uint64_t n, std::uint64_t k);

// Pr[K_n >= k] = prod_{i=n-k+2}^{n} (1 - alpha_i).
double age_survival(const Schedule& s, std::uint64_t n, std::uint64_t k);

// Pr[L_n = k] = Pr[K_n = n + 1 - k].
double position_pmf(const Schedule& s, std::uint64_t n, std::uint64_t k);

// E[K_n] via the recurrence E[K_{m+1}] = 1 + (1 - alpha_{m+1}) E[K_m].
double expected_age(const Schedule& s, std::uint64_t n);

// E[L_n] = (n + 1) - E[K_n].
double expected_position(const Schedule& s, std::uint64_t n);

// Whole distributions in one O(n) sweep; out[k-1] = value at k.
std::vector<double> age_pmf_all(const Schedule& s, std::uint64_t n);
std::vector<double> age_survival_all(const Schedule& s, std::uint64_t n);

// E[K_m] for every prefix m in [1, n]; out[m-1] = E[K_m].
std::vector<double> expected_age_sweep(const Schedule& s, std::uint64_t n);

}  // namespace streamsnap
