#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "streamsnap/stats.hpp"

namespace streamsnap {

// Self-verification suites: each returns one TestReport per check, in a
// fixed order. Exact-law checks are deterministic; sampling checks derive
// all randomness from `seed`.
std::vector<TestReport> verify_exact(std::uint64_t seed);
std::vector<TestReport> verify_limits(std::uint64_t seed);
std::vector<TestReport> verify_ensemble(std::uint64_t seed);

// selector: "exact" | "limits" | "ensemble" | "all".
// Unknown selectors raise std::invalid_argument.
std::vector<TestReport> verify_suite(std::string_view selector,
                                     std::uint64_t seed);

}  // namespace streamsnap
