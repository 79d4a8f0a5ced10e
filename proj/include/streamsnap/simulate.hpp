#pragma once

#include <cstdint>
#include <vector>

#include "streamsnap/schedule.hpp"
#include "streamsnap/stats.hpp"

namespace streamsnap {

// Monte-Carlo terminal-age sampling. Trial t draws with key
// stream_key(seed_key(seed), t) and uses counter i for stream item i, so
// both entry points see identical uniforms and produce identical histograms
// for a given seed, under any thread count.
//
// The kernel scans item indices from n downward and stops at the first
// replacement (alpha_1 = 1 guarantees one exists); expected cost per trial
// is E[K_n] draws. OpenMP-parallel over trials with per-thread histograms.
EmpiricalDistribution simulate_terminal(const Schedule& s, std::uint64_t n,
                                        std::uint64_t trials,
                                        std::uint64_t seed);

// Reference implementation: replays the forward update procedure item by
// item on a single thread.
EmpiricalDistribution simulate_terminal_serial(const Schedule& s,
                                               std::uint64_t n,
                                               std::uint64_t trials,
                                               std::uint64_t seed);

// Final retained positions of `members` independent samplers after n items,
// keyed exactly like Ensemble members; members[j] uses substream j. Same
// downward-scan kernel as simulate_terminal.
std::vector<std::uint64_t> terminal_positions(const Schedule& s,
                                              std::uint64_t n,
                                              std::uint64_t members,
                                              std::uint64_t seed);

}  // namespace streamsnap
