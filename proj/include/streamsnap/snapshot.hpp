#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "streamsnap/schedule.hpp"

namespace streamsnap {

// Single-slot sampler: after `seen` items it retains exactly one payload.
// `age` counts items since the last replacement (inclusive), so the retained
// item's stream position is seen - age + 1. age is in [1, seen] whenever
// seen >= 1; both are 0 only for an empty state.
template <typename Payload>
struct SnapshotState {
  std::uint64_t seen = 0;
  std::uint64_t age = 0;
  std::optional<Payload> payload;

  bool empty() const { return seen == 0; }

  std::uint64_t position() const {
    if (seen == 0) throw std::domain_error("position: no items observed yet");
    return seen - age + 1;
  }

  // One observation step; u must be uniform on [0, 1).
  void update(const Schedule& s, const Payload& item, double u) {
    update_with_alpha(s.alpha_at(seen + 1), item, u);
  }

  // Hot path for callers that precompute alpha; `alpha` must equal
  // s.alpha_at(seen + 1) for the schedule being run.
  void update_with_alpha(double alpha, const Payload& item, double u) {
    ++seen;
    if (u < alpha) {
      age = 1;
      payload = item;
    } else {
      ++age;
    }
  }
};

}  // namespace streamsnap
