#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "streamsnap/rng.hpp"
#include "streamsnap/schedule.hpp"
#include "streamsnap/snapshot.hpp"

namespace streamsnap {

// Stream fractions whose neighbourhoods an ensemble is meant to cover.
class TargetSet {
 public:
  // Deciles k/10 for k = 1..9.
  TargetSet();
  // Fractions must be strictly increasing and lie in (0, 1).
  explicit TargetSet(std::vector<double> fractions);

  const std::vector<double>& fractions() const { return fractions_; }
  std::size_t size() const { return fractions_.size(); }

 private:
  std::vector<double> fractions_;
};

// Ensemble quality after n items: the worst, over targets f, distance from
// f*n to the nearest retained position, normalized by n. Q <= eps iff every
// target has a member within eps*n of it.
double quality_from_positions(std::span<const std::uint64_t> positions,
                              std::uint64_t n, const TargetSet& targets);

// Smallest ensemble size M with T (1 - 2 eps)^M <= eta: with M independent
// uniform positions, each of T targets is missed by the whole ensemble at
// radius eps*n with probability at most (1 - 2 eps)^M. Requires
// eps in (0, 1/2), eta in (0, 1), T >= 1.
std::uint64_t coverage_size(double epsilon, double eta,
                            std::uint64_t num_targets);

// M independent snapshot samplers advanced in lockstep over one stream.
// Member j draws with key stream_key(seed_key(seed), j) and counter i for
// item i, so parallel member updates reproduce the serial results exactly
// and update-by-update runs equal whole-stream runs.
template <typename Payload>
class Ensemble {
 public:
  Ensemble(Schedule schedule, std::size_t members, std::uint64_t seed)
      : schedule_(std::move(schedule)), states_(members), keys_(members),
        seed_(seed) {
    if (members == 0) throw std::domain_error("ensemble: needs at least one member");
    const std::uint64_t root = seed_key(seed);
    for (std::size_t j = 0; j < members; ++j) keys_[j] = stream_key(root, j);
  }

  // One item for every member; OpenMP-parallel across members.
  void update(const Payload& item) {
    const std::uint64_t step = seen_ + 1;
    const double a = schedule_.alpha_at(step);
    const std::int64_t m = static_cast<std::int64_t>(states_.size());
#pragma omp parallel for schedule(static) if (m >= 256)
    for (std::int64_t j = 0; j < m; ++j) {
      states_[static_cast<std::size_t>(j)].update_with_alpha(
          a, item, draw_unit(keys_[static_cast<std::size_t>(j)], step));
    }
    ++seen_;
  }

  // Reference: single-threaded, alpha recomputed through the schedule.
  void update_serial(const Payload& item) {
    const std::uint64_t step = seen_ + 1;
    for (std::size_t j = 0; j < states_.size(); ++j)
      states_[j].update(schedule_, item, draw_unit(keys_[j], step));
    ++seen_;
  }

  // Whole-stream kernel: parallel across members, each member consuming the
  // span with precomputed alphas.
  void run(std::span<const Payload> items) {
    const std::uint64_t start = seen_;
    const auto alpha = alpha_table(schedule_, start + items.size());
    const std::int64_t m = static_cast<std::int64_t>(states_.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t j = 0; j < m; ++j) {
      auto& st = states_[static_cast<std::size_t>(j)];
      const std::uint64_t key = keys_[static_cast<std::size_t>(j)];
      for (std::size_t idx = 0; idx < items.size(); ++idx) {
        const std::uint64_t step = start + idx + 1;
        st.update_with_alpha(alpha[step], items[idx], draw_unit(key, step));
      }
    }
    seen_ += items.size();
  }

  void run_serial(std::span<const Payload> items) {
    for (const Payload& item : items) update_serial(item);
  }

  std::uint64_t seen() const { return seen_; }
  std::size_t size() const { return states_.size(); }
  std::uint64_t seed() const { return seed_; }
  const Schedule& schedule() const { return schedule_; }

  const SnapshotState<Payload>& member(std::size_t j) const {
    return states_.at(j);
  }

  std::vector<std::uint64_t> positions() const {
    std::vector<std::uint64_t> out(states_.size());
    for (std::size_t j = 0; j < states_.size(); ++j) out[j] = states_[j].position();
    return out;
  }

  double quality(const TargetSet& targets) const {
    const auto pos = positions();
    return quality_from_positions(pos, seen_, targets);
  }

 private:
  Schedule schedule_;
  std::vector<SnapshotState<Payload>> states_;
  std::vector<std::uint64_t> keys_;
  std::uint64_t seed_;
  std::uint64_t seen_ = 0;
};

}  // namespace streamsnap
