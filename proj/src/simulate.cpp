#include "streamsnap/simulate.hpp"

#include <stdexcept>

#include "streamsnap/rng.hpp"
#include "streamsnap/snapshot.hpp"

namespace streamsnap {

namespace {

void check_args(std::uint64_t n, std::uint64_t trials) {
  if (n == 0) throw std::domain_error("simulate: n must be >= 1");
  if (trials == 0) throw std::domain_error("simulate: trials must be >= 1");
}

// Index of the last replacement in a run keyed by `key`: the largest i with
// u_i < alpha_i. Identical to what forward simulation retains, because draw
// i is the same pure function of (key, i) either way; alpha[1] = 1 bounds
// the scan.
inline std::uint64_t last_replacement(std::uint64_t key, std::uint64_t n,
                                      const std::vector<double>& alpha) {
  std::uint64_t i = n;
  while (draw_unit(key, i) >= alpha[i]) --i;
  return i;
}

}  // namespace

EmpiricalDistribution simulate_terminal(const Schedule& s, std::uint64_t n,
                                        std::uint64_t trials,
                                        std::uint64_t seed) {
  check_args(n, trials);
  const auto alpha = alpha_table(s, n);
  EmpiricalDistribution out;
  out.n = n;
  out.trials = trials;
  out.counts.assign(n + 1, 0);
  const std::uint64_t root = seed_key(seed);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(n + 1, 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(trials); ++t) {
      const std::uint64_t key = stream_key(root, static_cast<std::uint64_t>(t));
      const std::uint64_t i = last_replacement(key, n, alpha);
      ++local[n - i + 1];
    }
    // Histogram merge is integer addition: order-independent, so the result
    // is identical for any thread count.
#pragma omp critical
    for (std::uint64_t k = 0; k <= n; ++k) out.counts[k] += local[k];
  }
  return out;
}

EmpiricalDistribution simulate_terminal_serial(const Schedule& s,
                                               std::uint64_t n,
                                               std::uint64_t trials,
                                               std::uint64_t seed) {
  check_args(n, trials);
  EmpiricalDistribution out;
  out.n = n;
  out.trials = trials;
  out.counts.assign(n + 1, 0);
  const std::uint64_t root = seed_key(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    const std::uint64_t key = stream_key(root, t);
    SnapshotState<std::uint64_t> st;
    for (std::uint64_t i = 1; i <= n; ++i)
      st.update(s, i, draw_unit(key, i));
    ++out.counts[st.age];
  }
  return out;
}

std::vector<std::uint64_t> terminal_positions(const Schedule& s,
                                              std::uint64_t n,
                                              std::uint64_t members,
                                              std::uint64_t seed) {
  check_args(n, members);
  const auto alpha = alpha_table(s, n);
  std::vector<std::uint64_t> pos(members);
  const std::uint64_t root = seed_key(seed);
#pragma omp parallel for schedule(static)
  for (std::int64_t j = 0; j < static_cast<std::int64_t>(members); ++j) {
    const std::uint64_t key = stream_key(root, static_cast<std::uint64_t>(j));
    // Retained position == index of the last replacement.
    pos[static_cast<std::size_t>(j)] = last_replacement(key, n, alpha);
  }
  return pos;
}

}  // namespace streamsnap
