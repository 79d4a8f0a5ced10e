#include "streamsnap/ensemble.hpp"

#include <cmath>
#include <limits>

#include "streamsnap/format.hpp"

namespace streamsnap {

TargetSet::TargetSet() {
  fractions_.reserve(9);
  for (int k = 1; k <= 9; ++k) fractions_.push_back(k / 10.0);
}

TargetSet::TargetSet(std::vector<double> fractions)
    : fractions_(std::move(fractions)) {
  if (fractions_.empty())
    throw std::domain_error("TargetSet: needs at least one fraction");
  double prev = 0.0;
  for (const double f : fractions_) {
    if (!(f > 0.0 && f < 1.0))
      throw std::domain_error("TargetSet: fractions must lie in (0, 1), got " +
                              format_double(f));
    if (!(f > prev))
      throw std::domain_error(
          "TargetSet: fractions must be strictly increasing");
    prev = f;
  }
}

double quality_from_positions(std::span<const std::uint64_t> positions,
                              std::uint64_t n, const TargetSet& targets) {
  if (n == 0)
    throw std::domain_error("quality: undefined on an empty stream");
  if (positions.empty())
    throw std::domain_error("quality: needs at least one position");
  const double nd = static_cast<double>(n);
  double worst = 0.0;
  for (const double f : targets.fractions()) {
    const double want = f * nd;
    double best = std::numeric_limits<double>::infinity();
    for (const std::uint64_t p : positions)
      best = std::min(best, std::fabs(want - static_cast<double>(p)));
    worst = std::max(worst, best);
  }
  return worst / nd;
}

std::uint64_t coverage_size(double epsilon, double eta,
                            std::uint64_t num_targets) {
  if (!(epsilon > 0.0 && epsilon < 0.5))
    throw std::domain_error("coverage_size: epsilon must lie in (0, 1/2)");
  if (!(eta > 0.0 && eta < 1.0))
    throw std::domain_error("coverage_size: eta must lie in (0, 1)");
  if (num_targets == 0)
    throw std::domain_error("coverage_size: num_targets must be >= 1");
  const double q = 1.0 - 2.0 * epsilon;
  const double t = static_cast<double>(num_targets);
  const auto misses = [&](std::uint64_t m) {
    return t * std::pow(q, static_cast<double>(m)) <= eta;
  };
  // Closed-form start, then settle boundary cases against the predicate
  // itself so ties in the ceil never return an off-by-one size.
  const double ratio = std::log(eta / t) / std::log(q);
  std::uint64_t m =
      ratio <= 1.0 ? 1 : static_cast<std::uint64_t>(std::ceil(ratio - 1e-9));
  while (!misses(m)) ++m;
  while (m > 1 && misses(m - 1)) --m;
  return m;
}

}  // namespace streamsnap
