#pragma once

#include <cstdint>

namespace streamsnap {

// Counter-based deterministic generator built on the splitmix64 finalizer.
// Every draw is a pure function of (key, counter), so any consumer can jump
// to an absolute draw index in O(1) and derived streams never overlap by
// construction. This is what makes trial- and member-level parallelism
// reproduce the sequential results bit for bit under any partitioning.

inline constexpr std::uint64_t kWeyl = 0x9E3779B97F4A7C15ull;

inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

// Root key for a user-facing seed.
inline std::uint64_t seed_key(std::uint64_t seed) { return mix64(seed + kWeyl); }

// Key for substream `id` (ensemble member, Monte-Carlo trial, ...) of `key`.
inline std::uint64_t stream_key(std::uint64_t key, std::uint64_t id) {
  return mix64(key ^ mix64(id * kWeyl + 0x632BE59BD9B4E019ull));
}

inline std::uint64_t draw_bits(std::uint64_t key, std::uint64_t counter) {
  return mix64(key + counter * kWeyl);
}

// Uniform on [0, 1), 53 significant bits.
inline double draw_unit(std::uint64_t key, std::uint64_t counter) {
  return static_cast<double>(draw_bits(key, counter) >> 11) * 0x1.0p-53;
}

// Stateful convenience wrapper over the free functions. Draw i of a given
// (seed, substream path) is the same whether produced here or by calling
// draw_unit(key, i) directly.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : key_(seed_key(seed)) {}

  CounterRng substream(std::uint64_t id) const {
    return CounterRng(FromKey{}, stream_key(key_, id));
  }

  std::uint64_t next_bits() { return draw_bits(key_, ++counter_); }
  double next_unit() { return draw_unit(key_, ++counter_); }

  std::uint64_t key() const { return key_; }
  std::uint64_t counter() const { return counter_; }

 private:
  struct FromKey {};
  CounterRng(FromKey, std::uint64_t key) : key_(key) {}

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace streamsnap
