#pragma once

#include <cstdint>
#include <limits>

namespace mveff {

/// SplitMix64 as a UniformRandomBitGenerator. Each Monte Carlo replication
/// gets its own stream keyed by (seed, replication index), so results do
/// not depend on how replications are scheduled across threads.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

inline SplitMix64 replication_stream(std::uint64_t seed, std::uint64_t replication) {
  return SplitMix64(SplitMix64::mix(seed ^ SplitMix64::mix(replication + 0x632BE59BD9B4E019ULL)));
}

}  // namespace mveff
