#pragma once

// Seeded random instances.
//
// The stream is splitmix64 (Steele, Lea and Flood). Pairs (agent, good) are
// drawn row-major, one 64-bit draw each; a pair is big when
// draw < big_prob * 2^64, compared exactly.

#include <cstdint>

#include "nsw2v/core.hpp"

namespace nsw2v {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound), bound >= 1. Rejection keeps it unbiased.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return x % bound;
  }

 private:
  std::uint64_t state_;
};

/// Each (agent, good) pair is big independently with probability
/// num/den. Requires m >= n, 0 <= num <= den, den >= 1 and 0 <= p < q.
Instance random_instance(std::size_t agents, std::size_t goods, Value small, Value big,
                         std::uint64_t prob_num, std::uint64_t prob_den, std::uint64_t seed);

}  // namespace nsw2v
