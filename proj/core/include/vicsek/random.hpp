#pragma once

#include <cstdint>
#include <random>

namespace vicsek {

/// Seeded random stream used by every sampler in the library.
///
/// Generator family: std::mt19937_64 (fully specified by the standard),
/// seeded with splitmix64(seed) xor splitmix64(stream + golden ratio).
/// Bounded integers and unit doubles are derived here rather than through
/// std::uniform_*_distribution, whose output is implementation defined, so
/// a (seed, stream) pair yields the same sample path on every platform.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0);

  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return engine_(); }

  /// Uniform integer in [0, bound), bound > 0. Rejection sampling, unbiased.
  std::uint64_t uniform_below(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01();

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace vicsek
