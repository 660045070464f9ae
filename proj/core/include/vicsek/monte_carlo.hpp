#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "vicsek/random.hpp"

namespace vicsek {

/// Trials per random stream. Trial t always draws from stream t / kTrialChunk
/// of the run seed, so tallies do not depend on the worker count.
inline constexpr std::uint64_t kTrialChunk = 4096;

/// Number of workers used when 0 is requested.
unsigned default_workers();

/// Runs `trials` independent trials in parallel. Each trial returns a
/// category in [0, categories); the result counts trials per category.
std::vector<std::uint64_t> tally_trials(std::uint64_t trials, std::uint64_t seed, unsigned workers,
                                        std::size_t categories,
                                        const std::function<std::size_t(RandomStream&)>& trial);

enum class McMode { Chain, Sandpile };

struct McOptions {
  McMode mode = McMode::Chain;
  int level = 6;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  unsigned workers = 0;
};

struct McEstimate {
  double estimate = 0;      // stabilized / trials
  double std_error = 0;     // sqrt(p(1-p)/trials)
  std::uint64_t trials = 0;
  std::uint64_t stabilized = 0;
  std::uint64_t exploded = 0;
  std::uint64_t truncated = 0;  // not absorbed within 3^level steps
  double truncation_bound = 0;  // ((5 + sqrt 13)/16)^(3^level)
};

/// Estimates the probability that eta + delta_o stabilizes. Chain mode
/// simulates (X_i) from X_0 = 1 for at most 3^level steps. Sandpile mode
/// samples the infinite-volume law on the diagonal of the level-n graph and
/// runs the nested-volume stabilization; it raises CapacityError above the
/// level cap.
McEstimate monte_carlo_stabilization(const McOptions& options);

}  // namespace vicsek
