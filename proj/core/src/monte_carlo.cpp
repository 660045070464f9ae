#include "vicsek/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "vicsek/chain.hpp"
#include "vicsek/errors.hpp"
#include "vicsek/graph.hpp"
#include "vicsek/recurrence.hpp"
#include "vicsek/sandpile.hpp"

namespace vicsek {

namespace {

enum Outcome : std::size_t { kStabilized = 0, kExploded = 1, kTruncated = 2 };

// Cumulative transition rows in units of 1/16 for sampling the chain.
std::array<std::array<std::uint64_t, kChainStates>, kChainStates> cumulative_sixteenths() {
  const auto p = transition_matrix();
  std::array<std::array<std::uint64_t, kChainStates>, kChainStates> cum{};
  for (std::size_t i = 0; i < kChainStates; ++i) {
    Rational acc;
    for (std::size_t j = 0; j < kChainStates; ++j) {
      acc += p(i, j);
      const Rational scaled_acc = acc * 16;
      if (scaled_acc.get_den() != 1) throw VerificationError("transition", "entries are not multiples of 1/16");
      cum[i][j] = scaled_acc.get_num().get_ui();
    }
  }
  return cum;
}

}  // namespace

unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

std::vector<std::uint64_t> tally_trials(std::uint64_t trials, std::uint64_t seed, unsigned workers,
                                        std::size_t categories,
                                        const std::function<std::size_t(RandomStream&)>& trial) {
  if (categories == 0) throw DomainError("need at least one outcome category");
  const std::uint64_t chunks = (trials + kTrialChunk - 1) / kTrialChunk;
  if (workers == 0) workers = default_workers();
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(chunks, 1)));

  std::vector<std::uint64_t> total(categories, 0);
  std::atomic<std::uint64_t> next{0};
  std::mutex merge;
  std::exception_ptr failure;

  auto work = [&] {
    std::vector<std::uint64_t> local(categories, 0);
    try {
      for (std::uint64_t c = next++; c < chunks; c = next++) {
        RandomStream rng(seed, c);
        const std::uint64_t end = std::min(trials, (c + 1) * kTrialChunk);
        for (std::uint64_t t = c * kTrialChunk; t < end; ++t) {
          const std::size_t k = trial(rng);
          if (k >= categories) throw DomainError("trial returned an unknown category");
          ++local[k];
        }
      }
    } catch (...) {
      std::lock_guard lock(merge);
      if (!failure) failure = std::current_exception();
      next = chunks;
    }
    std::lock_guard lock(merge);
    for (std::size_t k = 0; k < categories; ++k) total[k] += local[k];
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return total;
}

McEstimate monte_carlo_stabilization(const McOptions& options) {
  if (options.trials == 0) throw DomainError("trials must be positive");
  if (options.level < 0) throw DomainError("level must be non-negative");
  if (options.level > 39) throw CapacityError("step bound 3^level does not fit");
  const auto steps = static_cast<std::uint64_t>(pow3(options.level));

  std::vector<std::uint64_t> tally;
  if (options.mode == McMode::Chain) {
    const auto cum = cumulative_sixteenths();
    tally = tally_trials(options.trials, options.seed, options.workers, 3, [&](RandomStream& rng) {
      std::size_t state = 1;
      for (std::uint64_t i = 0; i < steps; ++i) {
        const auto u = rng.uniform_below(16);
        std::size_t j = 0;
        while (u >= cum[state][j]) ++j;
        state = j;
        if (state == 0) return kStabilized;
        if (state == 4) return kExploded;
      }
      return kTruncated;
    });
  } else {
    const Graph diagonal = build_diagonal(options.level);
    std::vector<Coord> checkpoints;
    for (std::int64_t i = 1; i <= static_cast<std::int64_t>(steps); ++i) checkpoints.push_back({i, i});
    tally = tally_trials(options.trials, options.seed, options.workers, 3, [&](RandomStream& rng) {
      const auto copies = sample_ivl_diagonal(steps, rng);
      const auto eta = assemble_diagonal(diagonal, copies);
      NestedVolumeStabilizer s(diagonal, add_particles(diagonal, eta, {0, 0}, 1));
      for (Coord cp : checkpoints) {
        const auto x = s.advance_to(cp);
        if (x == 0) return kStabilized;
        if (x == 4) return kExploded;
      }
      return kTruncated;
    });
  }

  McEstimate e;
  e.trials = options.trials;
  e.stabilized = tally[kStabilized];
  e.exploded = tally[kExploded];
  e.truncated = tally[kTruncated];
  e.estimate = static_cast<double>(e.stabilized) / static_cast<double>(e.trials);
  e.std_error = std::sqrt(e.estimate * (1 - e.estimate) / static_cast<double>(e.trials));
  e.truncation_bound = std::pow((5.0 + std::sqrt(13.0)) / 16.0, static_cast<double>(steps));
  return e;
}

}  // namespace vicsek
