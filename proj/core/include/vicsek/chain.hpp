#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "vicsek/rational.hpp"
#include "vicsek/sandpile.hpp"

namespace vicsek {

inline constexpr int kChainStates = 5;

/// Particles collected at the sink (1,1) of K4 when `added` particles are
/// dropped on (0,0) of a recurrent configuration, added = 1..4.
struct K4Transition {
  SandpileConfig config;
  std::array<std::int64_t, 4> collected{};
};

/// One row per recurrent K4 configuration, computed with the engine.
std::vector<K4Transition> k4_transition_table();

/// 5x5 transition matrix of the nested-volume chain, averaged uniformly
/// over the K4 table. States 0 and 4 are absorbing.
RationalMatrix transition_matrix();

/// x_k = P(hit 0 before 4 | X_0 = k), solved exactly from (P - I)x = 0 with
/// x_0 = 1, x_4 = 0. Throws SingularError for a corrupted matrix.
std::vector<Rational> absorption_probabilities(const RationalMatrix& p);
std::vector<Rational> absorption_probabilities();

/// Row `start` of P^k.
std::vector<Rational> k_step_distribution(int start, unsigned long k);

/// Closed-form k-step law in terms of (5 +- sqrt 13)/16, start in {1,2,3},
/// k >= 1. Floating point.
std::array<double, kChainStates> k_step_closed_form(int start, unsigned long k);

/// Constraints X_t in S on chain times t >= 1. Constraints added at the
/// same time are intersected.
class ChainEvent {
 public:
  using StateSet = std::array<bool, kChainStates>;

  ChainEvent& require(std::int64_t time, std::initializer_list<int> states);
  ChainEvent& require(std::int64_t time, const StateSet& states);

  /// Sorted by time, one entry per constrained time.
  const std::vector<std::pair<std::int64_t, StateSet>>& constraints() const noexcept {
    return constraints_;
  }

 private:
  std::vector<std::pair<std::int64_t, StateSet>> constraints_;
};

/// Exact probability of the constrained trajectory from X_0 = start.
Rational path_probability(const ChainEvent& event, int start, const RationalMatrix& p);
Rational path_probability(const ChainEvent& event, int start);

struct RadiusPmfTerms {
  Rational value;
  Rational center_jump;  // X at kappa+1 in {2,3}
  Rational center_step;  // X at kappa+1 = 1, next in {1,2,3}
  std::uint64_t kappa = 0;
  bool events_overlap = false;  // the two terms constrain a common time
  bool digit_two = false;
};

/// Avalanche-radius probability mu(diam = n) with its decomposition.
RadiusPmfTerms radius_pmf_terms(std::uint64_t n);
Rational radius_pmf(std::uint64_t n);

}  // namespace vicsek
