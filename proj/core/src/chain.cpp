#include "vicsek/chain.hpp"

#include <algorithm>
#include <cmath>

#include "vicsek/errors.hpp"
#include "vicsek/graph.hpp"
#include "vicsek/recurrence.hpp"

namespace vicsek {

namespace {

void check_state(int s) {
  if (s < 0 || s >= kChainStates) throw DomainError("chain state must be in 0..4");
}

}  // namespace

std::vector<K4Transition> k4_transition_table() {
  const VicsekGraph k4 = build(0);
  const Coord origin{0, 0};
  std::vector<K4Transition> table;
  for (const auto& eta : enumerate_recurrent_k4()) {
    K4Transition row;
    row.config = eta;
    for (int added = 1; added <= 4; ++added) {
      const auto s = stabilize(k4, add_particles(k4, eta, origin, added), {.compute_diameter = false});
      row.collected[static_cast<std::size_t>(added - 1)] = s.report.sink_particles;
    }
    table.push_back(std::move(row));
  }
  return table;
}

RationalMatrix transition_matrix() {
  const auto table = k4_transition_table();
  RationalMatrix p(kChainStates, kChainStates);
  p(0, 0) = 1;
  const Rational weight(1, static_cast<unsigned long>(table.size()));
  for (int added = 1; added <= 4; ++added) {
    for (const auto& row : table) {
      const auto to = row.collected[static_cast<std::size_t>(added - 1)];
      if (to < 0 || to >= kChainStates) throw VerificationError("transition", "collected count out of range");
      p(static_cast<std::size_t>(added), static_cast<std::size_t>(to)) += weight;
    }
  }
  return p;
}

std::vector<Rational> absorption_probabilities(const RationalMatrix& p) {
  if (p.rows() != kChainStates || p.cols() != kChainStates)
    throw DomainError("transition matrix must be 5x5");
  // Rows 1..3 of (P - I)x = 0 plus the boundary rows x_0 = 1, x_4 = 0.
  RationalMatrix a = p - RationalMatrix::identity(kChainStates);
  std::vector<Rational> b(kChainStates);
  for (std::size_t j = 0; j < kChainStates; ++j) {
    a(0, j) = j == 0 ? 1 : 0;
    a(4, j) = j == 4 ? 1 : 0;
  }
  b[0] = 1;
  return solve(std::move(a), std::move(b));
}

std::vector<Rational> absorption_probabilities() { return absorption_probabilities(transition_matrix()); }

std::vector<Rational> k_step_distribution(int start, unsigned long k) {
  check_state(start);
  return power(transition_matrix(), k).row(static_cast<std::size_t>(start));
}

std::array<double, kChainStates> k_step_closed_form(int start, unsigned long k) {
  if (start < 1 || start > 3) throw DomainError("closed form covers starts 1, 2, 3");
  if (k == 0) throw DomainError("closed form holds for k >= 1");
  const double r = std::sqrt(13.0);
  const double up = std::pow((5.0 + r) / 16.0, static_cast<double>(k));
  const double down = std::pow((5.0 - r) / 16.0, static_cast<double>(k));
  auto term = [&](double a, double b) { return a / 52.0 * up + b / 52.0 * down; };
  if (start == 2) {
    const double edge = 0.5 - term(13 + 5 * r, 13 - 5 * r);
    const double side = term(6 * r, -6 * r);
    return {edge, side, term(2 * (13 - r), 2 * (13 + r)), side, edge};
  }
  std::array<double, kChainStates> one{
      0.75 - term(13 + 3 * r, 13 - 3 * r),
      term(13 + r, 13 - r),
      term(4 * r, -4 * r),
      term(13 + r, 13 - r),
      0.25 - term(13 + 3 * r, 13 - 3 * r),
  };
  if (start == 3) std::reverse(one.begin(), one.end());
  return one;
}

ChainEvent& ChainEvent::require(std::int64_t time, std::initializer_list<int> states) {
  StateSet set{};
  for (int s : states) {
    check_state(s);
    set[static_cast<std::size_t>(s)] = true;
  }
  return require(time, set);
}

ChainEvent& ChainEvent::require(std::int64_t time, const StateSet& states) {
  if (time < 1) throw DomainError("event times start at 1");
  auto it = std::lower_bound(constraints_.begin(), constraints_.end(), time,
                             [](const auto& c, std::int64_t t) { return c.first < t; });
  if (it != constraints_.end() && it->first == time) {
    for (std::size_t s = 0; s < kChainStates; ++s) it->second[s] = it->second[s] && states[s];
  } else {
    constraints_.insert(it, {time, states});
  }
  return *this;
}

Rational path_probability(const ChainEvent& event, int start, const RationalMatrix& p) {
  check_state(start);
  std::vector<Rational> v(kChainStates);
  v[static_cast<std::size_t>(start)] = 1;
  std::int64_t t = 0;
  for (const auto& [time, allowed] : event.constraints()) {
    // Unconstrained stretch as one matrix power, then the restriction.
    v = v * power(p, static_cast<unsigned long>(time - t));
    for (std::size_t s = 0; s < kChainStates; ++s)
      if (!allowed[s]) v[s] = 0;
    t = time;
  }
  Rational total;
  for (const auto& x : v) total += x;
  return total;
}

Rational path_probability(const ChainEvent& event, int start) {
  return path_probability(event, start, transition_matrix());
}

RadiusPmfTerms radius_pmf_terms(std::uint64_t n) {
  static const RationalMatrix p = transition_matrix();
  RadiusPmfTerms out;
  if (n == 0) {
    // Quiet start, or one toppling of o with (1,0), (0,1) staying put.
    out.value = p(1, 0) + Rational(3, 8) * p(1, 1) * p(1, 0);
    return out;
  }
  if (has_ternary_digit_two(n)) {
    out.digit_two = true;
    return out;
  }
  const auto k = static_cast<std::int64_t>(kappa(n - 1));
  const auto m = static_cast<std::int64_t>(n);
  out.kappa = static_cast<std::uint64_t>(k);
  ChainEvent jump;
  jump.require(k + 1, {2, 3}).require(m + 1, {0, 1}).require(m + 2, {0});
  ChainEvent step;
  step.require(k + 1, {1}).require(k + 2, {1, 2, 3}).require(m + 1, {0, 1}).require(m + 2, {0});
  out.center_jump = path_probability(jump, 1, p);
  out.center_step = path_probability(step, 1, p);
  out.events_overlap = k + 2 >= m + 1;
  out.value = out.center_jump + out.center_step;
  return out;
}

Rational radius_pmf(std::uint64_t n) { return radius_pmf_terms(n).value; }

}  // namespace vicsek
