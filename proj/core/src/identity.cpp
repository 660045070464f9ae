#include "vicsek/identity.hpp"

#include <array>

#include "vicsek/errors.hpp"
#include "vicsek/random.hpp"
#include "vicsek/recurrence.hpp"

namespace vicsek {

SandpileConfig merge(const MergeSpec& spec) {
  if (spec.level < 1) throw DomainError("merging produces levels >= 1");
  if (spec.k < 0) throw DomainError("cutpoint bump must be non-negative");
  const VicsekGraph lower = build(spec.level - 1);
  const VicsekGraph upper = build(spec.level);
  const std::int64_t L = lower.side();

  enum Turn { kNone, kQuarter, kThreeQuarter };
  struct Copy {
    const SandpileConfig* eta;
    Coord offset;
    Turn turn;
  };
  const std::array<Copy, 5> copies{{
      {&spec.lb, {0, 0}, kNone},
      {&spec.rb, {2 * L, 0}, kQuarter},
      {&spec.rt, {2 * L, 2 * L}, kNone},
      {&spec.lt, {0, 2 * L}, kThreeQuarter},
      {&spec.m, {L, L}, kNone},
  }};
  for (const auto& c : copies)
    if (c.eta->size() != lower.site_count())
      throw DomainError("merge inputs must be configurations on the level-" +
                        std::to_string(spec.level - 1) + " graph");

  const Coord c_lb{L, L}, c_rb{2 * L, L}, c_rt{2 * L, 2 * L}, c_lt{L, 2 * L};
  auto is_cutpoint = [&](Coord x) { return x == c_lb || x == c_rb || x == c_rt || x == c_lt; };
  auto value = [&](const Copy& c, Coord local) {
    Coord q = local;
    if (c.turn == kQuarter) q = {local.y, L - local.x};
    if (c.turn == kThreeQuarter) q = {L - local.y, local.x};
    const VertexId v = lower.index_of(q);
    if (v == lower.sink()) throw VerificationError("merge", "rotation reached the sink of a copy");
    return (*c.eta)[static_cast<std::size_t>(v)];
  };

  SandpileConfig out(upper.site_count(), 0);
  for (const auto& c : copies) {
    for (Coord p : lower.coords()) {
      const Coord x{c.offset.x + p.x, c.offset.y + p.y};
      if (is_cutpoint(x) || x == upper.coord(upper.sink())) continue;
      out[static_cast<std::size_t>(upper.index_of(x))] = value(c, p);
    }
  }
  const Copy& mid = copies[4];
  for (Coord x : {c_lb, c_rb, c_lt})
    out[static_cast<std::size_t>(upper.index_of(x))] = spec.k + value(mid, {x.x - L, x.y - L});
  out[static_cast<std::size_t>(upper.index_of(c_rt))] = spec.k + value(copies[2], {0, 0});
  return out;
}

SandpileConfig identity(int level) {
  (void)build(level);  // level validation
  SandpileConfig id = constant_config(build(0), 2);
  // (1,1,1) is not recurrent on K4, so the first merge needs one more
  // particle per cutpoint than the later ones.
  for (int n = 1; n <= level; ++n) id = merge({n, n == 1 ? 3 : 2, id, id, id, id, id});
  return id;
}

SandpileConfig identity_from_power(const Graph& g, const SandpileConfig& eta) {
  return stabilize(g, scaled(eta, 4), {.compute_diameter = false}).config;
}

IdentityReport verify_identity(const Graph& g, const SandpileConfig& id, std::uint64_t samples,
                               std::uint64_t seed) {
  if (id.size() != g.site_count()) throw VerificationError("a", "identity has the wrong size");
  if (!is_stable(g, id) || !is_recurrent(g, id)) throw VerificationError("a", "identity is not recurrent");
  if (group_add(g, id, id) != id) throw VerificationError("b", "id + id differs from id");

  RandomStream rng(seed);
  for (std::uint64_t s = 0; s < samples; ++s) {
    const auto eta = sample_recurrent(g, rng);
    if (group_add(g, id, eta) != eta) throw VerificationError("c", "id + eta differs from eta");
    if (identity_from_power(g, eta) != id) throw VerificationError("d", "(4 eta) stabilized differs from id");
  }

  const auto s = stabilize(g, scaled(id, 4), {.compute_diameter = false});
  if (s.report.sink_particles % 4 != 2)
    throw VerificationError("e", "sink collected " + std::to_string(s.report.sink_particles) +
                                     " particles, not 2 mod 4");
  return {samples, s.report.sink_particles};
}

std::map<std::int64_t, std::uint64_t> height_histogram(const SandpileConfig& c) {
  std::map<std::int64_t, std::uint64_t> h;
  for (auto v : c.heights()) ++h[v];
  return h;
}

}  // namespace vicsek
