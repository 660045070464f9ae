#pragma once

#include <cstdint>
#include <map>

#include "vicsek/graph.hpp"
#include "vicsek/sandpile.hpp"

namespace vicsek {

/// Five level-(n-1) configurations and the cutpoint bump k. The copies sit
/// at offsets LB (0,0), RB (2L,0), RT (2L,2L), LT (0,2L), M (L,L) with
/// L = 3^(n-1). RB is read through phi(x,y) = (y, L-x) and LT through
/// phi^3(x,y) = (L-y, x), which send the cutpoint of each copy onto the
/// level-(n-1) sink.
struct MergeSpec {
  int level = 1;  // level n of the merged configuration
  std::int64_t k = 0;
  SandpileConfig lb, rb, rt, lt, m;
};

/// The merged configuration mu_k on the level-n graph. Cutpoints c_LB,
/// c_RB, c_LT receive k + eta_M and c_RT receives k + eta_RT at its origin.
SandpileConfig merge(const MergeSpec& spec);

/// Identity of the sandpile group of V_n: 2 everywhere at level 0,
/// mu_3 of five copies at level 1, then mu_2 of five copies of the previous
/// identity. Heights are 5 at the cutpoints inside each level-1 block, 4 at
/// every higher cutpoint and 2 elsewhere.
SandpileConfig identity(int level);

/// (4 eta) stabilized, which equals the identity for recurrent eta.
SandpileConfig identity_from_power(const Graph& g, const SandpileConfig& eta);

struct IdentityReport {
  std::uint64_t samples = 0;
  std::int64_t sink_particles = 0;  // collected while stabilizing 4 * id
};

/// Checks (a) id is recurrent, (b) id + id = id, (c) id + eta = eta and
/// (d) (4 eta) stabilized = id for `samples` uniform recurrent eta, and
/// (e) stabilizing 4 * id sends 2 mod 4 particles to the sink. Throws
/// VerificationError naming the failing clause.
IdentityReport verify_identity(const Graph& g, const SandpileConfig& id, std::uint64_t samples,
                               std::uint64_t seed);

/// Height -> number of vertices with that height.
std::map<std::int64_t, std::uint64_t> height_histogram(const SandpileConfig& c);

}  // namespace vicsek
