#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vicsek/graph.hpp"
#include "vicsek/random.hpp"
#include "vicsek/sandpile.hpp"

namespace vicsek {

/// Spanning tree rooted at the sink, stored as parent pointers. The edge of
/// v is {v, parent[v]}; parent[sink] == kNoVertex.
struct SpanningTree {
  std::vector<VertexId> parent;

  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
};

/// Throws DomainError unless `t` is a spanning tree of g rooted at the sink.
void validate_tree(const Graph& g, const SpanningTree& t);

/// Burning test. Throws DomainError if c is not stable.
bool is_recurrent(const Graph& g, const SandpileConfig& c);

/// Every recurrent configuration by exhaustive search over stable ones.
/// Only sensible for tiny graphs (product of degrees must stay small).
std::vector<SandpileConfig> enumerate_recurrent(const Graph& g);

/// The 16 recurrent configurations of K4 with sink (1,1), in lex order of
/// the height vectors ((0,0), (0,1), (1,0)).
std::vector<SandpileConfig> enumerate_recurrent_k4();

/// Burning bijection: sigma_T(v) = deg(v) - 1 - a_T(v) - b_T(v), edges at v
/// ordered by neighbor index.
SandpileConfig tree_to_config(const Graph& g, const SpanningTree& t);

/// Uniform spanning tree by Wilson's algorithm, rooted at the sink.
SpanningTree wilson_ust(const Graph& g, RandomStream& rng);

/// Uniform recurrent configuration (wilson_ust followed by tree_to_config).
SandpileConfig sample_recurrent(const Graph& g, RandomStream& rng);

/// m independent uniform draws from enumerate_recurrent_k4(): the
/// restrictions of an infinite-volume sample to K^1 .. K^m.
std::vector<SandpileConfig> sample_ivl_diagonal(std::size_t m, RandomStream& rng);

/// Glues K4 configurations onto the diagonal copies of `diagonal` (built by
/// build_diagonal) adding 3 at each shared cutpoint. Needs one configuration
/// per copy.
SandpileConfig assemble_diagonal(const Graph& diagonal, std::span<const SandpileConfig> copies);

/// Restriction of a configuration on the full or diagonal graph to K^i,
/// with the 3 cutpoint particles removed; the inverse of assemble_diagonal.
SandpileConfig restrict_to_copy(const Graph& g, const SandpileConfig& c, std::int64_t i);

}  // namespace vicsek
