#include "vicsek/recurrence.hpp"

#include <algorithm>
#include <array>

#include "vicsek/errors.hpp"

namespace vicsek {

namespace {

// Non-sink vertices of K^i in the site order of the K4 graph.
std::array<VertexId, 3> copy_sites(const Graph& g, std::int64_t i) {
  if (i < 1) throw DomainError("diagonal copies are numbered from 1");
  return {g.index_of({i - 1, i - 1}), g.index_of({i - 1, i}), g.index_of({i, i - 1})};
}

// Depth of every vertex in the tree; validates along the way.
std::vector<int> depths(const Graph& g, const SpanningTree& t) {
  const std::size_t n = g.vertex_count();
  if (t.parent.size() != n) throw DomainError("spanning tree size does not match graph");
  if (t.parent[static_cast<std::size_t>(g.sink())] != kNoVertex)
    throw DomainError("sink must be the root of the spanning tree");
  std::vector<int> depth(n, -1);
  depth[static_cast<std::size_t>(g.sink())] = 0;
  std::vector<VertexId> path;
  for (std::size_t s = 0; s < n; ++s) {
    VertexId v = static_cast<VertexId>(s);
    path.clear();
    while (depth[static_cast<std::size_t>(v)] < 0) {
      path.push_back(v);
      if (path.size() > n) throw DomainError("spanning tree contains a cycle");
      const VertexId p = t.parent[static_cast<std::size_t>(v)];
      if (p < 0 || static_cast<std::size_t>(p) >= n || !g.adjacent(v, p))
        throw DomainError("tree edge is not an edge of the graph");
      v = p;
    }
    int d = depth[static_cast<std::size_t>(v)];
    for (auto it = path.rbegin(); it != path.rend(); ++it) depth[static_cast<std::size_t>(*it)] = ++d;
  }
  return depth;
}

}  // namespace

void validate_tree(const Graph& g, const SpanningTree& t) { (void)depths(g, t); }

bool is_recurrent(const Graph& g, const SandpileConfig& c) {
  if (!is_stable(g, c)) throw DomainError("burning test needs a stable configuration");
  if (!c.non_negative()) return false;
  SandpileConfig burned = c;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (VertexId w : g.neighbors(static_cast<VertexId>(i)))
      if (w == g.sink()) ++burned[i];
  }
  const auto s = stabilize(g, std::move(burned), {.compute_diameter = false});
  if (s.config != c) return false;
  return std::all_of(s.report.odometer.begin(), s.report.odometer.end(),
                     [](std::int64_t k) { return k == 1; });
}

std::vector<SandpileConfig> enumerate_recurrent(const Graph& g) {
  const std::size_t n = g.site_count();
  std::vector<SandpileConfig> out;
  SandpileConfig c(n, 0);
  while (true) {
    if (is_recurrent(g, c)) out.push_back(c);
    // Odometer-style increment, last site fastest, so output is lex sorted.
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++c[i] < g.degree(static_cast<VertexId>(i))) break;
      c[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

std::vector<SandpileConfig> enumerate_recurrent_k4() {
  static const std::vector<SandpileConfig> table = enumerate_recurrent(build(0));
  return table;
}

SandpileConfig tree_to_config(const Graph& g, const SpanningTree& t) {
  const auto depth = depths(g, t);
  SandpileConfig c(g.site_count());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const VertexId v = static_cast<VertexId>(i);
    const VertexId up = t.parent[i];
    const int l = depth[i];
    int a = 0;
    int b = 0;
    for (VertexId y : g.neighbors(v)) {
      const int ly = depth[static_cast<std::size_t>(y)];
      if (ly < l - 1) ++a;
      else if (ly == l - 1 && y < up) ++b;
    }
    c[i] = g.degree(v) - 1 - a - b;
  }
  return c;
}

SpanningTree wilson_ust(const Graph& g, RandomStream& rng) {
  const std::size_t n = g.vertex_count();
  SpanningTree t;
  t.parent.assign(n, kNoVertex);
  std::vector<char> in_tree(n, 0);
  std::vector<VertexId> next(n, kNoVertex);
  in_tree[static_cast<std::size_t>(g.sink())] = 1;
  for (std::size_t s = 0; s < n; ++s) {
    // Random walk until the tree is hit; next[] keeps the last exit, which
    // is the loop-erased path.
    VertexId u = static_cast<VertexId>(s);
    while (!in_tree[static_cast<std::size_t>(u)]) {
      const auto nb = g.neighbors(u);
      next[static_cast<std::size_t>(u)] = nb[rng.uniform_below(nb.size())];
      u = next[static_cast<std::size_t>(u)];
    }
    u = static_cast<VertexId>(s);
    while (!in_tree[static_cast<std::size_t>(u)]) {
      in_tree[static_cast<std::size_t>(u)] = 1;
      t.parent[static_cast<std::size_t>(u)] = next[static_cast<std::size_t>(u)];
      u = next[static_cast<std::size_t>(u)];
    }
  }
  return t;
}

SandpileConfig sample_recurrent(const Graph& g, RandomStream& rng) {
  return tree_to_config(g, wilson_ust(g, rng));
}

std::vector<SandpileConfig> sample_ivl_diagonal(std::size_t m, RandomStream& rng) {
  if (m == 0) throw DomainError("need at least one diagonal copy");
  const auto& table = enumerate_recurrent_k4();
  std::vector<SandpileConfig> out;
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) out.push_back(table[rng.uniform_below(table.size())]);
  return out;
}

SandpileConfig assemble_diagonal(const Graph& diagonal, std::span<const SandpileConfig> copies) {
  SandpileConfig c(diagonal.site_count(), 0);
  std::int64_t i = 1;
  for (const auto& local : copies) {
    if (local.size() != 3) throw DomainError("K4 configurations have three sites");
    const auto sites = copy_sites(diagonal, i);
    for (std::size_t k = 0; k < 3; ++k) {
      const auto v = sites[k];
      c[static_cast<std::size_t>(v)] = local[k] + diagonal.degree(v) - 3;
    }
    ++i;
  }
  if (static_cast<std::size_t>(3 * (i - 1)) != c.size())
    throw DomainError("one K4 configuration per diagonal copy is required");
  return c;
}

SandpileConfig restrict_to_copy(const Graph& g, const SandpileConfig& c, std::int64_t i) {
  SandpileConfig local(3, 0);
  const auto sites = copy_sites(g, i);
  for (std::size_t k = 0; k < 3; ++k) {
    const auto v = sites[k];
    // Extra particles at a cutpoint belong to the copy farther from the sink.
    local[k] = c[static_cast<std::size_t>(v)] - (g.degree(v) - 3);
  }
  return local;
}

}  // namespace vicsek
