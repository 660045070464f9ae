#pragma once

// Test-only reference implementations. Each one takes a different route
// from the library code it checks: brute force, direct recursion on
// coordinate sets, or textbook formulas.

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>
#include <gmpxx.h>

#include "vicsek/graph.hpp"
#include "vicsek/rational.hpp"
#include "vicsek/sandpile.hpp"

namespace oracle {

using vicsek::Coord;
using Edge = std::pair<Coord, Coord>;

inline Edge ordered(Coord a, Coord b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Edge set of V_n by direct recursion on shifted copies of V_{n-1}.
inline std::set<Edge> vicsek_edges(int n) {
  if (n == 0) {
    const std::array<Coord, 4> c{{{0, 0}, {0, 1}, {1, 0}, {1, 1}}};
    std::set<Edge> e;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) e.insert(ordered(c[i], c[j]));
    return e;
  }
  const auto prev = vicsek_edges(n - 1);
  std::int64_t s = 1;
  for (int i = 1; i < n; ++i) s *= 3;
  const std::array<Coord, 5> shifts{{{0, 0}, {s, s}, {2 * s, 0}, {0, 2 * s}, {2 * s, 2 * s}}};
  std::set<Edge> e;
  for (Coord d : shifts)
    for (const auto& [a, b] : prev)
      e.insert(ordered({a.x + d.x, a.y + d.y}, {b.x + d.x, b.y + d.y}));
  return e;
}

inline std::set<Coord> vertices_of(const std::set<Edge>& edges) {
  std::set<Coord> v;
  for (const auto& [a, b] : edges) {
    v.insert(a);
    v.insert(b);
  }
  return v;
}

using Adjacency = std::map<Coord, std::vector<Coord>>;

inline Adjacency adjacency(const std::set<Edge>& edges) {
  Adjacency adj;
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

inline std::map<Coord, int> distances(const Adjacency& adj, Coord from) {
  std::map<Coord, int> d{{from, 0}};
  std::deque<Coord> q{from};
  while (!q.empty()) {
    const Coord v = q.front();
    q.pop_front();
    for (Coord w : adj.at(v))
      if (!d.count(w)) {
        d[w] = d[v] + 1;
        q.push_back(w);
      }
  }
  return d;
}

// Components of adj minus x that contain no vertex with |x - y| <= 1.
inline std::set<Coord> branch_component(const Adjacency& adj, Coord x) {
  std::set<Coord> out;
  std::set<Coord> seen{x};
  for (Coord start : adj.at(x)) {
    if (seen.count(start)) continue;
    std::set<Coord> comp{start};
    std::deque<Coord> q{start};
    seen.insert(start);
    bool diagonal = false;
    while (!q.empty()) {
      const Coord v = q.front();
      q.pop_front();
      if (std::abs(v.x - v.y) <= 1) diagonal = true;
      for (Coord w : adj.at(v))
        if (!seen.count(w)) {
          seen.insert(w);
          comp.insert(w);
          q.push_back(w);
        }
    }
    if (!diagonal) out.insert(comp.begin(), comp.end());
  }
  return out;
}

// N[geodesic(x)] minus descendants of x, from distance identities alone.
inline std::set<Coord> geodesic_subgraph(const Adjacency& adj, Coord x, Coord sink) {
  const auto ds = distances(adj, sink);
  const auto dx = distances(adj, x);
  std::set<Coord> path, out;
  for (const auto& [v, d] : ds)
    if (dx.at(v) + d == ds.at(x)) path.insert(v);
  for (Coord v : path) {
    out.insert(v);
    for (Coord w : adj.at(v)) out.insert(w);
  }
  for (auto it = out.begin(); it != out.end();) {
    const bool below = *it != x && ds.at(*it) == dx.at(*it) + ds.at(x);
    it = below ? out.erase(it) : std::next(it);
  }
  return out;
}

// Spanning trees of a small graph by testing every (|V|-1)-subset of edges.
inline std::vector<std::vector<std::pair<int, int>>> spanning_trees(
    int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<std::pair<int, int>>> out;
  const int m = static_cast<int>(edges.size());
  std::vector<int> pick(static_cast<std::size_t>(n - 1));
  std::function<void(int, int)> rec = [&](int from, int depth) {
    if (depth == n - 1) {
      std::vector<int> comp(static_cast<std::size_t>(n));
      std::iota(comp.begin(), comp.end(), 0);
      std::function<int(int)> find = [&](int a) { return comp[a] == a ? a : comp[a] = find(comp[a]); };
      for (int k : pick) {
        int a = find(edges[k].first), b = find(edges[k].second);
        if (a == b) return;
        comp[a] = b;
      }
      std::vector<std::pair<int, int>> t;
      for (int k : pick) t.push_back(edges[k]);
      out.push_back(t);
      return;
    }
    for (int k = from; k < m; ++k) {
      pick[static_cast<std::size_t>(depth)] = k;
      rec(k + 1, depth + 1);
    }
  };
  rec(0, 0);
  return out;
}

// Determinant by fraction-free Bareiss elimination.
inline mpz_class determinant(std::vector<std::vector<mpz_class>> a) {
  const std::size_t n = a.size();
  mpz_class sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return n == 0 ? mpz_class(1) : sign * a[n - 1][n - 1];
}

// Probability of a chain event by summing over every trajectory.
// constraint(t, state) says whether X_t = state is allowed.
inline vicsek::Rational trajectory_sum(const vicsek::RationalMatrix& p, int start, int length,
                                       const std::function<bool(int, int)>& allowed) {
  vicsek::Rational total;
  std::function<void(int, int, vicsek::Rational)> walk = [&](int t, int s, vicsek::Rational w) {
    if (w == 0) return;
    if (t == length) {
      total += w;
      return;
    }
    for (int j = 0; j < 5; ++j)
      if (allowed(t + 1, j)) walk(t + 1, j, w * p(static_cast<std::size_t>(s), static_cast<std::size_t>(j)));
  };
  walk(0, start, 1);
  return total;
}

// Pearson statistic against equal cell probabilities, with the p-value.
inline std::pair<double, double> chi_square_uniform(const std::vector<std::uint64_t>& counts) {
  double total = 0;
  for (auto c : counts) total += static_cast<double>(c);
  const double expect = total / static_cast<double>(counts.size());
  double stat = 0;
  for (auto c : counts) stat += (static_cast<double>(c) - expect) * (static_cast<double>(c) - expect) / expect;
  boost::math::chi_squared dist(static_cast<double>(counts.size() - 1));
  return {stat, boost::math::cdf(boost::math::complement(dist, stat))};
}

// Pearson independence test on a contingency table.
inline double chi_square_independence_p(const std::vector<std::vector<std::uint64_t>>& table) {
  const std::size_t r = table.size(), c = table[0].size();
  std::vector<double> rows(r, 0), cols(c, 0);
  double total = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      rows[i] += static_cast<double>(table[i][j]);
      cols[j] += static_cast<double>(table[i][j]);
      total += static_cast<double>(table[i][j]);
    }
  double stat = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      const double e = rows[i] * cols[j] / total;
      if (e > 0) stat += (static_cast<double>(table[i][j]) - e) * (static_cast<double>(table[i][j]) - e) / e;
    }
  boost::math::chi_squared dist(static_cast<double>((r - 1) * (c - 1)));
  return boost::math::cdf(boost::math::complement(dist, stat));
}

// Stabilization by repeatedly toppling the unstable vertex picked by
// `choose` among all unstable ones, one toppling at a time.
template <class Choose>
std::pair<vicsek::SandpileConfig, std::vector<std::int64_t>> stabilize_in_order(const vicsek::Graph& g,
                                                                               vicsek::SandpileConfig c,
                                                                               Choose choose) {
  std::vector<std::int64_t> odo(c.size(), 0);
  while (true) {
    std::vector<std::size_t> unstable;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] >= g.degree(static_cast<vicsek::VertexId>(i))) unstable.push_back(i);
    if (unstable.empty()) return {c, odo};
    const std::size_t v = unstable[choose(unstable.size())];
    c[v] -= g.degree(static_cast<vicsek::VertexId>(v));
    ++odo[v];
    for (auto w : g.neighbors(static_cast<vicsek::VertexId>(v)))
      if (w != g.sink()) ++c[static_cast<std::size_t>(w)];
  }
}

}  // namespace oracle
