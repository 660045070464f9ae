#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace vicsek {

/// Integer lattice point. Vertices of every graph in this library are
/// embedded in the plane; the canonical vertex order is lexicographic (x, y).
struct Coord {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const Coord&, const Coord&) = default;
};

std::ostream& operator<<(std::ostream& os, const Coord& c);

/// Dense canonical index of a vertex (its rank in lexicographic order).
using VertexId = std::int32_t;
inline constexpr VertexId kNoVertex = -1;

enum class DiagonalClass { DiagonalD0, OffsetD1, Branch };

/// Default upper bound on graph levels; SANDPILE_LEVEL_CAP overrides it.
inline constexpr int kDefaultLevelCap = 6;

/// Current level cap (environment override applied).
int level_cap();

/// Finite simple graph with lattice-embedded vertices and a single sink.
///
/// Vertices are stored in canonical order and adjacency in CSR form with
/// each neighbor list sorted by index. The sink must be the lexicographically
/// largest vertex, so that for every non-sink vertex the "site index" used by
/// sandpile configurations coincides with its VertexId.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<Coord> vertices,
        const std::vector<std::pair<Coord, Coord>>& edges, Coord sink);

  std::size_t vertex_count() const noexcept { return coords_.size(); }
  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }
  /// Number of non-sink vertices.
  std::size_t site_count() const noexcept { return coords_.size() - 1; }

  VertexId sink() const noexcept { return sink_; }
  Coord coord(VertexId v) const { return coords_.at(static_cast<std::size_t>(v)); }
  std::span<const Coord> coords() const noexcept { return coords_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    const auto i = static_cast<std::size_t>(v);
    return {adjacency_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  int degree(VertexId v) const {
    const auto i = static_cast<std::size_t>(v);
    return static_cast<int>(offsets_[i + 1] - offsets_[i]);
  }
  int max_degree() const noexcept { return max_degree_; }

  std::optional<VertexId> find(Coord c) const;
  /// Throws DomainError for coordinates that are not vertices.
  VertexId index_of(Coord c) const;
  bool contains(Coord c) const { return find(c).has_value(); }
  bool adjacent(VertexId a, VertexId b) const;

 private:
  std::vector<Coord> coords_;
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> adjacency_;
  VertexId sink_ = kNoVertex;
  int max_degree_ = 0;
};

/// Finite Vicsek graph of a given level: five shifted copies of the previous
/// level, bottoming out at the complete graph on the unit square. The sink is
/// the upper right corner (3^n, 3^n).
class VicsekGraph : public Graph {
 public:
  int level() const noexcept { return level_; }
  /// Side length 3^level.
  std::int64_t side() const noexcept { return side_; }

  /// Lower-left corners of all 5^level unit-square K4 copies, lex sorted.
  std::span<const Coord> copy_origins() const noexcept { return copy_origins_; }

  /// Number of diagonal copies K^1 .. K^(3^n).
  std::int64_t diagonal_copy_count() const noexcept { return side_; }
  /// Vertices of K^i in canonical local order:
  /// (i-1,i-1), (i-1,i), (i,i-1), (i,i).
  std::array<VertexId, 4> diagonal_copy(std::int64_t i) const;

  friend VicsekGraph build(int level);

 private:
  VicsekGraph(Graph g, int level, std::vector<Coord> origins);

  int level_ = 0;
  std::int64_t side_ = 1;
  std::vector<Coord> copy_origins_;
};

/// Builds the level-n Vicsek graph. Negative levels raise DomainError,
/// levels above level_cap() raise CapacityError.
VicsekGraph build(int level);

/// The diagonal graph D_n as a standalone graph: the chain of 3^n K4 copies
/// along x = y with every off-diagonal branch removed. Sink (3^n, 3^n).
Graph build_diagonal(int level);

/// Lower-left corners of the 5^level unit squares of the level-n graph.
std::vector<Coord> vicsek_copy_origins(int level);

DiagonalClass classify(const Graph& g, Coord v);

/// Vertex set of the branch hanging off a 1-offset diagonal vertex x: the
/// vertices all of whose paths to the diagonal pass through x, minus x.
/// Result is lex sorted and may be empty.
std::vector<Coord> branch_component(const Graph& g, Coord x);

/// BFS distances (edge counts) from `source` to every vertex.
std::vector<int> bfs_distances(const Graph& g, VertexId source);

int graph_distance(const Graph& g, Coord v, Coord w);

/// Geodesic from x to the sink, x first. Shortest paths are unique on the
/// block graphs built here; ties (if any) go to the smallest index.
std::vector<Coord> geodesic(const Graph& g, Coord x);

/// Vertices whose geodesic to the sink passes through x, excluding x.
std::vector<Coord> descendants(const Graph& g, Coord x);

/// Vertices within distance 1 of the geodesic of x, minus the descendants
/// of x. Lex sorted. Throws DomainError when x is the sink.
std::vector<Coord> geodesic_subgraph(const Graph& g, Coord x);

/// 3^k as a 64-bit integer (k <= 39).
std::int64_t pow3(int k);

/// Sum over ternary digits a_i of n of min(1, a_i) * 3^i.
std::uint64_t kappa(std::uint64_t n);

bool has_ternary_digit_two(std::uint64_t n);

}  // namespace vicsek
