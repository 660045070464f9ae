#include "vicsek/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <ostream>
#include <sstream>
#include <string>

#include "vicsek/errors.hpp"

namespace vicsek {

namespace {

std::string describe(Coord c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

// Unit-square K4: the four corners and all six edges.
constexpr std::array<Coord, 4> kUnitSquare{{{0, 0}, {0, 1}, {1, 0}, {1, 1}}};

}  // namespace

std::ostream& operator<<(std::ostream& os, const Coord& c) {
  return os << '(' << c.x << ',' << c.y << ')';
}

int level_cap() {
  if (const char* env = std::getenv("SANDPILE_LEVEL_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0 && v <= 12) return static_cast<int>(v);
  }
  return kDefaultLevelCap;
}

Graph::Graph(std::vector<Coord> vertices,
             const std::vector<std::pair<Coord, Coord>>& edges, Coord sink)
    : coords_(std::move(vertices)) {
  std::sort(coords_.begin(), coords_.end());
  coords_.erase(std::unique(coords_.begin(), coords_.end()), coords_.end());
  if (coords_.empty()) throw DomainError("graph must have at least one vertex");
  if (coords_.back() != sink)
    throw DomainError("sink " + describe(sink) + " must be the lexicographically largest vertex");
  sink_ = static_cast<VertexId>(coords_.size() - 1);

  std::vector<std::pair<VertexId, VertexId>> arcs;
  arcs.reserve(edges.size() * 2);
  for (const auto& [a, b] : edges) {
    const VertexId u = index_of(a);
    const VertexId v = index_of(b);
    if (u == v) throw DomainError("self-loop at " + describe(a));
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  offsets_.assign(coords_.size() + 1, 0);
  for (const auto& arc : arcs) ++offsets_[static_cast<std::size_t>(arc.first) + 1];
  for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
  adjacency_.reserve(arcs.size());
  for (const auto& arc : arcs) adjacency_.push_back(arc.second);

  for (VertexId v = 0; v < static_cast<VertexId>(coords_.size()); ++v)
    max_degree_ = std::max(max_degree_, degree(v));
}

std::optional<VertexId> Graph::find(Coord c) const {
  const auto it = std::lower_bound(coords_.begin(), coords_.end(), c);
  if (it == coords_.end() || *it != c) return std::nullopt;
  return static_cast<VertexId>(it - coords_.begin());
}

VertexId Graph::index_of(Coord c) const {
  if (auto v = find(c)) return *v;
  throw DomainError("unknown vertex " + describe(c));
}

bool Graph::adjacent(VertexId a, VertexId b) const {
  const auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

VicsekGraph::VicsekGraph(Graph g, int level, std::vector<Coord> origins)
    : Graph(std::move(g)), level_(level), side_(pow3(level)), copy_origins_(std::move(origins)) {}

std::array<VertexId, 4> VicsekGraph::diagonal_copy(std::int64_t i) const {
  if (i < 1 || i > side_) throw DomainError("diagonal copy index out of range");
  return {index_of({i - 1, i - 1}), index_of({i - 1, i}), index_of({i, i - 1}),
          index_of({i, i})};
}

std::vector<Coord> vicsek_copy_origins(int level) {
  std::vector<Coord> origins{{0, 0}};
  for (int n = 1; n <= level; ++n) {
    const std::int64_t s = pow3(n - 1);
    const std::array<Coord, 5> shifts{{{0, 0}, {s, s}, {2 * s, 0}, {0, 2 * s}, {2 * s, 2 * s}}};
    std::vector<Coord> next;
    next.reserve(origins.size() * 5);
    for (const Coord& shift : shifts)
      for (const Coord& o : origins) next.push_back({o.x + shift.x, o.y + shift.y});
    origins = std::move(next);
  }
  std::sort(origins.begin(), origins.end());
  return origins;
}

namespace {

Graph graph_from_squares(const std::vector<Coord>& origins, Coord sink) {
  std::vector<Coord> vertices;
  std::vector<std::pair<Coord, Coord>> edges;
  vertices.reserve(origins.size() * 4);
  edges.reserve(origins.size() * 6);
  for (const Coord& o : origins) {
    std::array<Coord, 4> corners{};
    for (std::size_t k = 0; k < 4; ++k)
      corners[k] = {o.x + kUnitSquare[k].x, o.y + kUnitSquare[k].y};
    for (std::size_t a = 0; a < 4; ++a) {
      vertices.push_back(corners[a]);
      for (std::size_t b = a + 1; b < 4; ++b) edges.emplace_back(corners[a], corners[b]);
    }
  }
  return Graph(std::move(vertices), edges, sink);
}

void check_level(int level) {
  if (level < 0) throw DomainError("level must be non-negative, got " + std::to_string(level));
  if (level > level_cap())
    throw CapacityError("level " + std::to_string(level) + " exceeds cap " +
                        std::to_string(level_cap()));
}

}  // namespace

VicsekGraph build(int level) {
  check_level(level);
  auto origins = vicsek_copy_origins(level);
  const std::int64_t side = pow3(level);
  Graph g = graph_from_squares(origins, {side, side});
  return VicsekGraph(std::move(g), level, std::move(origins));
}

Graph build_diagonal(int level) {
  check_level(level);
  const std::int64_t side = pow3(level);
  std::vector<Coord> origins;
  origins.reserve(static_cast<std::size_t>(side));
  for (std::int64_t i = 0; i < side; ++i) origins.push_back({i, i});
  return graph_from_squares(origins, {side, side});
}

DiagonalClass classify(const Graph& g, Coord v) {
  g.index_of(v);
  const std::int64_t d = v.x > v.y ? v.x - v.y : v.y - v.x;
  if (d == 0) return DiagonalClass::DiagonalD0;
  if (d == 1) return DiagonalClass::OffsetD1;
  return DiagonalClass::Branch;
}

std::vector<Coord> branch_component(const Graph& g, Coord x) {
  if (classify(g, x) != DiagonalClass::OffsetD1)
    throw DomainError("branch_component requires a 1-offset diagonal vertex, got " + describe(x));
  const VertexId root = g.index_of(x);
  const auto n = g.vertex_count();

  // Flood from every diagonal vertex except x inside g - {x}; the rest hangs off x.
  std::vector<char> seen(n, 0);
  std::deque<VertexId> queue;
  seen[static_cast<std::size_t>(root)] = 1;
  for (VertexId v = 0; v < static_cast<VertexId>(n); ++v) {
    const Coord c = g.coord(v);
    const std::int64_t d = c.x > c.y ? c.x - c.y : c.y - c.x;
    if (v != root && d <= 1) {
      seen[static_cast<std::size_t>(v)] = 1;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<Coord> out;
  for (VertexId v = 0; v < static_cast<VertexId>(n); ++v)
    if (!seen[static_cast<std::size_t>(v)]) out.push_back(g.coord(v));
  return out;
}

std::vector<int> bfs_distances(const Graph& g, VertexId source) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<VertexId> queue;
  queue.reserve(g.vertex_count());
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId v = queue[head];
    const int dv = dist[static_cast<std::size_t>(v)];
    for (VertexId w : g.neighbors(v)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dv + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

int graph_distance(const Graph& g, Coord v, Coord w) {
  const VertexId a = g.index_of(v);
  const VertexId b = g.index_of(w);
  if (a == b) return 0;
  return bfs_distances(g, a)[static_cast<std::size_t>(b)];
}

namespace {

// Parent of each vertex on its geodesic towards the sink.
std::vector<VertexId> sink_parents(const Graph& g) {
  const auto dist = bfs_distances(g, g.sink());
  std::vector<VertexId> parent(g.vertex_count(), kNoVertex);
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v) {
    if (v == g.sink()) continue;
    for (VertexId w : g.neighbors(v)) {
      if (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(v)] - 1) {
        parent[static_cast<std::size_t>(v)] = w;
        break;
      }
    }
  }
  return parent;
}

std::vector<char> descendant_mask(const Graph& g, const std::vector<VertexId>& parent,
                                  VertexId x) {
  std::vector<std::vector<VertexId>> children(g.vertex_count());
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v)
    if (parent[static_cast<std::size_t>(v)] != kNoVertex)
      children[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])].push_back(v);
  std::vector<char> mask(g.vertex_count(), 0);
  std::vector<VertexId> stack = children[static_cast<std::size_t>(x)];
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    mask[static_cast<std::size_t>(v)] = 1;
    for (VertexId c : children[static_cast<std::size_t>(v)]) stack.push_back(c);
  }
  return mask;
}

}  // namespace

std::vector<Coord> geodesic(const Graph& g, Coord x) {
  VertexId v = g.index_of(x);
  const auto parent = sink_parents(g);
  std::vector<Coord> path{g.coord(v)};
  while (v != g.sink()) {
    v = parent[static_cast<std::size_t>(v)];
    if (v == kNoVertex) throw DomainError("vertex " + describe(x) + " cannot reach the sink");
    path.push_back(g.coord(v));
  }
  return path;
}

std::vector<Coord> descendants(const Graph& g, Coord x) {
  const VertexId root = g.index_of(x);
  const auto mask = descendant_mask(g, sink_parents(g), root);
  std::vector<Coord> out;
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v)
    if (mask[static_cast<std::size_t>(v)]) out.push_back(g.coord(v));
  return out;
}

std::vector<Coord> geodesic_subgraph(const Graph& g, Coord x) {
  const VertexId root = g.index_of(x);
  if (root == g.sink()) throw DomainError("geodesic subgraph of the sink is undefined");
  const auto parent = sink_parents(g);
  const auto desc = descendant_mask(g, parent, root);

  std::vector<char> near(g.vertex_count(), 0);
  for (VertexId v = root; v != kNoVertex; v = parent[static_cast<std::size_t>(v)]) {
    near[static_cast<std::size_t>(v)] = 1;
    for (VertexId w : g.neighbors(v)) near[static_cast<std::size_t>(w)] = 1;
  }
  std::vector<Coord> out;
  for (VertexId v = 0; v < static_cast<VertexId>(g.vertex_count()); ++v)
    if (near[static_cast<std::size_t>(v)] && !desc[static_cast<std::size_t>(v)])
      out.push_back(g.coord(v));
  return out;
}

std::int64_t pow3(int k) {
  if (k < 0 || k > 39) throw DomainError("pow3 exponent out of range");
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) r *= 3;
  return r;
}

std::uint64_t kappa(std::uint64_t n) {
  std::uint64_t result = 0;
  std::uint64_t place = 1;
  while (n != 0) {
    if (n % 3 != 0) result += place;
    n /= 3;
    place *= 3;
  }
  return result;
}

bool has_ternary_digit_two(std::uint64_t n) {
  for (; n != 0; n /= 3)
    if (n % 3 == 2) return true;
  return false;
}

}  // namespace vicsek
