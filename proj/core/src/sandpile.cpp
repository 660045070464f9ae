#include "vicsek/sandpile.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "vicsek/errors.hpp"

namespace vicsek {

namespace {

void check_size(const Graph& g, const SandpileConfig& c) {
  if (c.size() != g.site_count()) {
    std::ostringstream os;
    os << "configuration has " << c.size() << " sites, graph has " << g.site_count();
    throw DomainError(os.str());
  }
}

VertexId site_of(const Graph& g, Coord v) {
  const VertexId id = g.index_of(v);
  if (id == g.sink()) throw DomainError("operation not defined at the sink");
  return id;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("sandpile height overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("sandpile height overflow");
  return r;
}

// Full-length height vector with the sink slot appended (starts at zero).
std::vector<std::int64_t> with_sink(const SandpileConfig& c) {
  std::vector<std::int64_t> h(c.heights().begin(), c.heights().end());
  h.push_back(0);
  return h;
}

ToppleResult fire(const Graph& g, SandpileConfig c, Coord v, std::int64_t times) {
  check_size(g, c);
  const VertexId id = site_of(g, v);
  const auto i = static_cast<std::size_t>(id);
  ToppleResult out;
  out.legal = times <= 0 || c[i] >= g.degree(id);
  c[i] = checked_add(c[i], -checked_mul(times, g.degree(id)));
  for (VertexId w : g.neighbors(id)) {
    if (w == g.sink()) {
      out.sink_particles = checked_add(out.sink_particles, times);
    } else {
      c[static_cast<std::size_t>(w)] = checked_add(c[static_cast<std::size_t>(w)], times);
    }
  }
  out.config = std::move(c);
  return out;
}

}  // namespace

std::int64_t SandpileConfig::total() const {
  std::int64_t s = 0;
  for (auto h : heights_) s = checked_add(s, h);
  return s;
}

bool SandpileConfig::non_negative() const {
  return std::all_of(heights_.begin(), heights_.end(), [](std::int64_t h) { return h >= 0; });
}

SandpileConfig constant_config(const Graph& g, std::int64_t height) {
  return SandpileConfig(g.site_count(), height);
}

SandpileConfig max_stable_config(const Graph& g) {
  SandpileConfig c(g.site_count());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = g.degree(static_cast<VertexId>(i)) - 1;
  return c;
}

bool is_stable(const Graph& g, const SandpileConfig& c) {
  check_size(g, c);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] >= g.degree(static_cast<VertexId>(i))) return false;
  return true;
}

SandpileConfig operator+(const SandpileConfig& a, const SandpileConfig& b) {
  if (a.size() != b.size()) throw DomainError("configuration sizes differ");
  SandpileConfig r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

SandpileConfig scaled(const SandpileConfig& c, std::int64_t k) {
  SandpileConfig r(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) r[i] = checked_mul(c[i], k);
  return r;
}

SandpileConfig add_particles(const Graph& g, SandpileConfig c, Coord v, std::int64_t k) {
  check_size(g, c);
  if (k < 0) throw DomainError("particle count must be non-negative");
  const auto i = static_cast<std::size_t>(site_of(g, v));
  c[i] = checked_add(c[i], k);
  return c;
}

ToppleResult topple(const Graph& g, SandpileConfig c, Coord v, std::int64_t times) {
  return fire(g, std::move(c), v, times);
}

ToppleResult untopple(const Graph& g, SandpileConfig c, Coord v, std::int64_t times) {
  auto r = fire(g, std::move(c), v, -times);
  r.legal = true;
  return r;
}

Stabilization stabilize(const Graph& g, SandpileConfig c, StabilizeOptions options) {
  check_size(g, c);
  const std::size_t n = g.site_count();
  std::vector<std::int64_t> odo(n, 0);
  std::vector<char> queued(n, 0);
  std::deque<VertexId> queue;
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i] >= g.degree(static_cast<VertexId>(i))) {
      queue.push_back(static_cast<VertexId>(i));
      queued[i] = 1;
    }
  }
  std::int64_t to_sink = 0;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    const auto i = static_cast<std::size_t>(v);
    queued[i] = 0;
    const int d = g.degree(v);
    if (c[i] < d) continue;
    const std::int64_t t = c[i] / d;
    c[i] -= t * d;
    odo[i] += t;
    for (VertexId w : g.neighbors(v)) {
      if (w == g.sink()) {
        to_sink = checked_add(to_sink, t);
        continue;
      }
      const auto j = static_cast<std::size_t>(w);
      c[j] = checked_add(c[j], t);
      if (!queued[j] && c[j] >= g.degree(w)) {
        queued[j] = 1;
        queue.push_back(w);
      }
    }
  }

  Stabilization out;
  out.report.sink_particles = to_sink;
  for (std::size_t i = 0; i < n; ++i) {
    if (odo[i] > 0) {
      out.report.toppled.push_back(static_cast<VertexId>(i));
      out.report.total_topplings += odo[i];
    }
  }
  if (options.compute_diameter) out.report.diameter = set_diameter(g, out.report.toppled);
  out.report.odometer = std::move(odo);
  out.config = std::move(c);
  return out;
}

SandpileConfig group_add(const Graph& g, const SandpileConfig& a, const SandpileConfig& b) {
  return stabilize(g, a + b, {.compute_diameter = false}).config;
}

int set_diameter(const Graph& g, std::span<const VertexId> vertices) {
  if (vertices.empty()) return -1;
  if (vertices.size() == 1) return 0;
  auto farthest = [&](VertexId from) {
    const auto dist = bfs_distances(g, from);
    VertexId best = from;
    for (VertexId v : vertices)
      if (dist[static_cast<std::size_t>(v)] > dist[static_cast<std::size_t>(best)]) best = v;
    return std::pair{best, dist[static_cast<std::size_t>(best)]};
  };
  const auto [a, ignored] = farthest(vertices.front());
  (void)ignored;
  return farthest(a).second;
}

NestedVolumeStabilizer::NestedVolumeStabilizer(const Graph& g, const SandpileConfig& c)
    : graph_(&g), heights_(with_sink(c)), is_sink_(g.vertex_count(), 0),
      queued_(g.vertex_count(), 0) {
  check_size(g, c);
  is_sink_[static_cast<std::size_t>(g.sink())] = 1;
}

void NestedVolumeStabilizer::relax() {
  const Graph& g = *graph_;
  std::size_t head = 0;
  while (head < queue_.size()) {
    const VertexId v = queue_[head++];
    const auto i = static_cast<std::size_t>(v);
    queued_[i] = 0;
    if (is_sink_[i]) continue;
    const int d = g.degree(v);
    if (heights_[i] < d) continue;
    const std::int64_t t = heights_[i] / d;
    heights_[i] -= t * d;
    for (VertexId w : g.neighbors(v)) {
      const auto j = static_cast<std::size_t>(w);
      heights_[j] = checked_add(heights_[j], t);
      if (!is_sink_[j] && !queued_[j] && heights_[j] >= g.degree(w)) {
        queued_[j] = 1;
        queue_.push_back(w);
      }
    }
  }
  queue_.clear();
}

std::int64_t NestedVolumeStabilizer::advance_to(Coord checkpoint) {
  const Graph& g = *graph_;
  if (checkpoint.x != checkpoint.y || checkpoint.x < 1)
    throw DomainError("checkpoints must be diagonal vertices (i,i) with i >= 1");
  if (started_ && checkpoint.x <= last_index_)
    throw DomainError("checkpoints must be strictly increasing");
  const VertexId cp = g.index_of(checkpoint);
  const auto ci = static_cast<std::size_t>(cp);

  if (!started_) {
    // Everything unstable must lie below the first checkpoint.
    const auto below = descendants(g, checkpoint);
    std::vector<char> inside(g.vertex_count(), 0);
    for (Coord c : below) inside[static_cast<std::size_t>(g.index_of(c))] = 1;
    for (std::size_t i = 0; i < g.site_count(); ++i) {
      if (heights_[i] >= g.degree(static_cast<VertexId>(i))) {
        if (!inside[i]) throw DomainError("configuration is unstable outside the first volume");
        queued_[i] = 1;
        queue_.push_back(static_cast<VertexId>(i));
      }
    }
    started_ = true;
  }
  last_index_ = checkpoint.x;

  const std::int64_t base = heights_[ci];
  heights_[ci] = 0;
  const bool was_sink = is_sink_[ci];
  is_sink_[ci] = 1;
  relax();
  const std::int64_t collected = heights_[ci];
  heights_[ci] = checked_add(base, collected);
  if (!was_sink) {
    is_sink_[ci] = 0;
    if (heights_[ci] >= g.degree(cp)) {
      queued_[ci] = 1;
      queue_.push_back(cp);
    }
  } else {
    heights_[ci] = collected;
  }
  return collected;
}

SandpileConfig NestedVolumeStabilizer::current() const {
  return SandpileConfig(std::vector<std::int64_t>(heights_.begin(), heights_.end() - 1));
}

std::vector<std::int64_t> boundary_flow(const Graph& g, const SandpileConfig& c,
                                        std::span<const Coord> checkpoints) {
  NestedVolumeStabilizer s(g, c);
  std::vector<std::int64_t> out;
  out.reserve(checkpoints.size());
  for (Coord cp : checkpoints) out.push_back(s.advance_to(cp));
  return out;
}

}  // namespace vicsek
