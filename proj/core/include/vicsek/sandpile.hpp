#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "vicsek/graph.hpp"

namespace vicsek {

/// Height function on the non-sink vertices of a graph, indexed by
/// canonical vertex index. Proper sandpiles are non-negative; negative
/// entries only arise from illegal topplings and represent elements of Z^V.
class SandpileConfig {
 public:
  SandpileConfig() = default;
  explicit SandpileConfig(std::size_t sites, std::int64_t fill = 0) : heights_(sites, fill) {}
  explicit SandpileConfig(std::vector<std::int64_t> heights) : heights_(std::move(heights)) {}

  std::size_t size() const noexcept { return heights_.size(); }
  std::int64_t& operator[](std::size_t i) { return heights_[i]; }
  std::int64_t operator[](std::size_t i) const { return heights_[i]; }
  std::span<const std::int64_t> heights() const noexcept { return heights_; }
  std::span<std::int64_t> heights() noexcept { return heights_; }

  std::int64_t total() const;
  bool non_negative() const;

  friend bool operator==(const SandpileConfig&, const SandpileConfig&) = default;

 private:
  std::vector<std::int64_t> heights_;
};

/// Constant configuration on every non-sink vertex.
SandpileConfig constant_config(const Graph& g, std::int64_t height);
/// deg(v) - 1 everywhere: the maximal stable configuration.
SandpileConfig max_stable_config(const Graph& g);

bool is_stable(const Graph& g, const SandpileConfig& c);

/// Pointwise sum; throws std::overflow_error on 64-bit overflow.
SandpileConfig operator+(const SandpileConfig& a, const SandpileConfig& b);
/// Pointwise k * c.
SandpileConfig scaled(const SandpileConfig& c, std::int64_t k);

/// c + k * delta_v. Throws DomainError when v is the sink or k < 0.
SandpileConfig add_particles(const Graph& g, SandpileConfig c, Coord v, std::int64_t k);

struct ToppleResult {
  SandpileConfig config;
  std::int64_t sink_particles = 0;  // net particles moved into the sink
  bool legal = true;                // false when the first toppling was illegal
};

/// Applies c - times * Laplacian * delta_v. Illegal topplings are allowed and
/// reported through `legal`.
ToppleResult topple(const Graph& g, SandpileConfig c, Coord v, std::int64_t times = 1);
/// Inverse of topple: every neighbor sends one particle to v.
ToppleResult untopple(const Graph& g, SandpileConfig c, Coord v, std::int64_t times = 1);

struct AvalancheReport {
  std::vector<std::int64_t> odometer;  // topplings per non-sink vertex
  std::vector<VertexId> toppled;       // support of the odometer, ascending
  int diameter = -1;                   // -1 if nothing toppled, 0 for one vertex
  std::int64_t sink_particles = 0;
  std::int64_t total_topplings = 0;
};

struct StabilizeOptions {
  bool compute_diameter = true;
};

struct Stabilization {
  SandpileConfig config;
  AvalancheReport report;
};

/// Legal topplings until stable. The result does not depend on the order
/// (Abelian property); the engine fires vertices from a FIFO work queue.
Stabilization stabilize(const Graph& g, SandpileConfig c, StabilizeOptions options = {});

/// (a + b) stabilized.
SandpileConfig group_add(const Graph& g, const SandpileConfig& a, const SandpileConfig& b);

/// Largest graph distance between two vertices of `vertices` (double sweep,
/// exact on block graphs). -1 for an empty set.
int set_diameter(const Graph& g, std::span<const VertexId> vertices);

/// Incremental stabilization in nested volumes bounded by diagonal
/// checkpoints (i, i). At each checkpoint the vertex acts as a temporary
/// sink; its particle count is reported and then released into the next
/// volume.
class NestedVolumeStabilizer {
 public:
  /// The configuration must be stable outside the volume below the first
  /// checkpoint passed to advance_to().
  NestedVolumeStabilizer(const Graph& g, const SandpileConfig& c);

  /// Stabilizes with sink (i, i) and returns the particles it collected.
  /// Checkpoints must be diagonal vertices with strictly increasing i.
  std::int64_t advance_to(Coord checkpoint);

  /// Current heights on non-sink vertices, including released particles.
  SandpileConfig current() const;

 private:
  void relax();

  const Graph* graph_;
  std::vector<std::int64_t> heights_;
  std::vector<char> is_sink_;
  std::vector<char> queued_;
  std::vector<VertexId> queue_;
  std::int64_t last_index_ = 0;
  bool started_ = false;
};

/// Particles arriving at each checkpoint (i, i) when the configuration is
/// stabilized in the nested volumes those checkpoints bound.
std::vector<std::int64_t> boundary_flow(const Graph& g, const SandpileConfig& c,
                                        std::span<const Coord> checkpoints);

}  // namespace vicsek
