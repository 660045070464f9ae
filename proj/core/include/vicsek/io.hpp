#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vicsek/critical_group.hpp"
#include "vicsek/graph.hpp"
#include "vicsek/sandpile.hpp"

namespace vicsek {

/// Library version string.
const char* version();

/// {"level": n, "order": "lex-xy", "heights": [...]}, canonical vertex
/// order, sink omitted.
std::string config_to_json(int level, const SandpileConfig& c);

struct LeveledConfig {
  int level = 0;
  SandpileConfig config;
};

/// Inverse of config_to_json. Throws DomainError on malformed documents or
/// a height count that does not match 3 * 5^level.
LeveledConfig config_from_json(const std::string& text);

/// JSON array of decimal strings.
std::string factors_to_json(const InvariantFactors& f);

/// CSV with header n,numerator,denominator,value for n = 0..max_n.
std::string radius_pmf_csv(std::uint64_t max_n);

/// Plain PGM (P2), one pixel per lattice point, y axis pointing up.
/// Heights 2 -> 80, 4 -> 160, any other vertex -> 240, background 0.
std::string render_pgm(const Graph& g, const SandpileConfig& c);

/// SVG with one unit square per vertex at its lattice coordinate, using
/// the same gray levels as render_pgm.
std::string render_svg(const Graph& g, const SandpileConfig& c);

/// Provenance record emitted by every CLI command.
struct RunRecord {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::optional<std::uint64_t> seed;
  std::string outputs_json = "{}";  // must hold a JSON value
  double duration_seconds = 0;

  std::string to_json() const;
};

}  // namespace vicsek
