#include "vicsek/io.hpp"

#include <iomanip>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "vicsek/chain.hpp"
#include "vicsek/errors.hpp"

namespace vicsek {

namespace {

using nlohmann::json;

int gray(std::int64_t h) {
  if (h == 2) return 80;
  if (h == 4) return 160;
  return 240;
}

void check_size(const Graph& g, const SandpileConfig& c) {
  if (c.size() != g.site_count()) throw DomainError("configuration does not match the graph");
}

// Gray level per vertex (the sink counts as "other").
std::vector<int> vertex_grays(const Graph& g, const SandpileConfig& c) {
  std::vector<int> out(g.vertex_count(), 240);
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = gray(c[i]);
  return out;
}

std::int64_t sites_at_level(int level) {
  std::int64_t p = 1;
  for (int i = 0; i < level; ++i) p *= 5;
  return 3 * p;
}

}  // namespace

const char* version() { return VICSEK_VERSION; }

std::string config_to_json(int level, const SandpileConfig& c) {
  json doc;
  doc["level"] = level;
  doc["order"] = "lex-xy";
  doc["heights"] = std::vector<std::int64_t>(c.heights().begin(), c.heights().end());
  return doc.dump();
}

LeveledConfig config_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError(std::string("configuration is not valid JSON: ") + e.what());
  }
  try {
    if (doc.at("order").get<std::string>() != "lex-xy") throw DomainError("unsupported vertex order");
    LeveledConfig out;
    out.level = doc.at("level").get<int>();
    if (out.level < 0 || out.level > 12) throw DomainError("level out of range");
    auto heights = doc.at("heights").get<std::vector<std::int64_t>>();
    if (static_cast<std::int64_t>(heights.size()) != sites_at_level(out.level))
      throw DomainError("height count does not match the level");
    out.config = SandpileConfig(std::move(heights));
    return out;
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed configuration: ") + e.what());
  }
}

std::string factors_to_json(const InvariantFactors& f) {
  json arr = json::array();
  for (const auto& d : f) arr.push_back(d.get_str());
  return arr.dump();
}

std::string radius_pmf_csv(std::uint64_t max_n) {
  std::ostringstream os;
  os << "n,numerator,denominator,value\n";
  os << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (std::uint64_t n = 0; n <= max_n; ++n) {
    const Rational q = radius_pmf(n);
    os << n << ',' << q.get_num().get_str() << ',' << q.get_den().get_str() << ',' << q.get_d() << '\n';
  }
  return os.str();
}

std::string render_pgm(const Graph& g, const SandpileConfig& c) {
  check_size(g, c);
  std::int64_t w = 0, h = 0;
  for (Coord p : g.coords()) {
    w = std::max(w, p.x + 1);
    h = std::max(h, p.y + 1);
  }
  std::vector<int> pixels(static_cast<std::size_t>(w * h), 0);
  const auto grays = vertex_grays(g, c);
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const Coord p = g.coord(static_cast<VertexId>(i));
    pixels[static_cast<std::size_t>((h - 1 - p.y) * w + p.x)] = grays[i];
  }
  std::ostringstream os;
  os << "P2\n" << w << ' ' << h << "\n255\n";
  for (std::int64_t r = 0; r < h; ++r) {
    for (std::int64_t x = 0; x < w; ++x) {
      if (x) os << ' ';
      os << pixels[static_cast<std::size_t>(r * w + x)];
    }
    os << '\n';
  }
  return os.str();
}

std::string render_svg(const Graph& g, const SandpileConfig& c) {
  check_size(g, c);
  std::int64_t w = 0, h = 0;
  for (Coord p : g.coords()) {
    w = std::max(w, p.x + 1);
    h = std::max(h, p.y + 1);
  }
  const auto grays = vertex_grays(g, c);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w * 8 << "\" height=\"" << h * 8
     << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
  os << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"rgb(0,0,0)\"/>\n";
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const Coord p = g.coord(static_cast<VertexId>(i));
    const int v = grays[i];
    os << "<rect x=\"" << p.x << "\" y=\"" << h - 1 - p.y << "\" width=\"1\" height=\"1\" fill=\"rgb(" << v
       << ',' << v << ',' << v << ")\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string RunRecord::to_json() const {
  json doc;
  doc["command"] = command;
  json params = json::object();
  for (const auto& [k, v] : parameters) params[k] = v;
  doc["parameters"] = params;
  doc["seed"] = seed ? json(*seed) : json(nullptr);
  doc["version"] = version();
  doc["outputs"] = json::parse(outputs_json);
  doc["duration_seconds"] = duration_seconds;
  return doc.dump();
}

}  // namespace vicsek
