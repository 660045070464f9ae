// Command-line front end. Every command prints its result on stdout; with
// --record FILE it also writes a run record (parameters, seed, version,
// outputs, duration).
//
// Exit codes: 0 ok, 2 usage or validation, 3 capacity, 4 verification.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "vicsek/chain.hpp"
#include "vicsek/critical_group.hpp"
#include "vicsek/errors.hpp"
#include "vicsek/graph.hpp"
#include "vicsek/identity.hpp"
#include "vicsek/io.hpp"
#include "vicsek/monte_carlo.hpp"
#include "vicsek/sandpile.hpp"

namespace {

using nlohmann::json;
using namespace vicsek;

enum ExitCode { kOk = 0, kUsage = 2, kCapacity = 3, kVerification = 4 };

struct Common {
  int level = 0;
  std::string format = "json";
  std::string record;
};

std::string rational_row_csv(const std::vector<Rational>& row) {
  std::string s;
  for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + to_string(row[i]);
  return s;
}

json rational_row_json(const std::vector<Rational>& row) {
  json a = json::array();
  for (const auto& q : row) a.push_back(to_string(q));
  return a;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path);
  out << text;
}

std::string cmd_graph(const Common& c) {
  const auto g = build(c.level);
  std::map<int, std::size_t> degrees;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) ++degrees[g.degree(static_cast<VertexId>(v))];
  json doc;
  doc["level"] = c.level;
  doc["vertices"] = g.vertex_count();
  doc["edges"] = g.edge_count();
  const Coord s = g.coord(g.sink());
  doc["sink"] = {s.x, s.y};
  json hist = json::object();
  for (auto [d, n] : degrees) hist[std::to_string(d)] = n;
  doc["degrees"] = hist;
  doc["diagonal_copies"] = g.diagonal_copy_count();
  return doc.dump();
}

std::string cmd_chain(const std::string& what, const Common& c, int start, unsigned long k,
                      std::uint64_t max_n) {
  const bool csv = c.format == "csv";
  if (what == "matrix") {
    const auto p = transition_matrix();
    if (csv) {
      std::string s;
      for (std::size_t r = 0; r < p.rows(); ++r) s += rational_row_csv(p.row(r)) + (r + 1 < p.rows() ? "\n" : "");
      return s;
    }
    json rows = json::array();
    for (std::size_t r = 0; r < p.rows(); ++r) rows.push_back(rational_row_json(p.row(r)));
    return rows.dump();
  }
  if (what == "absorb") {
    const auto x = absorption_probabilities();
    if (csv) return rational_row_csv(x);
    json doc;
    doc["absorption"] = rational_row_json(x);
    doc["stabilization_probability"] = to_string(x[1]);
    return doc.dump();
  }
  if (what == "kstep") {
    const auto row = k_step_distribution(start, k);
    if (csv) return rational_row_csv(row);
    json doc;
    doc["start"] = start;
    doc["k"] = k;
    doc["distribution"] = rational_row_json(row);
    return doc.dump();
  }
  // pmf
  if (csv) {
    auto s = radius_pmf_csv(max_n);
    s.pop_back();
    return s;
  }
  json rows = json::array();
  for (std::uint64_t n = 0; n <= max_n; ++n) {
    const auto t = radius_pmf_terms(n);
    rows.push_back({{"n", n}, {"probability", to_string(t.value)}, {"value", t.value.get_d()},
                    {"times_coincide", t.events_overlap}});
  }
  return rows.dump();
}

std::string cmd_mc(const McOptions& o) {
  const auto e = monte_carlo_stabilization(o);
  json doc;
  doc["mode"] = o.mode == McMode::Chain ? "chain" : "sandpile";
  doc["level"] = o.level;
  doc["trials"] = e.trials;
  doc["seed"] = o.seed;
  doc["estimate"] = e.estimate;
  doc["std_error"] = e.std_error;
  doc["band_3sigma"] = {e.estimate - 3 * e.std_error, e.estimate + 3 * e.std_error};
  doc["stabilized"] = e.stabilized;
  doc["exploded"] = e.exploded;
  doc["truncated"] = e.truncated;
  doc["truncation_bound"] = e.truncation_bound;
  return doc.dump();
}

std::string cmd_group(const Common& c) {
  const auto f = group_structure(c.level);
  if (c.format == "csv") {
    std::string s;
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + f[i].get_str();
    return s;
  }
  return factors_to_json(f);
}

std::string cmd_identity(const Common& c, const std::string& render, std::uint64_t verify, std::uint64_t seed) {
  const auto g = build(c.level);
  const auto id = identity(c.level);
  if (verify > 0) (void)verify_identity(g, id, verify, seed);
  if (!render.empty()) {
    const bool svg = render.size() >= 4 && render.compare(render.size() - 4, 4, ".svg") == 0;
    write_file(render, svg ? render_svg(g, id) : render_pgm(g, id));
  }
  return config_to_json(c.level, id);
}

std::string cmd_stabilize(const std::string& input, std::int64_t x, std::int64_t y, std::int64_t count) {
  std::ifstream in(input);
  if (!in) throw DomainError("cannot read " + input);
  std::stringstream buf;
  buf << in.rdbuf();
  const auto cfg = config_from_json(buf.str());
  const auto g = build(cfg.level);
  const auto s = stabilize(g, add_particles(g, cfg.config, {x, y}, count));
  json doc;
  doc["config"] = json::parse(config_to_json(cfg.level, s.config));
  doc["sink_particles"] = s.report.sink_particles;
  doc["diameter"] = s.report.diameter;
  doc["toppled"] = s.report.toppled.size();
  doc["total_topplings"] = s.report.total_topplings;
  return doc.dump();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Abelian sandpiles on Vicsek graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(vicsek::version()));

  Common common;
  auto add_common = [&](CLI::App* sub, bool level) {
    if (level) sub->add_option("--level", common.level, "graph level")->required();
    sub->add_option("--format", common.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--record", common.record, "write a run record to this file");
  };

  auto* graph = app.add_subcommand("graph", "vertex, edge and degree counts");
  add_common(graph, true);

  std::string chain_what;
  int start = 1;
  unsigned long k = 1;
  std::uint64_t max_n = 30;
  auto* chain = app.add_subcommand("chain", "exact nested-volume chain quantities");
  chain->add_option("what", chain_what, "matrix | absorb | kstep | pmf")
      ->required()
      ->check(CLI::IsMember({"matrix", "absorb", "kstep", "pmf"}));
  chain->add_option("--start", start, "start state for kstep")->check(CLI::Range(0, 4));
  chain->add_option("--k", k, "number of steps for kstep");
  chain->add_option("--max-n", max_n, "largest diameter for pmf");
  add_common(chain, false);

  McOptions mc_opts;
  std::string mode = "chain";
  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate of the stabilization probability");
  mc->add_option("--mode", mode, "chain | sandpile")->check(CLI::IsMember({"chain", "sandpile"}));
  mc->add_option("--level", mc_opts.level, "level (step bound 3^level in chain mode)");
  mc->add_option("--trials", mc_opts.trials, "number of trials");
  mc->add_option("--seed", mc_opts.seed, "64-bit seed");
  mc->add_option("--workers", mc_opts.workers, "worker threads (0 = all cores)");
  add_common(mc, false);

  auto* group = app.add_subcommand("group", "invariant factors of the sandpile group");
  add_common(group, true);

  std::string render;
  std::uint64_t verify = 0;
  std::uint64_t seed = 1;
  auto* ident = app.add_subcommand("identity", "identity element of the sandpile group");
  ident->add_option("--render", render, "write a .pgm or .svg image");
  ident->add_option("--verify", verify, "check the identity against this many sampled configurations");
  ident->add_option("--seed", seed, "64-bit seed for --verify");
  add_common(ident, true);

  std::string input;
  std::int64_t at_x = 0, at_y = 0, count = 1;
  auto* stab = app.add_subcommand("stabilize", "add particles to a configuration and stabilize");
  stab->add_option("--config", input, "configuration JSON file")->required();
  stab->add_option("--x", at_x, "x coordinate of the vertex");
  stab->add_option("--y", at_y, "y coordinate of the vertex");
  stab->add_option("--count", count, "particles to add");
  add_common(stab, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  RunRecord record;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    std::string out;
    if (graph->parsed()) {
      record.command = "graph";
      record.parameters = {{"level", std::to_string(common.level)}};
      out = cmd_graph(common);
    } else if (chain->parsed()) {
      record.command = "chain " + chain_what;
      record.parameters = {{"start", std::to_string(start)}, {"k", std::to_string(k)},
                           {"max_n", std::to_string(max_n)}, {"format", common.format}};
      out = cmd_chain(chain_what, common, start, k, max_n);
    } else if (mc->parsed()) {
      mc_opts.mode = mode == "chain" ? McMode::Chain : McMode::Sandpile;
      record.command = "mc";
      record.parameters = {{"mode", mode}, {"level", std::to_string(mc_opts.level)},
                           {"trials", std::to_string(mc_opts.trials)}};
      record.seed = mc_opts.seed;
      out = cmd_mc(mc_opts);
    } else if (group->parsed()) {
      record.command = "group";
      record.parameters = {{"level", std::to_string(common.level)}};
      out = cmd_group(common);
    } else if (ident->parsed()) {
      record.command = "identity";
      record.parameters = {{"level", std::to_string(common.level)}, {"render", render},
                           {"verify", std::to_string(verify)}};
      if (verify > 0) record.seed = seed;
      out = cmd_identity(common, render, verify, seed);
    } else {
      record.command = "stabilize";
      record.parameters = {{"config", input}, {"x", std::to_string(at_x)}, {"y", std::to_string(at_y)},
                           {"count", std::to_string(count)}};
      out = cmd_stabilize(input, at_x, at_y, count);
    }
    std::cout << out << '\n';
    if (!common.record.empty()) {
      record.outputs_json = common.format == "csv" ? json(out).dump() : out;
      record.duration_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      write_file(common.record, record.to_json() + "\n");
    }
    return kOk;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kCapacity;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kVerification;
  } catch (const DomainError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
