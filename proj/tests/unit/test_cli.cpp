#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(VICSEK_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("vicsek_cli_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(Cli, Graph) {
  const auto r = run("graph --level 2");
  ASSERT_EQ(r.code, 0);
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["vertices"], 76);
  EXPECT_EQ(doc["edges"], 150);
  EXPECT_EQ(doc["degrees"]["6"], 24);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("graph --level -1").code, 2);
  EXPECT_EQ(run("graph --level 7").code, 3);
  EXPECT_EQ(run("graph").code, 2);
  EXPECT_EQ(run("nosuchcommand").code, 2);
  EXPECT_EQ(run("mc --mode sandpile --level 9 --trials 10").code, 3);
  EXPECT_EQ(run("stabilize --config /nonexistent/file.json").code, 2);
}

TEST(Cli, Chain) {
  EXPECT_EQ(run("chain absorb --format csv").out, "1,3/4,1/2,1/4,0\n");
  const auto doc = json::parse(run("chain absorb").out);
  EXPECT_EQ(doc["stabilization_probability"], "3/4");
  const auto p = json::parse(run("chain matrix").out);
  EXPECT_EQ(p[1][2], "1/8");
  const auto k = json::parse(run("chain kstep --start 1 --k 1").out);
  EXPECT_EQ(k["distribution"][0], "1/2");
  const auto pmf = run("chain pmf --max-n 4 --format csv");
  EXPECT_NE(pmf.out.find("4,189,16384,"), std::string::npos);
}

TEST(Cli, MonteCarloIsDeterministic) {
  const auto a = json::parse(run("mc --trials 5000 --seed 3 --workers 1").out);
  const auto b = json::parse(run("mc --trials 5000 --seed 3 --workers 2").out);
  EXPECT_EQ(a["stabilized"], b["stabilized"]);
  EXPECT_EQ(a["trials"], 5000);
}

TEST(Cli, Group) {
  EXPECT_EQ(run("group --level 0 --format csv").out, "1,4,4\n");
  const auto doc = json::parse(run("group --level 1").out);
  EXPECT_EQ(doc.size(), 15u);
  EXPECT_EQ(doc.back(), "4");
}

TEST(Cli, IdentityAndStabilize) {
  const auto pgm = temp_file("id.pgm");
  const auto rec = temp_file("record.json");
  const auto r = run("identity --level 1 --verify 5 --render " + pgm.string() + " --record " + rec.string());
  ASSERT_EQ(r.code, 0);
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["heights"].size(), 15u);
  std::ifstream img(pgm);
  std::string magic;
  img >> magic;
  EXPECT_EQ(magic, "P2");
  std::ifstream rf(rec);
  const auto record = json::parse(rf);
  EXPECT_EQ(record["command"], "identity");
  EXPECT_EQ(record["seed"], 1);
  EXPECT_TRUE(record["outputs"].is_object());

  const auto cfg = temp_file("id.json");
  std::ofstream(cfg) << r.out;
  const auto s = json::parse(run("stabilize --config " + cfg.string() + " --x 0 --y 0 --count 4").out);
  EXPECT_EQ(s["config"]["heights"], doc["heights"]);
  EXPECT_GT(s["sink_particles"].get<int>(), 0);
  std::filesystem::remove(pgm);
  std::filesystem::remove(rec);
  std::filesystem::remove(cfg);
}
