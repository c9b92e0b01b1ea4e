#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "edgedist/graph_io.hpp"

namespace edgedist {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("edgedist_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    const auto path = (dir_ / name).string();
    std::ofstream(path, std::ios::binary) << text;
    return path;
  }
  std::string write_graph(const std::string& name, const Graph& g) const { return write(name, serialize_graph(g)); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, SolveCliqueWithSearch) {
  auto r = run({"solve", "--graph", write_graph("c5.txt", cycle_graph(5)), "--problem", "clique", "--search",
                "--verify", "--no-timing"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["weight"], 2);
  EXPECT_EQ(j["k"], 1);
  EXPECT_EQ(j["mode"], "apex");
  EXPECT_EQ(j["verified"], true);
  EXPECT_TRUE(j["runtime_ms"].is_null());
  EXPECT_LE(j["leaf_calls"].get<int>(), 2);
}

TEST_F(CliTest, SolveIndependentSetAtZero) {
  auto g = write("k3.txt", "3 3\n1 2 3\n0 1\n1 2\n0 2\n");
  auto r = run({"solve", "--graph", g, "--problem", "is", "--search", "--json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["weight"], 3);
  EXPECT_EQ(j["vertices"], json::array({2}));
  EXPECT_EQ(j["k"], 0);
  EXPECT_EQ(j["leaf_calls"], 1);
  EXPECT_TRUE(j["runtime_ms"].is_number());
  EXPECT_TRUE(j["verified"].is_null());
}

TEST_F(CliTest, SolveWithSetFile) {
  auto g = write_graph("c5.txt", with_weights(cycle_graph(5), {5, 1, 5, 1, 1}));
  auto s = write("s.txt", "# chord\nadd\n0 2\n");
  auto r = run({"solve", "--graph", g, "--problem", "is", "--set", s, "--no-timing"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["weight"], 10);
  EXPECT_EQ(j["vertices"], json::array({0, 2}));
  EXPECT_EQ(j["leaf_calls"], 2);
}

TEST_F(CliTest, SolveBadCertificate) {
  auto g = write_graph("c5.txt", cycle_graph(5));
  EXPECT_EQ(run({"solve", "--graph", g, "--problem", "clique", "--set", write("empty.txt", "apex\n")}).code,
            cli::kCertificateError);
  EXPECT_EQ(run({"solve", "--graph", g, "--problem", "clique", "--set", write("bad.txt", "apex\n0 2\n")}).code,
            cli::kCertificateError);
}

TEST_F(CliTest, ParseErrors) {
  auto bad = write("bad.txt", "3 1\n0 0\n");
  EXPECT_EQ(run({"solve", "--graph", bad, "--problem", "clique", "--search"}).code, cli::kParseError);
  EXPECT_EQ(run({"recognize", "--graph", path("missing.txt")}).code, cli::kParseError);
  EXPECT_EQ(run({"distance", "--graph", bad}).code, cli::kParseError);
  EXPECT_EQ(run({"solve", "--problem", "clique"}).code, cli::kParseError);
  EXPECT_EQ(run({"nonsense"}).code, cli::kParseError);
  EXPECT_EQ(run({}).code, cli::kParseError);
  auto g = write_graph("p3.txt", path_graph(3));
  EXPECT_EQ(run({"solve", "--graph", g, "--problem", "clique"}).code, cli::kParseError);
  EXPECT_EQ(run({"solve", "--graph", g, "--problem", "clique", "--search", "--class", "chordal"}).code,
            cli::kParseError);
}

TEST_F(CliTest, Recognize) {
  auto p4 = run({"recognize", "--graph", write_graph("p4.txt", path_graph(4)), "--emit-orientation",
                 path("o.txt")});
  ASSERT_EQ(p4.code, cli::kOk);
  auto j = json::parse(p4.out);
  EXPECT_EQ(j["is_comparability"], true);
  EXPECT_EQ(j["orientation"].size(), 3U);
  std::ifstream dump(path("o.txt"));
  std::string line;
  int lines = 0;
  while (std::getline(dump, line)) {
    EXPECT_NE(line.find(" -> "), std::string::npos);
    ++lines;
  }
  EXPECT_EQ(lines, 3);

  auto c5 = run({"recognize", "--graph", write_graph("c5.txt", cycle_graph(5))});
  EXPECT_EQ(c5.code, cli::kNotInClass);
  EXPECT_EQ(json::parse(c5.out)["is_comparability"], false);
  EXPECT_EQ(run({"recognize", "--graph", write_graph("k5.txt", complete_graph(5))}).code, cli::kOk);
}

TEST_F(CliTest, Distance) {
  auto c5 = run({"distance", "--graph", write_graph("c5.txt", cycle_graph(5)), "--no-timing"});
  ASSERT_EQ(c5.code, cli::kOk);
  auto j = json::parse(c5.out);
  EXPECT_EQ(j["xi"], 1);
  EXPECT_EQ(j["mode"], "apex");
  EXPECT_EQ(j["pairs"], json::parse("[[0,1]]"));

  auto few = run({"distance", "--graph", write("few.txt", "6 4\n0 1\n1 2\n2 0\n3 4\n")});
  ASSERT_EQ(few.code, cli::kOk);
  EXPECT_EQ(json::parse(few.out)["xi"], 0);

  auto two = write_graph("c5c5.txt", disjoint_union(cycle_graph(5), cycle_graph(5)));
  auto over = run({"distance", "--graph", two, "--kmax", "1"});
  EXPECT_EQ(over.code, cli::kBudgetExceeded);
  EXPECT_TRUE(json::parse(over.out)["xi"].is_null());
  EXPECT_EQ(run({"distance", "--graph", two, "--kmax", "2"}).code, cli::kOk);
  EXPECT_EQ(run({"solve", "--graph", two, "--problem", "is", "--search", "--kmax", "1"}).code,
            cli::kBudgetExceeded);
}

TEST_F(CliTest, GenOutputsParseAndCertify) {
  auto zero = run({"gen", "--n", "8", "--k", "0", "--density", "1.0", "--seed", "1"});
  ASSERT_EQ(zero.code, cli::kOk);
  EXPECT_EQ(parse_graph(zero.out).edge_count(), 28U);

  auto r = run({"gen", "--n", "8", "--k", "3", "--density", "0.4", "--seed", "5", "--set-out", path("s.txt")});
  ASSERT_EQ(r.code, cli::kOk);
  auto g = write("g.txt", r.out);
  auto d = run({"distance", "--graph", g});
  ASSERT_EQ(d.code, cli::kOk);
  EXPECT_LE(json::parse(d.out)["xi"].get<int>(), 3);
  auto s = run({"solve", "--graph", g, "--problem", "clique", "--set", path("s.txt"), "--verify"});
  ASSERT_EQ(s.code, cli::kOk) << s.err;
  EXPECT_EQ(json::parse(s.out)["verified"], true);

  EXPECT_EQ(run({"gen", "--n", "3", "--k", "9", "--density", "0.5", "--seed", "1"}).code, cli::kParseError);
  EXPECT_EQ(run({"gen", "--n", "3", "--k", "0", "--density", "2", "--seed", "1"}).code, cli::kParseError);
}

TEST_F(CliTest, BenchRows) {
  auto r = run({"bench", "--n", "12", "--kmax", "3", "--trials", "2", "--seed", "7", "--no-timing"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "k,trial,n,m,mode,leaf_calls,max_depth,runtime_ms,oracle_match");
  int rows = 0;
  while (std::getline(lines, line)) {
    std::vector<std::string> f;
    std::istringstream cells(line);
    for (std::string c; std::getline(cells, c, ',');) f.push_back(c);
    ASSERT_EQ(f.size(), 9U);
    const auto k = std::stoul(f[0]);
    const auto leaves = std::stoul(f[5]);
    if (k == 0) EXPECT_EQ(leaves, 1U);
    EXPECT_LE(leaves, 1UL << k);
    EXPECT_EQ(f[7], "NA");
    EXPECT_EQ(f[8], "1");
    ++rows;
  }
  EXPECT_EQ(rows, 8);
}

TEST_F(CliTest, ByteIdenticalReruns) {
  auto g = write_graph("c5.txt", with_weights(cycle_graph(5), {3, 1, 4, 1, 5}));
  const std::vector<std::vector<std::string>> commands = {
      {"solve", "--graph", g, "--problem", "clique", "--search", "--verify", "--no-timing"},
      {"solve", "--graph", g, "--problem", "is", "--search", "--threads", "4", "--no-timing"},
      {"recognize", "--graph", g},
      {"distance", "--graph", g, "--no-timing"},
      {"gen", "--n", "30", "--k", "4", "--density", "0.5", "--seed", "11"},
      {"bench", "--n", "20", "--kmax", "4", "--trials", "3", "--seed", "2", "--no-timing"},
  };
  for (const auto& c : commands) {
    auto a = run(c);
    auto b = run(c);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out) << c.front();
  }
}

}  // namespace
}  // namespace edgedist
