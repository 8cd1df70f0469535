#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace hamcon {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream f(std::string(HAMCON_GOLDEN_DIR) + "/" + name);
  EXPECT_TRUE(f.good()) << "missing golden file " << name;
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

TEST(Cli, Construct) {
  auto r = run({"construct", "--family", "F", "--n", "10", "--delta", "3", "--format", "graph6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, encode_graph6(build_F(10, 3)) + "\n");
  EXPECT_TRUE(r.err.empty());

  r = run({"construct", "--family", "ore-nhc-a", "--n", "6", "--format", "dot"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("graph G {"), std::string::npos);

  EXPECT_EQ(run({"construct", "--family", "F", "--n", "10", "--delta", "6"}).code, 64);
  EXPECT_EQ(run({"construct", "--family", "H", "--n", "10"}).code, 64);
  EXPECT_EQ(run({"construct", "--family", "F", "--n", "10", "--delta", "3", "--format", "csv"}).code, 64);
}

TEST(Cli, UnknownFlagIsUsageError) {
  const auto r = run({"construct", "--familly", "F"});
  EXPECT_EQ(r.code, 64);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(run({}).code, 64);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ConstructPipesIntoOracle) {
  for (std::size_t n = 6; n <= 14; ++n) {
    for (std::size_t d = 3; d <= n / 2; ++d) {
      for (const char* fam : {"F", "G"}) {
        const auto g6 = run({"construct", "--family", fam, "--n", std::to_string(n), "--delta",
                             std::to_string(d)});
        ASSERT_EQ(g6.code, 0);
        const auto r = run({"oracle", "hc"}, g6.out);
        EXPECT_EQ(r.code, 1) << fam << " " << n << " " << d;
        EXPECT_EQ(r.out, "false\n");
      }
    }
  }
}

TEST(Cli, Cliques) {
  auto r = run({"cliques", "--s", "2", "--n", "10", "--delta", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "f 34\ng 33\nphi_s 34\nregime F\n");

  r = run({"cliques", "--s", "2", "--formula", "lambda", "--n", "10", "--x", "5"});
  EXPECT_EQ(r.out, "lambda 30\n");

  r = run({"cliques", "--s", "3", "--formula", "f", "--n", "10", "--delta", "3", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(r.out)["f"], 62);

  r = run({"cliques", "count", "--s", "3"}, encode_graph6(build_F(10, 3)) + "\n" +
                                               encode_graph6(complete(8)) + "\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "62\n56\n");

  EXPECT_EQ(run({"cliques", "--s", "2", "--n", "10", "--delta", "2"}).code, 64);
}

TEST(Cli, Bounds) {
  auto r = run({"bounds", "--kind", "ho", "--n", "16", "--delta", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 3), "92 ");
  r = run({"bounds", "--kind", "phi", "--n", "23", "--delta", "6", "--format", "json"});
  EXPECT_EQ(r.out, golden("bounds_phi_23_6.json"));
  EXPECT_EQ(run({"bounds", "--kind", "nope", "--n", "8"}).code, 64);
  EXPECT_EQ(run({"bounds", "--kind", "erdos", "--n", "10", "--delta", "5"}).code, 64);
}

TEST(Cli, BoundsTableGolden) {
  const auto r = run({"bounds", "table", "--n-range", "8:12", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, golden("bounds_table_8_12.csv"));
  std::istringstream lines(r.out);
  std::string line;
  int rows = -1;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 2 + 2 + 3 + 3 + 4);  // delta in 3..floor(n/2) for n = 8..12
  EXPECT_EQ(run({"bounds", "table", "--n-range", "12:8"}).code, 64);
}

TEST(Cli, ClosureAndCore) {
  Graph k5m = complete(5);
  k5m.remove_edge(1, 3);
  auto r = run({"closure"}, encode_graph6(k5m) + "\n");
  EXPECT_EQ(r.out, encode_graph6(complete(5)) + "\n");
  r = run({"closure", "--protect", "1", "--format", "json"}, encode_graph6(k5m) + "\n");
  EXPECT_EQ(nlohmann::json::parse(r.out)["added_edges"].size(), 0u);

  r = run({"core", "--t", "6", "--format", "json"}, encode_graph6(build_F(12, 3)) + "\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, golden("core_F_12_3.json"));
  r = run({"core", "--t", "6"}, encode_graph6(build_F(12, 3)) + "\n");
  EXPECT_EQ(r.out, encode_graph6(complete(10)) + "\n");
  EXPECT_EQ(run({"core", "--t", "6", "--first", "0"}, encode_graph6(build_F(12, 3))).code, 65);
}

TEST(Cli, Check) {
  const std::string f = encode_graph6(build_F(10, 3)) + "\n";
  EXPECT_EQ(run({"check", "ore"}, f).code, 2);
  EXPECT_EQ(run({"check", "ore"}, encode_graph6(complete(5))).code, 0);
  auto r = run({"check", "lick", "--format", "json"}, f);
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(nlohmann::json::parse(r.out)["index"], 3);
  r = run({"check", "separator", "--set", "0,1,2"}, f);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "NHC_CERTIFIED\n");
  EXPECT_EQ(run({"check", "separator"}, f).code, 64);
  EXPECT_EQ(run({"check", "separator", "--set", "0,x"}, f).code, 64);
  EXPECT_EQ(run({"check", "size"}, "C~~\n").code, 65);
  EXPECT_EQ(run({"check", "size"}, "").code, 64);
}

TEST(Cli, Oracle) {
  const std::string f = encode_graph6(build_F(8, 3)) + "\n";
  EXPECT_EQ(run({"oracle", "hc"}, encode_graph6(complete(6))).code, 0);
  EXPECT_EQ(run({"oracle", "ham-cycle"}, f).code, 0);
  EXPECT_EQ(run({"oracle", "ham-path", "--u", "0", "--v", "1"}, f).code, 1);
  EXPECT_EQ(run({"oracle", "ham-path", "--u", "0"}, f).code, 64);
  auto r = run({"oracle", "hc", "--matrix"}, f);
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, golden("oracle_matrix_F_8_3.json"));
  EXPECT_EQ(run({"oracle", "hc"}, encode_graph6(complete(25))).code, 65);
  EXPECT_EQ(run({"--dp-cap", "26", "oracle", "hc"}, encode_graph6(complete(25))).code, 0);
  EXPECT_EQ(run({"--dp-cap", "40", "oracle", "hc"}, f).code, 64);
}

TEST(Cli, VerifyExhaustiveGolden) {
  const auto r = run({"verify", "exhaustive", "--n", "7", "--delta", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, golden("verify_exhaustive_7_3.json"));
  EXPECT_TRUE(nlohmann::json::parse(r.out)["matches_theorem"].get<bool>());
  EXPECT_NE(r.err.find("matches"), std::string::npos);
  EXPECT_EQ(run({"verify", "exhaustive", "--n", "9", "--delta", "3"}).code, 65);
}

TEST(Cli, VerifySampleStable) {
  const auto a = run({"--seed", "7", "verify", "sample", "--n", "9", "--delta", "4", "--trials", "50"});
  const auto b = run({"--seed", "7", "--threads", "2", "verify", "sample", "--n", "9", "--delta",
                      "4", "--trials", "50"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(nlohmann::json::parse(a.out)["counterexamples"], 0);
}

}  // namespace
}  // namespace hamcon
