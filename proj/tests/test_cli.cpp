#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "alexposet/cli.hpp"

using namespace alexposet;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(ALEXPOSET_TEST_DATA) + "/" + name; }

}  // namespace

TEST(Cli, GenEmitsParsableDocument) {
  const Result r = run_cli({"gen", "fence", "6"});
  EXPECT_EQ(r.code, 0);
  const Poset p = to_poset(parse_poset(r.out));
  EXPECT_EQ(p.size(), 6u);
  EXPECT_EQ(run_cli({"--seed", "7", "gen", "random", "5", "0.3"}).out.substr(0, 18), "poset random_5_0.3");
  EXPECT_EQ(run_cli({"gen", "crown", "1"}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"gen", "blob", "3"}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"gen", "chain", "x"}).code, cli::kInputError);
}

TEST(Cli, CoreOfFence) {
  const Result r = run_cli({"--json", "core", data("fence6.poset")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["step_count"], 5);
  EXPECT_EQ(j["core_size"], 1);
  EXPECT_EQ(j["steps"].size(), 5u);
}

TEST(Cli, HomotopyEquivalenceOfCrowns) {
  const Result r = run_cli({"homotopy-eq", data("crown2.poset"), data("crown3.poset")});
  EXPECT_EQ(r.code, cli::kNegative);
  EXPECT_NE(r.out.find("core_sizes: 4 6"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("equivalent: false"), std::string::npos);
  const Result same = run_cli({"homotopy-eq", data("crown2.poset"), data("crown2.json")});
  EXPECT_EQ(same.code, cli::kOk);
}

TEST(Cli, PointedSpider) {
  const Result r = run_cli({"--pointed", "--json", "dismantle", data("spider222.poset")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["final"], nlohmann::json::array({"s"}));
  EXPECT_EQ(j["stabilized"], true);
  EXPECT_EQ(run_cli({"--pointed", "core", data("crown2.poset")}).code, cli::kInputError);
}

TEST(Cli, Contractible) {
  EXPECT_EQ(run_cli({"contractible", data("fence6.poset")}).code, cli::kOk);
  EXPECT_EQ(run_cli({"contractible", data("crown3.poset")}).code, cli::kNegative);
}

TEST(Cli, HomologyOfCrown) {
  const Result r = run_cli({"--json", "homology", data("crown2.poset")});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["reduced_betti"], nlohmann::json::array({0, 1}));
  EXPECT_EQ(j["betti"], nlohmann::json::array({1, 1}));
  EXPECT_TRUE(j["torsion"].empty());
  EXPECT_EQ(j["acyclic"], false);
}

TEST(Cli, FunctionSpaceAndFpp) {
  const Result fs = run_cli({"--json", "function-space", data("crown2.poset")});
  ASSERT_EQ(fs.code, 0);
  const auto j = nlohmann::json::parse(fs.out);
  EXPECT_EQ(j["maps"], 36);
  EXPECT_EQ(j["identity_class_size"], 1);
  EXPECT_EQ(run_cli({"fpp", data("crown2.poset")}).code, cli::kNegative);
  EXPECT_EQ(run_cli({"fpp", data("chain3.poset")}).code, cli::kOk);
}

TEST(Cli, GammaAndTopology) {
  const Result g = run_cli({"--json", "gamma", data("chain3.poset"), "c1"});
  ASSERT_EQ(g.code, 0);
  EXPECT_EQ(nlohmann::json::parse(g.out)["verdicts"]["c1"], "certified_yes");
  const Result t = run_cli({"topology-check", data("fence3.poset"), data("chain3.poset")});
  EXPECT_EQ(t.code, 0) << t.err;
  EXPECT_NE(t.out.find("equal: true"), std::string::npos);
}

TEST(Cli, Dot) {
  const Result d = run_cli({"dot", "--trace", "core", data("chain3.poset")});
  ASSERT_EQ(d.code, 0);
  EXPECT_NE(d.out.find("digraph"), std::string::npos);
  EXPECT_NE(d.out.find("fillcolor=gray"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"core", data("cycle.poset")}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"core", data("bad_directive.poset")}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"core", data("missing.poset")}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"--max-enum", "10", "function-space", data("crown3.poset")}).code, cli::kGuardExceeded);
  EXPECT_EQ(run_cli({"--max-enum", "5", "homology", data("crown3.poset")}).code, cli::kGuardExceeded);
}

TEST(Cli, BinaryExitStatus) {
  const std::string cmd = std::string(ALEXPOSET_CLI) + " homotopy-eq " + data("crown2.poset") + " " +
                          data("crown3.poset") + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  ASSERT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), 1);
}
