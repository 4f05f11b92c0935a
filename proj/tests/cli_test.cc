// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "leximin/cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"
#include "leximin/instgen.h"
#include "leximin/serialize.h"

namespace leximin {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult Cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  CliResult r;
  r.code = RunCli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("leximin_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    for (const auto& [name, inst] : Fixtures()) {
      Write(name + ".json", SerializeInstance(inst));
    }
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }
  void Write(const std::string& name, const std::string& text) const {
    std::ofstream(Path(name)) << text;
  }

  fs::path dir_;
};

TEST_F(CliTest, SolveExampleTwo) {
  const CliResult r = Cli({"solve", "--instance", Path("ex2.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json::parse(r.out)["sorted"], json({0, 3}));
  EXPECT_EQ(Cli({"solve", "--instance", Path("ex2.json")}).out, r.out);
}

TEST_F(CliTest, SolveTraceOutputAndGraph) {
  const CliResult r = Cli({"solve", "--instance", Path("ex2.json"), "--trace",
                     "--dump-graph", "--output", Path("report.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(r.err, "phase2 pareto i=1 j=0 path=[o1] w=2\no1 -> o2 w=2\n");
  std::ifstream in(Path("report.json"));
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(ParseReport(text.str()).utilities, (UtilityVector{3, 0}));
}

TEST_F(CliTest, SolveHuman) {
  const CliResult r = Cli({"solve", "--instance", Path("ex_ef1.json"), "--human"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("sorted: 3 3"), std::string::npos) << r.out;
}

TEST_F(CliTest, VerifyFlagsTheEfOnePair) {
  ASSERT_EQ(Cli({"solve", "--instance", Path("ex_ef1.json"), "--output",
                 Path("leximin.json")})
                .code,
            kExitOk);
  const CliResult r = Cli({"verify", "--instance", Path("ex_ef1.json"), "--allocation",
                     Path("leximin.json"), "--props", "ef1"});
  EXPECT_EQ(r.code, kExitViolated);
  const json report = json::parse(r.out);
  const json& v = report["properties"]["ef1"]["violations"];
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0]["agent"], 1);
  EXPECT_EQ(v[0]["envied"], 2);
  EXPECT_EQ(v[0]["own_value"], 3);
  EXPECT_EQ(v[0]["envied_value"], 6);
}

TEST_F(CliTest, VerifyAllPropsOnAdditiveOutput) {
  Write("add.json", SerializeInstance(GenRandomAdditive(3, 6, 2, {1, 1, 1}, 8)));
  ASSERT_EQ(Cli({"solve", "--instance", Path("add.json"), "--output", Path("r.json")})
                .code,
            kExitOk);
  const CliResult r = Cli({"verify", "--instance", Path("add.json"), "--allocation",
                     Path("r.json")});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_EQ(json::parse(r.out)["ok"], true);
}

TEST_F(CliTest, VerifyRefusesOverBudget) {
  ASSERT_EQ(Cli({"solve", "--instance", Path("ex_mms.json"), "--output",
                 Path("r.json")})
                .code,
            kExitOk);
  ::setenv("MANNA_ORACLE_BUDGET", "100", 1);
  const CliResult over = Cli({"verify", "--instance", Path("ex_mms.json"), "--allocation",
                        Path("r.json"), "--props", "prop1,leximin"});
  const CliResult cheap = Cli({"verify", "--instance", Path("ex_mms.json"), "--allocation",
                         Path("r.json"), "--props", "prop1"});
  ::unsetenv("MANNA_ORACLE_BUDGET");
  EXPECT_EQ(over.code, kExitBudget);
  EXPECT_TRUE(over.out.empty());
  EXPECT_EQ(cheap.code, kExitOk);
}

TEST_F(CliTest, GenHardnessThenBrute) {
  const CliResult gen = Cli({"gen", "hardness", "--p", "3", "--q", "1", "--edges", "matching"});
  ASSERT_EQ(gen.code, kExitOk) << gen.err;
  Write("hard.json", gen.out);
  const CliResult brute = Cli({"brute", "--instance", Path("hard.json")});
  ASSERT_EQ(brute.code, kExitOk) << brute.err;
  EXPECT_EQ(json::parse(brute.out)["sorted"][0], 0);
  EXPECT_EQ(Cli({"solve", "--instance", Path("hard.json")}).code,
            kExitInvalidInstance);
  const CliResult custom = Cli({"gen", "hardness", "--p", "3", "--q", "1", "--a", "2",
                          "--edges", "0,0,0;1,1,1;0,1,1"});
  EXPECT_EQ(custom.out, gen.out);
  EXPECT_EQ(Cli({"gen", "hardness", "--p", "3", "--q", "3", "--edges", "matching"}).code,
            kExitInvalidInstance);
}

TEST_F(CliTest, GenIsDeterministic) {
  const std::vector<std::string> args = {"gen", "capped", "--seed", "7", "--agents", "2",
                                         "--items", "6", "--c", "2", "--groups", "1:3",
                                         "--caps", "0:2"};
  const CliResult a = Cli(args);
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, Cli(args).out);
  EXPECT_EQ(a.out, SerializeInstance(GenCappedGroups(2, 6, 2, {1, 3}, {0, 2}, 7)));
}

TEST_F(CliTest, Validate) {
  const CliResult bad = Cli({"validate", "--instance", Path("non_on.json")});
  EXPECT_EQ(bad.code, kExitViolated);
  EXPECT_EQ(json::parse(bad.out)["agents"][0]["order_neutral"]["ok"], false);
  EXPECT_EQ(Cli({"validate", "--instance", Path("fig1.json")}).code, kExitOk);
}

TEST_F(CliTest, ErrorsMapToExitCodes) {
  EXPECT_EQ(Cli({}).code, kExitUsage);
  EXPECT_EQ(Cli({"solve"}).code, kExitUsage);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Cli({"solve", "--instance", Path("missing.json")}).code, kExitUsage);
  Write("broken.json", R"({"agents":[{"kind":"additive","values":[5]}],
      "c":1,"num_agents":1,"num_items":1})");
  const CliResult range = Cli({"solve", "--instance", Path("broken.json")});
  EXPECT_EQ(range.code, kExitInvalidInstance);
  EXPECT_NE(range.err.find("agent 1"), std::string::npos);
  Write("garbage.json", "{not json");
  EXPECT_EQ(Cli({"solve", "--instance", Path("garbage.json")}).code,
            kExitInvalidInstance);
  EXPECT_EQ(Cli({"solve", "--instance", Path("non_on.json")}).code,
            kExitInvalidInstance);
  EXPECT_EQ(Cli({"--help"}).code, kExitOk);
}

TEST_F(CliTest, BenchWritesCsv) {
  const CliResult r = Cli({"bench", "--family", "capped", "--sizes", "2x4,3x5", "--seeds",
                     "2", "--threads", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line,
            "family,n,m,c,seed,micros,pareto_augmentations,exchange_augmentations,"
            "bound");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 4);
}

}  // namespace
}  // namespace leximin
