// Copyright 2026 The sre-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "sre/json_io.h"
#include "sre/testgames.h"

namespace sre {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string TempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("sre_cli_" + name)).string();
}

TEST(CliTest, SolveMatchingPenniesLqre) {
  const std::string path = TempPath("mp.json");
  SaveJsonFile(path, GameToJson(MakeMatchingPennies()));
  CliRun r = Cli({"solve", "--game", path, "--concept", "lqre", "--lambda", "1", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  Json j = Json::parse(r.out);
  ASSERT_EQ(j["profiles"].size(), 1u);
  for (const auto& d : j["profiles"][0]) {
    for (const auto& q : d) EXPECT_NEAR(q.get<double>(), 0.5, 1e-10);
  }
  EXPECT_LT(j["residuals"][0].get<double>(), 1e-10);
  std::filesystem::remove(path);
}

TEST(CliTest, SolveIsDeterministic) {
  std::vector<std::string> args{"solve", "--game", "vmp", "--concept", "lqre", "--lambda", "3",
                                "--seed", "7", "--json"};
  CliRun a = Cli(args), b = Cli(args);
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  std::vector<std::string> nash{"solve", "--game", "no_extremal:eps=.25", "--concept", "nash",
                                "--json"};
  EXPECT_EQ(Cli(nash).out, Cli(nash).out);
}

TEST(CliTest, VerifyExitCodes) {
  const std::string good = TempPath("uniform.json"), bad = TempPath("pure.json");
  SaveJsonFile(good, ProfileToJson(MixedProfile({{0.5, 0.5}, {0.5, 0.5}})));
  SaveJsonFile(bad, ProfileToJson(MixedProfile({{1.0, 0.0}, {1.0, 0.0}})));
  EXPECT_EQ(Cli({"verify", "--game", "mp", "--profile", good, "--concept", "nash"}).code, kExitOk);
  EXPECT_EQ(Cli({"verify", "--game", "mp", "--profile", bad, "--concept", "nash"}).code,
            kExitViolation);
  EXPECT_EQ(Cli({"verify", "--game", "mp", "--profile", good, "--concept", "lqre", "--lambda", "2"})
                .code,
            kExitOk);
  std::filesystem::remove(good);
  std::filesystem::remove(bad);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(Cli({}).code, kExitUsage);
  EXPECT_EQ(Cli({"solve"}).code, kExitUsage);
  EXPECT_EQ(Cli({"solve", "--game", "mp", "--concept", "bogus"}).code, kExitUsage);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitUsage);
  CliRun missing = Cli({"solve", "--game", TempPath("missing.json"), "--concept", "nash"});
  EXPECT_EQ(missing.code, kExitUsage);
  EXPECT_NE(missing.err.find("missing.json"), std::string::npos);

  const std::string broken = TempPath("broken.json");
  std::ofstream(broken) << R"({"players": 2, "actions": [2, 2], "payoffs": [[1, 0], [0, 1], [0, "x"], [1, 0]]})";
  CliRun r = Cli({"solve", "--game", broken, "--concept", "nash"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("/payoffs/2/1"), std::string::npos) << r.err;
  std::filesystem::remove(broken);
  EXPECT_EQ(Cli({"--help"}).code, kExitOk);
}

TEST(CliTest, ComposeRoundTrip) {
  const std::string out = TempPath("composed.json");
  CliRun r = Cli({"compose", "--game", "mp", "--game2", "g_x:1", "-o", out});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  Game g = LoadGame(out);
  EXPECT_EQ(g.action_counts(), (std::vector<int>{4, 2}));
  CliRun s = Cli({"solve", "--game", out, "--concept", "lqre", "--json"});
  EXPECT_EQ(s.code, kExitOk);
  EXPECT_TRUE(s.err.empty());

  const std::string reparam = TempPath("reparam.json");
  std::ofstream(reparam) << R"({"phi": "cube", "scale": 1.0})";
  CliRun rr = Cli({"compose", "--game", "mp", "--game2", "mp", "--phi-reparam", reparam, "-o", out});
  EXPECT_EQ(rr.code, kExitOk) << rr.err;
  std::filesystem::remove(out);
  std::filesystem::remove(reparam);
}

TEST(CliTest, AxiomsExitCodes) {
  EXPECT_EQ(Cli({"axioms", "--suite", "bracketing", "--concept", "lqre", "--corpus-size", "3"}).code,
            kExitOk);
  CliRun bnb = Cli({"axioms", "--suite", "bnb", "--concept", "lqre", "--corpus-size", "2", "--json"});
  EXPECT_EQ(bnb.code, kExitViolation);
  Json j = Json::parse(bnb.out);
  EXPECT_TRUE(j.is_array() || j.is_object());
}

TEST(CliTest, ElicitQreAndFosd) {
  CliRun q = Cli({"elicit", "--lottery", "table2:b", "--concept", "lqre", "--statistic",
               "mmm:.45,.10,.45", "--json"});
  ASSERT_EQ(q.code, kExitOk) << q.err;
  Json jq = Json::parse(q.out);
  EXPECT_NEAR(jq["extrapolated"].get<double>(), 0.45 * 5 + 0.10 * 28.0 / 3 + 0.45 * 18, 1e-6);

  const std::string lot = TempPath("x01.json");
  SaveJsonFile(lot, LotteryToJson(FromVector(std::vector<double>{0, 1})));
  CliRun f = Cli({"elicit", "--lottery", lot, "--concept", "nash-phi", "--mode", "fosd", "--json"});
  ASSERT_EQ(f.code, kExitOk) << f.err;
  EXPECT_NEAR(Json::parse(f.out)["extrapolated"].get<double>(), 0.5, 2e-3);
  std::filesystem::remove(lot);
}

TEST(CliTest, Demos) {
  for (const char* name : {"allais", "table2", "no-extremal", "cauchy-identity"}) {
    CliRun r = Cli({"demo", name});
    EXPECT_EQ(r.code, kExitOk) << name << "\n" << r.out << r.err;
    EXPECT_FALSE(r.out.empty());
  }
  CliRun ne = Cli({"demo", "no-extremal"});
  EXPECT_NE(ne.out.find("no Nash_Phi found under full support enumeration"), std::string::npos)
      << ne.out;
}

TEST(CliTest, Fixtures) {
  CliRun r = Cli({"fixtures"});
  ASSERT_EQ(r.code, kExitOk);
  for (const char* id : {"g_x:1", "card:r=.6,x=0,1,eps=.1", "vmp", "no_extremal:eps=.25", "allais",
                         "table2"}) {
    EXPECT_NE(r.out.find(id), std::string::npos) << id;
  }
}

}  // namespace
}  // namespace sre
