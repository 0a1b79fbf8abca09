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

#include "sre/axioms.h"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "sre/errors.h"
#include "sre/testgames.h"
#include "test_util.h"

namespace sre {
namespace {

using testing::RandomGameOf;

void ExpectConsistent(const AxiomReport& r) {
  EXPECT_EQ(r.passed, r.violations.empty()) << r.axiom;
}

// Player 1 has rows (0,3) and (1,1) against two opponent actions; player 2
// earns nothing.
Game MinShiftGame() { return Game({2, 2}, {0, 0, 3, 0, 1, 0, 1, 0}); }

// Player 1: rows (0,0,3) and (1.2,1.2,1.2) against three opponent actions.
Game MeanVersusRangeGame() {
  return Game({2, 3}, {0, 0, 0, 0, 3, 0, 1.2, 0, 1.2, 0, 1.2, 0});
}

TEST(MonotonicityTest, DistributionExamples) {
  Rng rng(81);
  for (int trial = 0; trial < 10; ++trial) {
    Game g = RandomGameOf(rng, {3, 3});
    SolveResult r = SolveLqre(g, MAStatistic::Expectation(), 2.0);
    for (const auto& p : r.profiles) {
      AxiomReport rep = CheckDistributionMonotonicity(g, p, 1e-9);
      EXPECT_TRUE(rep.passed);
      ExpectConsistent(rep);
    }
  }
  Game g1 = MakeTestGameGx(1.0);
  AxiomReport bad = CheckDistributionMonotonicity(g1, MixedProfile({{0.3, 0.7}, {1.0}}), 1e-9);
  EXPECT_FALSE(bad.passed);
  ASSERT_EQ(bad.violations.size(), 1u);
  EXPECT_EQ(bad.violations[0].player, 0);
  EXPECT_NEAR(bad.violations[0].magnitude, 0.4, 1e-12);

  AxiomReport none = CheckDistributionMonotonicity(MakeOrdinalPennies(), OrdinalPenniesProfile(), 1e-9);
  EXPECT_TRUE(none.passed);
  EXPECT_TRUE(none.vacuous);
  EXPECT_EQ(none.instances_checked, 0u);
}

TEST(MonotonicityTest, ExpectationExamples) {
  Game mp = MakeMatchingPennies();
  EXPECT_TRUE(CheckExpectationMonotonicity(mp, MixedProfile::Uniform(mp), 1e-9).passed);
  Game g1 = MakeTestGameGx(1.0);
  EXPECT_TRUE(CheckExpectationMonotonicity(g1, MixedProfile::Uniform(g1), 1e-9).passed);

  Game g = MeanVersusRangeGame();
  MAStatistic midrange = MAStatistic::MinMaxMean(0.5, 0, 0.5);
  SolveResult r = SolveLqre(g, midrange, 1.0);
  ASSERT_EQ(r.profiles.size(), 1u);
  // Midrange values are 1.5 and 1.2 while expectations are 1 and 1.2.
  EXPECT_GT(r.profiles[0][0][0], r.profiles[0][0][1]);
  AxiomReport rep = CheckExpectationMonotonicity(g, r.profiles[0], 1e-9);
  EXPECT_FALSE(rep.passed);
  ExpectConsistent(rep);
  EXPECT_TRUE(CheckDistributionMonotonicity(g, r.profiles[0], 1e-9).passed);
}

TEST(BracketingTest, Examples) {
  AxiomReport lq = CheckBracketing(ConceptSpec::Lqre(1.0), MakeTestGameGx(1.0), MakeTestGameGx(2.0), 1e-8);
  EXPECT_TRUE(lq.passed);
  EXPECT_EQ(lq.instances_checked, 1u);
  EXPECT_TRUE(CheckBracketing(ConceptSpec::Nash(), MakeMatchingPennies(), MakeMatchingPennies(), 1e-8)
                  .passed);
  Rng rng(82);
  ConceptSpec thirds = ConceptSpec::Lqre(1.0, MAStatistic::MinMaxMean(1.0 / 3, 1.0 / 3, 1.0 / 3));
  for (int trial = 0; trial < 10; ++trial) {
    AxiomReport r = CheckBracketing(thirds, RandomGameOf(rng, {2, 2}), RandomGameOf(rng, {2, 2}), 1e-8);
    EXPECT_TRUE(r.passed) << trial;
    ExpectConsistent(r);
  }
}

TEST(AnonymityTest, Examples) {
  PlayerPermutation id({0, 1}), swap({1, 0});
  EXPECT_TRUE(CheckAnonymity(ConceptSpec::Lqre(1.0), MakeVmp(), id, 1e-8).passed);
  EXPECT_TRUE(CheckAnonymity(ConceptSpec::Lqre(1.0), MakeMatchingPennies(), swap, 1e-8).passed);
  AxiomReport vmp = CheckAnonymity(ConceptSpec::Lqre(1.0), MakeVmp(), swap, 1e-8);
  EXPECT_TRUE(vmp.passed);
  EXPECT_GE(vmp.instances_checked, 1u);
  Rng rng(83);
  Game g3 = RandomGameOf(rng, {2, 3, 2});
  EXPECT_TRUE(CheckAnonymity(ConceptSpec::Nash(), g3, PlayerPermutation({2, 0, 1}), 1e-8).passed);
}

TEST(ScaleInvarianceTest, Examples) {
  std::vector<double> alphas{0.5};
  AxiomReport mp = CheckScaleInvariance(ConceptSpec::Lqre(2.0), MakeMatchingPennies(), alphas, 1e-8);
  EXPECT_TRUE(mp.passed);
  EXPECT_FALSE(mp.vacuous);

  std::vector<double> x{0, 1, 4};
  const Lottery lx = FromVector(x);
  MAStatistic mmm = MAStatistic::MinMaxMean(0.2, 0.5, 0.3);
  Game h = MakeSureThingGame(Evaluate(mmm, lx), x);
  std::vector<double> many{0.25, 0.5, 0.9};
  AxiomReport homog = CheckScaleInvariance(ConceptSpec::Lqre(1.0, mmm), h, many, 1e-8);
  EXPECT_TRUE(homog.passed);
  EXPECT_FALSE(homog.vacuous);

  MAStatistic k1 = MAStatistic::Ka(ExtendedReal(1.0));
  Game hk = MakeSureThingGame(Evaluate(k1, lx), x);
  AxiomReport fail = CheckScaleInvariance(ConceptSpec::Lqre(1.0, k1), hk, alphas, 1e-8);
  EXPECT_FALSE(fail.vacuous);
  EXPECT_FALSE(fail.passed);
  ExpectConsistent(fail);

  AxiomReport vac = CheckScaleInvariance(ConceptSpec::Lqre(1.0), MakeTestGameGx(1.0), alphas, 1e-8);
  EXPECT_TRUE(vac.passed);
  EXPECT_TRUE(vac.vacuous);
  EXPECT_THROW(CheckScaleInvariance(ConceptSpec::Lqre(1.0), MakeMatchingPennies(), {1.5}, 1e-8),
               InvalidArgument);
}

TEST(StrategicInvarianceTest, Examples) {
  Rng rng(84);
  for (int trial = 0; trial < 8; ++trial) {
    Game g = RandomGameOf(rng, {2, 3});
    std::vector<std::vector<double>> zero(2), shift(2);
    for (int i = 0; i < 2; ++i) {
      zero[i].assign(NumOpponentProfiles(g, i), 0.0);
      shift[i].resize(NumOpponentProfiles(g, i));
      for (double& w : shift[i]) w = rng.Uniform(-3, 3);
    }
    EXPECT_TRUE(CheckStrategicInvariance(ConceptSpec::Lqre(1.0), g, zero, 1e-8).passed);
    EXPECT_TRUE(CheckStrategicInvariance(ConceptSpec::Lqre(1.0), g, shift, 1e-8).passed);
  }
  Game g = MinShiftGame();
  std::vector<std::vector<double>> shift{{5, 0}, {0, 0}};
  AxiomReport r = CheckStrategicInvariance(
      ConceptSpec::Lqre(1.0, MAStatistic::MinMaxMean(0.5, 0.5, 0)), g, shift, 1e-8);
  EXPECT_FALSE(r.passed);
  ExpectConsistent(r);
}

TEST(InteriorityNeutralityTest, Examples) {
  Game g1 = MakeTestGameGx(1.0);
  SolveResult lq = SolveLqre(g1, MAStatistic::Expectation(), 1.0);
  EXPECT_TRUE(CheckInteriority(lq.profiles[0], 1e-9).passed);
  SolveResult nash = SolveNashPhi(g1, MAStatistic::Expectation());
  EXPECT_FALSE(CheckInteriority(nash.profiles[0], 1e-9).passed);

  std::vector<double> x{-1, 2, 0.5};
  Game h0 = MakeSureThingGame(0.0, x);
  MAStatistic mmm = MAStatistic::MinMaxMean(0.3, 0.4, 0.3);
  SolveResult r = SolveLqre(h0, mmm, 2.0);
  ASSERT_EQ(r.profiles.size(), 1u);
  AxiomReport dn = CheckNeutrality(h0, r.profiles[0], NeutralityMode::kDistribution, 1e-9);
  EXPECT_TRUE(dn.passed);
  EXPECT_GT(dn.instances_checked, 0u);
  for (double q : r.profiles[0][1]) EXPECT_NEAR(q, 1.0 / 3, 1e-12);

  MixedProfile skew({{0.5, 0.5}, {0.2, 0.3, 0.5}});
  EXPECT_FALSE(CheckNeutrality(h0, skew, NeutralityMode::kDistribution, 1e-9).passed);
  EXPECT_FALSE(CheckNeutrality(h0, skew, NeutralityMode::kExpectation, 1e-9).passed);
}

TEST(ConsistencyTest, Examples) {
  std::vector<double> alphas{0.25, 0.5, 0.75};
  Game mp = MakeMatchingPennies();
  EXPECT_TRUE(CheckConsistency(ConceptSpec::Lqre(1.0), mp, mp, alphas, 1e-8).passed);
  AxiomReport r = CheckConsistency(ConceptSpec::Nash(), mp, MakeMatchingPennies(2.0), alphas, 1e-8);
  EXPECT_TRUE(r.passed);
  EXPECT_GE(r.instances_checked, 1u);
  Game blend = BlendGames(mp, MakeMatchingPennies(3.0), 0.5);
  EXPECT_EQ(blend.payoff(0, 0), 2.0);
  EXPECT_THROW(BlendGames(mp, MakeIiaGame(0, 1, 0, 0), 0.5), InvalidArgument);
}

TEST(ConsequentialismTest, Examples) {
  Game mp = MakeMatchingPennies();
  BlowUpMaps id{{0, 1}, {0, 1}};
  EXPECT_TRUE(CheckConsequentialism(ConceptSpec::Nash(), mp, id, 1e-8).passed);
  BlowUpMaps dup{{0, 0, 1}, {0, 1}};
  AxiomReport nash = CheckConsequentialism(ConceptSpec::Nash(), mp, dup, 1e-8);
  EXPECT_TRUE(nash.passed);
  EXPECT_GE(nash.instances_checked, 3u);
  AxiomReport lq = CheckConsequentialism(ConceptSpec::Lqre(1.0), mp, dup, 1e-8);
  EXPECT_FALSE(lq.passed);
  ExpectConsistent(lq);
}

TEST(RationalityTest, Examples) {
  Game g1 = MakeTestGameGx(1.0);
  SolveResult lq = SolveLqre(g1, MAStatistic::Expectation(), 1.0);
  EXPECT_TRUE(CheckRationality(g1, lq.profiles[0], 1e-9).passed);
  SolveResult nash = SolveNashPhi(g1, MAStatistic::Expectation());
  AxiomReport ok = CheckRationality(g1, nash.profiles[0], 1e-9);
  EXPECT_TRUE(ok.passed);
  EXPECT_EQ(ok.instances_checked, 1u);
  AxiomReport bad = CheckRationality(g1, MixedProfile({{0.0, 1.0}, {1.0}}), 1e-9);
  EXPECT_FALSE(bad.passed);
  EXPECT_TRUE(CheckRationality(MakeMatchingPennies(), MixedProfile::Uniform(MakeMatchingPennies()),
                               1e-9)
                  .vacuous);
}

TEST(IiaTest, ExtraActionBreaksEqualShares) {
  Game left({2, 2}, {0, 0, 2, 0, 1, 0, 1, 0});
  SolveResult rl = SolveLqre(left, MAStatistic::Expectation(), 1.0);
  ASSERT_EQ(rl.profiles.size(), 1u);
  EXPECT_LT(rl.profiles[0].Distance(MixedProfile::Uniform(left)), 1e-10);

  Game right = MakeIiaGame(0, 1, 0, 0);
  SolveResult rr = SolveLqre(right, MAStatistic::Expectation(), 1.0);
  ASSERT_EQ(rr.profiles.size(), 1u);
  const MixedProfile& q = rr.profiles[0];
  EXPECT_LT(VerifyLqre(right, MAStatistic::Expectation(), 1.0, q), 1e-10);
  // Player 2 prefers a_2 when c_1 is played, which tilts player 1 towards b_1.
  EXPECT_GT(q[1][0], 0.5);
  EXPECT_GT(std::abs(q[0][0] - q[0][1]), 1e-3);

  Game tie = MakeIiaGame(0, 1, 0, 1);
  SolveResult rt = SolveLqre(tie, MAStatistic::Expectation(), 1.0);
  EXPECT_NEAR(rt.profiles[0][0][0], rt.profiles[0][0][1], 1e-10);
}

TEST(RandomGameTest, SeededAndInRange) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Game g = RandomGame(seed);
    EXPECT_EQ(g.payoffs(), RandomGame(seed).payoffs());
    EXPECT_GE(g.num_players(), 2);
    EXPECT_LE(g.num_players(), 3);
    for (int i = 0; i < g.num_players(); ++i) {
      EXPECT_GE(g.num_actions(i), 2);
      EXPECT_LE(g.num_actions(i), 4);
    }
    for (double v : g.payoffs()) {
      EXPECT_GE(v, -2.0);
      EXPECT_LE(v, 2.0);
    }
  }
}

TEST(SuiteTest, LqreExpectationPassesStructuralAxioms) {
  SuiteOptions opt;
  opt.corpus_size = 6;
  for (const char* suite : {"bracketing", "monotonicity", "anonymity", "scale", "strategic"}) {
    for (const AxiomReport& r : RunAxiomSuite(suite, ConceptSpec::Lqre(1.0), opt)) {
      EXPECT_TRUE(r.passed) << suite << " " << r.axiom;
      ExpectConsistent(r);
      EXPECT_FALSE(r.corpus.empty());
    }
  }
}

TEST(SuiteTest, NashPassesEverything) {
  SuiteOptions opt;
  opt.corpus_size = 5;
  std::vector<AxiomReport> all = RunAxiomSuite("all", ConceptSpec::Nash(), opt);
  EXPECT_GE(all.size(), 7u);
  for (const AxiomReport& r : all) {
    EXPECT_TRUE(r.passed) << r.axiom;
    ExpectConsistent(r);
  }
}

TEST(SuiteTest, LqreFailsConsequentialism) {
  SuiteOptions opt;
  opt.corpus_size = 4;
  bool saw = false;
  for (const AxiomReport& r : RunAxiomSuite("bnb", ConceptSpec::Lqre(1.0), opt)) {
    if (r.axiom == "consequentialism") {
      saw = true;
      EXPECT_FALSE(r.passed);
    }
  }
  EXPECT_TRUE(saw);
  EXPECT_THROW(RunAxiomSuite("nope", ConceptSpec::Nash(), opt), InvalidArgument);
}

TEST(SuiteTest, DeterministicAcrossRuns) {
  SuiteOptions opt;
  opt.corpus_size = 4;
  ConceptSpec spec = ConceptSpec::Lqre(1.0, MAStatistic::MinMaxMean(1.0 / 3, 1.0 / 3, 1.0 / 3));
  auto a = RunAxiomSuite("strategic", spec, opt);
  auto b = RunAxiomSuite("strategic", spec, opt);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].instances_checked, b[k].instances_checked);
    ASSERT_EQ(a[k].violations.size(), b[k].violations.size());
    for (std::size_t v = 0; v < a[k].violations.size(); ++v) {
      EXPECT_EQ(a[k].violations[v].magnitude, b[k].violations[v].magnitude);
    }
  }
}

}  // namespace
}  // namespace sre
