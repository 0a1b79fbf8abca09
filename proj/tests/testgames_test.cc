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

#include "sre/testgames.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "sre/errors.h"
#include "sre/solvers.h"
#include "test_util.h"

namespace sre {
namespace {

std::size_t Idx(const Game& g, std::vector<int> a) { return g.ProfileIndex(a); }

bool SameLottery(const Lottery& x, const Lottery& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (std::abs(x.atoms()[k].outcome - y.atoms()[k].outcome) > 1e-12 ||
        std::abs(x.atoms()[k].weight - y.atoms()[k].weight) > 1e-12) {
      return false;
    }
  }
  return true;
}

MAStatistic NormalizedMmm(double w_min, double w_mean, double w_max) {
  const double t = w_min + w_mean + w_max;
  return MAStatistic::MinMaxMean(w_min / t, w_mean / t, w_max / t);
}

bool SameGame(const Game& g, const Game& h) {
  return g.action_counts() == h.action_counts() && g.payoffs() == h.payoffs();
}

TEST(GxTest, Payoffs) {
  Game g = MakeTestGameGx(1.5, 3);
  EXPECT_EQ(g.action_counts(), (std::vector<int>{2, 1, 1}));
  EXPECT_EQ(g.payoff(Idx(g, {0, 0, 0}), 0), 1.5);
  EXPECT_EQ(g.payoff(Idx(g, {1, 0, 0}), 0), 0.0);
  for (std::size_t k = 0; k < g.num_profiles(); ++k) {
    EXPECT_EQ(g.payoff(k, 1), 0.0);
    EXPECT_EQ(g.payoff(k, 2), 0.0);
  }
  EXPECT_THROW(MakeTestGameGx(1.0, 1), InvalidArgument);

  SolveResult zero = SolveLqre(MakeTestGameGx(0.0), MAStatistic::Expectation(), 3.0);
  EXPECT_LT(zero.profiles[0].Distance(MixedProfile::Uniform(MakeTestGameGx(0.0))), 1e-12);
  SolveResult nash = SolveNashPhi(MakeTestGameGx(1.0), MAStatistic::Expectation());
  ASSERT_EQ(nash.profiles.size(), 1u);
  EXPECT_NEAR(nash.profiles[0][0][0], 1.0, 1e-12);
}

TEST(CardGameTest, Permutations) {
  auto p3 = Permutations(3);
  ASSERT_EQ(p3.size(), 6u);
  EXPECT_EQ(p3.front(), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(p3.back(), (std::vector<int>{2, 1, 0}));
  EXPECT_TRUE(std::is_sorted(p3.begin(), p3.end()));
  CardAction a = DecodeCardAction(2 + 1, 2);
  EXPECT_FALSE(a.lottery_side);
  EXPECT_EQ(a.permutation, (std::vector<int>{1, 0}));
  EXPECT_TRUE(DecodeCardAction(0, 2).lottery_side);
}

TEST(CardGameTest, PayoffsAndPreconditions) {
  std::vector<double> x{0, 1};
  Game g = MakeCardGame(0.6, x, 0.1);
  EXPECT_EQ(g.action_counts(), (std::vector<int>{4, 2}));
  // Sure side, identity permutation, second card.
  EXPECT_NEAR(g.payoff(Idx(g, {2, 1}), 0), 0.7, 1e-15);
  EXPECT_EQ(g.payoff(Idx(g, {0, 1}), 0), 1.0);
  EXPECT_EQ(g.payoff(Idx(g, {1, 1}), 0), 0.0);
  EXPECT_EQ(g.payoff(Idx(g, {1, 1}), 1), 0.0);
  EXPECT_EQ(g.payoff(Idx(g, {0, 1}), 1), -1.0);

  std::vector<double> x3{0, 2, -1};
  Game g3 = MakeCardGame(0.3, x3, 0.05);
  EXPECT_EQ(g3.num_actions(0), 12);
  double worst = 0;
  for (int a = 6; a < 12; ++a) {
    for (int c = 0; c < 3; ++c) worst = std::max(worst, std::abs(g3.payoff(Idx(g3, {a, c}), 0) - 0.3));
  }
  EXPECT_NEAR(worst, 0.05 * 2, 1e-15);

  std::vector<double> constant{1, 1};
  EXPECT_THROW(MakeCardGame(0.5, constant, 0.1), InvalidArgument);
  EXPECT_THROW(MakeCardGame(0.5, x, 0.0), InvalidArgument);
  std::vector<double> one{1};
  EXPECT_THROW(MakeCardGame(0.5, one, 0.1), InvalidArgument);
  std::vector<double> six{0, 1, 2, 3, 4, 5};
  EXPECT_THROW(MakeCardGame(0.5, six, 0.1), InvalidArgument);
}

TEST(CardGameTest, ActionLotteryOfSureSide) {
  std::vector<double> x{0, 1};
  Game g = MakeCardGame(0.6, x, 0.1);
  MixedProfile p({{0.25, 0.25, 0.25, 0.25}, {0.5, 0.5}});
  Lottery l = ActionLottery(g, 0, 2, p);
  ASSERT_EQ(l.size(), 2u);
  EXPECT_NEAR(l.atoms()[0].outcome, 0.6, 1e-15);
  EXPECT_NEAR(l.atoms()[1].outcome, 0.7, 1e-15);
  EXPECT_NEAR(l.atoms()[0].weight, 0.5, 1e-15);
}

TEST(CardGameTest, FosdNashHasUniformSecondPlayer) {
  std::vector<std::vector<double>> xs{{0, 1}, {0, 1, 5}, {-1, 0.5, 2}};
  for (const auto& x : xs) {
    for (double r : {0.2, 0.5, 1.5}) {
      Game g = MakeCardGame(r, x, 0.1);
      SolveResult res = SolveNashPhi(g, MAStatistic::Expectation());
      ASSERT_FALSE(res.profiles.empty());
      for (const auto& p : res.profiles) {
        ASSERT_TRUE(VerifyFosdNash(g, p, 1e-9).empty());
        for (double q : p[1]) EXPECT_NEAR(q, 1.0 / x.size(), 1e-6);
      }
    }
  }
}

TEST(SureThingTest, PayoffsAndUniformSecondPlayer) {
  std::vector<double> x{0, 10, 20};
  Game h = MakeSureThingGame(7.0, x);
  for (int c = 0; c < 3; ++c) {
    EXPECT_EQ(h.payoff(Idx(h, {0, c}), 0), 7.0);
    EXPECT_EQ(h.payoff(Idx(h, {1, c}), 0), x[c]);
    EXPECT_EQ(h.payoff(Idx(h, {0, c}), 1), 0.0);
  }
  Rng rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    MAStatistic phi = NormalizedMmm(rng.Uniform(0, 1), rng.Uniform(0, 1), rng.Uniform(0, 1));
    SolveResult res = SolveLqre(h, phi, rng.Uniform(0.1, 5));
    for (const auto& p : res.profiles) {
      for (double q : p[1]) EXPECT_NEAR(q, 1.0 / 3, 1e-9);
    }
  }
}

TEST(FixedGamesTest, PayoffTables) {
  Game vmp = MakeVmp();
  EXPECT_EQ(vmp.payoffs(), (std::vector<double>{2, 0, 0, 1, -1, 1, 1, 0}));
  Game ne = MakeNoExtremalEqGame(0.25);
  EXPECT_EQ(ne.payoff(0, 0), 5.0);
  EXPECT_EQ(ne.payoff(0, 1), 0.0);
  EXPECT_EQ(ne.payoff(Idx(ne, {1, 0}), 0), -4.0);
  EXPECT_THROW(MakeNoExtremalEqGame(0.0), InvalidArgument);

  Game iia = MakeIiaGame(3, 1, 4, 0);
  EXPECT_EQ(iia.action_counts(), (std::vector<int>{3, 2}));
  EXPECT_EQ(iia.payoff(Idx(iia, {0, 1}), 0), 2.0);
  EXPECT_EQ(iia.payoff(Idx(iia, {1, 0}), 0), 1.0);
  EXPECT_EQ(iia.payoff(Idx(iia, {2, 0}), 0), 3.0);
  EXPECT_EQ(iia.payoff(Idx(iia, {2, 0}), 1), 1.0);
  EXPECT_EQ(iia.payoff(Idx(iia, {2, 1}), 0), 4.0);
  EXPECT_EQ(iia.payoff(Idx(iia, {2, 1}), 1), 0.0);

  Game op = MakeOrdinalPennies();
  EXPECT_EQ(op.payoff(0, 0), 1.5);
  EXPECT_EQ(OrdinalPenniesProfile().num_players(), 2);
  EXPECT_EQ(MakeRiskPairLeft().payoff(Idx(MakeRiskPairLeft(), {0, 1}), 0), 2.0);
  EXPECT_EQ(MakeRiskPairRight().payoff(Idx(MakeRiskPairRight(), {1, 1}), 0), 0.0);
}

TEST(FixedLotteriesTest, AllaisAndMinMaxMeanFixtures) {
  AllaisLotteries al = MakeAllaisLotteries();
  EXPECT_PRED2(SameLottery, al.a, Lottery::Degenerate(10));
  EXPECT_PRED2(SameLottery, al.b, Lottery({{0, 0.01}, {10, 0.89}, {11, 0.10}}));
  EXPECT_NEAR(al.b.Mean(), 10.0, 1e-12);
  EXPECT_PRED2(SameLottery, al.c, Lottery({{0, 0.89}, {10, 0.11}}));
  EXPECT_PRED2(SameLottery, al.d, Lottery({{0, 0.90}, {11, 0.10}}));

  Table2Lotteries t2 = MakeTable2Lotteries();
  EXPECT_PRED2(SameLottery, t2.a, Lottery::Degenerate(10));
  EXPECT_EQ(t2.b.Min(), 5.0);
  EXPECT_EQ(t2.b.Max(), 18.0);
  EXPECT_NEAR(t2.b.atoms()[0].weight, 2.0 / 3, 1e-15);
  EXPECT_EQ(t2.c.size(), 3u);
  EXPECT_NEAR(t2.c.Mean(), 10.0, 1e-12);
}

TEST(FixedLotteriesTest, AllaisRankingOnWeightGrid) {
  AllaisLotteries al = MakeAllaisLotteries();
  for (int i = 1; i <= 20; ++i) {
    for (int j = 0; j <= 20; ++j) {
      const double w_max = 0.005 * i, w_mean = 0.05 * j;
      for (double ratio : {10.0, 11.0, 20.0, 100.0}) {
        const double w_min = ratio * w_max;
        MAStatistic phi = NormalizedMmm(w_min, w_mean, w_max);
        EXPECT_GT(Evaluate(phi, al.a), Evaluate(phi, al.b));
        EXPECT_GT(Evaluate(phi, al.d), Evaluate(phi, al.c));
      }
    }
  }
  MAStatistic e = MAStatistic::Expectation();
  EXPECT_NEAR(Evaluate(e, al.a), Evaluate(e, al.b), 1e-12);
  EXPECT_NEAR(Evaluate(e, al.c) - Evaluate(e, al.d), Evaluate(e, al.a) - Evaluate(e, al.b), 1e-12);
}

TEST(FixedLotteriesTest, MinMaxMeanPrefersSkewedLottery) {
  Table2Lotteries t2 = MakeTable2Lotteries();
  MAStatistic mmm = MAStatistic::MinMaxMean(0.45, 0.10, 0.45);
  const double b = Evaluate(mmm, t2.b);
  EXPECT_NEAR(Evaluate(mmm, t2.a), 10.0, 1e-12);
  EXPECT_NEAR(Evaluate(mmm, t2.c), 10.0, 1e-12);
  EXPECT_NEAR(b, 0.45 * 5 + 0.10 * 28.0 / 3 + 0.45 * 18, 1e-12);
  EXPECT_GT(b, 10.0);
  MAStatistic e = MAStatistic::Expectation();
  EXPECT_LT(Evaluate(e, t2.b), Evaluate(e, t2.a));
  EXPECT_LT(Evaluate(e, t2.b), Evaluate(e, t2.c));
}

TEST(UniformRepresentationTest, Examples) {
  EXPECT_EQ(UniformRepresentation(Lottery({{0, 0.5}, {1, 0.5}})), (std::vector<double>{0, 1}));
  std::vector<double> b = UniformRepresentation(MakeTable2Lotteries().b);
  EXPECT_EQ(b, (std::vector<double>{5, 5, 18}));
  std::vector<double> al = UniformRepresentation(MakeAllaisLotteries().b);
  EXPECT_EQ(al.size(), 100u);
  EXPECT_PRED2(SameLottery, FromVector(al), MakeAllaisLotteries().b);
  EXPECT_THROW(UniformRepresentation(Lottery({{0, 1 / M_PI}, {1, 1 - 1 / M_PI}})), InvalidArgument);
}

TEST(ElicitQreTest, Examples) {
  std::vector<double> x01{0, 1};
  EXPECT_NEAR(ElicitQre(ConceptSpec::Lqre(1.0), x01), 0.5, 1e-9);
  ConceptSpec thirds = ConceptSpec::Lqre(1.0, MAStatistic::MinMaxMean(1.0 / 3, 1.0 / 3, 1.0 / 3));
  EXPECT_NEAR(ElicitQre(thirds, x01), 0.5, 1e-9);
  std::vector<double> x{0, 10, 20};
  MAStatistic mmm = MAStatistic::MinMaxMean(0.45, 0.10, 0.45);
  const double expected = Evaluate(mmm, FromVector(x));
  EXPECT_NEAR(expected, 10.0, 1e-12);
  EXPECT_NEAR(ElicitQre(ConceptSpec::Lqre(2.0, mmm), x), expected, 1e-6);
  EXPECT_THROW(ElicitQre(ConceptSpec::Nash(), x), InvalidArgument);
  EXPECT_THROW(ElicitQre(ConceptSpec::Lqre(0.0), x), InvalidArgument);
}

TEST(ElicitQreTest, RecoversRandomStatistics) {
  Rng rng(72);
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<StatisticAtom> atoms;
    const int k = 1 + rng.Int(3);
    for (int j = 0; j < k; ++j) {
      const int kind = rng.Int(5);
      ExtendedReal a = kind == 0   ? ExtendedReal::NegInf()
                       : kind == 1 ? ExtendedReal::PosInf()
                                   : ExtendedReal(rng.Uniform(-3, 3));
      atoms.push_back({a, rng.Uniform(0.1, 1)});
    }
    double total = 0.0;
    for (const auto& at : atoms) total += at.weight;
    for (auto& at : atoms) at.weight /= total;
    MAStatistic phi(atoms);
    const int m = 1 + rng.Int(4);
    std::vector<double> x(m);
    for (double& v : x) v = rng.Uniform(-2, 2);
    const double lambda = std::vector<double>{0.5, 1, 5}[trial % 3];
    EXPECT_NEAR(ElicitQre(ConceptSpec::Lqre(lambda, phi), x), Evaluate(phi, FromVector(x)),
                1e-6)
        << phi.ToString();
  }
}

TEST(ElicitFosdTest, ExpectationConverges) {
  std::vector<double> x{0, 1};
  ElicitationResult r = ElicitFosd(ConceptSpec::NashPhi(MAStatistic::Expectation()), x);
  ASSERT_FALSE(r.inconclusive) << r.message;
  ASSERT_EQ(r.estimates.size(), 3u);
  // Player 2 is uniform, so the sure side pays r + eps / 2 against a mean of 1/2.
  for (const auto& e : r.estimates) EXPECT_NEAR(e.r_star, 0.5 * (1 - e.epsilon), 1e-6);
  for (std::size_t k = 1; k < r.estimates.size(); ++k) {
    EXPECT_GT(r.estimates[k - 1].epsilon, r.estimates[k].epsilon);
    EXPECT_GE(r.estimates[k].r_star, r.estimates[k - 1].r_star - 1e-6);
  }
  EXPECT_NEAR(r.extrapolated, 0.5, 2e-3);
  // The last two default estimates differ by 4.5e-3.
  EXPECT_FALSE(r.converged);

  FosdElicitationOptions longer;
  longer.eps_schedule = {1e-1, 1e-2, 1e-3, 1e-4};
  ElicitationResult r4 = ElicitFosd(ConceptSpec::NashPhi(MAStatistic::Expectation()), x, longer);
  EXPECT_TRUE(r4.converged);
  EXPECT_NEAR(r4.extrapolated, 0.5, 1e-4);
}

TEST(ElicitFosdTest, MinMaxMeanWithoutExtremesIsTheMean) {
  std::vector<double> x{0, 1, 5};
  ElicitationResult r =
      ElicitFosd(ConceptSpec::NashPhi(MAStatistic::MinMaxMean(0, 1, 0)), x);
  ASSERT_FALSE(r.inconclusive) << r.message;
  EXPECT_NEAR(r.extrapolated, 2.0, 2e-3);
}

TEST(ElicitFosdTest, Preconditions) {
  std::vector<double> x{0, 1};
  EXPECT_THROW(ElicitFosd(ConceptSpec::Lqre(1.0), x), InvalidArgument);
  EXPECT_THROW(ElicitFosd(ConceptSpec::NashPhi(MAStatistic::MinMaxMean(0.5, 0, 0.5)), x),
               InvalidArgument);
  std::vector<double> constant{2, 2};
  EXPECT_THROW(ElicitFosd(ConceptSpec::NashPhi(MAStatistic::Expectation()), constant),
               InvalidArgument);
}

TEST(FixtureTest, RegistryResolves) {
  std::set<std::string> ids;
  for (const FixtureInfo& f : ListFixtures()) {
    ids.insert(f.id);
    if (f.kind == "game") {
      EXPECT_TRUE(IsGameFixtureId(f.id)) << f.id;
      EXPECT_NO_THROW(ResolveGameFixture(f.id)) << f.id;
    } else {
      EXPECT_TRUE(IsLotteryFixtureId(f.id + ":a")) << f.id;
    }
  }
  for (const char* id : {"g_x:1", "card:r=.6,x=0,1,eps=.1", "vmp", "no_extremal:eps=.25", "allais",
                         "table2"}) {
    EXPECT_TRUE(ids.count(id)) << id;
  }
}

TEST(FixtureTest, ParsesParameters) {
  std::vector<double> x{0, 1};
  EXPECT_PRED2(SameGame, ResolveGameFixture("card:r=.6,x=0,1,eps=.1"), MakeCardGame(0.6, x, 0.1));
  EXPECT_PRED2(SameGame, ResolveGameFixture("g_x:2.5"), MakeTestGameGx(2.5));
  EXPECT_PRED2(SameGame, ResolveGameFixture("g_x:x=2,n=3"), MakeTestGameGx(2, 3));
  EXPECT_PRED2(SameGame, ResolveGameFixture("no_extremal:eps=.5"), MakeNoExtremalEqGame(0.5));
  EXPECT_PRED2(SameGame, ResolveGameFixture("iia"), MakeIiaGame(0, 1, 0, 0));
  EXPECT_PRED2(SameGame, ResolveGameFixture("mp:win=2"), MakeMatchingPennies(2));
  EXPECT_PRED2(SameLottery, ResolveLotteryFixture("allais:b"), MakeAllaisLotteries().b);
  EXPECT_PRED2(SameLottery, ResolveLotteryFixture("table2:c"), MakeTable2Lotteries().c);
  EXPECT_FALSE(IsGameFixtureId("nope"));
  EXPECT_FALSE(IsGameFixtureId("games/mp.json"));
  EXPECT_THROW(ResolveGameFixture("card:r=.6"), InvalidArgument);
  EXPECT_THROW(ResolveGameFixture("g_x:abc"), InvalidArgument);
  EXPECT_THROW(ResolveLotteryFixture("allais:e"), InvalidArgument);
}

}  // namespace
}  // namespace sre
