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

#include "sre/statistic.h"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "sre/errors.h"
#include "sre/testgames.h"
#include "test_util.h"

namespace sre {
namespace {

using testing::RandomLottery;

constexpr double kInf = std::numeric_limits<double>::infinity();

// Plain (1/a) log E[e^{aX}] in long double.
double NaiveKa(const Lottery& x, double a) {
  long double s = 0.0L, total = 0.0L;
  for (const Atom& at : x.atoms()) {
    s += at.weight * std::exp(static_cast<long double>(a) * at.outcome);
    total += at.weight;
  }
  return static_cast<double>(std::log(s / total) / a);
}

Lottery Uniform01() {
  std::vector<double> v{0, 1};
  return FromVector(v);
}

MAStatistic RandomStatistic(Rng& rng) {
  const int n = 1 + rng.Int(3);
  std::vector<double> w = rng.Simplex(n);
  std::vector<StatisticAtom> atoms;
  for (int k = 0; k < n; ++k) {
    double a;
    switch (rng.Int(4)) {
      case 0: a = -kInf; break;
      case 1: a = kInf; break;
      case 2: a = rng.Uniform(-2e-4, 2e-4); break;
      default: a = rng.Uniform(-3.0, 3.0); break;
    }
    atoms.push_back({ExtendedReal(a), w[k]});
  }
  std::sort(atoms.begin(), atoms.end(), [](auto& l, auto& r) { return l.a < r.a; });
  for (std::size_t k = 1; k < atoms.size(); ++k) {
    if (atoms[k].a == atoms[k - 1].a) return MAStatistic::Expectation();
  }
  return MAStatistic(atoms);
}

TEST(ExtendedRealTest, OrderingAndText) {
  EXPECT_THROW(ExtendedReal(NAN), InvalidArgument);
  EXPECT_LT(ExtendedReal::NegInf(), ExtendedReal(-1e300));
  EXPECT_LT(ExtendedReal(1e300), ExtendedReal::PosInf());
  EXPECT_EQ(ExtendedReal::NegInf().ToString(), "-inf");
  EXPECT_EQ(ExtendedReal::PosInf().ToString(), "+inf");
  EXPECT_TRUE(ExtendedReal(2.0).is_finite());
}

TEST(KaTest, Examples) {
  for (double a : {-kInf, -3.0, -1e-5, 0.0, 2e-5, 1.0, kInf}) {
    EXPECT_NEAR(KA(Lottery::Degenerate(1.7), a), 1.7, 1e-15) << a;
  }
  Lottery u = Uniform01();
  EXPECT_DOUBLE_EQ(KA(u, 0.0), 0.5);
  EXPECT_NEAR(KA(u, 1.0), std::log((1 + std::exp(1.0)) / 2), 1e-15);
  EXPECT_NEAR(KA(u, 1.0), 0.620115, 1e-6);
  EXPECT_EQ(KA(u, -kInf), 0.0);
  EXPECT_EQ(KA(u, kInf), 1.0);
}

TEST(KaTest, MatchesNaiveFormula) {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    Lottery x = RandomLottery(rng);
    const double a = rng.Uniform(-5, 5);
    if (std::fabs(a) < 1e-3) continue;
    EXPECT_NEAR(KA(x, a), NaiveKa(x, a), 1e-12);
  }
}

TEST(KaTest, AdditivityOnConvolutions) {
  Rng rng(22);
  const std::vector<double> grid{-kInf, -4, -1, -1e-3, -5e-5, 0, 3e-5, 1e-4, 0.5, 2, kInf};
  for (int trial = 0; trial < 100; ++trial) {
    Lottery x = RandomLottery(rng), y = RandomLottery(rng);
    Lottery xy = Convolve(x, y);
    for (double a : grid) EXPECT_NEAR(KA(xy, a), KA(x, a) + KA(y, a), 1e-9) << a;
  }
}

TEST(KaTest, WithinRangeAndMonotoneInA) {
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    Lottery x = RandomLottery(rng);
    double prev = -kInf;
    for (double a = -20; a <= 20; a += 0.37) {
      const double v = KA(x, a);
      EXPECT_GE(v, x.Min());
      EXPECT_LE(v, x.Max());
      EXPECT_GE(v, prev - 1e-12);
      prev = v;
    }
  }
}

TEST(KaTest, ContinuousAtTaylorSwitch) {
  Rng rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    // Variance at most 1/16 keeps the true slope Var/2 times 2e-7 below 1e-8.
    Lottery x = RandomLottery(rng, 4, 0.0, 0.5);
    for (double s : {-1.0, 1.0}) {
      const double a_lo = s * (kTaylorSwitch - 1e-7), a_hi = s * (kTaylorSwitch + 1e-7);
      EXPECT_NEAR(KA(x, a_lo), KA(x, a_hi), 1e-8);
      EXPECT_NEAR(KA(x, a_lo), NaiveKa(x, a_lo), 1e-12);
      EXPECT_NEAR(KA(x, a_hi), NaiveKa(x, a_hi), 1e-12);
    }
  }
}

TEST(KaTest, LimitsApproachMinAndMax) {
  Rng rng(25);
  for (int trial = 0; trial < 100; ++trial) {
    Lottery x = RandomLottery(rng);
    if (x.is_degenerate()) continue;
    const double range = x.Max() - x.Min();
    EXPECT_NEAR(KA(x, 50 / range), x.Max(), 1e-3 * range + 0.1 * range);
    EXPECT_NEAR(KA(x, 5000 / range), x.Max(), 1e-3 * range);
    EXPECT_NEAR(KA(x, -5000 / range), x.Min(), 1e-3 * range);
  }
}

TEST(KaTest, WeightedSamplesIgnoreZeroWeightExtremes) {
  std::vector<double> u{0, 5, 10}, w{0, 1, 1};
  EXPECT_EQ(KAWeighted(u, w, -kInf), 5.0);
  EXPECT_EQ(KAWeighted(u, w, kInf), 10.0);
  EXPECT_DOUBLE_EQ(KAWeighted(u, w, 0.0), 7.5);
}

TEST(MAStatisticTest, Validation) {
  EXPECT_THROW(MAStatistic({}), InvalidArgument);
  EXPECT_THROW(MAStatistic({{ExtendedReal(0), 0.5}}), InvalidArgument);
  EXPECT_THROW(MAStatistic({{ExtendedReal(0), 0.5}, {ExtendedReal(0), 0.5}}), InvalidArgument);
  EXPECT_THROW(MAStatistic({{ExtendedReal(0), 1.2}, {ExtendedReal(1), -0.2}}), InvalidArgument);
  MAStatistic m = MAStatistic::MinMaxMean(0.2, 0.0, 0.8);
  EXPECT_EQ(m.atoms().size(), 2u);
  EXPECT_TRUE(m.is_min_max_mean());
  EXPECT_TRUE(m.has_extremal_atoms());
  EXPECT_DOUBLE_EQ(m.weight_neg_inf(), 0.2);
  EXPECT_DOUBLE_EQ(m.weight_pos_inf(), 0.8);
  EXPECT_TRUE(MAStatistic::Expectation().is_expectation());
  EXPECT_FALSE(MAStatistic::Ka(ExtendedReal(1)).is_min_max_mean());
}

TEST(MAStatisticTest, EvaluateExamples) {
  MAStatistic thirds({{ExtendedReal::NegInf(), 1.0 / 3}, {ExtendedReal(0), 1.0 / 3},
                      {ExtendedReal::PosInf(), 1.0 / 3}});
  EXPECT_NEAR(thirds.Evaluate(Uniform01()), 0.5, 1e-15);

  Table2Lotteries t = MakeTable2Lotteries();
  MAStatistic phi = MAStatistic::MinMaxMean(0.45, 0.10, 0.45);
  EXPECT_NEAR(phi.Evaluate(t.a), 10.0, 1e-12);
  EXPECT_NEAR(phi.Evaluate(t.b), 0.45 * 5 + 0.10 * 28 / 3.0 + 0.45 * 18, 1e-12);
  EXPECT_NEAR(phi.Evaluate(t.b), 11.283, 1e-3);
  EXPECT_NEAR(phi.Evaluate(t.c), 10.0, 1e-12);

  AllaisLotteries l = MakeAllaisLotteries();
  MAStatistic allais = MAStatistic::MinMaxMean(0.5, 0.45, 0.05);
  EXPECT_NEAR(allais.Evaluate(l.a), 10.0, 1e-12);
  EXPECT_NEAR(allais.Evaluate(l.b), 5.05, 1e-12);
  EXPECT_NEAR(allais.Evaluate(l.c), 0.995, 1e-12);
  EXPECT_NEAR(allais.Evaluate(l.d), 1.045, 1e-12);
}

TEST(MAStatisticTest, AdditivityMonotonicityAndRange) {
  Rng rng(26);
  for (int trial = 0; trial < 200; ++trial) {
    MAStatistic phi = RandomStatistic(rng);
    Lottery x = RandomLottery(rng), y = RandomLottery(rng);
    EXPECT_NEAR(Evaluate(phi, Convolve(x, y)), Evaluate(phi, x) + Evaluate(phi, y), 1e-9);
    const double v = Evaluate(phi, x);
    EXPECT_GE(v, x.Min() - 1e-12);
    EXPECT_LE(v, x.Max() + 1e-12);
    if (FosdCompare(x, y) == Dominance::kStrictFosd) {
      EXPECT_GE(Evaluate(phi, x), Evaluate(phi, y) - 1e-10);
    }
  }
}

TEST(MAStatisticTest, RiskAttitudeSigns) {
  Rng rng(27);
  for (int trial = 0; trial < 100; ++trial) {
    Lottery x = RandomLottery(rng);
    MAStatistic averse({{ExtendedReal(-rng.Uniform(0.1, 4)), 0.5}, {ExtendedReal::NegInf(), 0.5}});
    MAStatistic seeking({{ExtendedReal(rng.Uniform(0.1, 4)), 0.7}, {ExtendedReal::PosInf(), 0.3}});
    EXPECT_LE(Evaluate(averse, x), x.Mean() + 1e-10);
    EXPECT_GE(Evaluate(seeking, x), x.Mean() - 1e-10);
  }
}

TEST(CaraTest, MatchesKa) {
  EXPECT_NEAR(CaraCertaintyEquivalent(Lottery::Degenerate(2.5), 0.7), 2.5, 1e-12);
  EXPECT_NEAR(CaraCertaintyEquivalent(Uniform01(), 1.0), 0.620115, 1e-6);
  const double neg = CaraCertaintyEquivalent(Uniform01(), -2.0);
  EXPECT_LT(neg, 0.5);
  EXPECT_NEAR(neg, KA(Uniform01(), -2.0), 1e-9);
  Rng rng(28);
  for (int trial = 0; trial < 200; ++trial) {
    Lottery x = RandomLottery(rng, 4, -10, 10);
    double a = rng.Uniform(-3, 3);
    if (std::fabs(a) < 1e-6) a = 0.5;
    EXPECT_NEAR(CaraCertaintyEquivalent(x, a), KA(x, a), 1e-9);
  }
  EXPECT_THROW(CaraCertaintyEquivalent(Uniform01(), 0.0), InvalidArgument);
}

TEST(HomogeneityTest, MinMaxMeanIsHomogeneous) {
  MAStatistic mmm({{ExtendedReal::NegInf(), 0.2}, {ExtendedReal(0), 0.5},
                   {ExtendedReal::PosInf(), 0.3}});
  EXPECT_TRUE(IsPositivelyHomogeneous(mmm, 200, 1e-12));
  EXPECT_TRUE(IsPositivelyHomogeneous(MAStatistic::Expectation(), 200, 1e-12));
}

TEST(HomogeneityTest, KaAtomIsNot) {
  const double half = KA(ScaleShift(Uniform01(), 0.5, 0.0), 1.0);
  EXPECT_NEAR(half, std::log((1 + std::exp(0.5)) / 2), 1e-15);
  EXPECT_NEAR(half, 0.280930, 1e-6);
  EXPECT_GT(std::fabs(half - 0.5 * 0.620115), 2e-2);
  EXPECT_FALSE(IsPositivelyHomogeneous(MAStatistic::Ka(ExtendedReal(1.0)), 50, 1e-9));
}

}  // namespace
}  // namespace sre
