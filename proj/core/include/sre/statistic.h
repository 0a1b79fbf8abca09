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

#ifndef SRE_STATISTIC_H_
#define SRE_STATISTIC_H_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sre/lottery.h"

namespace sre {

// A point of the extended real line. NaN is rejected.
class ExtendedReal {
 public:
  // Accepts +-infinity as well as finite values.
  explicit ExtendedReal(double v);

  static ExtendedReal NegInf();
  static ExtendedReal PosInf();

  bool is_finite() const;
  bool is_neg_inf() const;
  bool is_pos_inf() const;
  double value() const { return v_; }

  auto operator<=>(const ExtendedReal& o) const { return v_ <=> o.v_; }
  bool operator==(const ExtendedReal& o) const { return v_ == o.v_; }

  std::string ToString() const;

 private:
  double v_;
};

// Below this magnitude K_a switches to the cumulant expansion.
inline constexpr double kTaylorSwitch = 1e-4;

// Normalized cumulant generating function (1/a) log E[exp(aX)], extended by
// continuity to the mean at a = 0, and to min / max at -inf / +inf.
double KA(const Lottery& x, ExtendedReal a);
double KA(const Lottery& x, double a);

// K_a on unnormalized weighted samples. Weights must be nonnegative with a
// positive total; samples need not be sorted or distinct. Only samples with
// positive weight count towards min / max.
double KAWeighted(std::span<const double> outcomes,
                  std::span<const double> weights, double a);

struct StatisticAtom {
  ExtendedReal a;
  double weight;
};

// Phi = sum_k w_k K_{a_k}, a monotone additive statistic with finitely many
// atoms. Atoms are stored sorted by location.
class MAStatistic {
 public:
  explicit MAStatistic(std::vector<StatisticAtom> atoms);

  static MAStatistic Expectation();
  static MAStatistic Ka(ExtendedReal a);
  // Weights on min, mean and max; zero weights are dropped.
  static MAStatistic MinMaxMean(double w_min, double w_mean, double w_max);

  const std::vector<StatisticAtom>& atoms() const { return atoms_; }
  double weight_neg_inf() const;
  double weight_pos_inf() const;
  bool has_extremal_atoms() const;
  bool is_expectation() const;
  // True when every atom sits at -inf, 0 or +inf.
  bool is_min_max_mean() const;

  double Evaluate(const Lottery& x) const;

  std::string ToString() const;

 private:
  std::vector<StatisticAtom> atoms_;
};

double Evaluate(const MAStatistic& phi, const Lottery& x);

// Certainty equivalent f^{-1}(E f(X)) of the CARA utility f(x) = e^{ax}
// (a > 0) or f(x) = -e^{ax} (a < 0), evaluated directly.
double CaraCertaintyEquivalent(const Lottery& x, double a);

// Samples `trials` random lotteries X and scales beta in (0,1) and tests
// |Phi[beta X] - beta Phi[X]| <= tol.
bool IsPositivelyHomogeneous(const MAStatistic& phi, int trials, double tol,
                             std::uint64_t seed = 7);

}  // namespace sre

#endif  // SRE_STATISTIC_H_
