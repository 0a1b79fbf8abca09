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

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "sre/errors.h"
#include "sre/random.h"

namespace sre {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

ExtendedReal::ExtendedReal(double v) : v_(v) {
  if (std::isnan(v)) throw InvalidArgument("extended real cannot be NaN");
}

ExtendedReal ExtendedReal::NegInf() { return ExtendedReal(-kInf); }
ExtendedReal ExtendedReal::PosInf() { return ExtendedReal(kInf); }
bool ExtendedReal::is_finite() const { return std::isfinite(v_); }
bool ExtendedReal::is_neg_inf() const { return v_ == -kInf; }
bool ExtendedReal::is_pos_inf() const { return v_ == kInf; }

std::string ExtendedReal::ToString() const {
  if (is_neg_inf()) return "-inf";
  if (is_pos_inf()) return "+inf";
  std::ostringstream os;
  os << v_;
  return os.str();
}

double KAWeighted(std::span<const double> outcomes,
                  std::span<const double> weights, double a) {
  if (outcomes.size() != weights.size() || outcomes.empty()) {
    throw InvalidArgument("KAWeighted needs matching nonempty spans");
  }
  double total = 0.0;
  double lo = kInf;
  double hi = -kInf;
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    if (weights[k] > 0.0) {
      total += weights[k];
      lo = std::min(lo, outcomes[k]);
      hi = std::max(hi, outcomes[k]);
    }
  }
  if (!(total > 0.0)) throw InvalidArgument("KAWeighted needs positive weight");
  if (a == kInf) return hi;
  if (a == -kInf) return lo;
  if (lo == hi) return lo;

  double mean = 0.0;
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    if (weights[k] > 0.0) mean += weights[k] * outcomes[k];
  }
  mean /= total;
  if (a == 0.0) return std::clamp(mean, lo, hi);

  double value;
  if (std::fabs(a) < kTaylorSwitch) {
    double m2 = 0.0;
    double m3 = 0.0;
    for (std::size_t k = 0; k < outcomes.size(); ++k) {
      if (weights[k] <= 0.0) continue;
      double d = outcomes[k] - mean;
      m2 += weights[k] * d * d;
      m3 += weights[k] * d * d * d;
    }
    m2 /= total;
    m3 /= total;
    value = mean + a * m2 / 2.0 + a * a * m3 / 6.0;
  } else {
    const double shift = a > 0.0 ? hi : lo;
    double s = 0.0;  // E[e^{a(X - shift)}] - 1
    double t = 0.0;  // E[e^{a(X - shift)}]
    for (std::size_t k = 0; k < outcomes.size(); ++k) {
      if (weights[k] <= 0.0) continue;
      double z = a * (outcomes[k] - shift);
      s += weights[k] * std::expm1(z);
      t += weights[k] * std::exp(z);
    }
    s /= total;
    t /= total;
    double log_mgf = s > -0.5 ? std::log1p(s) : std::log(t);
    value = shift + log_mgf / a;
  }
  return std::clamp(value, lo, hi);
}

double KA(const Lottery& x, double a) {
  if (std::isnan(a)) throw InvalidArgument("K_a location cannot be NaN");
  if (a == kInf) return x.Max();
  if (a == -kInf) return x.Min();
  if (a == 0.0) return std::clamp(x.Mean(), x.Min(), x.Max());
  std::vector<double> outcomes;
  std::vector<double> weights;
  outcomes.reserve(x.size());
  weights.reserve(x.size());
  for (const Atom& at : x.atoms()) {
    outcomes.push_back(at.outcome);
    weights.push_back(at.weight);
  }
  return KAWeighted(outcomes, weights, a);
}

double KA(const Lottery& x, ExtendedReal a) { return KA(x, a.value()); }

MAStatistic::MAStatistic(std::vector<StatisticAtom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw InvalidArgument("statistic needs at least one atom");
  double total = 0.0;
  for (const StatisticAtom& at : atoms_) {
    if (!std::isfinite(at.weight) || at.weight <= 0.0) {
      throw InvalidArgument("statistic atom weights must be positive");
    }
    total += at.weight;
  }
  if (std::fabs(total - 1.0) > 1e-12) {
    throw InvalidArgument("statistic weights must sum to 1");
  }
  std::sort(atoms_.begin(), atoms_.end(),
            [](const StatisticAtom& l, const StatisticAtom& r) { return l.a < r.a; });
  for (std::size_t k = 1; k < atoms_.size(); ++k) {
    if (atoms_[k].a == atoms_[k - 1].a) {
      throw InvalidArgument("statistic atom locations must be distinct");
    }
  }
}

MAStatistic MAStatistic::Expectation() { return MAStatistic({{ExtendedReal(0.0), 1.0}}); }

MAStatistic MAStatistic::Ka(ExtendedReal a) { return MAStatistic({{a, 1.0}}); }

MAStatistic MAStatistic::MinMaxMean(double w_min, double w_mean, double w_max) {
  if (w_min < 0.0 || w_mean < 0.0 || w_max < 0.0) {
    throw InvalidArgument("Min-Max-Mean weights must be nonnegative");
  }
  std::vector<StatisticAtom> atoms;
  if (w_min > 0.0) atoms.push_back({ExtendedReal::NegInf(), w_min});
  if (w_mean > 0.0) atoms.push_back({ExtendedReal(0.0), w_mean});
  if (w_max > 0.0) atoms.push_back({ExtendedReal::PosInf(), w_max});
  return MAStatistic(std::move(atoms));
}

double MAStatistic::weight_neg_inf() const {
  return atoms_.front().a.is_neg_inf() ? atoms_.front().weight : 0.0;
}

double MAStatistic::weight_pos_inf() const {
  return atoms_.back().a.is_pos_inf() ? atoms_.back().weight : 0.0;
}

bool MAStatistic::has_extremal_atoms() const {
  return weight_neg_inf() > 0.0 || weight_pos_inf() > 0.0;
}

bool MAStatistic::is_expectation() const {
  return atoms_.size() == 1 && atoms_[0].a.value() == 0.0;
}

bool MAStatistic::is_min_max_mean() const {
  return std::all_of(atoms_.begin(), atoms_.end(), [](const StatisticAtom& at) {
    return !at.a.is_finite() || at.a.value() == 0.0;
  });
}

double MAStatistic::Evaluate(const Lottery& x) const {
  double v = 0.0;
  for (const StatisticAtom& at : atoms_) v += at.weight * KA(x, at.a);
  return v;
}

std::string MAStatistic::ToString() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < atoms_.size(); ++k) {
    if (k) os << ", ";
    os << "K[" << atoms_[k].a.ToString() << "]:" << atoms_[k].weight;
  }
  os << "}";
  return os.str();
}

double Evaluate(const MAStatistic& phi, const Lottery& x) { return phi.Evaluate(x); }

double CaraCertaintyEquivalent(const Lottery& x, double a) {
  if (!std::isfinite(a) || a == 0.0) {
    throw InvalidArgument("CARA coefficient must be finite and nonzero");
  }
  // Translation invariance of CARA lets us evaluate around the mean.
  const double s = x.Mean();
  auto f = [a](double v) { return a > 0.0 ? std::exp(a * v) : -std::exp(a * v); };
  auto f_inv = [a](double u) { return a > 0.0 ? std::log(u) / a : std::log(-u) / a; };
  double eu = 0.0;
  for (const Atom& at : x.atoms()) eu += at.weight * f(at.outcome - s);
  return s + f_inv(eu);
}

bool IsPositivelyHomogeneous(const MAStatistic& phi, int trials, double tol,
                             std::uint64_t seed) {
  if (trials < 1) throw InvalidArgument("homogeneity check needs trials >= 1");
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    int n = 2 + rng.Int(3);
    std::vector<double> w = rng.Simplex(n);
    std::vector<Atom> atoms;
    for (int k = 0; k < n; ++k) atoms.push_back({rng.Uniform(-2.0, 2.0), w[k]});
    Lottery x(std::move(atoms));
    double beta = rng.Uniform(0.05, 0.95);
    double lhs = phi.Evaluate(ScaleShift(x, beta, 0.0));
    double rhs = beta * phi.Evaluate(x);
    if (std::fabs(lhs - rhs) > tol) return false;
  }
  return true;
}

}  // namespace sre
