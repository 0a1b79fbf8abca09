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

#ifndef SRE_LOTTERY_H_
#define SRE_LOTTERY_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sre {

inline constexpr double kOutcomeMergeTol = 1e-12;
inline constexpr double kWeightFloor = 1e-15;
inline constexpr double kCdfTol = 1e-10;

struct Atom {
  double outcome;
  double weight;
};

// A finitely supported distribution on the reals. Atoms are kept sorted by
// outcome; outcomes closer than kOutcomeMergeTol are merged and weights below
// kWeightFloor are dropped before renormalizing.
class Lottery {
 public:
  // Input weights must be nonnegative and sum to 1 within 1e-9.
  explicit Lottery(std::vector<Atom> atoms);

  static Lottery Degenerate(double c);

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool is_degenerate() const { return atoms_.size() == 1; }

  double Min() const { return atoms_.front().outcome; }
  double Max() const { return atoms_.back().outcome; }
  double Mean() const;
  double Variance() const;
  // P[X <= t].
  double Cdf(double t) const;

  std::string DebugString() const;

 private:
  std::vector<Atom> atoms_;
};

// Uniform draw of a coordinate of x.
Lottery FromVector(std::span<const double> x);

Lottery Convolve(const Lottery& x, const Lottery& y);

// Sum of m independent copies, by repeated doubling.
Lottery IidSum(const Lottery& x, int m);

// beta * X + (1 - beta) * Z as a compound lottery.
Lottery Mix(const Lottery& x, double beta, const Lottery& z);

// alpha * X + c.
Lottery ScaleShift(const Lottery& x, double alpha, double c);

enum class Dominance {
  kEqual,
  kStrictFosd,          // left strictly dominates right
  kStrictFosdReversed,  // right strictly dominates left
  kWeakOnly,            // CDFs agree within tolerance but supports differ
  kIncomparable,
};

std::string DominanceName(Dominance d);

// Compares CDFs on the merged outcome grid with tolerance kCdfTol.
Dominance FosdCompare(const Lottery& x, const Lottery& y);

// True when the verdict says the left lottery weakly dominates the right.
bool WeaklyDominates(Dominance d);

// Grid approximations whose CDFs are ceil(n! F)/n! and floor(n! F)/n! on the
// support of X. Requires 1 <= n <= 20.
Lottery GridLower(const Lottery& x, int n);
Lottery GridUpper(const Lottery& x, int n);

struct LargeNumbersResult {
  enum class Status { kFound, kCapExceeded, kHypothesisViolated };
  Status status = Status::kCapExceeded;
  // Least M <= cap with X^m >_FOSD Y^m for every m in [M, cap].
  std::optional<int> threshold;
  int cap = 0;
  // Smallest K_a[X] - K_a[Y] seen on the probe grid.
  double min_probe_gap = 0.0;
  // Probe location attaining min_probe_gap, encoded as a double (may be +-inf).
  double argmin_probe = 0.0;
};

std::string LargeNumbersStatusName(LargeNumbersResult::Status s);

// Probe points used for the K_a precondition: 0, +-0.01 * 2^k for
// k = 0..14, and +-inf.
std::vector<double> LargeNumbersProbeGrid();

// Scans m = 1..cap. The precondition K_a[X] > K_a[Y] is only probed on
// LargeNumbersProbeGrid(); the convolution scan is the ground truth.
LargeNumbersResult DominatesInLargeNumbers(const Lottery& x, const Lottery& y,
                                           int cap = 512);

}  // namespace sre

#endif  // SRE_LOTTERY_H_
