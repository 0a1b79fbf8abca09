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

#include "sre/lottery.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>

#include "sre/errors.h"
#include "sre/statistic.h"

namespace sre {
namespace {

bool Close(double a, double b) {
  double tol = std::max(kOutcomeMergeTol, 1e-15 * std::max(std::fabs(a), std::fabs(b)));
  return std::fabs(a - b) <= tol;
}

// Right-continuous CDF values of `x` on a sorted grid.
std::vector<double> CdfOnGrid(const Lottery& x, const std::vector<double>& grid) {
  std::vector<double> out(grid.size());
  const auto& atoms = x.atoms();
  std::size_t k = 0;
  double acc = 0.0;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    while (k < atoms.size() &&
           (atoms[k].outcome <= grid[g] || Close(atoms[k].outcome, grid[g]))) {
      acc += atoms[k].weight;
      ++k;
    }
    out[g] = k == atoms.size() ? 1.0 : acc;
  }
  return out;
}

std::uint64_t Factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

Lottery GridApprox(const Lottery& x, int n, bool lower) {
  if (n < 1 || n > 20) {
    throw InvalidArgument("grid approximation needs 1 <= n <= 20, got " +
                          std::to_string(n));
  }
  const std::uint64_t nf = Factorial(n);
  const double scale = static_cast<double>(nf);
  const auto& atoms = x.atoms();
  std::vector<std::uint64_t> counts(atoms.size());
  double acc = 0.0;
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    acc += atoms[k].weight;
    if (k + 1 == atoms.size()) {
      counts[k] = nf;
      break;
    }
    double v = acc * scale;
    double r = std::round(v);
    if (std::fabs(v - r) <= 1e-9 * std::max(1.0, v)) {
      v = r;
    } else {
      v = lower ? std::ceil(v) : std::floor(v);
    }
    counts[k] = std::min<std::uint64_t>(static_cast<std::uint64_t>(v), nf);
  }
  std::vector<Atom> out;
  std::uint64_t prev = 0;
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    std::uint64_t c = std::max(counts[k], prev);
    if (c > prev) {
      out.push_back({atoms[k].outcome,
                     static_cast<double>(c - prev) / scale});
    }
    prev = c;
  }
  return Lottery(std::move(out));
}

}  // namespace

Lottery::Lottery(std::vector<Atom> atoms) {
  if (atoms.empty()) throw InvalidArgument("lottery needs at least one atom");
  double total = 0.0;
  for (const Atom& a : atoms) {
    if (!std::isfinite(a.outcome)) {
      throw InvalidArgument("lottery outcome is not finite");
    }
    if (!std::isfinite(a.weight) || a.weight < 0.0) {
      throw InvalidArgument("lottery weight must be a nonnegative number");
    }
    total += a.weight;
  }
  if (std::fabs(total - 1.0) > 1e-9) {
    throw InvalidArgument("lottery weights sum to " + std::to_string(total) +
                          ", expected 1");
  }
  std::stable_sort(atoms.begin(), atoms.end(),
                   [](const Atom& l, const Atom& r) { return l.outcome < r.outcome; });

  // Merge clusters of nearly equal outcomes. The cluster keeps the outcome of
  // its heaviest member so exact values survive merging.
  std::vector<Atom> merged;
  merged.reserve(atoms.size());
  double best_weight = -1.0;
  double last_outcome = 0.0;
  for (const Atom& a : atoms) {
    if (!merged.empty() && Close(a.outcome, last_outcome)) {
      merged.back().weight += a.weight;
      if (a.weight > best_weight) {
        best_weight = a.weight;
        merged.back().outcome = a.outcome;
      }
    } else {
      merged.push_back(a);
      best_weight = a.weight;
    }
    last_outcome = a.outcome;
  }

  double kept = 0.0;
  for (const Atom& a : merged) {
    if (a.weight >= kWeightFloor) kept += a.weight;
  }
  if (kept <= 0.0) throw InvalidArgument("lottery has no weight above the floor");
  atoms_.reserve(merged.size());
  for (const Atom& a : merged) {
    if (a.weight >= kWeightFloor) atoms_.push_back({a.outcome, a.weight / kept});
  }
}

Lottery Lottery::Degenerate(double c) { return Lottery({{c, 1.0}}); }

double Lottery::Mean() const {
  double m = 0.0;
  for (const Atom& a : atoms_) m += a.weight * a.outcome;
  return m;
}

double Lottery::Variance() const {
  double m = Mean();
  double v = 0.0;
  for (const Atom& a : atoms_) v += a.weight * (a.outcome - m) * (a.outcome - m);
  return v;
}

double Lottery::Cdf(double t) const {
  double acc = 0.0;
  for (const Atom& a : atoms_) {
    if (a.outcome > t) break;
    acc += a.weight;
  }
  return std::min(acc, 1.0);
}

std::string Lottery::DebugString() const {
  std::ostringstream os;
  os.precision(10);
  os << "{";
  for (std::size_t k = 0; k < atoms_.size(); ++k) {
    if (k) os << ", ";
    os << atoms_[k].outcome << ": " << atoms_[k].weight;
  }
  os << "}";
  return os.str();
}

Lottery FromVector(std::span<const double> x) {
  if (x.empty()) throw InvalidArgument("FromVector needs a nonempty vector");
  std::vector<Atom> atoms;
  atoms.reserve(x.size());
  const double w = 1.0 / static_cast<double>(x.size());
  for (double v : x) atoms.push_back({v, w});
  return Lottery(std::move(atoms));
}

Lottery Convolve(const Lottery& x, const Lottery& y) {
  std::vector<Atom> atoms;
  atoms.reserve(x.size() * y.size());
  for (const Atom& a : x.atoms()) {
    for (const Atom& b : y.atoms()) {
      atoms.push_back({a.outcome + b.outcome, a.weight * b.weight});
    }
  }
  return Lottery(std::move(atoms));
}

Lottery IidSum(const Lottery& x, int m) {
  if (m < 1) throw InvalidArgument("IidSum needs m >= 1");
  std::optional<Lottery> result;
  Lottery base = x;
  while (true) {
    if (m & 1) result = result ? Convolve(*result, base) : base;
    m >>= 1;
    if (m == 0) break;
    base = Convolve(base, base);
  }
  return *result;
}

Lottery Mix(const Lottery& x, double beta, const Lottery& z) {
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw InvalidArgument("mixing weight must lie in [0, 1]");
  }
  if (beta == 1.0) return x;
  if (beta == 0.0) return z;
  std::vector<Atom> atoms;
  atoms.reserve(x.size() + z.size());
  for (const Atom& a : x.atoms()) atoms.push_back({a.outcome, beta * a.weight});
  for (const Atom& a : z.atoms()) {
    atoms.push_back({a.outcome, (1.0 - beta) * a.weight});
  }
  return Lottery(std::move(atoms));
}

Lottery ScaleShift(const Lottery& x, double alpha, double c) {
  if (!std::isfinite(alpha) || !std::isfinite(c)) {
    throw InvalidArgument("ScaleShift needs finite alpha and c");
  }
  if (alpha == 0.0) return Lottery::Degenerate(c);
  std::vector<Atom> atoms;
  atoms.reserve(x.size());
  for (const Atom& a : x.atoms()) atoms.push_back({alpha * a.outcome + c, a.weight});
  return Lottery(std::move(atoms));
}

std::string DominanceName(Dominance d) {
  switch (d) {
    case Dominance::kEqual: return "equal";
    case Dominance::kStrictFosd: return "strict_fosd";
    case Dominance::kStrictFosdReversed: return "strict_fosd_reversed";
    case Dominance::kWeakOnly: return "weak_only";
    case Dominance::kIncomparable: return "incomparable";
  }
  return "unknown";
}

Dominance FosdCompare(const Lottery& x, const Lottery& y) {
  std::vector<double> grid;
  grid.reserve(x.size() + y.size());
  for (const Atom& a : x.atoms()) grid.push_back(a.outcome);
  for (const Atom& a : y.atoms()) grid.push_back(a.outcome);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end(), Close), grid.end());

  std::vector<double> fx = CdfOnGrid(x, grid);
  std::vector<double> fy = CdfOnGrid(y, grid);
  double max_d = -std::numeric_limits<double>::infinity();
  double min_d = std::numeric_limits<double>::infinity();
  for (std::size_t g = 0; g < grid.size(); ++g) {
    double d = fx[g] - fy[g];
    max_d = std::max(max_d, d);
    min_d = std::min(min_d, d);
  }
  bool above = max_d > kCdfTol;
  bool below = min_d < -kCdfTol;
  if (above && below) return Dominance::kIncomparable;
  if (below) return Dominance::kStrictFosd;
  if (above) return Dominance::kStrictFosdReversed;

  bool same_support = x.size() == y.size();
  for (std::size_t k = 0; same_support && k < x.size(); ++k) {
    same_support = Close(x.atoms()[k].outcome, y.atoms()[k].outcome);
  }
  return same_support ? Dominance::kEqual : Dominance::kWeakOnly;
}

bool WeaklyDominates(Dominance d) {
  return d == Dominance::kEqual || d == Dominance::kWeakOnly ||
         d == Dominance::kStrictFosd;
}

Lottery GridLower(const Lottery& x, int n) { return GridApprox(x, n, true); }
Lottery GridUpper(const Lottery& x, int n) { return GridApprox(x, n, false); }

std::string LargeNumbersStatusName(LargeNumbersResult::Status s) {
  switch (s) {
    case LargeNumbersResult::Status::kFound: return "found";
    case LargeNumbersResult::Status::kCapExceeded: return "cap_exceeded";
    case LargeNumbersResult::Status::kHypothesisViolated: return "hypothesis_violated";
  }
  return "unknown";
}

std::vector<double> LargeNumbersProbeGrid() {
  std::vector<double> grid;
  grid.push_back(-std::numeric_limits<double>::infinity());
  for (int k = 14; k >= 0; --k) grid.push_back(-0.01 * std::ldexp(1.0, k));
  grid.push_back(0.0);
  for (int k = 0; k <= 14; ++k) grid.push_back(0.01 * std::ldexp(1.0, k));
  grid.push_back(std::numeric_limits<double>::infinity());
  return grid;
}

LargeNumbersResult DominatesInLargeNumbers(const Lottery& x, const Lottery& y,
                                           int cap) {
  if (cap < 1 || cap > 512) {
    throw InvalidArgument("large-numbers cap must lie in [1, 512]");
  }
  LargeNumbersResult result;
  result.cap = cap;
  result.min_probe_gap = std::numeric_limits<double>::infinity();
  for (double a : LargeNumbersProbeGrid()) {
    double gap = KA(x, a) - KA(y, a);
    if (gap < result.min_probe_gap) {
      result.min_probe_gap = gap;
      result.argmin_probe = a;
    }
  }
  if (!(result.min_probe_gap > 1e-12)) {
    result.status = LargeNumbersResult::Status::kHypothesisViolated;
    return result;
  }

  int last_failure = 0;
  Lottery xm = x;
  Lottery ym = y;
  for (int m = 1; m <= cap; ++m) {
    if (m > 1) {
      xm = Convolve(xm, x);
      ym = Convolve(ym, y);
    }
    if (FosdCompare(xm, ym) != Dominance::kStrictFosd) last_failure = m;
  }
  if (last_failure == cap) {
    result.status = LargeNumbersResult::Status::kCapExceeded;
  } else {
    result.status = LargeNumbersResult::Status::kFound;
    result.threshold = last_failure + 1;
  }
  return result;
}

}  // namespace sre
