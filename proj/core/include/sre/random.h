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

#ifndef SRE_RANDOM_H_
#define SRE_RANDOM_H_

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace sre {

// Seeded generator with platform-independent conversions to doubles. The
// standard distributions are not portable across library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1).
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }
  // Uniform integer in [0, n).
  int Int(int n) {
    return static_cast<int>(Uniform() * static_cast<double>(n));
  }
  // Exp(1), strictly positive.
  double Exponential() { return -std::log1p(-Uniform()); }

  // Point drawn uniformly from the open simplex of dimension n.
  std::vector<double> Simplex(int n) {
    std::vector<double> v(n);
    double total = 0.0;
    for (double& x : v) {
      x = Exponential() + 1e-12;
      total += x;
    }
    for (double& x : v) x /= total;
    return v;
  }

  std::uint64_t Next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sre

#endif  // SRE_RANDOM_H_
