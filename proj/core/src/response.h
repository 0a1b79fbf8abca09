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

#ifndef SRE_SRC_RESPONSE_H_
#define SRE_SRC_RESPONSE_H_

#include <cstddef>
#include <vector>

#include "sre/game.h"
#include "sre/statistic.h"

namespace sre::internal {

using Dists = std::vector<std::vector<double>>;

// Evaluates statistic values of every action against raw (unchecked)
// profiles. Shared by the LQRE and Nash solvers.
class ResponseModel {
 public:
  ResponseModel(const Game& g, const MAStatistic& phi);

  const Game& game() const { return g_; }
  const MAStatistic& phi() const { return phi_; }

  // continuous = true gives Phi' (pure min / max over all opponent profiles
  // for the extremal atoms); false gives Phi of the actual lottery.
  void Values(const Dists& p, int player, bool continuous,
              std::vector<double>& out) const;

  void Response(const Dists& p, double lambda, Dists& out) const;
  double Residual(const Dists& p, double lambda) const;

 private:
  const Game& g_;
  MAStatistic phi_;
  std::vector<std::pair<double, double>> finite_atoms_;  // (a, w), a != 0
  double w_mean_ = 0.0;
  double w_neg_ = 0.0;
  double w_pos_ = 0.0;
  std::vector<std::vector<std::size_t>> base_;  // [player][opponent profile]
  std::vector<std::vector<double>> pure_min_;   // [player][action]
  std::vector<std::vector<double>> pure_max_;
};

// Log-odds coordinates relative to each player's first action.
struct LogitLayout {
  explicit LogitLayout(const std::vector<int>& counts);
  std::vector<int> counts;
  std::vector<int> offsets;
  int dim = 0;
};

Dists FromLogits(const LogitLayout& layout, const std::vector<double>& z);
std::vector<double> ToLogits(const LogitLayout& layout, const Dists& p);

// Newton's method on z_i(a) = lambda (v_i(a) - v_i(0)). Returns true when
// the probability-space residual reaches tol; z is updated in place.
bool NewtonLqre(const ResponseModel& model, const LogitLayout& layout,
                double lambda, std::vector<double>& z, double tol,
                int max_iters = 60, long* evaluations = nullptr);

double SupNormDiff(const Dists& a, const Dists& b);

}  // namespace sre::internal

#endif  // SRE_SRC_RESPONSE_H_
