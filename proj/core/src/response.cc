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

#include "response.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

namespace sre::internal {

ResponseModel::ResponseModel(const Game& g, const MAStatistic& phi) : g_(g), phi_(phi) {
  for (const StatisticAtom& at : phi_.atoms()) {
    if (at.a.is_neg_inf()) {
      w_neg_ += at.weight;
    } else if (at.a.is_pos_inf()) {
      w_pos_ += at.weight;
    } else if (at.a.value() == 0.0) {
      w_mean_ += at.weight;
    } else {
      finite_atoms_.emplace_back(at.a.value(), at.weight);
    }
  }
  const int n = g_.num_players();
  base_.resize(n);
  pure_min_.resize(n);
  pure_max_.resize(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> a(n, 0);
    const std::size_t count = NumOpponentProfiles(g_, i);
    base_[i].resize(count);
    for (std::size_t k = 0; k < count; ++k) {
      std::size_t index = 0;
      for (int j = 0; j < n; ++j) index += g_.stride(j) * static_cast<std::size_t>(a[j]);
      base_[i][k] = index;
      for (int j = n - 1; j >= 0; --j) {
        if (j == i) continue;
        if (++a[j] < g_.num_actions(j)) break;
        a[j] = 0;
      }
    }
    pure_min_[i].assign(g_.num_actions(i), std::numeric_limits<double>::infinity());
    pure_max_[i].assign(g_.num_actions(i), -std::numeric_limits<double>::infinity());
    for (int act = 0; act < g_.num_actions(i); ++act) {
      const std::size_t off = g_.stride(i) * static_cast<std::size_t>(act);
      for (std::size_t b : base_[i]) {
        double u = g_.payoff(b + off, i);
        pure_min_[i][act] = std::min(pure_min_[i][act], u);
        pure_max_[i][act] = std::max(pure_max_[i][act], u);
      }
    }
  }
}

void ResponseModel::Values(const Dists& p, int player, bool continuous,
                           std::vector<double>& out) const {
  const int n = g_.num_players();
  const std::size_t count = base_[player].size();
  // Opponent weights, in the same order as base_.
  std::vector<double> w(count);
  {
    std::vector<int> a(n, 0);
    for (std::size_t k = 0; k < count; ++k) {
      double prod = 1.0;
      for (int j = 0; j < n; ++j) {
        if (j != player) prod *= p[j][a[j]];
      }
      w[k] = prod;
      for (int j = n - 1; j >= 0; --j) {
        if (j == player) continue;
        if (++a[j] < g_.num_actions(j)) break;
        a[j] = 0;
      }
    }
  }
  double total = 0.0;
  for (double x : w) total += x;

  const int actions = g_.num_actions(player);
  out.assign(actions, 0.0);
  std::vector<double> u(count);
  for (int act = 0; act < actions; ++act) {
    const std::size_t off = g_.stride(player) * static_cast<std::size_t>(act);
    double mean = 0.0;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < count; ++k) {
      u[k] = g_.payoff(base_[player][k] + off, player);
      mean += w[k] * u[k];
      if (w[k] > 0.0) {
        lo = std::min(lo, u[k]);
        hi = std::max(hi, u[k]);
      }
    }
    mean /= total;
    double v = w_mean_ * mean;
    for (const auto& [a, wt] : finite_atoms_) v += wt * KAWeighted(u, w, a);
    if (continuous) {
      v += w_neg_ * pure_min_[player][act] + w_pos_ * pure_max_[player][act];
    } else {
      v += w_neg_ * lo + w_pos_ * hi;
    }
    out[act] = v;
  }
}

void ResponseModel::Response(const Dists& p, double lambda, Dists& out) const {
  const int n = g_.num_players();
  out.resize(n);
  std::vector<double> v;
  for (int i = 0; i < n; ++i) {
    Values(p, i, true, v);
    const double m = *std::max_element(v.begin(), v.end());
    out[i].resize(v.size());
    double total = 0.0;
    for (std::size_t a = 0; a < v.size(); ++a) {
      out[i][a] = std::exp(lambda * (v[a] - m));
      total += out[i][a];
    }
    for (double& x : out[i]) x /= total;
  }
}

double SupNormDiff(const Dists& a, const Dists& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < a[i].size(); ++k) d = std::max(d, std::fabs(a[i][k] - b[i][k]));
  }
  return d;
}

double ResponseModel::Residual(const Dists& p, double lambda) const {
  Dists t;
  Response(p, lambda, t);
  return SupNormDiff(p, t);
}

LogitLayout::LogitLayout(const std::vector<int>& c) : counts(c) {
  offsets.resize(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    offsets[i] = dim;
    dim += counts[i] - 1;
  }
}

Dists FromLogits(const LogitLayout& layout, const std::vector<double>& z) {
  Dists p(layout.counts.size());
  for (std::size_t i = 0; i < layout.counts.size(); ++i) {
    const int k = layout.counts[i];
    double m = 0.0;
    for (int a = 1; a < k; ++a) m = std::max(m, z[layout.offsets[i] + a - 1]);
    p[i].resize(k);
    p[i][0] = std::exp(-m);
    double total = p[i][0];
    for (int a = 1; a < k; ++a) {
      p[i][a] = std::exp(z[layout.offsets[i] + a - 1] - m);
      total += p[i][a];
    }
    for (double& x : p[i]) x /= total;
  }
  return p;
}

std::vector<double> ToLogits(const LogitLayout& layout, const Dists& p) {
  std::vector<double> z(layout.dim);
  constexpr double kFloor = 1e-300;
  for (std::size_t i = 0; i < layout.counts.size(); ++i) {
    const double l0 = std::log(std::max(p[i][0], kFloor));
    for (int a = 1; a < layout.counts[i]; ++a) {
      z[layout.offsets[i] + a - 1] = std::log(std::max(p[i][a], kFloor)) - l0;
    }
  }
  return z;
}

namespace {

// R(z) = z - lambda (v(a) - v(0)) per free coordinate.
void LogitResidual(const ResponseModel& model, const LogitLayout& layout, double lambda,
                   const std::vector<double>& z, Eigen::VectorXd& r) {
  Dists p = FromLogits(layout, z);
  r.resize(layout.dim);
  std::vector<double> v;
  for (std::size_t i = 0; i < layout.counts.size(); ++i) {
    if (layout.counts[i] < 2) continue;
    model.Values(p, static_cast<int>(i), true, v);
    for (int a = 1; a < layout.counts[i]; ++a) {
      const int idx = layout.offsets[i] + a - 1;
      r[idx] = z[idx] - lambda * (v[a] - v[0]);
    }
  }
}

}  // namespace

bool NewtonLqre(const ResponseModel& model, const LogitLayout& layout, double lambda,
                std::vector<double>& z, double tol, int max_iters, long* evaluations) {
  const int dim = layout.dim;
  auto prob_residual = [&](const std::vector<double>& zz) {
    return model.Residual(FromLogits(layout, zz), lambda);
  };
  if (dim == 0) return prob_residual(z) <= tol;

  Eigen::VectorXd r, r_trial, r_h;
  LogitResidual(model, layout, lambda, z, r);
  Eigen::MatrixXd jac(dim, dim);
  long evals = 1;
  for (int it = 0; it < max_iters; ++it) {
    if (!r.allFinite()) break;
    if (prob_residual(z) <= tol) {
      if (evaluations) *evaluations += evals;
      return true;
    }
    for (int j = 0; j < dim; ++j) {
      const double h = 1e-7 * std::max(1.0, std::fabs(z[j]));
      std::vector<double> zh = z;
      zh[j] += h;
      LogitResidual(model, layout, lambda, zh, r_h);
      jac.col(j) = (r_h - r) / h;
    }
    evals += dim;
    Eigen::VectorXd step = jac.partialPivLu().solve(-r);
    if (!step.allFinite() || (jac * step + r).norm() > 1e-6 * (1.0 + r.norm())) {
      step = jac.completeOrthogonalDecomposition().solve(-r);
    }
    if (!step.allFinite()) break;
    const double base = r.norm();
    double t = 1.0;
    bool accepted = false;
    std::vector<double> trial(dim);
    for (int ls = 0; ls < 30; ++ls) {
      for (int j = 0; j < dim; ++j) trial[j] = z[j] + t * step[j];
      LogitResidual(model, layout, lambda, trial, r_trial);
      ++evals;
      if (r_trial.allFinite() && r_trial.norm() <= (1.0 - 1e-4 * t) * base) {
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) {
      // Accept a tiny non-increasing step only when already at round-off.
      if (base < 1e-12 * (1.0 + lambda)) {
        if (evaluations) *evaluations += evals;
        return prob_residual(z) <= tol;
      }
      break;
    }
    z = trial;
    r = r_trial;
  }
  if (evaluations) *evaluations += evals;
  return prob_residual(z) <= tol;
}

}  // namespace sre::internal
