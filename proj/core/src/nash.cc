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

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

#include <Eigen/Dense>

#include "response.h"
#include "sre/errors.h"
#include "sre/random.h"
#include "sre/solvers.h"

namespace sre {

using internal::Dists;
using internal::ResponseModel;

namespace {

using Supports = std::vector<std::vector<int>>;

double PayoffScale(const Game& g) {
  return std::max({1.0, std::fabs(g.MinPayoff()), std::fabs(g.MaxPayoff())});
}

double RegretOf(const ResponseModel& model, const Dists& p, double support_tol) {
  double worst = 0.0;
  std::vector<double> v;
  for (int i = 0; i < model.game().num_players(); ++i) {
    model.Values(p, i, false, v);
    const double best = *std::max_element(v.begin(), v.end());
    for (std::size_t a = 0; a < v.size(); ++a) {
      if (p[i][a] > support_tol) worst = std::max(worst, best - v[a]);
    }
  }
  return worst;
}

// Within-support indifference for two players under the expectation. Each
// player's mix on its support solves the opponent's indifference system.
std::optional<Dists> SolveLinearSupport(const Game& g, const Supports& s) {
  const double scale = PayoffScale(g);
  Dists out(2);
  for (int i = 0; i < 2; ++i) {
    const int j = 1 - i;
    const int rows = static_cast<int>(s[i].size()) + 1;
    const int cols = static_cast<int>(s[j].size()) + 1;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rows, cols);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(rows);
    int acts[2];
    for (int r = 0; r + 1 < rows; ++r) {
      for (int c = 0; c + 1 < cols; ++c) {
        acts[i] = s[i][r];
        acts[j] = s[j][c];
        m(r, c) = g.payoff(std::span<const int>(acts, 2), i) / scale;
      }
      m(r, cols - 1) = -1.0;
    }
    for (int c = 0; c + 1 < cols; ++c) m(rows - 1, c) = 1.0;
    rhs(rows - 1) = 1.0;
    Eigen::VectorXd x = m.completeOrthogonalDecomposition().solve(rhs);
    if (!x.allFinite() || (m * x - rhs).lpNorm<Eigen::Infinity>() > 1e-10) {
      return std::nullopt;
    }
    out[j].assign(g.num_actions(j), 0.0);
    double total = 0.0;
    for (int c = 0; c + 1 < cols; ++c) {
      if (x(c) < -1e-12) return std::nullopt;
      double v = std::max(0.0, x(c));
      out[j][s[j][c]] = v;
      total += v;
    }
    if (!(total > 0.0)) return std::nullopt;
    for (double& v : out[j]) v /= total;
  }
  return out;
}

Dists SupportProfile(const Game& g, const Supports& s, const std::vector<double>& z,
                     const std::vector<int>& offsets) {
  Dists p(g.num_players());
  for (int i = 0; i < g.num_players(); ++i) {
    p[i].assign(g.num_actions(i), 0.0);
    const int k = static_cast<int>(s[i].size());
    double m = 0.0;
    for (int t = 1; t < k; ++t) m = std::max(m, z[offsets[i] + t - 1]);
    double total = std::exp(-m);
    p[i][s[i][0]] = total;
    for (int t = 1; t < k; ++t) {
      double v = std::exp(z[offsets[i] + t - 1] - m);
      p[i][s[i][t]] = v;
      total += v;
    }
    for (double& v : p[i]) v /= total;
  }
  return p;
}

// Levenberg-Marquardt on the within-support indifference conditions, in
// log-odds coordinates relative to each support's first action.
std::optional<Dists> SolveNonlinearSupport(const ResponseModel& model, const Supports& s,
                                           const Dists& start) {
  const Game& g = model.game();
  const double scale = PayoffScale(g);
  std::vector<int> offsets(g.num_players());
  int dim = 0;
  for (int i = 0; i < g.num_players(); ++i) {
    offsets[i] = dim;
    dim += static_cast<int>(s[i].size()) - 1;
  }
  std::vector<double> z(dim, 0.0);
  for (int i = 0; i < g.num_players(); ++i) {
    const double base = std::log(std::max(start[i][s[i][0]], 1e-300));
    for (std::size_t t = 1; t < s[i].size(); ++t) {
      z[offsets[i] + t - 1] =
          std::clamp(std::log(std::max(start[i][s[i][t]], 1e-300)) - base, -50.0, 50.0);
    }
  }
  if (dim == 0) return SupportProfile(g, s, z, offsets);

  std::vector<double> v;
  auto residual = [&](const std::vector<double>& zz, Eigen::VectorXd& f) {
    Dists p = SupportProfile(g, s, zz, offsets);
    f.resize(dim);
    for (int i = 0; i < g.num_players(); ++i) {
      if (s[i].size() < 2) continue;
      model.Values(p, i, false, v);
      for (std::size_t t = 1; t < s[i].size(); ++t) {
        f[offsets[i] + t - 1] = (v[s[i][t]] - v[s[i][0]]) / scale;
      }
    }
  };

  Eigen::VectorXd f, f_trial, f_h;
  residual(z, f);
  Eigen::MatrixXd jac(dim, dim);
  double mu = -1.0;
  std::vector<double> trial(dim);
  for (int it = 0; it < 100; ++it) {
    if (!f.allFinite()) return std::nullopt;
    if (f.lpNorm<Eigen::Infinity>() <= 1e-13) break;
    for (int c = 0; c < dim; ++c) {
      const double h = 1e-7 * std::max(1.0, std::fabs(z[c]));
      std::vector<double> zh = z;
      zh[c] += h;
      residual(zh, f_h);
      jac.col(c) = (f_h - f) / h;
    }
    Eigen::MatrixXd a = jac.transpose() * jac;
    Eigen::VectorXd grad = jac.transpose() * f;
    if (mu < 0.0) mu = 1e-3 * std::max(1e-12, a.diagonal().maxCoeff());
    bool improved = false;
    for (int tries = 0; tries < 12; ++tries) {
      Eigen::MatrixXd damped = a;
      damped.diagonal().array() += mu;
      Eigen::VectorXd step = damped.ldlt().solve(-grad);
      if (!step.allFinite()) {
        mu *= 4.0;
        continue;
      }
      for (int c = 0; c < dim; ++c) trial[c] = std::clamp(z[c] + step[c], -700.0, 700.0);
      residual(trial, f_trial);
      if (f_trial.allFinite() && f_trial.squaredNorm() < f.squaredNorm()) {
        z = trial;
        f = f_trial;
        mu = std::max(mu / 3.0, 1e-15);
        improved = true;
        break;
      }
      mu *= 4.0;
    }
    if (!improved) break;
  }
  if (!f.allFinite() || f.lpNorm<Eigen::Infinity>() > 1e-9) return std::nullopt;
  return SupportProfile(g, s, z, offsets);
}

// Actions strictly dominated by another pure action for every opponent
// profile can never be statistic best responses.
std::vector<std::vector<int>> UndominatedActions(const Game& g, double tol) {
  std::vector<std::vector<int>> out(g.num_players());
  for (int i = 0; i < g.num_players(); ++i) {
    const std::size_t stride = g.stride(i);
    for (int a = 0; a < g.num_actions(i); ++a) {
      bool dominated = false;
      for (int b = 0; b < g.num_actions(i) && !dominated; ++b) {
        if (b == a) continue;
        bool all = true;
        for (std::size_t k = 0; k < g.num_profiles() && all; ++k) {
          if (g.ActionOf(k, i) != a) continue;
          std::size_t kb = k + stride * static_cast<std::size_t>(b) -
                           stride * static_cast<std::size_t>(a);
          all = g.payoff(kb, i) > g.payoff(k, i) + tol;
        }
        dominated = all;
      }
      if (!dominated) out[i].push_back(a);
    }
  }
  return out;
}

// Calls fn for support profiles in order of increasing total size. Returns
// false when stopped by the cap.
bool EnumerateSupports(const std::vector<std::vector<int>>& pool, int max_total,
                       std::size_t cap, std::size_t& count,
                       const std::function<void(const Supports&)>& fn) {
  const int n = static_cast<int>(pool.size());
  int upper = 0;
  for (const auto& p : pool) upper += static_cast<int>(p.size());
  upper = std::min(upper, max_total);
  Supports s(n);
  std::vector<int> sizes(n, 1);

  std::function<bool(int, int)> choose_sizes;
  std::function<bool(int)> choose_sets;
  std::vector<int> pick;

  choose_sets = [&](int i) -> bool {
    if (i == n) {
      if (count >= cap) return false;
      ++count;
      fn(s);
      return true;
    }
    const int m = static_cast<int>(pool[i].size());
    const int k = sizes[i];
    std::vector<int> idx(k);
    for (int t = 0; t < k; ++t) idx[t] = t;
    while (true) {
      s[i].resize(k);
      for (int t = 0; t < k; ++t) s[i][t] = pool[i][idx[t]];
      if (!choose_sets(i + 1)) return false;
      int t = k - 1;
      while (t >= 0 && idx[t] == m - k + t) --t;
      if (t < 0) break;
      ++idx[t];
      for (int u = t + 1; u < k; ++u) idx[u] = idx[u - 1] + 1;
    }
    return true;
  };

  choose_sizes = [&](int i, int remaining) -> bool {
    if (i == n - 1) {
      if (remaining < 1 || remaining > static_cast<int>(pool[i].size())) return true;
      sizes[i] = remaining;
      return choose_sets(0);
    }
    const int players_left = n - 1 - i;
    for (int k = 1; k <= static_cast<int>(pool[i].size()) && remaining - k >= players_left;
         ++k) {
      sizes[i] = k;
      if (!choose_sizes(i + 1, remaining - k)) return false;
    }
    return true;
  };

  for (int total = n; total <= upper; ++total) {
    if (!choose_sizes(0, total)) return false;
  }
  return true;
}

}  // namespace

double NashPhiRegret(const Game& g, const MAStatistic& phi, const MixedProfile& p,
                     double support_tol) {
  p.CheckConforms(g);
  ResponseModel model(g, phi);
  return RegretOf(model, p.distributions(), support_tol);
}

bool VerifyNashPhi(const Game& g, const MAStatistic& phi, const MixedProfile& p,
                   double tol, double support_tol) {
  return NashPhiRegret(g, phi, p, support_tol) <= tol;
}

SolveResult SolveNashPhi(const Game& g, const MAStatistic& phi, const SolverConfig& cfg) {
  cfg.Validate();
  ResponseModel model(g, phi);
  const bool linear = g.num_players() == 2 && phi.is_expectation();
  SolveResult result;
  result.diagnostics.method = linear ? "homotopy+linear_support_enumeration"
                                     : "homotopy+nonlinear_support_enumeration";

  std::vector<MixedProfile> found;
  std::vector<double> regrets;
  auto consider = [&](const std::optional<Dists>& cand) {
    if (!cand) return;
    ++result.diagnostics.candidates_tested;
    // Snap probabilities at round-off level to zero.
    Dists clean = *cand;
    for (auto& d : clean) {
      double total = 0.0;
      for (double& x : d) {
        if (x < 1e-15) x = 0.0;
        total += x;
      }
      for (double& x : d) x /= total;
    }
    double r = RegretOf(model, clean, cfg.support_tol);
    if (r <= cfg.nash_tol) {
      found.emplace_back(std::move(clean));
      regrets.push_back(r);
    }
  };
  auto solve_support = [&](const Supports& s, const Dists& start) {
    if (linear) {
      consider(SolveLinearSupport(g, s));
    } else {
      consider(SolveNonlinearSupport(model, s, start));
    }
  };

  // Stage 1: follow the logit path and harvest supports near its end.
  HomotopyPath path = HomotopyTrace(g, phi, cfg.homotopy_lambda_max, cfg.homotopy_steps, cfg);
  result.diagnostics.homotopy_points = static_cast<int>(path.points.size());
  result.diagnostics.homotopy_last_lambda = path.last_good_lambda;
  result.diagnostics.homotopy_completed = path.completed;
  if (!path.completed) result.diagnostics.notes.push_back(path.message);
  {
    const Dists& end = path.points.back().profile.distributions();
    const double scale = PayoffScale(g);
    std::set<Supports> candidates;
    std::vector<double> v;
    for (double eta : {1e-9, 1e-6, 1e-4, 1e-2, 1e-1}) {
      Supports s(g.num_players());
      for (int i = 0; i < g.num_players(); ++i) {
        model.Values(end, i, false, v);
        const double best = *std::max_element(v.begin(), v.end());
        for (int a = 0; a < g.num_actions(i); ++a) {
          if (v[a] >= best - eta * scale) s[i].push_back(a);
        }
      }
      candidates.insert(s);
    }
    for (double theta : {1e-3, 1e-2, 1e-1}) {
      Supports s(g.num_players());
      for (int i = 0; i < g.num_players(); ++i) {
        const double top = *std::max_element(end[i].begin(), end[i].end());
        for (int a = 0; a < g.num_actions(i); ++a) {
          if (end[i][a] >= theta * top) s[i].push_back(a);
        }
      }
      candidates.insert(s);
    }
    for (const Supports& s : candidates) {
      Dists start(g.num_players());
      for (int i = 0; i < g.num_players(); ++i) {
        start[i].assign(g.num_actions(i), 0.0);
        double total = 0.0;
        for (int a : s[i]) total += end[i][a];
        for (int a : s[i]) start[i][a] = end[i][a] / total;
      }
      solve_support(s, start);
    }
  }

  // Stage 2: support enumeration by increasing total support size.
  const auto pool = UndominatedActions(g, cfg.nash_tol);
  Rng rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  std::size_t count = 0;
  bool complete = EnumerateSupports(
      pool, cfg.max_total_support, cfg.max_support_profiles, count, [&](const Supports& s) {
        Dists start(g.num_players());
        for (int i = 0; i < g.num_players(); ++i) {
          start[i].assign(g.num_actions(i), 0.0);
          for (int a : s[i]) start[i][a] = 1.0 / static_cast<double>(s[i].size());
        }
        solve_support(s, start);
        if (!linear) {
          for (int i = 0; i < g.num_players(); ++i) {
            std::vector<double> w = rng.Simplex(static_cast<int>(s[i].size()));
            for (std::size_t t = 0; t < s[i].size(); ++t) start[i][s[i][t]] = w[t];
          }
          solve_support(s, start);
        }
      });
  result.diagnostics.supports_enumerated = count;
  int total_actions = 0;
  for (int c : g.action_counts()) total_actions += c;
  result.diagnostics.enumeration_truncated =
      !complete || total_actions > cfg.max_total_support;
  if (result.diagnostics.enumeration_truncated) {
    result.diagnostics.notes.push_back("support enumeration cap reached");
  }

  SortAndDeduplicate(found, regrets);
  result.profiles = std::move(found);
  result.residuals = std::move(regrets);
  if (result.profiles.empty()) {
    result.status = SolveStatus::kNoneFound;
    result.diagnostics.notes.push_back(result.diagnostics.enumeration_truncated
                                           ? "none found under enumeration cap"
                                           : "none found under full support enumeration");
  } else {
    result.status = SolveStatus::kConverged;
  }
  return result;
}

}  // namespace sre
