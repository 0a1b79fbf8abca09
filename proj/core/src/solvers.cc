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

#include "sre/solvers.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <sstream>

#include "response.h"
#include "sre/errors.h"
#include "sre/parallel.h"
#include "sre/random.h"

namespace sre {

using internal::Dists;
using internal::LogitLayout;
using internal::ResponseModel;

void SolverConfig::Validate() const {
  if (!(tol_fixed_point > 0.0) || max_iters < 1 || !(damping > 0.0) ||
      damping > 1.0 || multistarts < 0 || !(homotopy_lambda_max > 0.0) ||
      homotopy_steps < 2 || !(support_tol > 0.0) || max_total_support < 1 ||
      !(nash_tol > 0.0)) {
    throw InvalidArgument("invalid solver configuration");
  }
}

std::string SolveStatusName(SolveStatus s) {
  switch (s) {
    case SolveStatus::kConverged: return "converged";
    case SolveStatus::kNoneFound: return "none_found";
    case SolveStatus::kFailed: return "failed";
  }
  return "unknown";
}

std::vector<double> ContinuousStatisticValues(const Game& g, const MAStatistic& phi,
                                              const MixedProfile& p, int player) {
  p.CheckConforms(g);
  if (player < 0 || player >= g.num_players()) throw InvalidArgument("player out of range");
  ResponseModel model(g, phi);
  std::vector<double> v;
  model.Values(p.distributions(), player, true, v);
  return v;
}

std::vector<double> StatisticValues(const Game& g, const MAStatistic& phi,
                                    const MixedProfile& p, int player) {
  p.CheckConforms(g);
  if (player < 0 || player >= g.num_players()) throw InvalidArgument("player out of range");
  ResponseModel model(g, phi);
  std::vector<double> v;
  model.Values(p.distributions(), player, false, v);
  return v;
}

MixedProfile LogitResponse(const Game& g, const MAStatistic& phi, double lambda,
                           const MixedProfile& p) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw InvalidArgument("lambda must be finite and nonnegative");
  }
  p.CheckConforms(g);
  ResponseModel model(g, phi);
  Dists out;
  model.Response(p.distributions(), lambda, out);
  return MixedProfile(std::move(out));
}

double VerifyLqre(const Game& g, const MAStatistic& phi, double lambda,
                  const MixedProfile& p) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw InvalidArgument("lambda must be finite and nonnegative");
  }
  p.CheckConforms(g);
  ResponseModel model(g, phi);
  return model.Residual(p.distributions(), lambda);
}

void SortAndDeduplicate(std::vector<MixedProfile>& profiles,
                        std::vector<double>& residuals, double radius) {
  if (residuals.size() != profiles.size()) residuals.resize(profiles.size(), 0.0);
  std::vector<std::size_t> order(profiles.size());
  std::iota(order.begin(), order.end(), 0);
  auto less = [&](std::size_t l, std::size_t r) {
    const auto& a = profiles[l].distributions();
    const auto& b = profiles[r].distributions();
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t k = 0; k < a[i].size(); ++k) {
        if (a[i][k] != b[i][k]) return a[i][k] < b[i][k];
      }
    }
    return residuals[l] < residuals[r];
  };
  std::stable_sort(order.begin(), order.end(), less);
  std::vector<MixedProfile> kept;
  std::vector<double> kept_res;
  for (std::size_t idx : order) {
    bool dup = false;
    for (std::size_t k = 0; k < kept.size() && !dup; ++k) {
      if (kept[k].Distance(profiles[idx]) <= radius) {
        dup = true;
        // Prefer the more accurate representative.
        if (residuals[idx] < kept_res[k]) {
          kept[k] = profiles[idx];
          kept_res[k] = residuals[idx];
        }
      }
    }
    if (!dup) {
      kept.push_back(profiles[idx]);
      kept_res.push_back(residuals[idx]);
    }
  }
  profiles = std::move(kept);
  residuals = std::move(kept_res);
}

namespace {

std::vector<double> LambdaGrid(double lambda_max, int steps) {
  std::vector<double> grid{0.0};
  if (steps == 2) {
    grid.push_back(lambda_max);
    return grid;
  }
  const double lambda_min = lambda_max * 1e-4;
  const int m = steps - 1;
  for (int k = 0; k < m; ++k) {
    double t = static_cast<double>(k) / (m - 1);
    grid.push_back(lambda_min * std::pow(lambda_max / lambda_min, t));
  }
  grid.back() = lambda_max;
  return grid;
}

struct StartOutcome {
  bool converged = false;
  Dists p;
  long iterations = 0;
};

StartOutcome RunStart(const ResponseModel& model, const LogitLayout& layout,
                      double lambda, Dists p, const SolverConfig& cfg) {
  StartOutcome out;
  Dists t;
  long next_newton = 64;
  const double alpha = cfg.damping;
  for (long it = 1; it <= cfg.max_iters; ++it) {
    out.iterations = it;
    model.Response(p, lambda, t);
    const double r = internal::SupNormDiff(p, t);
    if (r <= cfg.tol_fixed_point) {
      out.converged = true;
      out.p = std::move(p);
      return out;
    }
    if (it >= next_newton) {
      next_newton *= 4;
      std::vector<double> z = internal::ToLogits(layout, p);
      if (internal::NewtonLqre(model, layout, lambda, z, cfg.tol_fixed_point)) {
        out.converged = true;
        out.p = internal::FromLogits(layout, z);
        return out;
      }
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t a = 0; a < p[i].size(); ++a) {
        p[i][a] = (1.0 - alpha) * p[i][a] + alpha * t[i][a];
      }
    }
  }
  out.p = std::move(p);
  return out;
}

HomotopyPath TraceWithModel(const ResponseModel& model, double lambda_max, int steps,
                            const SolverConfig& cfg) {
  const Game& g = model.game();
  LogitLayout layout(g.action_counts());
  HomotopyPath path;
  std::vector<double> z(layout.dim, 0.0);
  Dists p0 = internal::FromLogits(layout, z);
  path.points.push_back({0.0, MixedProfile(p0), model.Residual(p0, 0.0)});
  path.last_good_lambda = 0.0;

  // Last two accepted points, for a secant predictor.
  double lam_prev = 0.0;
  std::vector<double> z_prev = z;
  double lam_cur = 0.0;

  const std::vector<double> grid = LambdaGrid(lambda_max, steps);
  for (std::size_t k = 1; k < grid.size(); ++k) {
    const double target = grid[k];
    double h = target - lam_cur;
    while (lam_cur < target) {
      const double lam = std::min(lam_cur + h, target);
      std::vector<double> trial = z;
      if (lam_cur > lam_prev) {
        const double s = (lam - lam_cur) / (lam_cur - lam_prev);
        for (int j = 0; j < layout.dim; ++j) trial[j] = z[j] + s * (z[j] - z_prev[j]);
      }
      bool ok = internal::NewtonLqre(model, layout, lam, trial, cfg.tol_fixed_point);
      if (!ok) {
        trial = z;
        ok = internal::NewtonLqre(model, layout, lam, trial, cfg.tol_fixed_point);
      }
      if (ok) {
        lam_prev = lam_cur;
        z_prev = z;
        lam_cur = lam;
        z = std::move(trial);
        h = std::max(h * 2.0, 1e-300);
        path.last_good_lambda = lam_cur;
      } else {
        h *= 0.5;
        if (h < 1e-10 * std::max(1.0, target)) {
          std::ostringstream os;
          os << "continuation broke down between lambda " << lam_cur << " and " << target;
          path.message = os.str();
          return path;
        }
      }
    }
    Dists p = internal::FromLogits(layout, z);
    double res = model.Residual(p, target);
    path.points.push_back({target, MixedProfile(std::move(p)), res});
  }
  path.completed = true;
  return path;
}

}  // namespace

HomotopyPath HomotopyTrace(const Game& g, const MAStatistic& phi, double lambda_max,
                           int steps, const SolverConfig& cfg) {
  cfg.Validate();
  if (!(lambda_max > 0.0) || !std::isfinite(lambda_max)) {
    throw InvalidArgument("homotopy needs a positive finite lambda_max");
  }
  if (steps < 2) throw InvalidArgument("homotopy needs at least two steps");
  ResponseModel model(g, phi);
  return TraceWithModel(model, lambda_max, steps, cfg);
}

SolveResult SolveLqre(const Game& g, const MAStatistic& phi, double lambda,
                      const SolverConfig& cfg) {
  cfg.Validate();
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw InvalidArgument("lambda must be finite and nonnegative");
  }
  ResponseModel model(g, phi);
  LogitLayout layout(g.action_counts());

  std::vector<Dists> starts;
  starts.push_back(MixedProfile::Uniform(g).distributions());
  Rng rng(cfg.seed);
  for (int s = 0; s < cfg.multistarts; ++s) {
    Dists p(g.num_players());
    for (int i = 0; i < g.num_players(); ++i) p[i] = rng.Simplex(g.num_actions(i));
    starts.push_back(std::move(p));
  }

  std::vector<StartOutcome> outcomes(starts.size());
  ParallelFor(starts.size(), [&](std::size_t k) {
    outcomes[k] = RunStart(model, layout, lambda, starts[k], cfg);
  });

  SolveResult result;
  result.diagnostics.method = "damped_iteration";
  result.diagnostics.starts_attempted = static_cast<int>(starts.size());
  std::vector<MixedProfile> profiles;
  std::vector<double> residuals;
  for (const StartOutcome& o : outcomes) {
    result.diagnostics.iterations += o.iterations;
    if (!o.converged) continue;
    ++result.diagnostics.starts_converged;
    double res = model.Residual(o.p, lambda);
    if (res <= cfg.tol_fixed_point) {
      profiles.emplace_back(o.p);
      residuals.push_back(res);
    }
  }

  if (profiles.empty() && lambda > 0.0) {
    result.diagnostics.method = "homotopy_fallback";
    HomotopyPath path = TraceWithModel(model, lambda, cfg.homotopy_steps, cfg);
    result.diagnostics.homotopy_points = static_cast<int>(path.points.size());
    result.diagnostics.homotopy_last_lambda = path.last_good_lambda;
    result.diagnostics.homotopy_completed = path.completed;
    if (path.completed && path.points.back().residual <= cfg.tol_fixed_point) {
      profiles.push_back(path.points.back().profile);
      residuals.push_back(path.points.back().residual);
    } else if (!path.completed) {
      result.diagnostics.notes.push_back(path.message);
    }
  }

  SortAndDeduplicate(profiles, residuals);
  result.profiles = std::move(profiles);
  result.residuals = std::move(residuals);
  result.status = result.profiles.empty() ? SolveStatus::kFailed : SolveStatus::kConverged;
  if (result.status == SolveStatus::kFailed) {
    result.diagnostics.notes.push_back("no start converged within max_iters");
  }
  return result;
}

std::vector<FosdViolation> VerifyFosdNash(const Game& g, const MixedProfile& p,
                                          double support_tol) {
  p.CheckConforms(g);
  std::vector<FosdViolation> out;
  for (int i = 0; i < g.num_players(); ++i) {
    std::vector<Lottery> lot;
    for (int a = 0; a < g.num_actions(i); ++a) lot.push_back(ActionLottery(g, i, a, p));
    for (int a = 0; a < g.num_actions(i); ++a) {
      if (p[i][a] <= support_tol) continue;
      for (int b = 0; b < g.num_actions(i); ++b) {
        if (b != a && FosdCompare(lot[b], lot[a]) == Dominance::kStrictFosd) {
          out.push_back({i, a, b, "strictly_dominated_action_played", p[i][a]});
        }
      }
    }
  }
  return out;
}

std::vector<FosdViolation> VerifyFosdQre(const Game& g, const MixedProfile& p,
                                         double tol) {
  p.CheckConforms(g);
  std::vector<FosdViolation> out;
  for (int i = 0; i < g.num_players(); ++i) {
    std::vector<Lottery> lot;
    for (int a = 0; a < g.num_actions(i); ++a) {
      if (p[i][a] <= tol) out.push_back({i, a, -1, "interiority", tol - p[i][a]});
      lot.push_back(ActionLottery(g, i, a, p));
    }
    for (int a = 0; a < g.num_actions(i); ++a) {
      for (int b = 0; b < g.num_actions(i); ++b) {
        if (a == b) continue;
        if (WeaklyDominates(FosdCompare(lot[a], lot[b])) && p[i][a] < p[i][b] - tol) {
          out.push_back({i, a, b, "weak_dominance_order", p[i][b] - p[i][a]});
        }
      }
    }
  }
  return out;
}

ConceptSpec ConceptSpec::Nash(SolverConfig cfg) {
  return NashPhi(MAStatistic::Expectation(), cfg);
}

ConceptSpec ConceptSpec::NashPhi(MAStatistic phi, SolverConfig cfg) {
  ConceptSpec s;
  s.kind = ConceptKind::kNashPhi;
  s.phi = std::move(phi);
  s.solver = cfg;
  return s;
}

ConceptSpec ConceptSpec::Lqre(double lambda, MAStatistic phi, SolverConfig cfg) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw InvalidArgument("lambda must be finite and nonnegative");
  }
  ConceptSpec s;
  s.kind = ConceptKind::kLqre;
  s.lambda = lambda;
  s.phi = std::move(phi);
  s.solver = cfg;
  return s;
}

ConceptSpec ConceptSpec::FosdNash(SolverConfig cfg) {
  ConceptSpec s;
  s.kind = ConceptKind::kFosdNash;
  s.solver = cfg;
  return s;
}

ConceptSpec ConceptSpec::FosdQre(SolverConfig cfg) {
  ConceptSpec s;
  s.kind = ConceptKind::kFosdQre;
  s.solver = cfg;
  return s;
}

std::string ConceptSpec::Describe() const {
  std::ostringstream os;
  switch (kind) {
    case ConceptKind::kNashPhi:
      if (phi.is_expectation()) {
        os << "nash";
      } else {
        os << "nash_phi" << phi.ToString();
      }
      break;
    case ConceptKind::kLqre:
      os << "lqre(lambda=" << lambda << ", phi=" << phi.ToString() << ")";
      break;
    case ConceptKind::kFosdNash: os << "fosd_nash"; break;
    case ConceptKind::kFosdQre: os << "fosd_qre"; break;
  }
  return os.str();
}

SolveResult Solve(const ConceptSpec& spec, const Game& g) {
  switch (spec.kind) {
    case ConceptKind::kNashPhi:
      return SolveNashPhi(g, spec.phi, spec.solver);
    case ConceptKind::kLqre:
      return SolveLqre(g, spec.phi, spec.lambda, spec.solver);
    case ConceptKind::kFosdNash: {
      SolveResult r = SolveNashPhi(g, MAStatistic::Expectation(), spec.solver);
      SolveResult out = r;
      out.profiles.clear();
      out.residuals.clear();
      for (std::size_t k = 0; k < r.profiles.size(); ++k) {
        auto v = VerifyFosdNash(g, r.profiles[k], spec.solver.support_tol);
        if (v.empty()) {
          out.profiles.push_back(r.profiles[k]);
          out.residuals.push_back(0.0);
        }
      }
      out.diagnostics.notes.push_back("witnessed by expectation Nash equilibria");
      out.status = out.profiles.empty() ? SolveStatus::kNoneFound : SolveStatus::kConverged;
      return out;
    }
    case ConceptKind::kFosdQre: {
      SolveResult r = SolveLqre(g, MAStatistic::Expectation(), 1.0, spec.solver);
      SolveResult out = r;
      out.profiles.clear();
      out.residuals.clear();
      for (std::size_t k = 0; k < r.profiles.size(); ++k) {
        auto v = VerifyFosdQre(g, r.profiles[k], 1e-9);
        if (v.empty()) {
          out.profiles.push_back(r.profiles[k]);
          out.residuals.push_back(0.0);
        }
      }
      out.diagnostics.notes.push_back("witnessed by LQRE(1, expectation) fixed points");
      if (out.profiles.empty() && out.status == SolveStatus::kConverged) {
        out.status = SolveStatus::kNoneFound;
      }
      return out;
    }
  }
  throw InvalidArgument("unknown concept");
}

Membership CheckMembership(const ConceptSpec& spec, const Game& g,
                           const MixedProfile& p, double tol) {
  switch (spec.kind) {
    case ConceptKind::kLqre: {
      double r = VerifyLqre(g, spec.phi, spec.lambda, p);
      return {r <= tol, r};
    }
    case ConceptKind::kNashPhi: {
      double r = NashPhiRegret(g, spec.phi, p, spec.solver.support_tol);
      return {r <= tol, r};
    }
    case ConceptKind::kFosdNash: {
      auto v = VerifyFosdNash(g, p, spec.solver.support_tol);
      return {v.empty(), static_cast<double>(v.size())};
    }
    case ConceptKind::kFosdQre: {
      auto v = VerifyFosdQre(g, p, tol);
      return {v.empty(), static_cast<double>(v.size())};
    }
  }
  throw InvalidArgument("unknown concept");
}

}  // namespace sre
