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

#ifndef SRE_SOLVERS_H_
#define SRE_SOLVERS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sre/game.h"
#include "sre/statistic.h"

namespace sre {

struct SolverConfig {
  double tol_fixed_point = 1e-10;
  int max_iters = 100000;
  double damping = 0.5;
  int multistarts = 16;
  double homotopy_lambda_max = 200.0;
  int homotopy_steps = 400;
  double support_tol = 1e-7;
  std::uint64_t seed = 0;
  // Support enumeration limits for the Nash solvers.
  int max_total_support = 12;
  std::size_t max_support_profiles = 50000;
  // Band for argmax membership when verifying Nash-type equilibria.
  double nash_tol = 1e-8;

  void Validate() const;
};

struct SolveDiagnostics {
  std::string method;
  long iterations = 0;
  int starts_attempted = 0;
  int starts_converged = 0;
  int homotopy_points = 0;
  double homotopy_last_lambda = 0.0;
  bool homotopy_completed = false;
  std::size_t supports_enumerated = 0;
  bool enumeration_truncated = false;
  int candidates_tested = 0;
  std::vector<std::string> notes;
};

enum class SolveStatus {
  kConverged,  // at least one verified profile
  kNoneFound,  // search finished without a verified profile
  kFailed,     // a solver that should succeed gave up
};

std::string SolveStatusName(SolveStatus s);

struct SolveResult {
  SolveStatus status = SolveStatus::kNoneFound;
  std::vector<MixedProfile> profiles;
  std::vector<double> residuals;
  SolveDiagnostics diagnostics;
};

// Statistic values Phi'[a_i, p_{-i}] for every action of `player`. Atoms at
// -inf / +inf use the pure-profile min / max over all opponent profiles, so
// the map is continuous in p.
std::vector<double> ContinuousStatisticValues(const Game& g, const MAStatistic& phi,
                                              const MixedProfile& p, int player);

// Phi of the actual action lotteries; extremal atoms only see opponent
// profiles with positive probability.
std::vector<double> StatisticValues(const Game& g, const MAStatistic& phi,
                                    const MixedProfile& p, int player);

// T'_i(p)(a_i) proportional to exp(lambda Phi'[a_i, p_{-i}]).
MixedProfile LogitResponse(const Game& g, const MAStatistic& phi, double lambda,
                           const MixedProfile& p);

// Sup-norm of p - T'(p).
double VerifyLqre(const Game& g, const MAStatistic& phi, double lambda,
                  const MixedProfile& p);

SolveResult SolveLqre(const Game& g, const MAStatistic& phi, double lambda,
                      const SolverConfig& cfg = {});

struct HomotopyPoint {
  double lambda;
  MixedProfile profile;
  double residual;
};

struct HomotopyPath {
  std::vector<HomotopyPoint> points;
  bool completed = false;
  double last_good_lambda = 0.0;
  std::string message;
};

// Warm-started continuation of LQRE fixed points along a geometric lambda
// grid that starts at 0.
HomotopyPath HomotopyTrace(const Game& g, const MAStatistic& phi, double lambda_max,
                           int steps, const SolverConfig& cfg = {});

// Largest shortfall max_b Phi[b] - Phi[a] over supported actions a (those
// with probability above support_tol), using StatisticValues.
double NashPhiRegret(const Game& g, const MAStatistic& phi, const MixedProfile& p,
                     double support_tol = 1e-7);

bool VerifyNashPhi(const Game& g, const MAStatistic& phi, const MixedProfile& p,
                   double tol = 1e-8, double support_tol = 1e-7);

SolveResult SolveNashPhi(const Game& g, const MAStatistic& phi,
                         const SolverConfig& cfg = {});

struct FosdViolation {
  int player;
  int action;        // the action whose treatment is violated
  int other_action;  // the dominating / compared action, -1 for interiority
  std::string kind;
  double magnitude;
};

// Supported actions that are strictly FOSD-dominated by another action.
std::vector<FosdViolation> VerifyFosdNash(const Game& g, const MixedProfile& p,
                                          double support_tol = 1e-7);

// Interiority and ordering under weak FOSD dominance.
std::vector<FosdViolation> VerifyFosdQre(const Game& g, const MixedProfile& p,
                                         double tol = 1e-9);

enum class ConceptKind { kNashPhi, kLqre, kFosdNash, kFosdQre };

struct ConceptSpec {
  ConceptKind kind = ConceptKind::kNashPhi;
  double lambda = 0.0;
  MAStatistic phi = MAStatistic::Expectation();
  SolverConfig solver;

  static ConceptSpec Nash(SolverConfig cfg = {});
  static ConceptSpec NashPhi(MAStatistic phi, SolverConfig cfg = {});
  static ConceptSpec Lqre(double lambda, MAStatistic phi = MAStatistic::Expectation(),
                          SolverConfig cfg = {});
  static ConceptSpec FosdNash(SolverConfig cfg = {});
  static ConceptSpec FosdQre(SolverConfig cfg = {});

  bool is_nash_type() const {
    return kind == ConceptKind::kNashPhi || kind == ConceptKind::kFosdNash;
  }
  std::string Describe() const;
};

// Runs the solver behind a concept. FOSD-Nash is witnessed by the expectation
// Nash equilibria that pass VerifyFosdNash; FOSD-QRE by LQRE(1, E) fixed
// points that pass VerifyFosdQre.
SolveResult Solve(const ConceptSpec& spec, const Game& g);

struct Membership {
  bool member;
  // Fixed-point residual for LQRE, argmax shortfall for Nash_Phi, number of
  // violations for the FOSD concepts.
  double score;
};

Membership CheckMembership(const ConceptSpec& spec, const Game& g,
                           const MixedProfile& p, double tol);

// Sorts profiles lexicographically and drops those within `radius` of an
// earlier kept profile. Residuals travel with their profiles.
void SortAndDeduplicate(std::vector<MixedProfile>& profiles,
                        std::vector<double>& residuals, double radius = 1e-6);

}  // namespace sre

#endif  // SRE_SOLVERS_H_
