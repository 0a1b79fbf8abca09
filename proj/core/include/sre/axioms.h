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

#ifndef SRE_AXIOMS_H_
#define SRE_AXIOMS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sre/game.h"
#include "sre/solvers.h"

namespace sre {

struct AxiomViolation {
  std::string game;  // descriptor of the instance
  int player = -1;
  std::string detail;  // action pair or profile
  double magnitude = 0.0;
};

struct AxiomReport {
  std::string axiom;
  std::size_t instances_checked = 0;
  std::vector<AxiomViolation> violations;
  bool passed = true;
  // True when no instance exercised the axiom's hypothesis.
  bool vacuous = false;
  std::string corpus;

  void Add(AxiomViolation v);
  // Appends another report's instances and violations.
  void Merge(const AxiomReport& other);
};

// Strict FOSD dominance of a over b requires p_i(a) >= p_i(b) - tol.
AxiomReport CheckDistributionMonotonicity(const Game& g, const MixedProfile& p, double tol,
                                          const std::string& descriptor = "game");

// A strictly higher expected payoff requires p_i(a) >= p_i(b) - tol.
AxiomReport CheckExpectationMonotonicity(const Game& g, const MixedProfile& p, double tol,
                                         const std::string& descriptor = "game");

// Products of solutions of G and H must solve G x H.
AxiomReport CheckBracketing(const ConceptSpec& spec, const Game& g, const Game& h, double tol,
                            const std::string& descriptor = "pair");

AxiomReport CheckAnonymity(const ConceptSpec& spec, const Game& g, const PlayerPermutation& pi,
                           double tol, const std::string& descriptor = "game");

// Only uniform solutions are tested; otherwise the report is vacuous.
AxiomReport CheckScaleInvariance(const ConceptSpec& spec, const Game& g,
                                 const std::vector<double>& alphas, double tol,
                                 const std::string& descriptor = "game");

AxiomReport CheckStrategicInvariance(const ConceptSpec& spec, const Game& g,
                                     const std::vector<std::vector<double>>& shifts, double tol,
                                     const std::string& descriptor = "game");

AxiomReport CheckInteriority(const MixedProfile& p, double tol,
                             const std::string& descriptor = "profile");

enum class NeutralityMode { kExpectation, kDistribution };

AxiomReport CheckNeutrality(const Game& g, const MixedProfile& p, NeutralityMode mode,
                            double tol, const std::string& descriptor = "game");

// Common solutions of (A,u) and (A,v) must solve (A, alpha u + (1-alpha) v).
AxiomReport CheckConsistency(const ConceptSpec& spec, const Game& u, const Game& v,
                             const std::vector<double>& alphas, double tol,
                             const std::string& descriptor = "pair");

// Solutions of the blow-up push forward to solutions of H, and solutions of
// H lift (all mass on the first preimage, or split evenly) to solutions of
// the blow-up.
AxiomReport CheckConsequentialism(const ConceptSpec& spec, const Game& h, const BlowUpMaps& maps,
                                  double tol, const std::string& descriptor = "game");

// Strictly dominant actions must get probability above tol.
AxiomReport CheckRationality(const Game& g, const MixedProfile& p, double tol,
                             const std::string& descriptor = "game");

// alpha u + (1 - alpha) v on a common action space.
Game BlendGames(const Game& u, const Game& v, double alpha);

// Seeded random games with payoffs uniform in [-2, 2].
Game RandomGame(std::uint64_t seed, int min_players = 2, int max_players = 3,
                int min_actions = 2, int max_actions = 4);

struct SuiteOptions {
  int corpus_size = 20;
  std::uint64_t seed = 1;
  // Residual tolerance for LQRE membership, regret tolerance for Nash.
  double tol = 1e-8;
  // Probability tolerance for the monotonicity, neutrality and interiority
  // checks.
  double prob_tol = 1e-9;
};

// Suites: bracketing, monotonicity, anonymity, scale, strategic, bnb, all.
std::vector<AxiomReport> RunAxiomSuite(const std::string& suite, const ConceptSpec& spec,
                                       const SuiteOptions& options = {});

std::vector<std::string> AxiomSuiteNames();

}  // namespace sre

#endif  // SRE_AXIOMS_H_
