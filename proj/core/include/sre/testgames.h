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

#ifndef SRE_TESTGAMES_H_
#define SRE_TESTGAMES_H_

#include <span>
#include <string>
#include <vector>

#include "sre/game.h"
#include "sre/lottery.h"
#include "sre/solvers.h"

namespace sre {

// Player 1 chooses h (payoff x) or l (payoff 0); everyone else is a
// one-action dummy with payoff 0.
Game MakeTestGameGx(double x, int n_players = 2);

// Matching pennies: player 1 wins `win` on a match, player 2 on a mismatch.
Game MakeMatchingPennies(double win = 1.0);

// Player 1 picks a choice in {x, r} and a permutation pi of the m cards;
// player 2 picks a card c. u_1 = x[pi(c)] or r + eps x[pi(c)], u_2 = -x[pi(c)].
// Player 1's action index is choice * m! + (rank of pi in lexicographic
// order), choice 0 being the lottery side.
Game MakeCardGame(double r, std::span<const double> x, double eps, int n_players = 2);

struct CardAction {
  bool lottery_side;
  std::vector<int> permutation;
};
CardAction DecodeCardAction(int index, int m);
std::vector<std::vector<int>> Permutations(int m);

// Player 1 picks b_r (payoff r) or b_x (payoff x[c] against card c); player 2
// has m cards and earns 0, as does everyone else.
Game MakeSureThingGame(double r, std::span<const double> x, int n_players = 2);

// ((2,0),(0,1);(-1,1),(1,0)).
Game MakeVmp();
// ((1+1/eps,0),(0,1);(-1/eps,1),(1,0)).
Game MakeNoExtremalEqGame(double eps);
// Player 1 has a, b and an extra action c with payoffs (alpha,beta) against
// a_2 and (gamma,delta) against b_2.
Game MakeIiaGame(double alpha, double beta, double gamma, double delta);
// Player 1 payoffs (0,2;1,1) and (0,1;1,0); player 2 earns 0.
Game MakeRiskPairLeft();
Game MakeRiskPairRight();
// ((1.5,0),(0,1);(0,1),(1,0)) and its designated profile.
Game MakeOrdinalPennies();
MixedProfile OrdinalPenniesProfile();

struct AllaisLotteries {
  Lottery a, b, c, d;
};
AllaisLotteries MakeAllaisLotteries();

struct Table2Lotteries {
  Lottery a, b, c;
};
Table2Lotteries MakeTable2Lotteries();

// Bisects r in the sure-thing game until player 1 is indifferent between
// the sure payoff and the lottery. spec must be an LQRE concept.
double ElicitQre(const ConceptSpec& spec, std::span<const double> x, int bisection_iters = 60);

struct ElicitationEstimate {
  double epsilon;
  double r_star;
  int iterations;
};

struct ElicitationResult {
  std::vector<ElicitationEstimate> estimates;
  double extrapolated = 0.0;
  bool converged = false;
  bool inconclusive = false;
  std::string message;
};

struct FosdElicitationOptions {
  std::vector<double> eps_schedule{1e-1, 1e-2, 1e-3};
  int bisection_iters = 40;
  // Support enumeration is off by default: the logit-path candidates usually
  // decide the card games and enumeration grows factorially. Probes where the
  // path finds nothing are retried with enumeration.
  bool enumerate_supports = false;
};

// Bisects r in the card game for each epsilon: below the threshold some found
// equilibrium plays the lottery side. spec must be a Nash_Phi concept.
ElicitationResult ElicitFosd(const ConceptSpec& spec, std::span<const double> x,
                             const FosdElicitationOptions& options = {});

// Smallest m <= max_m such that every weight of X is a multiple of 1/m, and
// the corresponding equally likely outcome vector.
std::vector<double> UniformRepresentation(const Lottery& x, int max_m = 120);

struct FixtureInfo {
  std::string id;
  std::string kind;  // "game" or "lottery"
  std::string description;
};

std::vector<FixtureInfo> ListFixtures();

// Ids such as "g_x:1", "card:r=.6,x=0,1,eps=.1", "vmp", "no_extremal:eps=.25",
// "mp", "sure_thing:r=.5,x=0,1", "iia:alpha=0,beta=1,gamma=0,delta=0",
// "risk_pair_left", "risk_pair_right", "ordinal_pennies".
Game ResolveGameFixture(const std::string& id);
// "allais:a".."allais:d", "table2:a".."table2:c".
Lottery ResolveLotteryFixture(const std::string& id);
bool IsGameFixtureId(const std::string& id);
bool IsLotteryFixtureId(const std::string& id);

}  // namespace sre

#endif  // SRE_TESTGAMES_H_
