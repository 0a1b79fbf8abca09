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

#ifndef SRE_GAME_H_
#define SRE_GAME_H_

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sre/lottery.h"

namespace sre {

using ActionLabels = std::vector<std::vector<std::string>>;

// Finite normal-form game with a dense payoff tensor. Profiles are numbered
// lexicographically with the last player's action varying fastest; the
// payoff of player i at profile k is payoffs()[k * num_players() + i].
class Game {
 public:
  Game(std::vector<int> action_counts, std::vector<double> payoffs,
       ActionLabels labels = {});

  // Builds the tensor by calling fn(actions, player) for every entry.
  static Game FromFunction(
      std::vector<int> action_counts,
      const std::function<double(std::span<const int>, int)>& fn,
      ActionLabels labels = {});

  int num_players() const { return static_cast<int>(action_counts_.size()); }
  int num_actions(int player) const { return action_counts_.at(player); }
  const std::vector<int>& action_counts() const { return action_counts_; }
  std::size_t num_profiles() const { return num_profiles_; }
  std::size_t stride(int player) const { return strides_[player]; }

  const std::vector<double>& payoffs() const { return payoffs_; }
  const ActionLabels& labels() const { return labels_; }
  bool has_labels() const { return !labels_.empty(); }

  double payoff(std::size_t profile, int player) const {
    return payoffs_[profile * action_counts_.size() + player];
  }
  double payoff(std::span<const int> actions, int player) const {
    return payoff(ProfileIndex(actions), player);
  }

  std::size_t ProfileIndex(std::span<const int> actions) const;
  std::vector<int> ProfileActions(std::size_t index) const;
  int ActionOf(std::size_t profile, int player) const {
    return static_cast<int>((profile / strides_[player]) % action_counts_[player]);
  }

  double MinPayoff() const;
  double MaxPayoff() const;

  // Exact equality of shapes and payoffs; labels are ignored.
  bool SameAs(const Game& other) const;

 private:
  std::vector<int> action_counts_;
  std::vector<std::size_t> strides_;
  std::size_t num_profiles_ = 0;
  std::vector<double> payoffs_;
  ActionLabels labels_;
};

// One probability vector per player.
class MixedProfile {
 public:
  explicit MixedProfile(std::vector<std::vector<double>> distributions);

  static MixedProfile Uniform(std::span<const int> action_counts);
  static MixedProfile Uniform(const Game& game) {
    return Uniform(game.action_counts());
  }
  static MixedProfile Pure(std::span<const int> action_counts,
                           std::span<const int> actions);

  int num_players() const { return static_cast<int>(dists_.size()); }
  const std::vector<double>& operator[](int player) const { return dists_[player]; }
  const std::vector<std::vector<double>>& distributions() const { return dists_; }

  bool ConformsTo(const Game& game) const;
  void CheckConforms(const Game& game) const;
  bool IsTotallyMixed(double tol = 0.0) const;

  // Largest absolute coordinate difference.
  double Distance(const MixedProfile& other) const;

  std::string DebugString() const;

 private:
  std::vector<std::vector<double>> dists_;
};

// Bijection on players; new player i is old player mapping()[i].
class PlayerPermutation {
 public:
  explicit PlayerPermutation(std::vector<int> mapping);
  static PlayerPermutation Identity(int n);

  int size() const { return static_cast<int>(mapping_.size()); }
  int operator()(int i) const { return mapping_[i]; }
  const std::vector<int>& mapping() const { return mapping_; }
  PlayerPermutation Inverse() const;

 private:
  std::vector<int> mapping_;
};

// Player i picks an action in each component and earns the sum. The
// composite action of player i is a_i * |B_i| + b_i.
Game Compose(const Game& g, const Game& h);

struct Reparameterization {
  std::function<double(double)> forward;
  // When empty the inverse is found by bisection on `bracket`.
  std::function<double(double)> inverse;
  std::pair<double, double> bracket{-1e6, 1e6};
  std::string name;
};

Reparameterization IdentityReparameterization();

// w_i = phi^{-1}(phi(u_i) + phi(v_i)).
Game ComposeGeneralized(const Game& g, const Game& h, const Reparameterization& phi);

MixedProfile ProductProfile(const MixedProfile& p, const MixedProfile& q);

// Marginal of a profile of G x H on the G (first) or H (second) coordinates.
MixedProfile MarginalFirst(const MixedProfile& pq, std::span<const int> counts_g,
                           std::span<const int> counts_h);
MixedProfile MarginalSecond(const MixedProfile& pq, std::span<const int> counts_g,
                            std::span<const int> counts_h);

Game PermutePlayers(const Game& g, const PlayerPermutation& pi);
MixedProfile PermuteProfile(const MixedProfile& p, const PlayerPermutation& pi);

// Number of opponent profiles of player i and the lexicographic index of the
// opponents' part of a full profile (player i removed).
std::size_t NumOpponentProfiles(const Game& g, int player);
std::size_t OpponentIndex(const Game& g, std::span<const int> actions, int player);

// v_i(a) = u_i(a) + shifts[i][OpponentIndex(a, i)].
Game StrategicShift(const Game& g, const std::vector<std::vector<double>>& shifts);

bool IsStrategicallyEquivalent(const Game& g, const Game& h, double tol = 1e-12);

Game ScaleGame(const Game& g, double alpha);

// maps[i][a] is the image in H of action a of player i in the blow-up.
using BlowUpMaps = std::vector<std::vector<int>>;

Game BlowUp(const Game& h, const BlowUpMaps& maps);
MixedProfile PushProfile(const MixedProfile& p, const BlowUpMaps& maps,
                         std::span<const int> target_counts);

// Payoff lottery of player i playing `action` against p_{-i}.
Lottery ActionLottery(const Game& g, int player, int action, const MixedProfile& p);

double ExpectedPayoff(const Game& g, int player, int action, const MixedProfile& p);

// Calls fn(profile_index, weight) for every opponent profile of `player`
// with `action` fixed, where weight is the product of opponents'
// probabilities. Zero-weight profiles are included.
void ForEachOpponentProfile(const Game& g, int player, int action,
                            const std::vector<std::vector<double>>& p,
                            const std::function<void(std::size_t, double)>& fn);

}  // namespace sre

#endif  // SRE_GAME_H_
