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

#include "sre/game.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "sre/errors.h"

namespace sre {
namespace {

constexpr std::size_t kMaxEntries = std::size_t{1} << 28;

void CheckPlayer(const Game& g, int player) {
  if (player < 0 || player >= g.num_players()) {
    throw InvalidArgument("player index " + std::to_string(player) + " out of range");
  }
}

void CheckAction(const Game& g, int player, int action) {
  CheckPlayer(g, player);
  if (action < 0 || action >= g.num_actions(player)) {
    throw InvalidArgument("action index " + std::to_string(action) +
                          " out of range for player " + std::to_string(player));
  }
}

double Bisect(const std::function<double(double)>& f, double target, double lo,
              double hi) {
  double flo = f(lo);
  double fhi = f(hi);
  if (!(flo <= target && target <= fhi)) {
    throw InvalidArgument("reparameterization bracket does not contain the preimage");
  }
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

Game::Game(std::vector<int> action_counts, std::vector<double> payoffs,
           ActionLabels labels)
    : action_counts_(std::move(action_counts)),
      payoffs_(std::move(payoffs)),
      labels_(std::move(labels)) {
  if (action_counts_.empty()) throw InvalidArgument("game needs at least one player");
  const int n = num_players();
  strides_.assign(n, 1);
  num_profiles_ = 1;
  for (int i = n - 1; i >= 0; --i) {
    if (action_counts_[i] < 1) {
      throw InvalidArgument("every player needs at least one action");
    }
    strides_[i] = num_profiles_;
    num_profiles_ *= static_cast<std::size_t>(action_counts_[i]);
    if (num_profiles_ * n > kMaxEntries) throw InvalidArgument("game too large");
  }
  if (payoffs_.size() != num_profiles_ * n) {
    throw InvalidArgument("payoff tensor has " + std::to_string(payoffs_.size()) +
                          " entries, expected " + std::to_string(num_profiles_ * n));
  }
  for (double v : payoffs_) {
    if (!std::isfinite(v)) throw InvalidArgument("payoffs must be finite");
  }
  if (!labels_.empty()) {
    if (static_cast<int>(labels_.size()) != n) {
      throw InvalidArgument("labels must list every player");
    }
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(labels_[i].size()) != action_counts_[i]) {
        throw InvalidArgument("labels for player " + std::to_string(i) +
                              " do not match the action count");
      }
    }
  }
}

Game Game::FromFunction(std::vector<int> action_counts,
                        const std::function<double(std::span<const int>, int)>& fn,
                        ActionLabels labels) {
  std::size_t profiles = 1;
  for (int c : action_counts) {
    if (c < 1) throw InvalidArgument("every player needs at least one action");
    profiles *= static_cast<std::size_t>(c);
  }
  const int n = static_cast<int>(action_counts.size());
  std::vector<double> payoffs(profiles * n);
  std::vector<int> actions(n, 0);
  for (std::size_t k = 0; k < profiles; ++k) {
    for (int i = 0; i < n; ++i) payoffs[k * n + i] = fn(actions, i);
    for (int i = n - 1; i >= 0; --i) {
      if (++actions[i] < action_counts[i]) break;
      actions[i] = 0;
    }
  }
  return Game(std::move(action_counts), std::move(payoffs), std::move(labels));
}

std::size_t Game::ProfileIndex(std::span<const int> actions) const {
  if (static_cast<int>(actions.size()) != num_players()) {
    throw InvalidArgument("action profile has the wrong arity");
  }
  std::size_t k = 0;
  for (int i = 0; i < num_players(); ++i) {
    if (actions[i] < 0 || actions[i] >= action_counts_[i]) {
      throw InvalidArgument("action index out of range");
    }
    k += strides_[i] * static_cast<std::size_t>(actions[i]);
  }
  return k;
}

std::vector<int> Game::ProfileActions(std::size_t index) const {
  if (index >= num_profiles_) throw InvalidArgument("profile index out of range");
  std::vector<int> a(num_players());
  for (int i = 0; i < num_players(); ++i) a[i] = ActionOf(index, i);
  return a;
}

double Game::MinPayoff() const {
  return *std::min_element(payoffs_.begin(), payoffs_.end());
}

double Game::MaxPayoff() const {
  return *std::max_element(payoffs_.begin(), payoffs_.end());
}

bool Game::SameAs(const Game& other) const {
  return action_counts_ == other.action_counts_ && payoffs_ == other.payoffs_;
}

MixedProfile::MixedProfile(std::vector<std::vector<double>> distributions)
    : dists_(std::move(distributions)) {
  if (dists_.empty()) throw InvalidArgument("profile needs at least one player");
  for (std::size_t i = 0; i < dists_.size(); ++i) {
    if (dists_[i].empty()) throw InvalidArgument("empty strategy in profile");
    double total = 0.0;
    for (double v : dists_[i]) {
      if (!std::isfinite(v) || v < 0.0) {
        throw InvalidArgument("strategy of player " + std::to_string(i) +
                              " has a negative or non-finite entry");
      }
      total += v;
    }
    if (std::fabs(total - 1.0) > 1e-12) {
      std::ostringstream os;
      os.precision(17);
      os << "strategy of player " << i << " sums to " << total;
      throw InvalidArgument(os.str());
    }
  }
}

MixedProfile MixedProfile::Uniform(std::span<const int> action_counts) {
  std::vector<std::vector<double>> d;
  for (int c : action_counts) d.emplace_back(c, 1.0 / c);
  return MixedProfile(std::move(d));
}

MixedProfile MixedProfile::Pure(std::span<const int> action_counts,
                                std::span<const int> actions) {
  if (action_counts.size() != actions.size()) {
    throw InvalidArgument("pure profile arity mismatch");
  }
  std::vector<std::vector<double>> d;
  for (std::size_t i = 0; i < actions.size(); ++i) {
    if (actions[i] < 0 || actions[i] >= action_counts[i]) {
      throw InvalidArgument("pure profile action out of range");
    }
    d.emplace_back(action_counts[i], 0.0);
    d.back()[actions[i]] = 1.0;
  }
  return MixedProfile(std::move(d));
}

bool MixedProfile::ConformsTo(const Game& game) const {
  if (num_players() != game.num_players()) return false;
  for (int i = 0; i < num_players(); ++i) {
    if (static_cast<int>(dists_[i].size()) != game.num_actions(i)) return false;
  }
  return true;
}

void MixedProfile::CheckConforms(const Game& game) const {
  if (!ConformsTo(game)) throw InvalidArgument("profile shape does not match the game");
}

bool MixedProfile::IsTotallyMixed(double tol) const {
  for (const auto& d : dists_) {
    for (double v : d) {
      if (v <= tol) return false;
    }
  }
  return true;
}

double MixedProfile::Distance(const MixedProfile& other) const {
  if (num_players() != other.num_players()) {
    return std::numeric_limits<double>::infinity();
  }
  double d = 0.0;
  for (int i = 0; i < num_players(); ++i) {
    if (dists_[i].size() != other.dists_[i].size()) {
      return std::numeric_limits<double>::infinity();
    }
    for (std::size_t a = 0; a < dists_[i].size(); ++a) {
      d = std::max(d, std::fabs(dists_[i][a] - other.dists_[i][a]));
    }
  }
  return d;
}

std::string MixedProfile::DebugString() const {
  std::ostringstream os;
  os.precision(10);
  os << "(";
  for (int i = 0; i < num_players(); ++i) {
    if (i) os << "; ";
    os << "(";
    for (std::size_t a = 0; a < dists_[i].size(); ++a) {
      if (a) os << ", ";
      os << dists_[i][a];
    }
    os << ")";
  }
  os << ")";
  return os.str();
}

PlayerPermutation::PlayerPermutation(std::vector<int> mapping)
    : mapping_(std::move(mapping)) {
  std::vector<bool> seen(mapping_.size(), false);
  for (int v : mapping_) {
    if (v < 0 || v >= static_cast<int>(mapping_.size()) || seen[v]) {
      throw InvalidArgument("player permutation is not a bijection");
    }
    seen[v] = true;
  }
}

PlayerPermutation PlayerPermutation::Identity(int n) {
  std::vector<int> m(n);
  std::iota(m.begin(), m.end(), 0);
  return PlayerPermutation(std::move(m));
}

PlayerPermutation PlayerPermutation::Inverse() const {
  std::vector<int> inv(mapping_.size());
  for (std::size_t i = 0; i < mapping_.size(); ++i) inv[mapping_[i]] = static_cast<int>(i);
  return PlayerPermutation(std::move(inv));
}

namespace {

Game ComposeWith(const Game& g, const Game& h,
                 const std::function<double(double, double)>& combine) {
  if (g.num_players() != h.num_players()) {
    throw InvalidArgument("composition needs equal player counts");
  }
  const int n = g.num_players();
  std::vector<int> counts(n);
  for (int i = 0; i < n; ++i) counts[i] = g.num_actions(i) * h.num_actions(i);
  std::vector<int> a(n), b(n);
  return Game::FromFunction(counts, [&](std::span<const int> c, int player) {
    if (player == 0) {
      for (int i = 0; i < n; ++i) {
        a[i] = c[i] / h.num_actions(i);
        b[i] = c[i] % h.num_actions(i);
      }
    }
    return combine(g.payoff(a, player), h.payoff(b, player));
  });
}

}  // namespace

Game Compose(const Game& g, const Game& h) {
  return ComposeWith(g, h, [](double u, double v) { return u + v; });
}

Reparameterization IdentityReparameterization() {
  Reparameterization r;
  r.forward = [](double x) { return x; };
  r.inverse = [](double y) { return y; };
  r.name = "identity";
  return r;
}

Game ComposeGeneralized(const Game& g, const Game& h, const Reparameterization& phi) {
  if (!phi.forward) throw InvalidArgument("reparameterization needs a forward map");
  double lo = std::min(g.MinPayoff(), h.MinPayoff());
  double hi = std::max(g.MaxPayoff(), h.MaxPayoff());
  constexpr int kProbes = 1025;
  double prev = phi.forward(lo);
  if (!std::isfinite(prev)) throw InvalidArgument("reparameterization is not finite");
  for (int k = 1; k < kProbes && hi > lo; ++k) {
    double x = lo + (hi - lo) * k / (kProbes - 1);
    double y = phi.forward(x);
    if (!std::isfinite(y) || !(y > prev)) {
      throw InvalidArgument("reparameterization is not strictly increasing on the payoff range");
    }
    prev = y;
  }
  auto inverse = [&phi](double y) {
    if (phi.inverse) return phi.inverse(y);
    return Bisect(phi.forward, y, phi.bracket.first, phi.bracket.second);
  };
  return ComposeWith(g, h, [&](double u, double v) {
    double w = inverse(phi.forward(u) + phi.forward(v));
    if (!std::isfinite(w)) throw InvalidArgument("reparameterized payoff is not finite");
    return w;
  });
}

MixedProfile ProductProfile(const MixedProfile& p, const MixedProfile& q) {
  if (p.num_players() != q.num_players()) {
    throw InvalidArgument("product profile needs equal player counts");
  }
  std::vector<std::vector<double>> d(p.num_players());
  for (int i = 0; i < p.num_players(); ++i) {
    for (double x : p[i]) {
      for (double y : q[i]) d[i].push_back(x * y);
    }
  }
  return MixedProfile(std::move(d));
}

MixedProfile MarginalFirst(const MixedProfile& pq, std::span<const int> counts_g,
                           std::span<const int> counts_h) {
  std::vector<std::vector<double>> d(pq.num_players());
  for (int i = 0; i < pq.num_players(); ++i) {
    if (static_cast<int>(pq[i].size()) != counts_g[i] * counts_h[i]) {
      throw InvalidArgument("marginal shape mismatch");
    }
    d[i].assign(counts_g[i], 0.0);
    for (int c = 0; c < counts_g[i] * counts_h[i]; ++c) d[i][c / counts_h[i]] += pq[i][c];
  }
  return MixedProfile(std::move(d));
}

MixedProfile MarginalSecond(const MixedProfile& pq, std::span<const int> counts_g,
                            std::span<const int> counts_h) {
  std::vector<std::vector<double>> d(pq.num_players());
  for (int i = 0; i < pq.num_players(); ++i) {
    if (static_cast<int>(pq[i].size()) != counts_g[i] * counts_h[i]) {
      throw InvalidArgument("marginal shape mismatch");
    }
    d[i].assign(counts_h[i], 0.0);
    for (int c = 0; c < counts_g[i] * counts_h[i]; ++c) d[i][c % counts_h[i]] += pq[i][c];
  }
  return MixedProfile(std::move(d));
}

Game PermutePlayers(const Game& g, const PlayerPermutation& pi) {
  const int n = g.num_players();
  if (pi.size() != n) throw InvalidArgument("permutation arity mismatch");
  std::vector<int> counts(n);
  for (int i = 0; i < n; ++i) counts[i] = g.num_actions(pi(i));
  ActionLabels labels;
  if (g.has_labels()) {
    for (int i = 0; i < n; ++i) labels.push_back(g.labels()[pi(i)]);
  }
  std::vector<int> a(n);
  return Game::FromFunction(
      counts,
      [&](std::span<const int> b, int player) {
        for (int i = 0; i < n; ++i) a[pi(i)] = b[i];
        return g.payoff(a, pi(player));
      },
      std::move(labels));
}

MixedProfile PermuteProfile(const MixedProfile& p, const PlayerPermutation& pi) {
  if (pi.size() != p.num_players()) throw InvalidArgument("permutation arity mismatch");
  std::vector<std::vector<double>> d(p.num_players());
  for (int i = 0; i < p.num_players(); ++i) d[i] = p[pi(i)];
  return MixedProfile(std::move(d));
}

std::size_t NumOpponentProfiles(const Game& g, int player) {
  CheckPlayer(g, player);
  return g.num_profiles() / static_cast<std::size_t>(g.num_actions(player));
}

std::size_t OpponentIndex(const Game& g, std::span<const int> actions, int player) {
  std::size_t k = 0;
  for (int j = 0; j < g.num_players(); ++j) {
    if (j == player) continue;
    k = k * static_cast<std::size_t>(g.num_actions(j)) + static_cast<std::size_t>(actions[j]);
  }
  return k;
}

Game StrategicShift(const Game& g, const std::vector<std::vector<double>>& shifts) {
  const int n = g.num_players();
  if (static_cast<int>(shifts.size()) != n) {
    throw InvalidArgument("strategic shift needs one table per player");
  }
  for (int i = 0; i < n; ++i) {
    if (shifts[i].size() != NumOpponentProfiles(g, i)) {
      throw InvalidArgument("strategic shift table of player " + std::to_string(i) +
                            " has the wrong size");
    }
    for (double v : shifts[i]) {
      if (!std::isfinite(v)) throw InvalidArgument("strategic shift must be finite");
    }
  }
  return Game::FromFunction(
      g.action_counts(),
      [&](std::span<const int> a, int player) {
        return g.payoff(a, player) + shifts[player][OpponentIndex(g, a, player)];
      },
      g.labels());
}

bool IsStrategicallyEquivalent(const Game& g, const Game& h, double tol) {
  if (g.action_counts() != h.action_counts()) {
    throw InvalidArgument("strategic equivalence needs equal action sets");
  }
  const int n = g.num_players();
  for (int i = 0; i < n; ++i) {
    const std::size_t stride = g.stride(i);
    for (std::size_t k = 0; k < g.num_profiles(); ++k) {
      if (g.ActionOf(k, i) != 0) continue;
      // k is the profile with a_i = 0; compare every a_i against it.
      for (int a = 1; a < g.num_actions(i); ++a) {
        std::size_t ka = k + stride * static_cast<std::size_t>(a);
        double du = g.payoff(ka, i) - g.payoff(k, i);
        double dv = h.payoff(ka, i) - h.payoff(k, i);
        if (std::fabs(du - dv) > tol) return false;
      }
    }
  }
  return true;
}

Game ScaleGame(const Game& g, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw InvalidArgument("scale factor must be positive");
  }
  std::vector<double> payoffs = g.payoffs();
  for (double& v : payoffs) v *= alpha;
  return Game(g.action_counts(), std::move(payoffs), g.labels());
}

Game BlowUp(const Game& h, const BlowUpMaps& maps) {
  const int n = h.num_players();
  if (static_cast<int>(maps.size()) != n) {
    throw InvalidArgument("blow-up needs one map per player");
  }
  std::vector<int> counts(n);
  for (int i = 0; i < n; ++i) {
    if (maps[i].empty()) throw InvalidArgument("blow-up map must be nonempty");
    std::vector<bool> hit(h.num_actions(i), false);
    for (int b : maps[i]) {
      if (b < 0 || b >= h.num_actions(i)) {
        throw InvalidArgument("blow-up map value out of range");
      }
      hit[b] = true;
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
      throw InvalidArgument("blow-up map of player " + std::to_string(i) +
                            " is not surjective");
    }
    counts[i] = static_cast<int>(maps[i].size());
  }
  std::vector<int> b(n);
  return Game::FromFunction(counts, [&](std::span<const int> a, int player) {
    for (int i = 0; i < n; ++i) b[i] = maps[i][a[i]];
    return h.payoff(b, player);
  });
}

MixedProfile PushProfile(const MixedProfile& p, const BlowUpMaps& maps,
                         std::span<const int> target_counts) {
  if (p.num_players() != static_cast<int>(maps.size()) ||
      maps.size() != target_counts.size()) {
    throw InvalidArgument("push profile arity mismatch");
  }
  std::vector<std::vector<double>> d(p.num_players());
  for (int i = 0; i < p.num_players(); ++i) {
    if (p[i].size() != maps[i].size()) throw InvalidArgument("push profile shape mismatch");
    d[i].assign(target_counts[i], 0.0);
    for (std::size_t a = 0; a < maps[i].size(); ++a) {
      if (maps[i][a] < 0 || maps[i][a] >= target_counts[i]) {
        throw InvalidArgument("blow-up map value out of range");
      }
      d[i][maps[i][a]] += p[i][a];
    }
  }
  return MixedProfile(std::move(d));
}

void ForEachOpponentProfile(const Game& g, int player, int action,
                            const std::vector<std::vector<double>>& p,
                            const std::function<void(std::size_t, double)>& fn) {
  const int n = g.num_players();
  std::vector<int> a(n, 0);
  a[player] = action;
  const std::size_t count = NumOpponentProfiles(g, player);
  for (std::size_t k = 0; k < count; ++k) {
    double w = 1.0;
    std::size_t index = 0;
    for (int j = 0; j < n; ++j) {
      index += g.stride(j) * static_cast<std::size_t>(a[j]);
      if (j != player) w *= p[j][a[j]];
    }
    fn(index, w);
    for (int j = n - 1; j >= 0; --j) {
      if (j == player) continue;
      if (++a[j] < g.num_actions(j)) break;
      a[j] = 0;
    }
  }
}

Lottery ActionLottery(const Game& g, int player, int action, const MixedProfile& p) {
  CheckAction(g, player, action);
  p.CheckConforms(g);
  std::vector<Atom> atoms;
  ForEachOpponentProfile(g, player, action, p.distributions(),
                         [&](std::size_t k, double w) {
                           if (w > 0.0) atoms.push_back({g.payoff(k, player), w});
                         });
  return Lottery(std::move(atoms));
}

double ExpectedPayoff(const Game& g, int player, int action, const MixedProfile& p) {
  CheckAction(g, player, action);
  p.CheckConforms(g);
  double e = 0.0;
  ForEachOpponentProfile(g, player, action, p.distributions(),
                         [&](std::size_t k, double w) { e += w * g.payoff(k, player); });
  return e;
}

}  // namespace sre
