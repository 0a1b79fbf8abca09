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

#include "sre/testgames.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "sre/errors.h"

namespace sre {
namespace {

std::vector<int> WithDummies(std::vector<int> counts, int n_players) {
  while (static_cast<int>(counts.size()) < n_players) counts.push_back(1);
  return counts;
}

ActionLabels DummyLabels(ActionLabels labels, int n_players) {
  while (static_cast<int>(labels.size()) < n_players) labels.push_back({"-"});
  return labels;
}

void CheckPlayers(int n_players) {
  if (n_players < 2) throw InvalidArgument("test games need at least two players");
}

Game Bimatrix(const std::vector<std::vector<std::pair<double, double>>>& cells,
              ActionLabels labels = {}) {
  const int rows = static_cast<int>(cells.size());
  const int cols = static_cast<int>(cells[0].size());
  return Game::FromFunction(
      {rows, cols},
      [&](std::span<const int> a, int player) {
        const auto& c = cells[a[0]][a[1]];
        return player == 0 ? c.first : c.second;
      },
      std::move(labels));
}

std::string PermLabel(const std::vector<int>& perm) {
  std::string s;
  for (int v : perm) s += std::to_string(v);
  return s;
}

struct ParsedId {
  std::string name;
  std::map<std::string, std::vector<double>> params;
};

ParsedId ParseId(const std::string& id) {
  ParsedId out;
  const auto colon = id.find(':');
  out.name = id.substr(0, colon);
  if (colon == std::string::npos) return out;
  std::string rest = id.substr(colon + 1);
  std::string key;
  std::stringstream ss(rest);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) throw InvalidArgument("empty parameter in fixture id '" + id + "'");
    const auto eq = token.find('=');
    std::string value = token;
    if (eq != std::string::npos) {
      key = token.substr(0, eq);
      value = token.substr(eq + 1);
      if (out.params.count(key)) {
        throw InvalidArgument("repeated parameter '" + key + "' in fixture id");
      }
      out.params[key];
    } else if (key.empty()) {
      // "g_x:1" style: a single positional value.
      key = "_";
      out.params[key];
    }
    try {
      std::size_t used = 0;
      double v = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument("trailing");
      out.params[key].push_back(v);
    } catch (const std::exception&) {
      throw InvalidArgument("bad number '" + value + "' in fixture id '" + id + "'");
    }
  }
  return out;
}

double Scalar(const ParsedId& p, const std::string& key, std::optional<double> def = {}) {
  auto it = p.params.find(key);
  if (it == p.params.end()) {
    if (def) return *def;
    throw InvalidArgument("fixture '" + p.name + "' needs parameter '" + key + "'");
  }
  if (it->second.size() != 1) {
    throw InvalidArgument("parameter '" + key + "' takes one value");
  }
  return it->second[0];
}

std::vector<double> List(const ParsedId& p, const std::string& key) {
  auto it = p.params.find(key);
  if (it == p.params.end() || it->second.empty()) {
    throw InvalidArgument("fixture '" + p.name + "' needs parameter '" + key + "'");
  }
  return it->second;
}

int Players(const ParsedId& p) {
  double n = Scalar(p, "n", 2.0);
  if (n != std::floor(n)) throw InvalidArgument("player count must be an integer");
  return static_cast<int>(n);
}

}  // namespace

Game MakeTestGameGx(double x, int n_players) {
  CheckPlayers(n_players);
  ActionLabels labels = DummyLabels({{"h", "l"}}, n_players);
  return Game::FromFunction(
      WithDummies({2}, n_players),
      [x](std::span<const int> a, int player) {
        return player == 0 && a[0] == 0 ? x : 0.0;
      },
      std::move(labels));
}

Game MakeMatchingPennies(double win) {
  return Bimatrix({{{win, -win}, {-win, win}}, {{-win, win}, {win, -win}}},
                  {{"h", "t"}, {"h", "t"}});
}

std::vector<std::vector<int>> Permutations(int m) {
  if (m < 1) throw InvalidArgument("permutations need m >= 1");
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

CardAction DecodeCardAction(int index, int m) {
  auto perms = Permutations(m);
  const int count = static_cast<int>(perms.size());
  if (index < 0 || index >= 2 * count) throw InvalidArgument("card action out of range");
  return {index < count, perms[index % count]};
}

Game MakeCardGame(double r, std::span<const double> x, double eps, int n_players) {
  CheckPlayers(n_players);
  const int m = static_cast<int>(x.size());
  if (m < 2 || m > 5) throw InvalidArgument("card game needs 2 <= m <= 5 cards");
  if (!(eps > 0.0)) throw InvalidArgument("card game needs eps > 0");
  if (std::all_of(x.begin(), x.end(), [&](double v) { return v == x[0]; })) {
    throw InvalidArgument("card game needs a nonconstant vector x");
  }
  const auto perms = Permutations(m);
  const int count = static_cast<int>(perms.size());
  std::vector<double> xs(x.begin(), x.end());
  ActionLabels labels(2);
  for (int side = 0; side < 2; ++side) {
    for (const auto& p : perms) labels[0].push_back((side == 0 ? "x:" : "r:") + PermLabel(p));
  }
  for (int c = 0; c < m; ++c) labels[1].push_back("card" + std::to_string(c));
  labels = DummyLabels(std::move(labels), n_players);
  return Game::FromFunction(
      WithDummies({2 * count, m}, n_players),
      [&](std::span<const int> a, int player) {
        const auto& pi = perms[a[0] % count];
        const double card = xs[pi[a[1]]];
        const bool lottery_side = a[0] < count;
        if (player == 0) return lottery_side ? card : r + eps * card;
        if (player == 1) return -card;
        return 0.0;
      },
      std::move(labels));
}

Game MakeSureThingGame(double r, std::span<const double> x, int n_players) {
  CheckPlayers(n_players);
  const int m = static_cast<int>(x.size());
  if (m < 1) throw InvalidArgument("sure-thing game needs m >= 1");
  std::vector<double> xs(x.begin(), x.end());
  ActionLabels labels(2);
  labels[0] = {"b_r", "b_x"};
  for (int c = 0; c < m; ++c) labels[1].push_back("card" + std::to_string(c));
  labels = DummyLabels(std::move(labels), n_players);
  return Game::FromFunction(
      WithDummies({2, m}, n_players),
      [&](std::span<const int> a, int player) {
        if (player != 0) return 0.0;
        return a[0] == 0 ? r : xs[a[1]];
      },
      std::move(labels));
}

Game MakeVmp() {
  return Bimatrix({{{2, 0}, {0, 1}}, {{-1, 1}, {1, 0}}}, {{"a1", "b1"}, {"a2", "b2"}});
}

Game MakeNoExtremalEqGame(double eps) {
  if (!(eps > 0.0)) throw InvalidArgument("counterexample game needs eps > 0");
  return Bimatrix({{{1.0 + 1.0 / eps, 0}, {0, 1}}, {{-1.0 / eps, 1}, {1, 0}}},
                  {{"a1", "b1"}, {"a2", "b2"}});
}

Game MakeIiaGame(double alpha, double beta, double gamma, double delta) {
  return Bimatrix({{{0, 0}, {2, 0}}, {{1, 0}, {1, 0}}, {{alpha, beta}, {gamma, delta}}},
                  {{"a1", "b1", "c1"}, {"a2", "b2"}});
}

Game MakeRiskPairLeft() {
  return Bimatrix({{{0, 0}, {2, 0}}, {{1, 0}, {1, 0}}}, {{"a1", "b1"}, {"a2", "b2"}});
}

Game MakeRiskPairRight() {
  return Bimatrix({{{0, 0}, {1, 0}}, {{1, 0}, {0, 0}}}, {{"a1", "b1"}, {"a2", "b2"}});
}

Game MakeOrdinalPennies() {
  return Bimatrix({{{1.5, 0}, {0, 1}}, {{0, 1}, {1, 0}}}, {{"a1", "b1"}, {"a2", "b2"}});
}

MixedProfile OrdinalPenniesProfile() {
  return MixedProfile({{0.5, 0.5}, {1.0 / 3.0, 2.0 / 3.0}});
}

AllaisLotteries MakeAllaisLotteries() {
  const double w[3] = {0.89, 0.01, 0.10};
  auto row = [&](double x0, double x1, double x2) {
    return Lottery({{x0, w[0]}, {x1, w[1]}, {x2, w[2]}});
  };
  return {row(10, 10, 10), row(10, 0, 11), row(0, 10, 10), row(0, 0, 11)};
}

Table2Lotteries MakeTable2Lotteries() {
  const double w = 1.0 / 3.0;
  auto row = [&](double x0, double x1, double x2) {
    return Lottery({{x0, w}, {x1, w}, {x2, w}});
  };
  return {row(10, 10, 10), row(5, 5, 18), row(0, 10, 20)};
}

double ElicitQre(const ConceptSpec& spec, std::span<const double> x, int bisection_iters) {
  if (spec.kind != ConceptKind::kLqre) throw InvalidArgument("ElicitQre needs an LQRE concept");
  if (!(spec.lambda > 0.0)) throw InvalidArgument("ElicitQre needs lambda > 0");
  if (x.empty()) throw InvalidArgument("ElicitQre needs a nonempty vector");
  if (bisection_iters < 1) throw InvalidArgument("ElicitQre needs at least one iteration");
  auto excess = [&](double r) {
    Game h = MakeSureThingGame(r, x);
    SolveResult res = SolveLqre(h, spec.phi, spec.lambda, spec.solver);
    if (res.status != SolveStatus::kConverged) {
      throw SolverFailure("LQRE solve failed in the sure-thing game at r = " +
                          std::to_string(r));
    }
    return res.profiles.front()[0][1] - 0.5;
  };
  double lo = *std::min_element(x.begin(), x.end());
  double hi = *std::max_element(x.begin(), x.end());
  if (lo == hi) return lo;
  if (excess(lo) < -1e-9 || excess(hi) > 1e-9) {
    throw SolverFailure("elicitation bracket failure: lottery preference is not monotone in r");
  }
  for (int it = 0; it < bisection_iters; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (excess(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

ElicitationResult ElicitFosd(const ConceptSpec& spec, std::span<const double> x,
                             const FosdElicitationOptions& options) {
  if (spec.kind != ConceptKind::kNashPhi) {
    throw InvalidArgument("ElicitFosd needs a Nash_Phi concept");
  }
  if (spec.phi.has_extremal_atoms()) {
    throw InvalidArgument("ElicitFosd needs a statistic without atoms at -inf or +inf");
  }
  if (x.size() < 2 || x.size() > 3) throw InvalidArgument("ElicitFosd needs 2 or 3 cards");
  if (options.eps_schedule.empty()) throw InvalidArgument("empty epsilon schedule");
  for (std::size_t k = 0; k < options.eps_schedule.size(); ++k) {
    if (!(options.eps_schedule[k] > 0.0) ||
        (k > 0 && !(options.eps_schedule[k] < options.eps_schedule[k - 1]))) {
      throw InvalidArgument("epsilon schedule must be positive and decreasing");
    }
  }
  SolverConfig cfg = spec.solver;
  if (!options.enumerate_supports) cfg.max_support_profiles = 0;
  const int count = static_cast<int>(Permutations(static_cast<int>(x.size())).size());
  double norm = 0.0;
  for (double v : x) norm = std::max(norm, std::fabs(v));

  ElicitationResult result;
  for (double eps : options.eps_schedule) {
    // The threshold lies within eps * max|x| of [min x, max x].
    double lo = *std::min_element(x.begin(), x.end()) - eps * norm - 1e-9;
    double hi = *std::max_element(x.begin(), x.end()) + eps * norm + 1e-9;
    int iters = 0;
    for (; iters < options.bisection_iters; ++iters) {
      const double r = 0.5 * (lo + hi);
      Game g = MakeCardGame(r, x, eps);
      SolveResult res = SolveNashPhi(g, spec.phi, cfg);
      if (res.profiles.empty() && cfg.max_support_profiles == 0) {
        // Degenerate probes can defeat the path candidates.
        res = SolveNashPhi(g, spec.phi, spec.solver);
      }
      if (res.profiles.empty()) {
        std::ostringstream os;
        os << "no equilibrium found at eps = " << eps << ", r = " << r;
        result.inconclusive = true;
        result.message = os.str();
        break;
      }
      bool plays_lottery = false;
      for (const MixedProfile& p : res.profiles) {
        double mass = 0.0;
        for (int a = 0; a < count; ++a) mass += p[0][a];
        if (mass > cfg.support_tol) plays_lottery = true;
      }
      if (plays_lottery) {
        lo = r;
      } else {
        hi = r;
      }
    }
    if (result.inconclusive) break;
    result.estimates.push_back({eps, 0.5 * (lo + hi), iters});
  }
  if (!result.estimates.empty()) result.extrapolated = result.estimates.back().r_star;
  const std::size_t n = result.estimates.size();
  result.converged = !result.inconclusive && n >= 2 &&
                     std::fabs(result.estimates[n - 1].r_star - result.estimates[n - 2].r_star) <
                         1e-3;
  return result;
}

std::vector<double> UniformRepresentation(const Lottery& x, int max_m) {
  for (int m = 1; m <= max_m; ++m) {
    bool ok = true;
    std::vector<int> counts;
    for (const Atom& a : x.atoms()) {
      const double v = a.weight * m;
      const double r = std::round(v);
      if (std::fabs(v - r) > 1e-9 || r < 1.0) {
        ok = false;
        break;
      }
      counts.push_back(static_cast<int>(r));
    }
    if (!ok) continue;
    std::vector<double> out;
    for (std::size_t k = 0; k < counts.size(); ++k) {
      for (int c = 0; c < counts[k]; ++c) out.push_back(x.atoms()[k].outcome);
    }
    if (static_cast<int>(out.size()) == m) return out;
  }
  throw InvalidArgument("lottery weights are not multiples of 1/m for any m <= " +
                        std::to_string(max_m));
}

std::vector<FixtureInfo> ListFixtures() {
  return {
      {"g_x:1", "game", "player 1 chooses h (payoff x) or l (payoff 0); params x, n"},
      {"mp", "game", "matching pennies with +-1 payoffs"},
      {"card:r=.6,x=0,1,eps=.1", "game", "card game; params r, x (list), eps, n"},
      {"sure_thing:r=.5,x=0,1", "game", "sure thing versus lottery; params r, x (list), n"},
      {"vmp", "game", "variant of matching pennies ((2,0),(0,1);(-1,1),(1,0))"},
      {"no_extremal:eps=.25", "game", "game without extremal statistic equilibria"},
      {"iia:alpha=0,beta=1,gamma=0,delta=0", "game", "irrelevant-alternatives counterexample"},
      {"risk_pair_left", "game", "player 1 payoffs (0,2;1,1)"},
      {"risk_pair_right", "game", "player 1 payoffs (0,1;1,0)"},
      {"ordinal_pennies", "game", "((1.5,0),(0,1);(0,1),(1,0))"},
      {"allais", "lottery", "Allais lotteries allais:a .. allais:d"},
      {"table2", "lottery", "Min-Max-Mean lotteries table2:a .. table2:c"},
  };
}

bool IsGameFixtureId(const std::string& id) {
  const std::string name = id.substr(0, id.find(':'));
  static const char* kNames[] = {"g_x", "mp", "card", "sure_thing", "vmp", "no_extremal",
                                 "iia", "risk_pair_left", "risk_pair_right",
                                 "ordinal_pennies"};
  return std::find(std::begin(kNames), std::end(kNames), name) != std::end(kNames);
}

bool IsLotteryFixtureId(const std::string& id) {
  return id.rfind("allais:", 0) == 0 || id.rfind("table2:", 0) == 0;
}

Game ResolveGameFixture(const std::string& id) {
  if (id.rfind("card:", 0) != 0 && id.rfind("sure_thing:", 0) != 0 &&
      id.rfind("g_x:", 0) != 0 && id.rfind("no_extremal:", 0) != 0 &&
      id.rfind("iia:", 0) != 0 && !IsGameFixtureId(id)) {
    throw InvalidArgument("unknown game fixture '" + id + "'");
  }
  ParsedId p = ParseId(id);
  if (p.name == "g_x") {
    double x = p.params.count("_") ? Scalar(p, "_") : Scalar(p, "x");
    return MakeTestGameGx(x, Players(p));
  }
  if (p.name == "mp") return MakeMatchingPennies(Scalar(p, "win", 1.0));
  if (p.name == "card") {
    auto x = List(p, "x");
    return MakeCardGame(Scalar(p, "r"), x, Scalar(p, "eps"), Players(p));
  }
  if (p.name == "sure_thing") {
    auto x = List(p, "x");
    return MakeSureThingGame(Scalar(p, "r"), x, Players(p));
  }
  if (p.name == "vmp") return MakeVmp();
  if (p.name == "no_extremal") {
    double eps = p.params.count("_") ? Scalar(p, "_") : Scalar(p, "eps", 0.25);
    return MakeNoExtremalEqGame(eps);
  }
  if (p.name == "iia") {
    return MakeIiaGame(Scalar(p, "alpha", 0.0), Scalar(p, "beta", 1.0),
                       Scalar(p, "gamma", 0.0), Scalar(p, "delta", 0.0));
  }
  if (p.name == "risk_pair_left") return MakeRiskPairLeft();
  if (p.name == "risk_pair_right") return MakeRiskPairRight();
  if (p.name == "ordinal_pennies") return MakeOrdinalPennies();
  throw InvalidArgument("unknown game fixture '" + id + "'");
}

Lottery ResolveLotteryFixture(const std::string& id) {
  if (id == "allais:a") return MakeAllaisLotteries().a;
  if (id == "allais:b") return MakeAllaisLotteries().b;
  if (id == "allais:c") return MakeAllaisLotteries().c;
  if (id == "allais:d") return MakeAllaisLotteries().d;
  if (id == "table2:a") return MakeTable2Lotteries().a;
  if (id == "table2:b") return MakeTable2Lotteries().b;
  if (id == "table2:c") return MakeTable2Lotteries().c;
  throw InvalidArgument("unknown lottery fixture '" + id + "'");
}

}  // namespace sre
