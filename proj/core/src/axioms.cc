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

#include "sre/axioms.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "sre/errors.h"
#include "sre/parallel.h"
#include "sre/random.h"
#include "sre/testgames.h"

namespace sre {
namespace {

std::string Pair(int a, int b) {
  std::ostringstream os;
  os << "actions (" << a << ", " << b << ")";
  return os.str();
}

std::vector<MixedProfile> Solutions(const ConceptSpec& spec, const Game& g,
                                    const std::string& where) {
  SolveResult res = Solve(spec, g);
  if (res.status == SolveStatus::kFailed) {
    throw SolverFailure(spec.Describe() + " failed on " + where);
  }
  return res.profiles;
}

AxiomReport NewReport(const std::string& axiom) {
  AxiomReport r;
  r.axiom = axiom;
  return r;
}

void CheckMember(const ConceptSpec& spec, const Game& g, const MixedProfile& p, double tol,
                 const std::string& descriptor, AxiomReport& report) {
  ++report.instances_checked;
  Membership m = CheckMembership(spec, g, p, tol);
  if (!m.member) report.Add({descriptor, -1, p.DebugString(), m.score});
}

bool IsUniform(const MixedProfile& p, double tol) {
  for (const auto& d : p.distributions()) {
    for (double x : d) {
      if (std::fabs(x - 1.0 / static_cast<double>(d.size())) > tol) return false;
    }
  }
  return true;
}

}  // namespace

void AxiomReport::Add(AxiomViolation v) {
  violations.push_back(std::move(v));
  passed = false;
}

void AxiomReport::Merge(const AxiomReport& other) {
  instances_checked += other.instances_checked;
  for (const auto& v : other.violations) Add(v);
  passed = violations.empty();
  vacuous = instances_checked == 0;
}

AxiomReport CheckDistributionMonotonicity(const Game& g, const MixedProfile& p, double tol,
                                          const std::string& descriptor) {
  p.CheckConforms(g);
  AxiomReport report = NewReport("distribution_monotonicity");
  for (int i = 0; i < g.num_players(); ++i) {
    std::vector<Lottery> lotteries;
    for (int a = 0; a < g.num_actions(i); ++a) lotteries.push_back(ActionLottery(g, i, a, p));
    for (int a = 0; a < g.num_actions(i); ++a) {
      for (int b = 0; b < g.num_actions(i); ++b) {
        if (a == b || FosdCompare(lotteries[a], lotteries[b]) != Dominance::kStrictFosd) continue;
        ++report.instances_checked;
        if (p[i][a] < p[i][b] - tol) report.Add({descriptor, i, Pair(a, b), p[i][b] - p[i][a]});
      }
    }
  }
  report.vacuous = report.instances_checked == 0;
  return report;
}

AxiomReport CheckExpectationMonotonicity(const Game& g, const MixedProfile& p, double tol,
                                         const std::string& descriptor) {
  p.CheckConforms(g);
  AxiomReport report = NewReport("expectation_monotonicity");
  for (int i = 0; i < g.num_players(); ++i) {
    std::vector<double> e;
    for (int a = 0; a < g.num_actions(i); ++a) e.push_back(ExpectedPayoff(g, i, a, p));
    for (int a = 0; a < g.num_actions(i); ++a) {
      for (int b = 0; b < g.num_actions(i); ++b) {
        const double gap = 1e-12 * std::max({1.0, std::fabs(e[a]), std::fabs(e[b])});
        if (a == b || !(e[a] > e[b] + gap)) continue;
        ++report.instances_checked;
        if (p[i][a] < p[i][b] - tol) report.Add({descriptor, i, Pair(a, b), p[i][b] - p[i][a]});
      }
    }
  }
  report.vacuous = report.instances_checked == 0;
  return report;
}

AxiomReport CheckBracketing(const ConceptSpec& spec, const Game& g, const Game& h, double tol,
                            const std::string& descriptor) {
  AxiomReport report = NewReport("bracketing");
  auto sg = Solutions(spec, g, descriptor + " (G)");
  auto sh = Solutions(spec, h, descriptor + " (H)");
  if (sg.empty() || sh.empty()) {
    report.vacuous = true;
    return report;
  }
  Game gh = Compose(g, h);
  for (const auto& p : sg) {
    for (const auto& q : sh) CheckMember(spec, gh, ProductProfile(p, q), tol, descriptor, report);
  }
  return report;
}

AxiomReport CheckAnonymity(const ConceptSpec& spec, const Game& g, const PlayerPermutation& pi,
                           double tol, const std::string& descriptor) {
  AxiomReport report = NewReport("anonymity");
  Game gp = PermutePlayers(g, pi);
  for (const auto& p : Solutions(spec, g, descriptor)) {
    CheckMember(spec, gp, PermuteProfile(p, pi), tol, descriptor, report);
  }
  report.vacuous = report.instances_checked == 0;
  return report;
}

AxiomReport CheckScaleInvariance(const ConceptSpec& spec, const Game& g,
                                 const std::vector<double>& alphas, double tol,
                                 const std::string& descriptor) {
  for (double a : alphas) {
    if (!(a > 0.0 && a < 1.0)) throw InvalidArgument("scale factors must lie in (0, 1)");
  }
  AxiomReport report = NewReport("scale_invariance");
  const MixedProfile uniform = MixedProfile::Uniform(g);
  bool found = false;
  for (const auto& p : Solutions(spec, g, descriptor)) {
    if (IsUniform(p, 1e-9)) found = true;
  }
  if (found) {
    for (double a : alphas) {
      std::ostringstream os;
      os << descriptor << " scaled by " << a;
      CheckMember(spec, ScaleGame(g, a), uniform, tol, os.str(), report);
    }
  }
  report.vacuous = report.instances_checked == 0;
  return report;
}

AxiomReport CheckStrategicInvariance(const ConceptSpec& spec, const Game& g,
                                     const std::vector<std::vector<double>>& shifts, double tol,
                                     const std::string& descriptor) {
  AxiomReport report = NewReport("strategic_invariance");
  Game h = StrategicShift(g, shifts);
  for (const auto& p : Solutions(spec, g, descriptor)) {
    CheckMember(spec, h, p, tol, descriptor + " (shifted)", report);
  }
  for (const auto& p : Solutions(spec, h, descriptor + " (shifted)")) {
    CheckMember(spec, g, p, tol, descriptor, report);
  }
  report.vacuous = report.instances_checked == 0;
  return report;
}

AxiomReport CheckInteriority(const MixedProfile& p, double tol, const std::string& descriptor) {
  AxiomReport report = NewReport("interiority");
  for (int i = 0; i < p.num_players(); ++i) {
    for (std::size_t a = 0; a < p[i].size(); ++a) {
      ++report.instances_checked;
      if (!(p[i][a] > tol)) {
        report.Add({descriptor, i, "action " + std::to_string(a), tol - p[i][a]});
      }
    }
  }
  return report;
}

AxiomReport CheckNeutrality(const Game& g, const MixedProfile& p, NeutralityMode mode,
                            double tol, const std::string& descriptor) {
  p.CheckConforms(g);
  AxiomReport report = NewReport(mode == NeutralityMode::kExpectation
                                     ? "expectation_neutrality"
                                     : "distribution_neutrality");
  for (int i = 0; i < g.num_players(); ++i) {
    const int n = g.num_actions(i);
    std::vector<Lottery> lotteries;
    std::vector<double> e;
    for (int a = 0; a < n; ++a) {
      if (mode == NeutralityMode::kExpectation) {
        e.push_back(ExpectedPayoff(g, i, a, p));
      } else {
        lotteries.push_back(ActionLottery(g, i, a, p));
      }
    }
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        bool tied;
        if (mode == NeutralityMode::kExpectation) {
          tied = std::fabs(e[a] - e[b]) <= 1e-12 * std::max({1.0, std::fabs(e[a]), std::fabs(e[b])});
        } else {
          tied = FosdCompare(lotteries[a], lotteries[b]) == Dominance::kEqual;
        }
        if (!tied) continue;
        ++report.instances_checked;
        const double d = std::fabs(p[i][a] - p[i][b]);
        if (d > tol) report.Add({descriptor, i, Pair(a, b), d});
      }
    }
  }
  report.vacuous = report.instances_checked == 0;
  return report;
}

Game BlendGames(const Game& u, const Game& v, double alpha) {
  if (u.action_counts() != v.action_counts()) {
    throw InvalidArgument("blended games need the same action sets");
  }
  std::vector<double> w(u.payoffs().size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    w[k] = alpha * u.payoffs()[k] + (1.0 - alpha) * v.payoffs()[k];
  }
  return Game(u.action_counts(), std::move(w), u.labels());
}

AxiomReport CheckConsistency(const ConceptSpec& spec, const Game& u, const Game& v,
                             const std::vector<double>& alphas, double tol,
                             const std::string& descriptor) {
  AxiomReport report = NewReport("consistency");
  auto su = Solutions(spec, u, descriptor + " (u)");
  auto sv = Solutions(spec, v, descriptor + " (v)");
  for (const auto& p : su) {
    bool common = false;
    for (const auto& q : sv) {
      if (p.Distance(q) <= 1e-6) common = true;
    }
    if (!common) continue;
    for (double a : alphas) {
      std::ostringstream os;
      os << descriptor << " blended at " << a;
      CheckMember(spec, BlendGames(u, v, a), p, tol, os.str(), report);
    }
  }
  report.vacuous = report.instances_checked == 0;
  return report;
}

AxiomReport CheckConsequentialism(const ConceptSpec& spec, const Game& h, const BlowUpMaps& maps,
                                  double tol, const std::string& descriptor) {
  AxiomReport report = NewReport("consequentialism");
  Game g = BlowUp(h, maps);
  for (const auto& p : Solutions(spec, g, descriptor + " (blow-up)")) {
    CheckMember(spec, h, PushProfile(p, maps, h.action_counts()), tol,
                descriptor + " (pushed forward)", report);
  }
  for (const auto& q : Solutions(spec, h, descriptor)) {
    std::vector<std::vector<double>> first(g.num_players()), even(g.num_players());
    for (int i = 0; i < g.num_players(); ++i) {
      first[i].assign(g.num_actions(i), 0.0);
      even[i].assign(g.num_actions(i), 0.0);
      std::vector<int> preimages(h.num_actions(i), 0);
      for (int a : maps[i]) ++preimages[a];
      std::vector<bool> used(h.num_actions(i), false);
      for (int a = 0; a < g.num_actions(i); ++a) {
        const int b = maps[i][a];
        if (!used[b]) first[i][a] = q[i][b];
        used[b] = true;
        even[i][a] = q[i][b] / preimages[b];
      }
    }
    CheckMember(spec, g, MixedProfile(first), tol, descriptor + " (first-preimage lift)",
                report);
    CheckMember(spec, g, MixedProfile(even), tol, descriptor + " (even-split lift)", report);
  }
  report.vacuous = report.instances_checked == 0;
  return report;
}

AxiomReport CheckRationality(const Game& g, const MixedProfile& p, double tol,
                             const std::string& descriptor) {
  p.CheckConforms(g);
  AxiomReport report = NewReport("rationality");
  for (int i = 0; i < g.num_players(); ++i) {
    for (int a = 0; a < g.num_actions(i); ++a) {
      bool dominant = g.num_actions(i) > 1;
      for (std::size_t k = 0; k < g.num_profiles() && dominant; ++k) {
        if (g.ActionOf(k, i) != a) continue;
        for (int b = 0; b < g.num_actions(i) && dominant; ++b) {
          if (b == a) continue;
          const std::size_t kb = k + (static_cast<std::size_t>(b) - a) * g.stride(i);
          if (!(g.payoff(k, i) > g.payoff(kb, i))) dominant = false;
        }
      }
      if (!dominant) continue;
      ++report.instances_checked;
      if (!(p[i][a] > tol)) {
        report.Add({descriptor, i, "dominant action " + std::to_string(a), tol - p[i][a]});
      }
    }
  }
  report.vacuous = report.instances_checked == 0;
  return report;
}

Game RandomGame(std::uint64_t seed, int min_players, int max_players, int min_actions,
                int max_actions) {
  if (min_players < 1 || max_players < min_players || min_actions < 1 ||
      max_actions < min_actions) {
    throw InvalidArgument("bad random game shape");
  }
  Rng rng(seed);
  const int n = min_players + rng.Int(max_players - min_players + 1);
  std::vector<int> counts(n);
  for (int& c : counts) c = min_actions + rng.Int(max_actions - min_actions + 1);
  std::size_t profiles = 1;
  for (int c : counts) profiles *= c;
  std::vector<double> payoffs(profiles * n);
  for (double& u : payoffs) u = rng.Uniform(-2.0, 2.0);
  return Game(counts, std::move(payoffs));
}

std::vector<std::string> AxiomSuiteNames() {
  return {"bracketing", "monotonicity", "anonymity", "scale", "strategic", "bnb", "all"};
}

namespace {

std::string CorpusNote(const SuiteOptions& o, const std::string& shape,
                       const std::string& fixtures) {
  std::ostringstream os;
  os << o.corpus_size << " seeded random games (seed " << o.seed << ", " << shape
     << ", payoffs uniform in [-2, 2])";
  if (!fixtures.empty()) os << " plus fixtures " << fixtures;
  os << "; a finite corpus, not a proof";
  return os.str();
}

std::uint64_t Seed(const SuiteOptions& o, std::uint64_t salt, std::size_t k) {
  return o.seed * 1000003ULL + salt * 7919ULL + k;
}

std::string Corpus(std::size_t k) { return "corpus[" + std::to_string(k) + "]"; }

// Runs fn for every corpus index in parallel and merges in index order.
std::vector<AxiomReport> Collect(std::size_t n, const std::vector<std::string>& axioms,
                                 const std::function<std::vector<AxiomReport>(std::size_t)>& fn,
                                 const std::string& corpus) {
  std::vector<std::vector<AxiomReport>> parts(n);
  ParallelFor(n, [&](std::size_t k) { parts[k] = fn(k); });
  std::vector<AxiomReport> out;
  for (const auto& name : axioms) {
    AxiomReport r = NewReport(name);
    r.corpus = corpus;
    out.push_back(r);
  }
  for (const auto& part : parts) {
    for (const auto& r : part) {
      for (auto& o : out) {
        if (o.axiom == r.axiom) o.Merge(r);
      }
    }
  }
  for (auto& o : out) {
    o.passed = o.violations.empty();
    o.vacuous = o.instances_checked == 0;
  }
  return out;
}

std::vector<std::vector<double>> RandomShifts(const Game& g, Rng& rng) {
  std::vector<std::vector<double>> s(g.num_players());
  for (int i = 0; i < g.num_players(); ++i) {
    s[i].resize(NumOpponentProfiles(g, i));
    for (double& x : s[i]) x = rng.Uniform(-2.0, 2.0);
  }
  return s;
}

BlowUpMaps DuplicateOne(const Game& h, Rng& rng) {
  BlowUpMaps maps(h.num_players());
  for (int i = 0; i < h.num_players(); ++i) {
    for (int a = 0; a < h.num_actions(i); ++a) maps[i].push_back(a);
    maps[i].push_back(rng.Int(h.num_actions(i)));
  }
  return maps;
}

std::vector<AxiomReport> BracketingSuite(const ConceptSpec& spec, const SuiteOptions& o) {
  const std::size_t n = o.corpus_size;
  return Collect(
      n + 1, {"bracketing"},
      [&](std::size_t k) {
        if (k == n) {
          Game mp = MakeMatchingPennies();
          return std::vector<AxiomReport>{CheckBracketing(spec, mp, mp, o.tol, "mp x mp")};
        }
        Game g = RandomGame(Seed(o, 1, 2 * k), 2, 2, 2, 3);
        Game h = RandomGame(Seed(o, 1, 2 * k + 1), 2, 2, 2, 3);
        return std::vector<AxiomReport>{CheckBracketing(spec, g, h, o.tol, Corpus(k))};
      },
      CorpusNote(o, "pairs of 2-player games with 2-3 actions", "mp x mp"));
}

std::vector<AxiomReport> MonotonicitySuite(const ConceptSpec& spec, const SuiteOptions& o) {
  const bool expectation = spec.phi.is_expectation() && (spec.kind == ConceptKind::kLqre ||
                                                         spec.kind == ConceptKind::kNashPhi);
  const bool interior = spec.kind == ConceptKind::kLqre || spec.kind == ConceptKind::kFosdQre;
  std::vector<std::string> axioms{"distribution_monotonicity"};
  if (expectation) axioms.push_back("expectation_monotonicity");
  if (interior) {
    axioms.push_back("interiority");
    axioms.push_back("distribution_neutrality");
  }
  const std::vector<std::string> fixtures{"g_x:1", "mp", "vmp", "sure_thing:r=0,x=0,1"};
  const std::size_t n = o.corpus_size;
  std::string names;
  for (const auto& f : fixtures) names += (names.empty() ? "" : ", ") + f;
  return Collect(
      n + fixtures.size(), axioms,
      [&](std::size_t k) {
        const bool fixture = k >= n;
        Game g = fixture ? ResolveGameFixture(fixtures[k - n]) : RandomGame(Seed(o, 2, k));
        const std::string d = fixture ? fixtures[k - n] : Corpus(k);
        std::vector<AxiomReport> out;
        for (const auto& p : Solutions(spec, g, d)) {
          out.push_back(CheckDistributionMonotonicity(g, p, o.prob_tol, d));
          if (expectation) out.push_back(CheckExpectationMonotonicity(g, p, o.prob_tol, d));
          if (interior) {
            out.push_back(CheckInteriority(p, 0.0, d));
            out.push_back(CheckNeutrality(g, p, NeutralityMode::kDistribution, o.prob_tol, d));
          }
        }
        return out;
      },
      CorpusNote(o, "2-3 players, 2-4 actions", names));
}

std::vector<AxiomReport> AnonymitySuite(const ConceptSpec& spec, const SuiteOptions& o) {
  const std::size_t n = o.corpus_size;
  return Collect(
      n + 1, {"anonymity"},
      [&](std::size_t k) {
        if (k == n) {
          return std::vector<AxiomReport>{CheckAnonymity(
              spec, MakeMatchingPennies(), PlayerPermutation({1, 0}), o.tol, "mp swapped")};
        }
        Game g = RandomGame(Seed(o, 3, k));
        Rng rng(Seed(o, 33, k));
        std::vector<int> perm(g.num_players());
        for (int i = 0; i < g.num_players(); ++i) perm[i] = i;
        for (int i = g.num_players() - 1; i > 0; --i) std::swap(perm[i], perm[rng.Int(i + 1)]);
        return std::vector<AxiomReport>{
            CheckAnonymity(spec, g, PlayerPermutation(perm), o.tol, Corpus(k))};
      },
      CorpusNote(o, "2-3 players, 2-4 actions, random player permutations", "mp swapped"));
}

std::vector<AxiomReport> ScaleSuite(const ConceptSpec& spec, const SuiteOptions& o) {
  const std::vector<double> alphas{0.5, 0.25};
  const std::size_t n = o.corpus_size;
  return Collect(
      n + 2, {"scale_invariance"},
      [&](std::size_t k) {
        if (k == n) {
          return std::vector<AxiomReport>{
              CheckScaleInvariance(spec, MakeMatchingPennies(), alphas, o.tol, "mp")};
        }
        if (k == n + 1) {
          return std::vector<AxiomReport>{
              CheckScaleInvariance(spec, MakeVmp(), alphas, o.tol, "vmp")};
        }
        return std::vector<AxiomReport>{
            CheckScaleInvariance(spec, RandomGame(Seed(o, 4, k)), alphas, o.tol, Corpus(k))};
      },
      CorpusNote(o, "2-3 players, 2-4 actions, factors .5 and .25; only uniform solutions apply",
                 "mp, vmp"));
}

std::vector<AxiomReport> StrategicSuite(const ConceptSpec& spec, const SuiteOptions& o) {
  const std::size_t n = o.corpus_size;
  return Collect(
      n, {"strategic_invariance"},
      [&](std::size_t k) {
        Game g = RandomGame(Seed(o, 5, k));
        Rng rng(Seed(o, 55, k));
        return std::vector<AxiomReport>{
            CheckStrategicInvariance(spec, g, RandomShifts(g, rng), o.tol, Corpus(k))};
      },
      CorpusNote(o, "2-3 players, 2-4 actions, shifts uniform in [-2, 2]", ""));
}

std::vector<AxiomReport> BnbSuite(const ConceptSpec& spec, const SuiteOptions& o) {
  const std::vector<double> alphas{0.25, 0.5, 0.75};
  const std::size_t n = o.corpus_size;
  const std::size_t fixtures = 3;
  return Collect(
      n + fixtures, {"consistency", "consequentialism", "rationality"},
      [&](std::size_t k) {
        std::vector<AxiomReport> out;
        if (k == n) {
          out.push_back(CheckConsistency(spec, MakeMatchingPennies(1.0), MakeMatchingPennies(2.0),
                                         alphas, o.tol, "mp vs mp(2)"));
          return out;
        }
        if (k == n + 1) {
          out.push_back(CheckConsequentialism(spec, MakeMatchingPennies(), {{0, 0, 1}, {0, 1}},
                                              o.tol, "mp with a duplicated row"));
          return out;
        }
        if (k == n + 2) {
          Game g = MakeTestGameGx(1.0);
          for (const auto& p : Solutions(spec, g, "g_x:1")) {
            out.push_back(CheckRationality(g, p, o.prob_tol, "g_x:1"));
          }
          return out;
        }
        Game u = RandomGame(Seed(o, 6, k), 2, 2, 2, 3);
        Rng rng(Seed(o, 66, k));
        Game v = StrategicShift(u, RandomShifts(u, rng));
        out.push_back(CheckConsistency(spec, u, v, alphas, o.tol, Corpus(k)));
        out.push_back(CheckConsequentialism(spec, u, DuplicateOne(u, rng), o.tol, Corpus(k)));
        for (const auto& p : Solutions(spec, u, Corpus(k))) {
          out.push_back(CheckRationality(u, p, o.prob_tol, Corpus(k)));
        }
        return out;
      },
      CorpusNote(o,
                 "2-player games with 2-3 actions, strategically shifted partners, one duplicated "
                 "action per player",
                 "mp vs mp(2), duplicated-row mp, g_x:1"));
}

}  // namespace

std::vector<AxiomReport> RunAxiomSuite(const std::string& suite, const ConceptSpec& spec,
                                       const SuiteOptions& options) {
  if (options.corpus_size < 0) throw InvalidArgument("corpus size must be nonnegative");
  spec.solver.Validate();
  if (suite == "bracketing") return BracketingSuite(spec, options);
  if (suite == "monotonicity") return MonotonicitySuite(spec, options);
  if (suite == "anonymity") return AnonymitySuite(spec, options);
  if (suite == "scale") return ScaleSuite(spec, options);
  if (suite == "strategic") return StrategicSuite(spec, options);
  if (suite == "bnb") return BnbSuite(spec, options);
  if (suite == "all") {
    std::vector<AxiomReport> out;
    for (const auto& name : AxiomSuiteNames()) {
      if (name == "all") continue;
      auto part = RunAxiomSuite(name, spec, options);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw InvalidArgument("unknown axiom suite '" + suite + "'");
}

}  // namespace sre
