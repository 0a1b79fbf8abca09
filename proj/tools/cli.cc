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

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "sre/axioms.h"
#include "sre/errors.h"
#include "sre/json_io.h"
#include "sre/solvers.h"
#include "sre/statistic.h"
#include "sre/testgames.h"

namespace sre {
namespace {

struct Options {
  std::string game;
  std::string game2;
  std::string profile;
  std::string concept_name = "nash";
  std::string statistic;
  std::string lottery;
  std::string reparam;
  std::string output;
  std::string suite = "all";
  std::string mode;
  std::string demo;
  double lambda = 1.0;
  double tol = 1e-8;
  std::uint64_t seed = 0;
  int corpus_size = 20;
  bool json = false;
};

bool IsFile(const std::string& s) {
  std::error_code ec;
  return std::filesystem::is_regular_file(s, ec);
}

Game LoadGameArg(const std::string& arg) {
  if (IsFile(arg)) return LoadGame(arg);
  if (IsGameFixtureId(arg)) return ResolveGameFixture(arg);
  throw InvalidArgument("'" + arg + "' is neither a readable file nor a game fixture id");
}

Lottery LoadLotteryArg(const std::string& arg) {
  if (IsFile(arg)) return LoadLottery(arg);
  if (IsLotteryFixtureId(arg)) return ResolveLotteryFixture(arg);
  throw InvalidArgument("'" + arg + "' is neither a readable file nor a lottery fixture id");
}

double ParseNumber(const std::string& s) {
  std::size_t used = 0;
  double v;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw InvalidArgument("bad number '" + s + "'");
  }
  if (used != s.size()) throw InvalidArgument("bad number '" + s + "'");
  return v;
}

// A file, or one of: expectation, min, max, ka:<a>, mmm:<w_min>,<w_mean>,<w_max>.
MAStatistic LoadStatisticArg(const std::string& arg) {
  if (arg.empty() || arg == "expectation") return MAStatistic::Expectation();
  if (IsFile(arg)) return LoadStatistic(arg);
  if (arg == "min") return MAStatistic::Ka(ExtendedReal::NegInf());
  if (arg == "max") return MAStatistic::Ka(ExtendedReal::PosInf());
  if (arg.rfind("ka:", 0) == 0) return MAStatistic::Ka(ExtendedReal(ParseNumber(arg.substr(3))));
  if (arg.rfind("mmm:", 0) == 0) {
    std::vector<double> w;
    std::stringstream ss(arg.substr(4));
    std::string tok;
    while (std::getline(ss, tok, ',')) w.push_back(ParseNumber(tok));
    if (w.size() != 3) throw InvalidArgument("mmm needs three weights");
    return MAStatistic::MinMaxMean(w[0], w[1], w[2]);
  }
  throw InvalidArgument("'" + arg + "' is neither a readable file nor a statistic shorthand");
}

ConceptSpec MakeSpec(const Options& o) {
  SolverConfig cfg;
  cfg.seed = o.seed;
  const std::string& c = o.concept_name;
  if (c == "nash") {
    if (!o.statistic.empty() && o.statistic != "expectation") {
      throw InvalidArgument("concept 'nash' uses the expectation; use nash-phi with --statistic");
    }
    return ConceptSpec::Nash(cfg);
  }
  if (c == "nash-phi") return ConceptSpec::NashPhi(LoadStatisticArg(o.statistic), cfg);
  if (c == "lqre") return ConceptSpec::Lqre(o.lambda, LoadStatisticArg(o.statistic), cfg);
  if (c == "fosd-nash" || c == "fosd-nash-check-only") return ConceptSpec::FosdNash(cfg);
  if (c == "fosd-qre") return ConceptSpec::FosdQre(cfg);
  throw InvalidArgument("unknown concept '" + c + "'");
}

std::string FormatProfile(const MixedProfile& p) {
  std::ostringstream os;
  os << std::setprecision(10);
  for (int i = 0; i < p.num_players(); ++i) {
    os << (i ? " | " : "") << "p" << i + 1 << " = (";
    for (std::size_t a = 0; a < p[i].size(); ++a) os << (a ? ", " : "") << p[i][a];
    os << ")";
  }
  return os.str();
}

int CmdSolve(const Options& o, std::ostream& out) {
  Game g = LoadGameArg(o.game);
  ConceptSpec spec = MakeSpec(o);
  SolveResult r = Solve(spec, g);
  if (o.json) {
    Json j = SolveResultToJson(r);
    j["concept"] = spec.Describe();
    out << j.dump(2) << "\n";
  } else {
    out << "concept: " << spec.Describe() << "\n";
    out << "status: " << SolveStatusName(r.status) << " (" << r.diagnostics.method << ")\n";
    for (std::size_t k = 0; k < r.profiles.size(); ++k) {
      out << "  " << FormatProfile(r.profiles[k]) << "  residual " << std::setprecision(3)
          << r.residuals[k] << "\n";
    }
    if (r.profiles.empty()) out << "  none found under the enumeration limits\n";
    for (const auto& n : r.diagnostics.notes) out << "note: " << n << "\n";
  }
  return r.status == SolveStatus::kFailed ? kExitSolverFailure : kExitOk;
}

int CmdVerify(const Options& o, std::ostream& out) {
  Game g = LoadGameArg(o.game);
  MixedProfile p = LoadProfile(o.profile);
  p.CheckConforms(g);
  ConceptSpec spec = MakeSpec(o);
  Membership m = CheckMembership(spec, g, p, o.tol);
  Json j{{"concept", spec.Describe()}, {"member", m.member}, {"score", m.score}, {"tol", o.tol}};
  std::vector<FosdViolation> v;
  if (spec.kind == ConceptKind::kFosdNash) v = VerifyFosdNash(g, p, spec.solver.support_tol);
  if (spec.kind == ConceptKind::kFosdQre) v = VerifyFosdQre(g, p, o.tol);
  Json vj = Json::array();
  for (const auto& x : v) {
    vj.push_back({{"player", x.player},
                  {"action", x.action},
                  {"other_action", x.other_action},
                  {"kind", x.kind},
                  {"magnitude", x.magnitude}});
  }
  j["violations"] = vj;
  if (o.json) {
    out << j.dump(2) << "\n";
  } else {
    out << spec.Describe() << ": " << (m.member ? "member" : "not a member") << " (score "
        << m.score << ", tol " << o.tol << ")\n";
    for (const auto& x : v) {
      out << "  player " << x.player + 1 << " action " << x.action << ": " << x.kind << "\n";
    }
  }
  return m.member ? kExitOk : kExitViolation;
}

Reparameterization LoadReparam(const std::string& path) {
  Json j = LoadJsonFile(path);
  if (!j.is_object() || !j.contains("phi") || !j["phi"].is_string()) {
    throw FormatError(path + ":/phi", "expected a string naming the reparameterization");
  }
  const std::string name = j["phi"].get<std::string>();
  double s = 1.0;
  if (j.contains("scale")) {
    if (!j["scale"].is_number()) throw FormatError(path + ":/scale", "expected a number");
    s = j["scale"].get<double>();
  }
  if (!(s > 0.0) || !std::isfinite(s)) throw FormatError(path + ":/scale", "scale must be positive");
  Reparameterization r;
  r.name = name;
  if (name == "identity") {
    r = IdentityReparameterization();
  } else if (name == "exp") {
    r.forward = [s](double x) { return std::exp(s * x); };
    r.inverse = [s](double y) { return std::log(y) / s; };
  } else if (name == "cube") {
    r.forward = [s](double x) { return s * x * x * x; };
    r.inverse = [s](double y) { return std::cbrt(y / s); };
  } else if (name == "sinh") {
    r.forward = [s](double x) { return std::sinh(s * x); };
    r.inverse = [s](double y) { return std::asinh(y) / s; };
  } else {
    throw FormatError(path + ":/phi", "unknown reparameterization '" + name + "'");
  }
  if (j.contains("bracket")) {
    const Json& b = j["bracket"];
    if (!b.is_array() || b.size() != 2 || !b[0].is_number() || !b[1].is_number()) {
      throw FormatError(path + ":/bracket", "expected [lo, hi]");
    }
    r.bracket = {b[0].get<double>(), b[1].get<double>()};
    // Without an explicit bracket the closed-form inverse is used.
    r.inverse = nullptr;
  }
  return r;
}

int CmdCompose(const Options& o, std::ostream& out) {
  Game g = LoadGameArg(o.game);
  Game h = LoadGameArg(o.game2);
  Game gh = o.reparam.empty() ? Compose(g, h) : ComposeGeneralized(g, h, LoadReparam(o.reparam));
  SaveJsonFile(o.output, GameToJson(gh));
  if (o.json) {
    Json j{{"output", o.output}, {"players", gh.num_players()}, {"actions", gh.action_counts()}};
    out << j.dump(2) << "\n";
  } else {
    out << "wrote " << o.output << ": " << gh.num_players() << " players, actions [";
    for (int i = 0; i < gh.num_players(); ++i) out << (i ? ", " : "") << gh.num_actions(i);
    out << "]\n";
  }
  return kExitOk;
}

int CmdAxioms(const Options& o, std::ostream& out) {
  ConceptSpec spec = MakeSpec(o);
  SuiteOptions so;
  so.corpus_size = o.corpus_size;
  so.seed = o.seed;
  so.tol = o.tol;
  auto reports = RunAxiomSuite(o.suite, spec, so);
  bool passed = true;
  for (const auto& r : reports) passed = passed && r.passed;
  if (o.json) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(AxiomReportToJson(r));
    out << Json{{"concept", spec.Describe()}, {"suite", o.suite}, {"reports", arr}}.dump(2)
        << "\n";
  } else {
    out << "concept: " << spec.Describe() << "\n";
    for (const auto& r : reports) {
      out << (r.passed ? "PASS " : "FAIL ") << r.axiom << ": " << r.instances_checked
          << " instances, " << r.violations.size() << " violations"
          << (r.vacuous ? " (vacuous)" : "") << "\n";
      const std::size_t shown = std::min<std::size_t>(r.violations.size(), 5);
      for (std::size_t k = 0; k < shown; ++k) {
        const auto& v = r.violations[k];
        out << "    " << v.game << " player " << v.player << " " << v.detail << " magnitude "
            << v.magnitude << "\n";
      }
      out << "  corpus: " << r.corpus << "\n";
    }
  }
  return passed ? kExitOk : kExitViolation;
}

int CmdElicit(const Options& o, std::ostream& out) {
  Lottery x = LoadLotteryArg(o.lottery);
  ConceptSpec spec = MakeSpec(o);
  std::string mode = o.mode;
  if (mode.empty()) mode = spec.kind == ConceptKind::kLqre ? "qre" : "fosd";
  std::vector<double> v = UniformRepresentation(x);
  const double truth = Evaluate(spec.phi, x);
  ElicitationResult r;
  if (mode == "qre") {
    const double est = ElicitQre(spec, v);
    r.estimates.push_back({0.0, est, 60});
    r.extrapolated = est;
    r.converged = true;
  } else if (mode == "fosd") {
    r = ElicitFosd(spec, v);
  } else {
    throw InvalidArgument("unknown elicitation mode '" + mode + "'");
  }
  if (o.json) {
    Json j = ElicitationResultToJson(r);
    j["mode"] = mode;
    j["concept"] = spec.Describe();
    j["statistic_value"] = truth;
    out << j.dump(2) << "\n";
  } else {
    out << std::setprecision(10) << "mode " << mode << ", " << spec.Describe() << "\n";
    for (const auto& e : r.estimates) {
      out << "  eps " << e.epsilon << ": r* = " << e.r_star << "\n";
    }
    out << "estimate " << r.extrapolated << " vs statistic value " << truth << "\n";
    if (r.inconclusive) out << "inconclusive: " << r.message << "\n";
  }
  return r.inconclusive ? kExitSolverFailure : kExitOk;
}

int DemoAllais(const Options& o, std::ostream& out) {
  AllaisLotteries L = MakeAllaisLotteries();
  int checked = 0;
  int ok = 0;
  Json rows = Json::array();
  for (int imax = 1; imax <= 9; ++imax) {
    for (int imin = 10 * imax; imin + imax <= 100; ++imin) {
      const double wmax = imax / 100.0, wmin = imin / 100.0;
      const double wmean = std::max(0.0, 1.0 - wmin - wmax);
      MAStatistic phi = MAStatistic::MinMaxMean(wmin, wmean, wmax);
      const bool good = phi.Evaluate(L.a) > phi.Evaluate(L.b) &&
                        phi.Evaluate(L.d) > phi.Evaluate(L.c);
      ++checked;
      ok += good;
      if (!good) rows.push_back({wmin, wmean, wmax});
    }
  }
  MAStatistic ex = MAStatistic::MinMaxMean(0.5, 0.45, 0.05);
  const bool pass = ok == checked;
  if (o.json) {
    out << Json{{"demo", "allais"},
                {"grid_points", checked},
                {"failures", rows},
                {"example_weights", {0.5, 0.45, 0.05}},
                {"example_values",
                 {ex.Evaluate(L.a), ex.Evaluate(L.b), ex.Evaluate(L.c), ex.Evaluate(L.d)}},
                {"pass", pass}}
               .dump(2)
        << "\n";
  } else {
    out << "Allais lotteries under Min-Max-Mean with w_min >= 10 w_max\n";
    out << "  a = 10 sure; b = (10 .89, 0 .01, 11 .10); c = (0 .89, 10 .11); d = (0 .90, 11 .10)\n";
    out << "  weight grid (step .01): " << ok << "/" << checked
        << " points give Phi[a] > Phi[b] and Phi[d] > Phi[c]\n";
    out << std::setprecision(6) << "  example (.5, .45, .05): Phi = " << ex.Evaluate(L.a) << ", "
        << ex.Evaluate(L.b) << ", " << ex.Evaluate(L.c) << ", " << ex.Evaluate(L.d) << "\n";
    out << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kExitOk : kExitViolation;
}

int DemoMinMaxMeanChoice(const Options& o, std::ostream& out) {
  Table2Lotteries L = MakeTable2Lotteries();
  MAStatistic phi = MAStatistic::MinMaxMean(0.45, 0.10, 0.45);
  const double pa = phi.Evaluate(L.a), pb = phi.Evaluate(L.b), pc = phi.Evaluate(L.c);
  const double ea = L.a.Mean(), eb = L.b.Mean(), ec = L.c.Mean();
  const bool pass = pb > pa && pb > pc && eb < ea && eb < ec;
  if (o.json) {
    out << Json{{"demo", "table2"},
                {"weights", {0.45, 0.10, 0.45}},
                {"phi", {pa, pb, pc}},
                {"expectation", {ea, eb, ec}},
                {"pass", pass}}
               .dump(2)
        << "\n";
  } else {
    out << std::setprecision(6) << "lottery  Phi(.45,.10,.45)  expectation\n";
    out << "a        " << pa << "        " << ea << "\n";
    out << "b        " << pb << "        " << eb << "\n";
    out << "c        " << pc << "        " << ec << "\n";
    out << "b is ranked first by Phi and last by the expectation: " << (pass ? "PASS" : "FAIL")
        << "\n";
  }
  return pass ? kExitOk : kExitViolation;
}

int DemoNoExtremal(const Options& o, std::ostream& out) {
  const double eps = 0.25;
  Game g = MakeNoExtremalEqGame(eps);
  MAStatistic phi = MAStatistic::MinMaxMean(0.125, 0.75, 0.125);
  SolverConfig cfg;
  cfg.seed = o.seed;
  SolveResult r = SolveNashPhi(g, phi, cfg);
  SolveResult e = SolveNashPhi(g, MAStatistic::Expectation(), cfg);
  MixedProfile expected({{0.5, 0.5}, {0.1, 0.9}});
  bool e_ok = e.profiles.size() == 1 && e.profiles[0].Distance(expected) <= 1e-6;
  const bool pass = r.profiles.empty() && !r.diagnostics.enumeration_truncated && e_ok;
  if (o.json) {
    Json j{{"demo", "no-extremal"},
           {"epsilon", eps},
           {"statistic", StatisticToJson(phi)},
           {"nash_phi", SolveResultToJson(r)},
           {"nash_expectation", SolveResultToJson(e)},
           {"pass", pass}};
    out << j.dump(2) << "\n";
  } else {
    out << "game ((1+1/eps,0),(0,1);(-1/eps,1),(1,0)) with eps = " << eps << "\n";
    out << "statistic " << phi.ToString() << "\n";
    if (r.profiles.empty()) {
      out << "no Nash_Phi found under full support enumeration (" << r.diagnostics.supports_enumerated
          << " supports" << (r.diagnostics.enumeration_truncated ? ", truncated" : "") << ")\n";
    } else {
      for (const auto& p : r.profiles) out << "unexpected Nash_Phi: " << FormatProfile(p) << "\n";
    }
    for (const auto& p : e.profiles) out << "expectation Nash: " << FormatProfile(p) << "\n";
    out << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kExitOk : kExitViolation;
}

int DemoCauchy(const Options& o, std::ostream& out) {
  const std::vector<double> lambdas{0.5, 1.0, 2.0};
  const std::vector<double> xs{0.5, 1.0, 2.0};
  double worst_identity = 0.0;
  double worst_closed = 0.0;
  Json rows = Json::array();
  for (double lambda : lambdas) {
    auto r = [&](double x) {
      SolveResult res = SolveLqre(MakeTestGameGx(x), MAStatistic::Expectation(), lambda);
      if (res.status != SolveStatus::kConverged) throw SolverFailure("LQRE failed on G_x");
      const double v = res.profiles[0][0][0];
      worst_closed = std::max(worst_closed, std::fabs(v - 1.0 / (1.0 + std::exp(-lambda * x))));
      return v;
    };
    for (double x : xs) {
      for (double y : xs) {
        const double rx = r(x), ry = r(y), rxy = r(x + y);
        const double resid = std::fabs(rx * ry * (1 - rxy) - (1 - rx) * (1 - ry) * rxy);
        worst_identity = std::max(worst_identity, resid);
        rows.push_back({{"lambda", lambda}, {"x", x}, {"y", y}, {"r_x", rx}, {"r_y", ry},
                        {"r_xy", rxy}, {"residual", resid}});
      }
    }
  }
  const bool pass = worst_identity < 1e-8 && worst_closed < 1e-9;
  if (o.json) {
    out << Json{{"demo", "cauchy-identity"},
                {"rows", rows},
                {"max_identity_residual", worst_identity},
                {"max_closed_form_error", worst_closed},
                {"pass", pass}}
               .dump(2)
        << "\n";
  } else {
    out << "r_x r_y (1 - r_{x+y}) = (1 - r_x)(1 - r_y) r_{x+y} on G_x under LQRE\n";
    out << "lambda     x     y        r_x          r_y          r_{x+y}      residual\n";
    for (const auto& row : rows) {
      out << std::fixed << std::setprecision(2) << std::setw(6) << row["lambda"].get<double>()
          << std::setw(6) << row["x"].get<double>() << std::setw(6) << row["y"].get<double>()
          << std::setprecision(9) << "  " << row["r_x"].get<double>() << "  "
          << row["r_y"].get<double>() << "  " << row["r_xy"].get<double>()
          << std::scientific << std::setprecision(2) << "  " << row["residual"].get<double>()
          << std::defaultfloat << "\n";
    }
    out << "max identity residual " << worst_identity << ", max closed-form error "
        << worst_closed << "\n";
    out << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kExitOk : kExitViolation;
}

int CmdDemo(const Options& o, std::ostream& out) {
  if (o.demo == "allais") return DemoAllais(o, out);
  if (o.demo == "table2") return DemoMinMaxMeanChoice(o, out);
  if (o.demo == "no-extremal") return DemoNoExtremal(o, out);
  if (o.demo == "cauchy-identity") return DemoCauchy(o, out);
  throw InvalidArgument("unknown demo '" + o.demo + "'");
}

int CmdFixtures(const Options& o, std::ostream& out) {
  auto list = ListFixtures();
  if (o.json) {
    Json arr = Json::array();
    for (const auto& f : list) {
      arr.push_back({{"id", f.id}, {"kind", f.kind}, {"description", f.description}});
    }
    out << arr.dump(2) << "\n";
  } else {
    for (const auto& f : list) {
      out << std::left << std::setw(38) << f.id << std::setw(9) << f.kind << f.description << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Statistic response equilibria: solve, verify, compose and check axioms",
               "sre_lab"};
  app.require_subcommand(1, 1);
  const std::vector<std::string> concepts{"nash", "nash-phi", "lqre", "fosd-nash",
                                          "fosd-nash-check-only", "fosd-qre"};
  auto add_concept = [&](CLI::App* c) {
    c->add_option("--concept", o.concept_name, "solution concept")
        ->check(CLI::IsMember(concepts));
    c->add_option("--lambda", o.lambda, "logit precision for lqre");
    c->add_option("--statistic", o.statistic,
                  "statistic file or expectation|min|max|ka:<a>|mmm:<w_min>,<w_mean>,<w_max>");
    c->add_option("--seed", o.seed, "random seed");
    c->add_flag("--json", o.json, "print JSON");
  };

  CLI::App* solve = app.add_subcommand("solve", "solve a game");
  solve->add_option("--game", o.game, "game file or fixture id")->required();
  add_concept(solve);

  CLI::App* verify = app.add_subcommand("verify", "check a profile against a concept");
  verify->add_option("--game", o.game, "game file or fixture id")->required();
  verify->add_option("--profile", o.profile, "profile file")->required();
  verify->add_option("--tol", o.tol, "membership tolerance");
  add_concept(verify);

  CLI::App* compose = app.add_subcommand("compose", "compose two games");
  compose->add_option("--game", o.game, "first game")->required();
  compose->add_option("--game2", o.game2, "second game")->required();
  compose->add_option("--phi-reparam", o.reparam, "reparameterization file");
  compose->add_option("-o,--output", o.output, "output file")->required();
  compose->add_flag("--json", o.json, "print JSON");

  CLI::App* axioms = app.add_subcommand("axioms", "run an axiom suite");
  axioms->add_option("--suite", o.suite, "suite name")->check(CLI::IsMember(AxiomSuiteNames()));
  axioms->add_option("--corpus-size", o.corpus_size, "random games per suite")
      ->check(CLI::NonNegativeNumber);
  axioms->add_option("--tol", o.tol, "membership tolerance");
  add_concept(axioms);

  CLI::App* elicit = app.add_subcommand("elicit", "recover a statistic value from behavior");
  elicit->add_option("--lottery", o.lottery, "lottery file or fixture id")->required();
  elicit->add_option("--mode", o.mode, "qre or fosd")->check(CLI::IsMember({"qre", "fosd"}));
  add_concept(elicit);

  CLI::App* demo = app.add_subcommand("demo", "reproduce a worked example");
  demo->add_option("name", o.demo, "allais|table2|no-extremal|cauchy-identity")
      ->required()
      ->check(CLI::IsMember({"allais", "table2", "no-extremal", "cauchy-identity"}));
  demo->add_option("--seed", o.seed, "random seed");
  demo->add_flag("--json", o.json, "print JSON");

  CLI::App* fixtures = app.add_subcommand("fixtures", "list fixture ids");
  fixtures->add_flag("--json", o.json, "print JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (solve->parsed()) return CmdSolve(o, out);
    if (verify->parsed()) return CmdVerify(o, out);
    if (compose->parsed()) return CmdCompose(o, out);
    if (axioms->parsed()) return CmdAxioms(o, out);
    if (elicit->parsed()) return CmdElicit(o, out);
    if (demo->parsed()) return CmdDemo(o, out);
    if (fixtures->parsed()) return CmdFixtures(o, out);
  } catch (const SolverFailure& e) {
    err << "solver failure: " << e.what() << "\n";
    return kExitSolverFailure;
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sre
