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

#include "sre/json_io.h"

#include <fstream>
#include <sstream>

#include "sre/errors.h"

namespace sre {
namespace {

// A JSON node together with where it came from.
struct Node {
  const Json& j;
  std::string source;
  std::string pointer;

  std::string where() const { return source + ":" + (pointer.empty() ? "/" : pointer); }
  [[noreturn]] void Fail(const std::string& what) const { throw FormatError(where(), what); }

  Node Key(const std::string& key) const {
    if (!j.is_object()) Fail("expected an object");
    auto it = j.find(key);
    if (it == j.end()) Fail("missing field '" + key + "'");
    return {*it, source, pointer + "/" + key};
  }
  bool Has(const std::string& key) const { return j.is_object() && j.contains(key); }
  Node At(std::size_t k) const { return {j[k], source, pointer + "/" + std::to_string(k)}; }
  std::size_t Size() const {
    if (!j.is_array()) Fail("expected an array");
    return j.size();
  }
  double Number() const {
    if (!j.is_number()) Fail("expected a number");
    return j.get<double>();
  }
  int Int() const {
    if (!j.is_number_integer()) Fail("expected an integer");
    return j.get<int>();
  }
  std::string String() const {
    if (!j.is_string()) Fail("expected a string");
    return j.get<std::string>();
  }
};

template <typename Fn>
auto Construct(const Node& n, Fn&& fn) {
  try {
    return fn();
  } catch (const InvalidArgument& e) {
    n.Fail(e.what());
  }
}

}  // namespace

Json GameToJson(const Game& g) {
  Json j;
  j["players"] = g.num_players();
  j["actions"] = g.action_counts();
  Json payoffs = Json::array();
  const int n = g.num_players();
  for (std::size_t k = 0; k < g.num_profiles(); ++k) {
    Json row = Json::array();
    for (int i = 0; i < n; ++i) row.push_back(g.payoff(k, i));
    payoffs.push_back(std::move(row));
  }
  j["payoffs"] = std::move(payoffs);
  if (g.has_labels()) j["labels"] = g.labels();
  return j;
}

Game GameFromJson(const Json& j, const std::string& source) {
  Node root{j, source, ""};
  const int n = root.Key("players").Int();
  if (n < 1) root.Key("players").Fail("need at least one player");
  Node actions = root.Key("actions");
  if (actions.Size() != static_cast<std::size_t>(n)) actions.Fail("expected one count per player");
  std::vector<int> counts;
  std::size_t profiles = 1;
  for (std::size_t i = 0; i < actions.Size(); ++i) {
    const int c = actions.At(i).Int();
    if (c < 1) actions.At(i).Fail("action counts must be positive");
    counts.push_back(c);
    profiles *= static_cast<std::size_t>(c);
  }
  Node rows = root.Key("payoffs");
  if (rows.Size() != profiles) {
    rows.Fail("expected " + std::to_string(profiles) + " payoff rows, found " +
              std::to_string(rows.Size()));
  }
  std::vector<double> payoffs;
  payoffs.reserve(profiles * n);
  for (std::size_t k = 0; k < profiles; ++k) {
    Node row = rows.At(k);
    if (row.Size() != static_cast<std::size_t>(n)) row.Fail("expected one payoff per player");
    for (int i = 0; i < n; ++i) payoffs.push_back(row.At(i).Number());
  }
  ActionLabels labels;
  if (root.Has("labels")) {
    Node lab = root.Key("labels");
    if (lab.Size() != static_cast<std::size_t>(n)) lab.Fail("expected one label list per player");
    for (int i = 0; i < n; ++i) {
      Node li = lab.At(i);
      if (li.Size() != static_cast<std::size_t>(counts[i])) li.Fail("expected one label per action");
      labels.emplace_back();
      for (std::size_t a = 0; a < li.Size(); ++a) labels.back().push_back(li.At(a).String());
    }
  }
  return Construct(root, [&] { return Game(counts, std::move(payoffs), std::move(labels)); });
}

Json ProfileToJson(const MixedProfile& p) {
  return Json{{"distributions", p.distributions()}};
}

MixedProfile ProfileFromJson(const Json& j, const std::string& source) {
  Node root{j, source, ""};
  Node dists = root.Key("distributions");
  std::vector<std::vector<double>> d(dists.Size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    Node di = dists.At(i);
    for (std::size_t a = 0; a < di.Size(); ++a) d[i].push_back(di.At(a).Number());
  }
  return Construct(dists, [&] { return MixedProfile(std::move(d)); });
}

Json LotteryToJson(const Lottery& x) {
  Json atoms = Json::array();
  for (const Atom& a : x.atoms()) atoms.push_back({{"x", a.outcome}, {"p", a.weight}});
  return Json{{"atoms", atoms}};
}

Lottery LotteryFromJson(const Json& j, const std::string& source) {
  Node root{j, source, ""};
  Node atoms = root.Key("atoms");
  std::vector<Atom> out;
  for (std::size_t k = 0; k < atoms.Size(); ++k) {
    Node a = atoms.At(k);
    out.push_back({a.Key("x").Number(), a.Key("p").Number()});
  }
  return Construct(atoms, [&] { return Lottery(std::move(out)); });
}

Json StatisticToJson(const MAStatistic& phi) {
  Json atoms = Json::array();
  for (const StatisticAtom& at : phi.atoms()) {
    Json a = at.a.is_finite() ? Json(at.a.value()) : Json(at.a.ToString());
    atoms.push_back({{"a", a}, {"w", at.weight}});
  }
  return Json{{"atoms", atoms}};
}

MAStatistic StatisticFromJson(const Json& j, const std::string& source) {
  Node root{j, source, ""};
  Node atoms = root.Key("atoms");
  std::vector<StatisticAtom> out;
  for (std::size_t k = 0; k < atoms.Size(); ++k) {
    Node at = atoms.At(k);
    Node a = at.Key("a");
    ExtendedReal loc(0.0);
    if (a.j.is_string()) {
      const std::string s = a.String();
      if (s == "-inf") {
        loc = ExtendedReal::NegInf();
      } else if (s == "+inf" || s == "inf") {
        loc = ExtendedReal::PosInf();
      } else {
        a.Fail("expected a number, \"-inf\" or \"+inf\"");
      }
    } else {
      loc = ExtendedReal(a.Number());
    }
    out.push_back({loc, at.Key("w").Number()});
  }
  return Construct(atoms, [&] { return MAStatistic(std::move(out)); });
}

Json SolveResultToJson(const SolveResult& r) {
  Json profiles = Json::array();
  for (const auto& p : r.profiles) profiles.push_back(p.distributions());
  const SolveDiagnostics& d = r.diagnostics;
  Json diag{{"method", d.method},
            {"iterations", d.iterations},
            {"starts_attempted", d.starts_attempted},
            {"starts_converged", d.starts_converged},
            {"homotopy_points", d.homotopy_points},
            {"homotopy_last_lambda", d.homotopy_last_lambda},
            {"homotopy_completed", d.homotopy_completed},
            {"supports_enumerated", d.supports_enumerated},
            {"enumeration_truncated", d.enumeration_truncated},
            {"candidates_tested", d.candidates_tested},
            {"notes", d.notes}};
  return Json{{"status", SolveStatusName(r.status)},
              {"profiles", profiles},
              {"residuals", r.residuals},
              {"diagnostics", diag}};
}

Json AxiomReportToJson(const AxiomReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"game", v.game},
                          {"player", v.player},
                          {"detail", v.detail},
                          {"magnitude", v.magnitude}});
  }
  return Json{{"axiom", r.axiom},
              {"instances_checked", r.instances_checked},
              {"violations", violations},
              {"passed", r.passed},
              {"vacuous", r.vacuous},
              {"corpus", r.corpus}};
}

Json ElicitationResultToJson(const ElicitationResult& r) {
  Json estimates = Json::array();
  for (const auto& e : r.estimates) {
    estimates.push_back({{"epsilon", e.epsilon}, {"r_star", e.r_star}, {"iterations", e.iterations}});
  }
  return Json{{"estimates", estimates},
              {"extrapolated", r.extrapolated},
              {"converged", r.converged},
              {"inconclusive", r.inconclusive},
              {"message", r.message}};
}

Json LoadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path, "cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    std::ostringstream os;
    os << "malformed JSON at byte " << e.byte;
    throw FormatError(path, os.str());
  }
}

Game LoadGame(const std::string& path) { return GameFromJson(LoadJsonFile(path), path); }

MixedProfile LoadProfile(const std::string& path) {
  return ProfileFromJson(LoadJsonFile(path), path);
}

Lottery LoadLottery(const std::string& path) {
  return LotteryFromJson(LoadJsonFile(path), path);
}

MAStatistic LoadStatistic(const std::string& path) {
  return StatisticFromJson(LoadJsonFile(path), path);
}

void SaveJsonFile(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
  if (!out) throw InvalidArgument("failed writing '" + path + "'");
}

}  // namespace sre
