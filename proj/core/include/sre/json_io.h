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

#ifndef SRE_JSON_IO_H_
#define SRE_JSON_IO_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "sre/axioms.h"
#include "sre/game.h"
#include "sre/lottery.h"
#include "sre/solvers.h"
#include "sre/statistic.h"
#include "sre/testgames.h"

namespace sre {

using Json = nlohmann::json;

// Game: {"players": N, "actions": [k_1, ..., k_N],
//        "payoffs": [[u_1, ..., u_N] per profile], "labels": optional}.
Json GameToJson(const Game& g);
// `source` names the input in error messages (usually a file name).
Game GameFromJson(const Json& j, const std::string& source = "<json>");

// {"distributions": [[...], ...]}.
Json ProfileToJson(const MixedProfile& p);
MixedProfile ProfileFromJson(const Json& j, const std::string& source = "<json>");

// {"atoms": [{"x": outcome, "p": weight}, ...]}.
Json LotteryToJson(const Lottery& x);
Lottery LotteryFromJson(const Json& j, const std::string& source = "<json>");

// {"atoms": [{"a": number | "-inf" | "+inf", "w": weight}, ...]}.
Json StatisticToJson(const MAStatistic& phi);
MAStatistic StatisticFromJson(const Json& j, const std::string& source = "<json>");

Json SolveResultToJson(const SolveResult& r);
Json AxiomReportToJson(const AxiomReport& r);
Json ElicitationResultToJson(const ElicitationResult& r);

// Parses a file; syntax errors become FormatError naming the file.
Json LoadJsonFile(const std::string& path);
Game LoadGame(const std::string& path);
MixedProfile LoadProfile(const std::string& path);
Lottery LoadLottery(const std::string& path);
MAStatistic LoadStatistic(const std::string& path);

// Writes j with two-space indentation and a trailing newline.
void SaveJsonFile(const std::string& path, const Json& j);

}  // namespace sre

#endif  // SRE_JSON_IO_H_
