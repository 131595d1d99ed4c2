// Copyright 2026 The nashinit Authors
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

#include "nashinit/game_io.hpp"

#include <json.hpp>
#include <vector>

namespace nashinit {

using nlohmann::json;

Game read_game_json(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("game document must be a JSON object");
  for (const char* key : {"players", "actions", "payoffs"}) {
    if (!doc.contains(key)) throw FormatError(std::string("missing key '") + key + "'");
  }
  if (!doc["players"].is_number_integer() || !doc["actions"].is_number_integer()) {
    throw FormatError("'players' and 'actions' must be integers");
  }
  const auto players = doc["players"].get<long long>();
  const auto actions = doc["actions"].get<long long>();
  if (players < 2 || actions < 2 || players > 64 || actions > 1 << 20) {
    throw FormatError("need players >= 2 and actions >= 2");
  }
  const json& payload = doc["payoffs"];
  if (!payload.is_array()) throw FormatError("'payoffs' must be an array");
  const std::size_t expected =
      payoff_tensor_size(static_cast<int>(players), static_cast<int>(actions));
  if (expected == 0 || expected > kDefaultMaxPayoffValues) {
    throw FormatError("game too large");
  }
  if (payload.size() != expected) {
    throw FormatError("'payoffs' has " + std::to_string(payload.size()) +
                      " values, expected players * actions^players = " +
                      std::to_string(expected));
  }
  std::vector<double> payoffs;
  payoffs.reserve(expected);
  for (std::size_t k = 0; k < payload.size(); ++k) {
    if (!payload[k].is_number()) {
      throw FormatError("payoff " + std::to_string(k) + " is not a number");
    }
    payoffs.push_back(payload[k].get<double>());
  }
  try {
    return Game(static_cast<int>(players), static_cast<int>(actions),
                std::move(payoffs));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

void write_game_json(std::ostream& out, const Game& game) {
  json doc;
  doc["players"] = game.num_players();
  doc["actions"] = game.num_actions();
  doc["payoffs"] = std::vector<double>(game.payoffs().begin(), game.payoffs().end());
  out << doc.dump() << '\n';
}

void write_solution_json(std::ostream& out, const FPResult& result,
                         const std::string& algorithm) {
  json doc;
  doc["algorithm"] = algorithm;
  doc["epsilon"] = result.epsilon_report.epsilon;
  doc["per_player_gain"] = result.epsilon_report.per_player_gain;
  doc["init_index"] = result.init_index;
  doc["iterations"] = result.iterations_run;
  json strategies = json::array();
  for (int i = 0; i < result.final_profile.num_players(); ++i) {
    auto s = result.final_profile.strategy(i);
    strategies.push_back(std::vector<double>(s.begin(), s.end()));
  }
  doc["strategies"] = std::move(strategies);
  out << doc.dump(2) << '\n';
}

}  // namespace nashinit
