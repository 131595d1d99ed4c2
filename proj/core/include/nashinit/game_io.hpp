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

#ifndef NASHINIT_GAME_IO_HPP_
#define NASHINIT_GAME_IO_HPP_

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "nashinit/fictitious_play.hpp"
#include "nashinit/game.hpp"

namespace nashinit {

// Malformed game or solution document; what() carries the diagnostic.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"players": n, "actions": m, "payoffs": [...]} with payoffs player-major,
// then joint profiles row-major (player 0 most significant).
Game read_game_json(std::istream& in);
void write_game_json(std::ostream& out, const Game& game);

// {"algorithm", "epsilon", "per_player_gain", "init_index", "strategies"}.
void write_solution_json(std::ostream& out, const FPResult& result,
                         const std::string& algorithm);

}  // namespace nashinit

#endif  // NASHINIT_GAME_IO_HPP_
