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

#ifndef NASHINIT_GAME_HPP_
#define NASHINIT_GAME_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nashinit {

// Probability vectors may drift from unit sum by at most this much before
// construction rejects them; anything within it is renormalized.
inline constexpr double kProbabilityTolerance = 1e-9;

// Regret below -kRegretSlack means the evaluator is broken, not the profile.
inline constexpr double kRegretSlack = 1e-12;

// Largest payoff tensor (n * m^n values) random_game will allocate.
inline constexpr std::size_t kDefaultMaxPayoffValues = std::size_t{1} << 27;

// Raised whenever a profile, center, or pool does not fit a game's n and m.
class ShapeMismatch : public std::invalid_argument {
 public:
  ShapeMismatch() : std::invalid_argument("profile/game shape mismatch") {}
};

// A distribution over one player's pure strategies.
class MixedStrategy {
 public:
  // Validates entries (finite, within [0, 1] up to tolerance, unit sum up to
  // kProbabilityTolerance) and renormalizes.
  explicit MixedStrategy(std::vector<double> probs);

  static MixedStrategy uniform(int num_actions);
  static MixedStrategy pure(int num_actions, int action);

  int num_actions() const { return static_cast<int>(probs_.size()); }
  std::span<const double> probs() const { return probs_; }
  double operator[](int action) const { return probs_[action]; }

  friend bool operator==(const MixedStrategy&, const MixedStrategy&) = default;

 private:
  std::vector<double> probs_;
};

// One mixed strategy per player, stored as a flat player-major vector.
class StrategyProfile {
 public:
  explicit StrategyProfile(const std::vector<MixedStrategy>& strategies);

  // Builds from n*m player-major probabilities; each block is validated and
  // renormalized like a MixedStrategy.
  static StrategyProfile from_flat(int num_players, int num_actions,
                                   std::vector<double> flat);
  static StrategyProfile uniform(int num_players, int num_actions);
  static StrategyProfile pure(int num_actions, std::span<const int> actions);

  int num_players() const { return num_players_; }
  int num_actions() const { return num_actions_; }
  std::span<const double> strategy(int player) const {
    return std::span<const double>(flat_).subspan(
        static_cast<std::size_t>(player) * num_actions_, num_actions_);
  }
  double prob(int player, int action) const {
    return flat_[static_cast<std::size_t>(player) * num_actions_ + action];
  }
  MixedStrategy mixed(int player) const;
  std::span<const double> flat() const { return flat_; }

  friend bool operator==(const StrategyProfile&,
                         const StrategyProfile&) = default;

 private:
  StrategyProfile(int num_players, int num_actions, std::vector<double> flat)
      : num_players_(num_players),
        num_actions_(num_actions),
        flat_(std::move(flat)) {}

  int num_players_ = 0;
  int num_actions_ = 0;
  std::vector<double> flat_;
};

// Strategic-form game with n players and m actions each. Payoffs are stored
// player-major; within a player, joint pure profiles are row-major with player
// 0 as the most significant axis.
class Game {
 public:
  Game(int num_players, int num_actions, std::vector<double> payoffs);

  int num_players() const { return num_players_; }
  int num_actions() const { return num_actions_; }
  std::size_t num_profiles() const { return num_profiles_; }

  std::span<const double> payoffs() const { return payoffs_; }
  std::span<const double> payoffs(int player) const {
    return std::span<const double>(payoffs_).subspan(
        static_cast<std::size_t>(player) * num_profiles_, num_profiles_);
  }
  double payoff(int player, std::size_t joint_index) const {
    return payoffs_[static_cast<std::size_t>(player) * num_profiles_ +
                    joint_index];
  }
  double payoff(int player, std::span<const int> actions) const {
    return payoff(player, joint_index(actions));
  }
  std::size_t joint_index(std::span<const int> actions) const;

  // Throws ShapeMismatch unless the profile has this game's n and m.
  void check_profile(const StrategyProfile& profile) const;

 private:
  int num_players_;
  int num_actions_;
  std::size_t num_profiles_;
  std::vector<double> payoffs_;
};

struct BestResponse {
  int action = 0;
  double value = 0.0;
};

struct EpsilonReport {
  std::vector<double> per_player_gain;
  double epsilon = 0.0;
};

// Expected payoff of each of `player`'s pure actions against the other
// players' strategies in a flat profile. Contracts the payoff tensor one
// opponent axis at a time, so one call costs O(m^n) multiply-adds. Owns its
// scratch buffers; one instance per thread.
class ActionValueSweep {
 public:
  explicit ActionValueSweep(const Game& game);

  void evaluate(std::span<const double> flat_profile, int player,
                std::span<double> out);

 private:
  const Game* game_;
  std::vector<double> front_;
  std::vector<double> back_;
};

std::vector<double> action_values(const Game& game,
                                  const StrategyProfile& profile, int player);

double expected_utility(const Game& game, const StrategyProfile& profile,
                        int player);

// Pure best response against the others' strategies; ties go to the lowest
// action index.
BestResponse best_response(const Game& game, const StrategyProfile& profile,
                           int player);

BestResponse argmax_lowest(std::span<const double> values);

EpsilonReport epsilon(const Game& game, const StrategyProfile& profile);

// I.i.d. uniform payoffs on (0, 1) from a stream keyed by `seed`.
Game random_game(int num_players, int num_actions, std::uint64_t seed,
                 std::size_t max_values = kDefaultMaxPayoffValues);

// n * m^n, or 0 on overflow.
std::size_t payoff_tensor_size(int num_players, int num_actions);

}  // namespace nashinit

#endif  // NASHINIT_GAME_HPP_
