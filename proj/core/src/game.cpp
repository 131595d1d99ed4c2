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

#include "nashinit/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "nashinit/seeding.hpp"

namespace nashinit {
namespace {

// Checks one block of probabilities and divides it by its sum.
void normalize_block(std::span<double> block) {
  if (block.empty()) throw std::invalid_argument("empty mixed strategy");
  double sum = 0.0;
  for (double& p : block) {
    if (!std::isfinite(p)) {
      throw std::invalid_argument("mixed strategy has a non-finite entry");
    }
    if (p < -kProbabilityTolerance || p > 1.0 + kProbabilityTolerance) {
      throw std::invalid_argument("mixed strategy entry outside [0, 1]: " +
                                  std::to_string(p));
    }
    p = std::max(p, 0.0);
    sum += p;
  }
  if (std::abs(sum - 1.0) > kProbabilityTolerance) {
    throw std::invalid_argument("mixed strategy sums to " +
                                std::to_string(sum));
  }
  for (double& p : block) p /= sum;
}

std::size_t checked_power(int base, int exponent) {
  std::size_t result = 1;
  for (int i = 0; i < exponent; ++i) {
    if (result > std::numeric_limits<std::size_t>::max() /
                     static_cast<std::size_t>(base)) {
      return 0;
    }
    result *= static_cast<std::size_t>(base);
  }
  return result;
}

}  // namespace

MixedStrategy::MixedStrategy(std::vector<double> probs)
    : probs_(std::move(probs)) {
  normalize_block(probs_);
}

MixedStrategy MixedStrategy::uniform(int num_actions) {
  if (num_actions < 1) throw std::invalid_argument("num_actions must be >= 1");
  return MixedStrategy(std::vector<double>(num_actions, 1.0 / num_actions));
}

MixedStrategy MixedStrategy::pure(int num_actions, int action) {
  if (action < 0 || action >= num_actions) {
    throw std::invalid_argument("pure action out of range");
  }
  std::vector<double> probs(num_actions, 0.0);
  probs[action] = 1.0;
  return MixedStrategy(std::move(probs));
}

StrategyProfile::StrategyProfile(const std::vector<MixedStrategy>& strategies) {
  if (strategies.empty()) throw std::invalid_argument("empty profile");
  num_players_ = static_cast<int>(strategies.size());
  num_actions_ = strategies.front().num_actions();
  flat_.reserve(static_cast<std::size_t>(num_players_) * num_actions_);
  for (const MixedStrategy& s : strategies) {
    if (s.num_actions() != num_actions_) throw ShapeMismatch();
    flat_.insert(flat_.end(), s.probs().begin(), s.probs().end());
  }
}

StrategyProfile StrategyProfile::from_flat(int num_players, int num_actions,
                                           std::vector<double> flat) {
  if (num_players < 1 || num_actions < 1 ||
      flat.size() != static_cast<std::size_t>(num_players) * num_actions) {
    throw ShapeMismatch();
  }
  for (int i = 0; i < num_players; ++i) {
    normalize_block(std::span<double>(flat).subspan(
        static_cast<std::size_t>(i) * num_actions, num_actions));
  }
  return StrategyProfile(num_players, num_actions, std::move(flat));
}

StrategyProfile StrategyProfile::uniform(int num_players, int num_actions) {
  return StrategyProfile(
      std::vector<MixedStrategy>(num_players, MixedStrategy::uniform(num_actions)));
}

StrategyProfile StrategyProfile::pure(int num_actions,
                                      std::span<const int> actions) {
  std::vector<MixedStrategy> strategies;
  strategies.reserve(actions.size());
  for (int a : actions) strategies.push_back(MixedStrategy::pure(num_actions, a));
  return StrategyProfile(strategies);
}

MixedStrategy StrategyProfile::mixed(int player) const {
  auto s = strategy(player);
  return MixedStrategy(std::vector<double>(s.begin(), s.end()));
}

std::size_t payoff_tensor_size(int num_players, int num_actions) {
  if (num_players < 1 || num_actions < 1) return 0;
  const std::size_t profiles = checked_power(num_actions, num_players);
  if (profiles == 0 || profiles > std::numeric_limits<std::size_t>::max() /
                                      static_cast<std::size_t>(num_players)) {
    return 0;
  }
  return profiles * static_cast<std::size_t>(num_players);
}

Game::Game(int num_players, int num_actions, std::vector<double> payoffs)
    : num_players_(num_players),
      num_actions_(num_actions),
      payoffs_(std::move(payoffs)) {
  if (num_players < 1 || num_actions < 1) {
    throw std::invalid_argument("game needs at least one player and action");
  }
  const std::size_t expected = payoff_tensor_size(num_players, num_actions);
  if (expected == 0) throw std::invalid_argument("game too large");
  if (payoffs_.size() != expected) {
    throw std::invalid_argument("payoff tensor has " +
                                std::to_string(payoffs_.size()) +
                                " values, expected " + std::to_string(expected));
  }
  for (double v : payoffs_) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite payoff");
  }
  num_profiles_ = expected / static_cast<std::size_t>(num_players);
}

std::size_t Game::joint_index(std::span<const int> actions) const {
  if (static_cast<int>(actions.size()) != num_players_) throw ShapeMismatch();
  std::size_t index = 0;
  for (int a : actions) {
    if (a < 0 || a >= num_actions_) throw ShapeMismatch();
    index = index * static_cast<std::size_t>(num_actions_) + a;
  }
  return index;
}

void Game::check_profile(const StrategyProfile& profile) const {
  if (profile.num_players() != num_players_ ||
      profile.num_actions() != num_actions_) {
    throw ShapeMismatch();
  }
}

ActionValueSweep::ActionValueSweep(const Game& game)
    : game_(&game),
      front_(game.num_profiles() / game.num_actions() + 1),
      back_(game.num_profiles() / game.num_actions() + 1) {}

void ActionValueSweep::evaluate(std::span<const double> flat_profile,
                                int player, std::span<double> out) {
  const int n = game_->num_players();
  const std::size_t m = static_cast<std::size_t>(game_->num_actions());
  const double* src = game_->payoffs(player).data();
  // Contract axes n-1 .. 0, skipping `player`. Before contracting axis j the
  // live tensor has axes 0..j, plus `player` trailing when player > j.
  bool first = true;
  for (int j = n - 1; j >= 0; --j) {
    if (j == player) continue;
    const std::size_t inner = player > j ? m : 1;
    const double* sigma = flat_profile.data() + static_cast<std::size_t>(j) * m;
    std::size_t block_outer = 1;
    for (int k = 0; k < j; ++k) block_outer *= m;
    double* dst = (first || src == back_.data()) ? front_.data() : back_.data();
    if (inner == 1) {
      for (std::size_t o = 0; o < block_outer; ++o) {
        const double* row = src + o * m;
        double acc = 0.0;
        for (std::size_t a = 0; a < m; ++a) acc += row[a] * sigma[a];
        dst[o] = acc;
      }
    } else {
      for (std::size_t o = 0; o < block_outer; ++o) {
        double* out_row = dst + o * inner;
        std::fill(out_row, out_row + inner, 0.0);
        for (std::size_t a = 0; a < m; ++a) {
          const double w = sigma[a];
          const double* in_row = src + (o * m + a) * inner;
          for (std::size_t r = 0; r < inner; ++r) out_row[r] += w * in_row[r];
        }
      }
    }
    src = dst;
    first = false;
  }
  // With one player nothing is contracted and src is the payoff row itself.
  std::copy(src, src + m, out.begin());
}

std::vector<double> action_values(const Game& game,
                                  const StrategyProfile& profile, int player) {
  game.check_profile(profile);
  if (player < 0 || player >= game.num_players()) throw ShapeMismatch();
  ActionValueSweep sweep(game);
  std::vector<double> values(game.num_actions());
  sweep.evaluate(profile.flat(), player, values);
  return values;
}

double expected_utility(const Game& game, const StrategyProfile& profile,
                        int player) {
  const std::vector<double> values = action_values(game, profile, player);
  auto sigma = profile.strategy(player);
  return std::inner_product(values.begin(), values.end(), sigma.begin(), 0.0);
}

BestResponse argmax_lowest(std::span<const double> values) {
  BestResponse best{0, values[0]};
  for (std::size_t a = 1; a < values.size(); ++a) {
    if (values[a] > best.value) best = {static_cast<int>(a), values[a]};
  }
  return best;
}

BestResponse best_response(const Game& game, const StrategyProfile& profile,
                           int player) {
  return argmax_lowest(action_values(game, profile, player));
}

EpsilonReport epsilon(const Game& game, const StrategyProfile& profile) {
  game.check_profile(profile);
  EpsilonReport report;
  report.per_player_gain.resize(game.num_players());
  ActionValueSweep sweep(game);
  std::vector<double> values(game.num_actions());
  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < game.num_players(); ++i) {
    sweep.evaluate(profile.flat(), i, values);
    auto sigma = profile.strategy(i);
    const double current =
        std::inner_product(values.begin(), values.end(), sigma.begin(), 0.0);
    const double gain = argmax_lowest(values).value - current;
    if (gain < -kRegretSlack) {
      throw std::logic_error("negative regret " + std::to_string(gain));
    }
    report.per_player_gain[i] = gain;
    worst = std::max(worst, gain);
  }
  report.epsilon = std::max(worst, 0.0);
  return report;
}

Game random_game(int num_players, int num_actions, std::uint64_t seed,
                 std::size_t max_values) {
  if (num_players < 2 || num_actions < 2) {
    throw std::invalid_argument("random games need n >= 2 and m >= 2");
  }
  const std::size_t size = payoff_tensor_size(num_players, num_actions);
  if (size == 0 || size > max_values) throw std::invalid_argument("game too large");
  Rng rng = make_stream(seed, "random-game");
  std::vector<double> payoffs(size);
  for (double& v : payoffs) v = uniform_open01(rng);
  return Game(num_players, num_actions, std::move(payoffs));
}

}  // namespace nashinit
