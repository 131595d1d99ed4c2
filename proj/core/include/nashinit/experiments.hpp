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

#ifndef NASHINIT_EXPERIMENTS_HPP_
#define NASHINIT_EXPERIMENTS_HPP_

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "nashinit/fictitious_play.hpp"
#include "nashinit/initializers.hpp"
#include "nashinit/maximin_solver.hpp"

namespace nashinit {

// Desk-scale defaults; --paper-scale switches to 10,000 games and a pool of
// 100,000 profiles.
inline constexpr int kDefaultGames = 1000;
inline constexpr int kDefaultSweepGames = 500;
inline constexpr int kDefaultPoolSize = 20'000;
inline constexpr int kPaperScaleGames = 10'000;
inline constexpr int kPaperScalePoolSize = 100'000;

struct ExperimentConfig {
  int num_players = 3;
  int num_actions = 5;
  int num_games = kDefaultGames;
  std::vector<InitAlgorithmId> algorithms{all_init_algorithms().begin(),
                                          all_init_algorithms().end()};
  // Ascending. Each algorithm builds one batch of the largest K and scores
  // every K on a prefix of it.
  std::vector<int> k_values{5};
  int iterations = 10'000;
  int pool_size = kDefaultPoolSize;
  std::uint64_t master_seed = 1;
  UpdateOrder update_order = UpdateOrder::kSimultaneous;
  MaximinOptions solver;
  int threads = 1;
  // Stop scheduling new games once this much wall time has passed; the result
  // keeps the longest finished prefix of games and is marked truncated.
  std::optional<double> time_budget_seconds;

  void validate() const;
  int max_k() const { return k_values.back(); }
};

struct ResultRow {
  int game_index = 0;
  InitAlgorithmId algorithm = InitAlgorithmId::kClassic;
  int k = 1;
  double epsilon_star = 0.0;
  std::uint64_t seed = 0;  // seed of the game

  friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

struct AggregateRow {
  InitAlgorithmId algorithm = InitAlgorithmId::kClassic;
  int k = 1;
  double mean = 0.0;
  double std = 0.0;   // sample standard deviation (divisor G - 1)
  double ci95 = 0.0;  // 1.96 * std / sqrt(G)
  int games = 0;

  friend bool operator==(const AggregateRow&, const AggregateRow&) = default;
};

struct ExperimentResult {
  std::vector<ResultRow> rows;
  std::vector<AggregateRow> aggregates;
  int completed_games = 0;
  bool truncated = false;
};

struct Summary {
  double mean = 0.0;
  double std = 0.0;
  double ci95 = 0.0;
  int count = 0;
};

Summary summarize(std::span<const double> values);

// Groups rows by (algorithm, K) in first-appearance order.
std::vector<AggregateRow> aggregate(std::span<const ResultRow> rows);

std::uint64_t game_seed(std::uint64_t master_seed, int game_index);

// All rows for one game: algorithm-major, then K ascending. Classic has a
// single initialization, so its value repeats at every K.
std::vector<ResultRow> run_game(const ExperimentConfig& config, int game_index);

ExperimentResult run_experiment(const ExperimentConfig& config);

// run_experiment over several K values; rows at each K come from prefixes of
// the same batch, so every game's epsilon* is non-increasing in K.
ExperimentResult k_sweep(const ExperimentConfig& config);

// game_index,algorithm,K,epsilon_star,seed
void write_rows_csv(std::ostream& out, const ExperimentResult& result);
std::vector<ResultRow> read_rows_csv(std::istream& in);
// algorithm,K,mean,std,ci95,G
void write_aggregates_csv(std::ostream& out,
                          std::span<const AggregateRow> aggregates);
std::vector<AggregateRow> read_aggregates_csv(std::istream& in);
// algorithm,K,mean,ci95
void write_figure_csv(std::ostream& out,
                      std::span<const AggregateRow> aggregates);
std::vector<AggregateRow> read_figure_csv(std::istream& in);

// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

}  // namespace nashinit

#endif  // NASHINIT_EXPERIMENTS_HPP_
