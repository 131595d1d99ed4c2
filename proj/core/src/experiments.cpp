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

#include "nashinit/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "nashinit/parallel.hpp"
#include "nashinit/sampling.hpp"
#include "nashinit/seeding.hpp"

namespace nashinit {
namespace {

constexpr double kZ95 = 1.96;

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

template <typename T>
T parse_number(const std::string& text, const char* what) {
  T value{};
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw std::invalid_argument(std::string("bad ") + what + " field '" + text + "'");
  }
  return value;
}

InitAlgorithmId parse_algorithm_field(const std::string& text) {
  auto id = parse_init_algorithm(text);
  if (!id) throw std::invalid_argument("unknown algorithm '" + text + "'");
  return *id;
}

// Reads data lines after checking the header; '#' lines are comments.
template <typename Fn>
void for_each_record(std::istream& in, const std::string& header,
                     std::size_t columns, Fn&& fn) {
  std::string line;
  if (!std::getline(in, line) || line != header) {
    throw std::invalid_argument("expected CSV header '" + header + "'");
  }
  int line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line.front() == '#') continue;
    auto fields = split_csv_line(line);
    if (fields.size() != columns) {
      throw std::invalid_argument("line " + std::to_string(line_number) +
                                  ": expected " + std::to_string(columns) +
                                  " columns");
    }
    fn(fields);
  }
}

}  // namespace

std::string format_double(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, end);
}

void ExperimentConfig::validate() const {
  if (num_players < 2 || num_actions < 2) {
    throw std::invalid_argument("experiments need n >= 2 and m >= 2");
  }
  if (num_games < 1) throw std::invalid_argument("number of games must be >= 1");
  if (algorithms.empty()) throw std::invalid_argument("no algorithms selected");
  if (k_values.empty()) throw std::invalid_argument("no K values given");
  if (k_values.front() < 1) throw std::invalid_argument("K must be >= 1");
  if (!std::is_sorted(k_values.begin(), k_values.end())) {
    throw std::invalid_argument("K values must be ascending");
  }
  if (iterations < 1) throw std::invalid_argument("iterations T must be >= 1");
  const bool pooled = std::any_of(algorithms.begin(), algorithms.end(), uses_pool);
  if (pooled && pool_size < max_k()) {
    throw std::invalid_argument("pool size H must be >= the largest K");
  }
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
  if (payoff_tensor_size(num_players, num_actions) == 0 ||
      payoff_tensor_size(num_players, num_actions) > kDefaultMaxPayoffValues) {
    throw std::invalid_argument("game too large");
  }
}

Summary summarize(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("cannot summarize an empty group");
  Summary s;
  s.count = static_cast<int>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / s.count;
  if (s.count > 1) {
    double squares = 0.0;
    for (double v : values) squares += (v - s.mean) * (v - s.mean);
    s.std = std::sqrt(squares / (s.count - 1));
  }
  s.ci95 = kZ95 * s.std / std::sqrt(static_cast<double>(s.count));
  return s;
}

std::vector<AggregateRow> aggregate(std::span<const ResultRow> rows) {
  if (rows.empty()) throw std::invalid_argument("no rows to aggregate");
  std::vector<std::pair<InitAlgorithmId, int>> order;
  std::map<std::pair<InitAlgorithmId, int>, std::vector<double>> groups;
  for (const ResultRow& row : rows) {
    auto key = std::make_pair(row.algorithm, row.k);
    auto [it, inserted] = groups.try_emplace(key);
    if (inserted) order.push_back(key);
    it->second.push_back(row.epsilon_star);
  }
  std::vector<AggregateRow> aggregates;
  aggregates.reserve(order.size());
  for (const auto& key : order) {
    const Summary s = summarize(groups[key]);
    aggregates.push_back({key.first, key.second, s.mean, s.std, s.ci95, s.count});
  }
  return aggregates;
}

std::uint64_t game_seed(std::uint64_t master_seed, int game_index) {
  return stream_seed(master_seed, "game", static_cast<std::uint64_t>(game_index));
}

std::vector<ResultRow> run_game(const ExperimentConfig& config, int game_index) {
  const int n = config.num_players;
  const int m = config.num_actions;
  const auto g = static_cast<std::uint64_t>(game_index);
  const std::uint64_t seed = game_seed(config.master_seed, game_index);
  const Game game = random_game(n, m, seed);

  std::optional<ProfilePool> pool;
  if (std::any_of(config.algorithms.begin(), config.algorithms.end(), uses_pool)) {
    Rng pool_rng = make_stream(config.master_seed, "pool", g);
    pool = sample_pool(n, m, static_cast<std::size_t>(config.pool_size), pool_rng);
  }

  FPRunConfig fp_config;
  fp_config.iterations = config.iterations;
  fp_config.update_order = config.update_order;

  std::vector<ResultRow> rows;
  rows.reserve(config.algorithms.size() * config.k_values.size());
  for (InitAlgorithmId id : config.algorithms) {
    const InitAlgorithm algorithm{id, config.max_k(), config.pool_size};
    const InitBatch batch = generate_init_batch(
        algorithm, n, m, stream_seed(config.master_seed, to_string(id), g),
        pool ? &*pool : nullptr, config.solver);
    std::vector<double> epsilons;
    epsilons.reserve(batch.profiles.size());
    for (const StrategyProfile& init : batch.profiles) {
      epsilons.push_back(fp_run(game, init, fp_config).epsilon_report.epsilon);
    }
    for (int k : config.k_values) {
      const std::size_t prefix =
          std::min(static_cast<std::size_t>(k), epsilons.size());
      const double best =
          *std::min_element(epsilons.begin(), epsilons.begin() + prefix);
      rows.push_back({game_index, id, k, best, seed});
    }
  }
  return rows;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  const auto games = static_cast<std::size_t>(config.num_games);
  std::vector<std::vector<ResultRow>> per_game(games);
  std::vector<char> done(games, 0);

  parallel_for(games, config.threads, [&](std::size_t g) {
    if (config.time_budget_seconds) {
      const std::chrono::duration<double> elapsed =
          std::chrono::steady_clock::now() - start;
      if (elapsed.count() > *config.time_budget_seconds) return;
    }
    per_game[g] = run_game(config, static_cast<int>(g));
    done[g] = 1;
  });

  ExperimentResult result;
  for (std::size_t g = 0; g < games && done[g]; ++g) {
    result.rows.insert(result.rows.end(), per_game[g].begin(), per_game[g].end());
    ++result.completed_games;
  }
  result.truncated = result.completed_games < config.num_games;
  if (!result.rows.empty()) result.aggregates = aggregate(result.rows);
  return result;
}

ExperimentResult k_sweep(const ExperimentConfig& config) {
  if (config.k_values.empty()) throw std::invalid_argument("no K values given");
  return run_experiment(config);
}

void write_rows_csv(std::ostream& out, const ExperimentResult& result) {
  out << "game_index,algorithm,K,epsilon_star,seed\n";
  for (const ResultRow& row : result.rows) {
    out << row.game_index << ',' << to_string(row.algorithm) << ',' << row.k
        << ',' << format_double(row.epsilon_star) << ',' << row.seed << '\n';
  }
  if (result.truncated) {
    out << "# truncated: " << result.completed_games << " games completed\n";
  }
}

std::vector<ResultRow> read_rows_csv(std::istream& in) {
  std::vector<ResultRow> rows;
  for_each_record(in, "game_index,algorithm,K,epsilon_star,seed", 5,
                  [&](const std::vector<std::string>& f) {
                    rows.push_back({parse_number<int>(f[0], "game_index"),
                                    parse_algorithm_field(f[1]),
                                    parse_number<int>(f[2], "K"),
                                    parse_number<double>(f[3], "epsilon_star"),
                                    parse_number<std::uint64_t>(f[4], "seed")});
                  });
  return rows;
}

void write_aggregates_csv(std::ostream& out,
                          std::span<const AggregateRow> aggregates) {
  out << "algorithm,K,mean,std,ci95,G\n";
  for (const AggregateRow& a : aggregates) {
    out << to_string(a.algorithm) << ',' << a.k << ',' << format_double(a.mean)
        << ',' << format_double(a.std) << ',' << format_double(a.ci95) << ','
        << a.games << '\n';
  }
}

std::vector<AggregateRow> read_aggregates_csv(std::istream& in) {
  std::vector<AggregateRow> aggregates;
  for_each_record(in, "algorithm,K,mean,std,ci95,G", 6,
                  [&](const std::vector<std::string>& f) {
                    aggregates.push_back({parse_algorithm_field(f[0]),
                                          parse_number<int>(f[1], "K"),
                                          parse_number<double>(f[2], "mean"),
                                          parse_number<double>(f[3], "std"),
                                          parse_number<double>(f[4], "ci95"),
                                          parse_number<int>(f[5], "G")});
                  });
  return aggregates;
}

void write_figure_csv(std::ostream& out,
                      std::span<const AggregateRow> aggregates) {
  out << "algorithm,K,mean,ci95\n";
  for (const AggregateRow& a : aggregates) {
    out << to_string(a.algorithm) << ',' << a.k << ',' << format_double(a.mean)
        << ',' << format_double(a.ci95) << '\n';
  }
}

std::vector<AggregateRow> read_figure_csv(std::istream& in) {
  std::vector<AggregateRow> aggregates;
  for_each_record(in, "algorithm,K,mean,ci95", 4,
                  [&](const std::vector<std::string>& f) {
                    AggregateRow a;
                    a.algorithm = parse_algorithm_field(f[0]);
                    a.k = parse_number<int>(f[1], "K");
                    a.mean = parse_number<double>(f[2], "mean");
                    a.ci95 = parse_number<double>(f[3], "ci95");
                    aggregates.push_back(a);
                  });
  return aggregates;
}

}  // namespace nashinit
