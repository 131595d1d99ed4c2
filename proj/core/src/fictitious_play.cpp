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

#include "nashinit/fictitious_play.hpp"

#include <charconv>
#include <optional>
#include <stdexcept>

#include "nashinit/parallel.hpp"

namespace nashinit {
namespace {

void snapshot(std::vector<TrajectorySnapshot>& trajectory, int iteration,
              const std::vector<double>& average) {
  trajectory.push_back({iteration, average});
}

}  // namespace

void FPRunConfig::validate() const {
  if (iterations < 1) throw std::invalid_argument("iterations T must be >= 1");
  if (record_trajectory && trajectory_stride < 1) {
    throw std::invalid_argument("trajectory stride must be >= 1");
  }
}

FPResult fp_run(const Game& game, const StrategyProfile& init,
                const FPRunConfig& config) {
  config.validate();
  game.check_profile(init);
  const int n = game.num_players();
  const std::size_t m = static_cast<std::size_t>(game.num_actions());

  std::vector<double> average(init.flat().begin(), init.flat().end());
  std::vector<double> values(m);
  std::vector<int> responses(n);
  ActionValueSweep sweep(game);

  FPResult result{init, {}, 0, 0, 0, {}, {}};
  if (config.record_trajectory) {
    result.played_actions.reserve(static_cast<std::size_t>(config.iterations) * n);
    snapshot(result.trajectory, 0, average);
  }

  const bool sequential = config.update_order == UpdateOrder::kSequential;
  for (int t = 1; t <= config.iterations; ++t) {
    const double keep = static_cast<double>(t) / (t + 1.0);
    const double step = 1.0 / (t + 1.0);
    auto blend = [&](int player) {
      double* block = average.data() + static_cast<std::size_t>(player) * m;
      for (std::size_t a = 0; a < m; ++a) block[a] *= keep;
      block[responses[player]] += step;
    };
    for (int i = 0; i < n; ++i) {
      sweep.evaluate(average, i, values);
      responses[i] = argmax_lowest(values).action;
      if (sequential) blend(i);
    }
    if (!sequential) {
      for (int i = 0; i < n; ++i) blend(i);
    }
    result.best_response_evaluations += n;
    if (config.record_trajectory) {
      result.played_actions.insert(result.played_actions.end(),
                                   responses.begin(), responses.end());
      if (t % config.trajectory_stride == 0 || t == config.iterations) {
        snapshot(result.trajectory, t, average);
      }
    }
  }

  result.final_profile =
      StrategyProfile::from_flat(n, static_cast<int>(m), std::move(average));
  result.epsilon_report = epsilon(game, result.final_profile);
  result.iterations_run = config.iterations;
  return result;
}

FPResult fp_multi(const Game& game, std::span<const StrategyProfile> inits,
                  const FPRunConfig& config, int threads) {
  if (inits.empty()) throw std::invalid_argument("empty initialization batch");
  config.validate();
  std::vector<std::optional<FPResult>> runs(inits.size());
  parallel_for(inits.size(), threads, [&](std::size_t k) {
    runs[k] = fp_run(game, inits[k], config);
    runs[k]->init_index = static_cast<int>(k);
  });
  std::size_t best = 0;
  for (std::size_t k = 1; k < runs.size(); ++k) {
    if (runs[k]->epsilon_report.epsilon < runs[best]->epsilon_report.epsilon) {
      best = k;
    }
  }
  return std::move(*runs[best]);
}

FPResult fp_multi(const Game& game, const InitBatch& batch,
                  const FPRunConfig& config, int threads) {
  return fp_multi(game, std::span<const StrategyProfile>(batch.profiles), config,
                  threads);
}

void write_trajectory_csv(std::ostream& out, const FPResult& result) {
  const int n = result.final_profile.num_players();
  const int m = result.final_profile.num_actions();
  out << "t,player,action,prob\n";
  char buffer[64];
  for (const TrajectorySnapshot& snap : result.trajectory) {
    for (int i = 0; i < n; ++i) {
      for (int a = 0; a < m; ++a) {
        const double p = snap.profile[static_cast<std::size_t>(i) * m + a];
        auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), p);
        out << snap.iteration << ',' << i << ',' << a << ','
            << std::string_view(buffer, end - buffer) << '\n';
      }
    }
  }
}

}  // namespace nashinit
