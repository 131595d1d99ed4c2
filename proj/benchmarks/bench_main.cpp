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

#include <benchmark/benchmark.h>

#include "nashinit/experiments.hpp"
#include "nashinit/fictitious_play.hpp"
#include "nashinit/game.hpp"
#include "nashinit/initializers.hpp"
#include "nashinit/kmeans.hpp"
#include "nashinit/maximin_solver.hpp"
#include "nashinit/sampling.hpp"

namespace nashinit {
namespace {

void BM_ActionValueSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  const Game game = random_game(n, m, 11);
  const StrategyProfile profile = StrategyProfile::uniform(n, m);
  ActionValueSweep sweep(game);
  std::vector<double> values(m);
  for (auto _ : state) {
    for (int i = 0; i < n; ++i) sweep.evaluate(profile.flat(), i, values);
    benchmark::DoNotOptimize(values.data());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_ActionValueSweep)->Args({3, 5})->Args({3, 10})->Args({4, 5});

void BM_FictitiousPlay(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  const Game game = random_game(n, m, 12);
  FPRunConfig config;
  config.iterations = static_cast<int>(state.range(2));
  const StrategyProfile init = StrategyProfile::uniform(n, m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fp_run(game, init, config).epsilon_report.epsilon);
  }
}
BENCHMARK(BM_FictitiousPlay)
    ->Args({3, 5, 10'000})
    ->Args({3, 10, 10'000})
    ->Unit(benchmark::kMillisecond);

void BM_LloydPruned(benchmark::State& state) {
  Rng rng(13);
  const ProfilePool pool = sample_pool(3, 5, static_cast<std::size_t>(state.range(0)), rng);
  LloydOptions options;
  options.prune = state.range(1) != 0;
  std::size_t evaluations = 0;
  for (auto _ : state) {
    Rng seed_rng(14);
    Clustering c = lloyd(pool.points, kmeanspp_seed(pool.points, 5, seed_rng), options);
    evaluations = c.distance_evaluations;
    benchmark::DoNotOptimize(c.sse);
  }
  state.counters["distance_evals"] = static_cast<double>(evaluations);
}
BENCHMARK(BM_LloydPruned)
    ->Args({20'000, 0})
    ->Args({20'000, 1})
    ->Unit(benchmark::kMillisecond);

void BM_MaximinSolve(benchmark::State& state) {
  const int centers = static_cast<int>(state.range(0));
  Rng rng(15);
  std::vector<StrategyProfile> points;
  for (int c = 0; c < centers; ++c) points.push_back(sample_uniform(3, 5, rng));
  const MaximinProblem problem(3, 5, points);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_maximin(problem, rng).objective);
  }
}
BENCHMARK(BM_MaximinSolve)->Arg(1)->Arg(4)->Arg(19)->Unit(benchmark::kMillisecond);

void BM_InitBatch(benchmark::State& state) {
  const auto id = static_cast<InitAlgorithmId>(state.range(0));
  Rng rng(16);
  const ProfilePool pool = sample_pool(3, 5, kDefaultPoolSize, rng);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        generate_init_batch({id, 5, kDefaultPoolSize}, 3, 5, ++seed, &pool));
  }
  state.SetLabel(std::string(to_string(id)));
}
BENCHMARK(BM_InitBatch)
    ->DenseRange(0, 6)
    ->Unit(benchmark::kMillisecond);

void BM_ExperimentGame(benchmark::State& state) {
  ExperimentConfig config;
  config.num_games = 1;
  int g = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_game(config, g++));
  }
}
BENCHMARK(BM_ExperimentGame)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace nashinit

BENCHMARK_MAIN();
