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

#ifndef NASHINIT_FICTITIOUS_PLAY_HPP_
#define NASHINIT_FICTITIOUS_PLAY_HPP_

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "nashinit/game.hpp"
#include "nashinit/initializers.hpp"

namespace nashinit {

enum class UpdateOrder {
  // Every player best-responds to the previous iterate, then all averages move.
  kSimultaneous,
  // Players update in index order; later players see earlier players' new
  // averages within the same iteration.
  kSequential,
};

struct FPRunConfig {
  int iterations = 10'000;
  UpdateOrder update_order = UpdateOrder::kSimultaneous;
  // Keeps the played best responses and periodic snapshots of the averages.
  bool record_trajectory = false;
  int trajectory_stride = 100;

  void validate() const;
};

struct TrajectorySnapshot {
  int iteration = 0;
  std::vector<double> profile;  // flat, player-major
};

struct FPResult {
  StrategyProfile final_profile;
  EpsilonReport epsilon_report;
  int init_index = 0;
  int iterations_run = 0;
  std::int64_t best_response_evaluations = 0;
  // Filled only with record_trajectory: played_actions[(t - 1) * n + i] is
  // player i's best response at iteration t.
  std::vector<int> played_actions;
  std::vector<TrajectorySnapshot> trajectory;
};

// Fictitious play: sigma^t = (1 - 1/(t+1)) sigma^{t-1} + 1/(t+1) BR^t, for
// t = 1..T, returning sigma^T with its epsilon.
FPResult fp_run(const Game& game, const StrategyProfile& init,
                const FPRunConfig& config);

// One fp_run per initial profile; returns the run with the smallest epsilon
// (lowest index on ties). Runs are spread over up to `threads` workers and the
// answer does not depend on how many.
FPResult fp_multi(const Game& game, std::span<const StrategyProfile> inits,
                  const FPRunConfig& config, int threads = 1);
FPResult fp_multi(const Game& game, const InitBatch& batch,
                  const FPRunConfig& config, int threads = 1);

// Rows `t,player,action,prob` for every recorded snapshot.
void write_trajectory_csv(std::ostream& out, const FPResult& result);

}  // namespace nashinit

#endif  // NASHINIT_FICTITIOUS_PLAY_HPP_
