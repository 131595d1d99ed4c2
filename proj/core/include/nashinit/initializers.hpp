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

#ifndef NASHINIT_INITIALIZERS_HPP_
#define NASHINIT_INITIALIZERS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nashinit/game.hpp"
#include "nashinit/kmeans.hpp"
#include "nashinit/maximin_solver.hpp"
#include "nashinit/sampling.hpp"
#include "nashinit/seeding.hpp"

namespace nashinit {

enum class InitAlgorithmId {
  kClassic,
  kMacQueen1,
  kMacQueen2,
  kMaximinUnsampled,
  kMaximinSampled,
  kFictitiousPlayPP,
  kKMeans,
};

// Stable names used on the command line and in CSV output.
std::string_view to_string(InitAlgorithmId id);
std::optional<InitAlgorithmId> parse_init_algorithm(std::string_view name);
std::span<const InitAlgorithmId> all_init_algorithms();
std::string valid_algorithm_names();

// True for the schemes that select from a sampled pool.
bool uses_pool(InitAlgorithmId id);

struct InitAlgorithm {
  InitAlgorithmId id = InitAlgorithmId::kClassic;
  int num_inits = 1;   // K
  int pool_size = 0;   // H, only read by pool-based schemes

  // Throws on K < 1 or H < K for pool-based schemes. Classic is always K = 1
  // and ignores num_inits.
  void validate() const;
  int effective_inits() const {
    return id == InitAlgorithmId::kClassic ? 1 : num_inits;
  }
};

struct InitBatch {
  InitAlgorithm algorithm;
  std::vector<StrategyProfile> profiles;
  std::uint64_t seed = 0;
};

inline constexpr int kKMeansRestarts = 5;

InitBatch init_classic(int num_players, int num_actions);

// K i.i.d. draws; macqueen-1 uses the naive sampler, macqueen-2 the
// exponential one.
InitBatch init_macqueen(int num_players, int num_actions, int num_inits,
                        SamplerScheme scheme, Rng& rng);

// Greedy farthest-point selection from the pool: a uniform first pick, then
// repeatedly the unchosen point whose distance to its nearest chosen point is
// largest (lowest index on ties).
InitBatch init_maximin_sampled(const ProfilePool& pool, int num_inits, Rng& rng);
InitBatch init_maximin_sampled(int num_players, int num_actions, int num_inits,
                               int pool_size, Rng& rng);

// k-means++-style selection from the pool, weights proportional to squared
// distance to the nearest chosen point.
InitBatch init_fppp(const ProfilePool& pool, int num_inits, Rng& rng);
InitBatch init_fppp(int num_players, int num_actions, int num_inits,
                    int pool_size, Rng& rng);

// Centers of the best of kKMeansRestarts k-means runs over the pool.
InitBatch init_kmeans(const ProfilePool& pool, int num_inits, Rng& rng,
                      const LloydOptions& lloyd_options = {});
InitBatch init_kmeans(int num_players, int num_actions, int num_inits,
                      int pool_size, Rng& rng);

// First profile uniform on the product simplex; each next one maximizes the
// minimum squared distance to all earlier ones over the whole product simplex.
InitBatch init_maximin_unsampled(int num_players, int num_actions,
                                 int num_inits, Rng& rng,
                                 const MaximinOptions& options = {});
// Same, starting from a given first profile.
InitBatch init_maximin_unsampled_from(const StrategyProfile& first,
                                      int num_inits, Rng& rng,
                                      const MaximinOptions& options = {});

// Dispatches on the algorithm id with a generator seeded from `seed`. Pool
// schemes use `shared_pool` when given (it must hold at least pool_size
// points of the right shape), otherwise they draw their own pool.
InitBatch generate_init_batch(const InitAlgorithm& algorithm, int num_players,
                              int num_actions, std::uint64_t seed,
                              const ProfilePool* shared_pool = nullptr,
                              const MaximinOptions& solver_options = {});

}  // namespace nashinit

#endif  // NASHINIT_INITIALIZERS_HPP_
