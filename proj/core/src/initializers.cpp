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

#include "nashinit/initializers.hpp"

#include <array>
#include <limits>
#include <stdexcept>

namespace nashinit {
namespace {

struct AlgorithmName {
  InitAlgorithmId id;
  std::string_view name;
};

constexpr std::array<AlgorithmName, 7> kAlgorithmNames = {{
    {InitAlgorithmId::kClassic, "classic"},
    {InitAlgorithmId::kMacQueen1, "macqueen-1"},
    {InitAlgorithmId::kMacQueen2, "macqueen-2"},
    {InitAlgorithmId::kMaximinUnsampled, "maximin-u"},
    {InitAlgorithmId::kMaximinSampled, "maximin-s"},
    {InitAlgorithmId::kFictitiousPlayPP, "fp++"},
    {InitAlgorithmId::kKMeans, "k-means"},
}};

constexpr std::array<InitAlgorithmId, 7> kAllAlgorithms = {
    InitAlgorithmId::kClassic,          InitAlgorithmId::kMacQueen1,
    InitAlgorithmId::kMacQueen2,        InitAlgorithmId::kMaximinUnsampled,
    InitAlgorithmId::kMaximinSampled,   InitAlgorithmId::kFictitiousPlayPP,
    InitAlgorithmId::kKMeans,
};

void check_pool_request(const ProfilePool& pool, int num_inits) {
  if (num_inits < 1) throw std::invalid_argument("K must be >= 1");
  if (pool.size() < static_cast<std::size_t>(num_inits)) {
    throw std::invalid_argument("pool size H must be >= K");
  }
}

InitBatch make_batch(InitAlgorithmId id, int num_inits, int pool_size) {
  InitBatch batch;
  batch.algorithm = InitAlgorithm{id, num_inits, pool_size};
  return batch;
}

}  // namespace

std::string_view to_string(InitAlgorithmId id) {
  for (const auto& entry : kAlgorithmNames) {
    if (entry.id == id) return entry.name;
  }
  return "unknown";
}

std::optional<InitAlgorithmId> parse_init_algorithm(std::string_view name) {
  for (const auto& entry : kAlgorithmNames) {
    if (entry.name == name) return entry.id;
  }
  return std::nullopt;
}

std::span<const InitAlgorithmId> all_init_algorithms() { return kAllAlgorithms; }

std::string valid_algorithm_names() {
  std::string names;
  for (const auto& entry : kAlgorithmNames) {
    if (!names.empty()) names += '|';
    names += entry.name;
  }
  return names;
}

bool uses_pool(InitAlgorithmId id) {
  return id == InitAlgorithmId::kMaximinSampled ||
         id == InitAlgorithmId::kFictitiousPlayPP ||
         id == InitAlgorithmId::kKMeans;
}

void InitAlgorithm::validate() const {
  if (id == InitAlgorithmId::kClassic) return;
  if (num_inits < 1) throw std::invalid_argument("K must be >= 1");
  if (uses_pool(id) && pool_size < num_inits) {
    throw std::invalid_argument("pool size H must be >= K");
  }
}

InitBatch init_classic(int num_players, int num_actions) {
  InitBatch batch = make_batch(InitAlgorithmId::kClassic, 1, 0);
  batch.profiles.push_back(StrategyProfile::uniform(num_players, num_actions));
  return batch;
}

InitBatch init_macqueen(int num_players, int num_actions, int num_inits,
                        SamplerScheme scheme, Rng& rng) {
  if (num_inits < 1) throw std::invalid_argument("K must be >= 1");
  InitBatch batch = make_batch(scheme == SamplerScheme::kNaive
                                   ? InitAlgorithmId::kMacQueen1
                                   : InitAlgorithmId::kMacQueen2,
                               num_inits, 0);
  for (int k = 0; k < num_inits; ++k) {
    batch.profiles.push_back(sample_profile(scheme, num_players, num_actions, rng));
  }
  return batch;
}

InitBatch init_maximin_sampled(const ProfilePool& pool, int num_inits,
                               Rng& rng) {
  check_pool_request(pool, num_inits);
  InitBatch batch = make_batch(InitAlgorithmId::kMaximinSampled, num_inits,
                               static_cast<int>(pool.size()));
  const std::size_t size = pool.size();
  std::vector<char> chosen(size, 0);
  std::vector<double> nearest(size, std::numeric_limits<double>::infinity());

  std::size_t pick = uniform_index(rng, size);
  for (int k = 0;; ++k) {
    chosen[pick] = 1;
    batch.profiles.push_back(pool.profile(pick));
    if (k + 1 == num_inits) break;
    auto center = pool.points[pick];
    std::size_t next = size;
    double next_d2 = -1.0;
    for (std::size_t h = 0; h < size; ++h) {
      if (chosen[h]) continue;
      nearest[h] = std::min(nearest[h], squared_distance(pool.points[h], center));
      if (nearest[h] > next_d2) {
        next_d2 = nearest[h];
        next = h;
      }
    }
    pick = next;
  }
  return batch;
}

InitBatch init_maximin_sampled(int num_players, int num_actions, int num_inits,
                               int pool_size, Rng& rng) {
  if (pool_size < num_inits) throw std::invalid_argument("pool size H must be >= K");
  const ProfilePool pool = sample_pool(num_players, num_actions, pool_size, rng);
  return init_maximin_sampled(pool, num_inits, rng);
}

InitBatch init_fppp(const ProfilePool& pool, int num_inits, Rng& rng) {
  check_pool_request(pool, num_inits);
  InitBatch batch = make_batch(InitAlgorithmId::kFictitiousPlayPP, num_inits,
                               static_cast<int>(pool.size()));
  for (std::size_t index : select_d2_weighted(pool.points, num_inits, rng)) {
    batch.profiles.push_back(pool.profile(index));
  }
  return batch;
}

InitBatch init_fppp(int num_players, int num_actions, int num_inits,
                    int pool_size, Rng& rng) {
  if (pool_size < num_inits) throw std::invalid_argument("pool size H must be >= K");
  const ProfilePool pool = sample_pool(num_players, num_actions, pool_size, rng);
  return init_fppp(pool, num_inits, rng);
}

InitBatch init_kmeans(const ProfilePool& pool, int num_inits, Rng& rng,
                      const LloydOptions& lloyd_options) {
  check_pool_request(pool, num_inits);
  InitBatch batch = make_batch(InitAlgorithmId::kKMeans, num_inits,
                               static_cast<int>(pool.size()));
  const Clustering clustering = best_of_restarts(
      pool.points, num_inits, kKMeansRestarts, rng, lloyd_options);
  for (std::size_t c = 0; c < clustering.centers.size(); ++c) {
    auto row = clustering.centers[c];
    batch.profiles.push_back(StrategyProfile::from_flat(
        pool.num_players, pool.num_actions,
        std::vector<double>(row.begin(), row.end())));
  }
  return batch;
}

InitBatch init_kmeans(int num_players, int num_actions, int num_inits,
                      int pool_size, Rng& rng) {
  if (pool_size < num_inits) throw std::invalid_argument("pool size H must be >= K");
  const ProfilePool pool = sample_pool(num_players, num_actions, pool_size, rng);
  return init_kmeans(pool, num_inits, rng);
}

InitBatch init_maximin_unsampled_from(const StrategyProfile& first,
                                      int num_inits, Rng& rng,
                                      const MaximinOptions& options) {
  if (num_inits < 1) throw std::invalid_argument("K must be >= 1");
  InitBatch batch =
      make_batch(InitAlgorithmId::kMaximinUnsampled, num_inits, 0);
  batch.profiles.push_back(first);
  while (static_cast<int>(batch.profiles.size()) < num_inits) {
    const MaximinProblem problem(first.num_players(), first.num_actions(),
                                 batch.profiles);
    batch.profiles.push_back(solve_maximin(problem, rng, options).point);
  }
  return batch;
}

InitBatch init_maximin_unsampled(int num_players, int num_actions,
                                 int num_inits, Rng& rng,
                                 const MaximinOptions& options) {
  const StrategyProfile first = sample_uniform(num_players, num_actions, rng);
  return init_maximin_unsampled_from(first, num_inits, rng, options);
}

InitBatch generate_init_batch(const InitAlgorithm& algorithm, int num_players,
                              int num_actions, std::uint64_t seed,
                              const ProfilePool* shared_pool,
                              const MaximinOptions& solver_options) {
  algorithm.validate();
  Rng rng(seed);
  const int k = algorithm.num_inits;
  if (shared_pool != nullptr && uses_pool(algorithm.id) &&
      (shared_pool->num_players != num_players ||
       shared_pool->num_actions != num_actions)) {
    throw ShapeMismatch();
  }

  InitBatch batch;
  switch (algorithm.id) {
    case InitAlgorithmId::kClassic:
      batch = init_classic(num_players, num_actions);
      break;
    case InitAlgorithmId::kMacQueen1:
      batch = init_macqueen(num_players, num_actions, k, SamplerScheme::kNaive, rng);
      break;
    case InitAlgorithmId::kMacQueen2:
      batch = init_macqueen(num_players, num_actions, k,
                            SamplerScheme::kExponential, rng);
      break;
    case InitAlgorithmId::kMaximinUnsampled:
      batch = init_maximin_unsampled(num_players, num_actions, k, rng,
                                     solver_options);
      break;
    case InitAlgorithmId::kMaximinSampled:
      batch = shared_pool
                  ? init_maximin_sampled(*shared_pool, k, rng)
                  : init_maximin_sampled(num_players, num_actions, k,
                                         algorithm.pool_size, rng);
      break;
    case InitAlgorithmId::kFictitiousPlayPP:
      batch = shared_pool ? init_fppp(*shared_pool, k, rng)
                          : init_fppp(num_players, num_actions, k,
                                      algorithm.pool_size, rng);
      break;
    case InitAlgorithmId::kKMeans:
      batch = shared_pool ? init_kmeans(*shared_pool, k, rng)
                          : init_kmeans(num_players, num_actions, k,
                                        algorithm.pool_size, rng);
      break;
  }
  batch.seed = seed;
  return batch;
}

}  // namespace nashinit
