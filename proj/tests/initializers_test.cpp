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

#include <gtest/gtest.h>

#include <set>

#include "nashinit/sampling.hpp"
#include "oracles.hpp"

namespace nashinit {
namespace {

double min_pairwise_distance(const std::vector<StrategyProfile>& profiles) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < profiles.size(); ++a) {
    for (std::size_t b = a + 1; b < profiles.size(); ++b) {
      best = std::min(best, l2_distance(profiles[a], profiles[b]));
    }
  }
  return best;
}

std::size_t pool_index_of(const ProfilePool& pool, const StrategyProfile& p) {
  for (std::size_t h = 0; h < pool.size(); ++h) {
    if (pool.profile(h) == p) return h;
  }
  return pool.size();
}

TEST(ClassicTest, UniformSingleProfile) {
  const InitBatch batch = init_classic(3, 5);
  ASSERT_EQ(batch.profiles.size(), 1u);
  for (double v : batch.profiles[0].flat()) EXPECT_EQ(v, 0.2);
  const InitBatch small = init_classic(2, 2);
  for (double v : small.profiles[0].flat()) EXPECT_EQ(v, 0.5);
  const InitAlgorithm classic{InitAlgorithmId::kClassic, 5, 0};
  EXPECT_EQ(classic.effective_inits(), 1);
  EXPECT_EQ(generate_init_batch(classic, 3, 5, 1).profiles,
            generate_init_batch(classic, 3, 5, 2).profiles);
}

TEST(MacQueenTest, DelegatesToSampler) {
  Rng a(1);
  Rng b(1);
  const InitBatch batch = init_macqueen(3, 5, 1, SamplerScheme::kExponential, a);
  EXPECT_EQ(batch.profiles[0], sample_uniform(3, 5, b));
}

TEST(MacQueenTest, DistinctProfilesAndSchemesDiffer) {
  Rng a(2);
  Rng b(2);
  const InitBatch one = init_macqueen(3, 5, 5, SamplerScheme::kNaive, a);
  const InitBatch two = init_macqueen(3, 5, 5, SamplerScheme::kExponential, b);
  EXPECT_EQ(one.algorithm.id, InitAlgorithmId::kMacQueen1);
  EXPECT_EQ(two.algorithm.id, InitAlgorithmId::kMacQueen2);
  for (std::size_t x = 0; x < 5; ++x) {
    for (std::size_t y = x + 1; y < 5; ++y) {
      EXPECT_NE(two.profiles[x], two.profiles[y]);
    }
  }
  EXPECT_NE(one.profiles, two.profiles);
}

TEST(MaximinSampledTest, SingleAndExhaustive) {
  Rng rng(3);
  const ProfilePool pool = sample_pool(2, 3, 6, rng);
  const InitBatch one = init_maximin_sampled(pool, 1, rng);
  ASSERT_EQ(one.profiles.size(), 1u);
  EXPECT_LT(pool_index_of(pool, one.profiles[0]), pool.size());
  const InitBatch all = init_maximin_sampled(pool, 6, rng);
  std::set<std::size_t> indices;
  for (const auto& p : all.profiles) indices.insert(pool_index_of(pool, p));
  EXPECT_EQ(indices.size(), 6u);
  EXPECT_EQ(indices.count(pool.size()), 0u);
  EXPECT_THROW(init_maximin_sampled(pool, 7, rng), std::invalid_argument);
}

TEST(MaximinSampledTest, MatchesBruteForceGreedy) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(200 + seed);
    const ProfilePool pool = sample_pool(2, 3, 6, rng);
    const InitBatch batch = init_maximin_sampled(pool, 3, rng);
    // Recompute the greedy chain from the same first pick with full rescans.
    std::vector<std::size_t> chosen = {pool_index_of(pool, batch.profiles[0])};
    while (chosen.size() < 3) {
      std::size_t best = 0;
      double best_value = -1.0;
      for (std::size_t h = 0; h < pool.size(); ++h) {
        if (std::find(chosen.begin(), chosen.end(), h) != chosen.end()) continue;
        double nearest = std::numeric_limits<double>::infinity();
        for (std::size_t c : chosen) {
          nearest = std::min(nearest, l2_distance(pool.profile(h), pool.profile(c)));
        }
        if (nearest > best_value) {
          best_value = nearest;
          best = h;
        }
      }
      chosen.push_back(best);
    }
    for (std::size_t k = 0; k < 3; ++k) {
      EXPECT_EQ(batch.profiles[k], pool.profile(chosen[k])) << "seed " << seed;
    }
  }
}

TEST(MaximinSampledTest, DominatesRandomSubsets) {
  Rng rng(4);
  const ProfilePool pool = sample_pool(3, 5, 500, rng);
  const double greedy = min_pairwise_distance(init_maximin_sampled(pool, 5, rng).profiles);
  for (int trial = 0; trial < 1000; ++trial) {
    std::set<std::size_t> picks;
    while (picks.size() < 5) picks.insert(uniform_index(rng, pool.size()));
    std::vector<StrategyProfile> subset;
    for (std::size_t h : picks) subset.push_back(pool.profile(h));
    EXPECT_GE(greedy, min_pairwise_distance(subset));
  }
}

TEST(FpppTest, DuplicatesOfChosenPointAreNeverPicked) {
  // Pool: the same profile three times plus two distinct ones.
  const std::vector<double> a = {0.9, 0.1, 0.2, 0.8};
  const std::vector<double> b = {0.1, 0.9, 0.5, 0.5};
  const std::vector<double> c = {0.5, 0.5, 0.9, 0.1};
  ProfilePool pool{2, 2, PointSet(4)};
  for (const auto* row : {&a, &a, &a, &b, &c}) pool.points.push_back(*row);
  Rng rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const InitBatch batch = init_fppp(pool, 2, rng);
    EXPECT_NE(batch.profiles[0], batch.profiles[1]);
  }
}

TEST(FpppTest, SecondPickFollowsSquaredDistanceWeights) {
  Rng rng(6);
  const ProfilePool pool = sample_pool(2, 3, 5, rng);
  // Analytic pick probabilities conditioned on the first pick being index 0.
  std::vector<double> weights(5, 0.0);
  double total = 0.0;
  for (std::size_t h = 1; h < 5; ++h) {
    const double d = l2_distance(pool.profile(h), pool.profile(0));
    weights[h] = d * d;
    total += weights[h];
  }
  std::vector<int> counts(5, 0);
  int first_zero = 0;
  for (int trial = 0; trial < 100'000; ++trial) {
    const InitBatch batch = init_fppp(pool, 2, rng);
    if (batch.profiles[0] != pool.profile(0)) continue;
    ++first_zero;
    ++counts[pool_index_of(pool, batch.profiles[1])];
  }
  ASSERT_GT(first_zero, 15'000);
  EXPECT_EQ(counts[0], 0);
  for (std::size_t h = 1; h < 5; ++h) {
    EXPECT_NEAR(counts[h] / double(first_zero), weights[h] / total, 0.01);
  }
}

TEST(KMeansInitTest, PoolEqualToCountReturnsPool) {
  Rng rng(7);
  const ProfilePool pool = sample_pool(2, 3, 4, rng);
  const InitBatch batch = init_kmeans(pool, 4, rng);
  std::set<std::size_t> indices;
  for (const auto& p : batch.profiles) {
    std::size_t match = pool.size();
    for (std::size_t h = 0; h < pool.size(); ++h) {
      if (l2_distance(p, pool.profile(h)) < 1e-12) match = h;
    }
    indices.insert(match);
  }
  EXPECT_EQ(indices, (std::set<std::size_t>{0, 1, 2, 3}));
}

TEST(KMeansInitTest, TwoTightClusters) {
  Rng rng(8);
  ProfilePool pool{1, 3, PointSet(3)};
  std::vector<double> sum_a(3, 0.0), sum_b(3, 0.0);
  for (int h = 0; h < 40; ++h) {
    const double jitter = 0.01 * uniform_open01(rng);
    std::vector<double> row = h % 2 ? std::vector<double>{0.8 - jitter, 0.1, 0.1 + jitter}
                                    : std::vector<double>{0.1, 0.1 + jitter, 0.8 - jitter};
    auto& sum = h % 2 ? sum_a : sum_b;
    for (int k = 0; k < 3; ++k) sum[k] += row[k] / 20.0;
    pool.points.push_back(row);
  }
  const InitBatch batch = init_kmeans(pool, 2, rng);
  for (const auto& center : batch.profiles) {
    const double da = l2_distance(center, StrategyProfile::from_flat(1, 3, sum_a));
    const double db = l2_distance(center, StrategyProfile::from_flat(1, 3, sum_b));
    EXPECT_LT(std::min(da, db), 1e-6);
  }
}

TEST(MaximinUnsampledTest, SingleInitIsOneSample) {
  Rng a(9);
  Rng b(9);
  const InitBatch batch = init_maximin_unsampled(3, 5, 1, a);
  ASSERT_EQ(batch.profiles.size(), 1u);
  EXPECT_EQ(batch.profiles[0], sample_uniform(3, 5, b));
}

TEST(MaximinUnsampledTest, FarthestPointOnSegment) {
  Rng rng(10);
  const InitBatch batch = init_maximin_unsampled_from(
      StrategyProfile::uniform(1, 2), 2, rng);
  ASSERT_EQ(batch.profiles.size(), 2u);
  const StrategyProfile& second = batch.profiles[1];
  EXPECT_TRUE(second.prob(0, 0) == 1.0 || second.prob(0, 1) == 1.0);
  EXPECT_NEAR(maximin_objective(second, {batch.profiles[0]}), 0.5, 1e-15);
}

TEST(MaximinUnsampledTest, EachPointBeatsSampledCandidates) {
  Rng rng(11);
  const InitBatch batch = init_maximin_unsampled(3, 5, 4, rng);
  for (std::size_t t = 1; t < batch.profiles.size(); ++t) {
    const std::vector<StrategyProfile> earlier(batch.profiles.begin(),
                                               batch.profiles.begin() + t);
    double best_sample = 0.0;
    for (int d = 0; d < 100'000; ++d) {
      best_sample = std::max(best_sample,
                             maximin_objective(sample_uniform(3, 5, rng), earlier));
    }
    EXPECT_GE(maximin_objective(batch.profiles[t], earlier), best_sample);
  }
}

TEST(MaximinUnsampledTest, OftenAddsExtremePoints) {
  int runs_with_extreme = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(1000 + seed);
    const InitBatch batch = init_maximin_unsampled(3, 5, 3, rng);
    bool extreme = false;
    for (std::size_t t = 1; t < batch.profiles.size(); ++t) {
      bool all_players = true;
      for (int i = 0; i < 3; ++i) {
        auto s = batch.profiles[t].strategy(i);
        all_players = all_players && *std::max_element(s.begin(), s.end()) >= 0.99;
      }
      extreme = extreme || all_players;
    }
    runs_with_extreme += extreme;
  }
  EXPECT_GE(runs_with_extreme, 90);
}

TEST(GenerateBatchTest, SameSeedSameBatch) {
  Rng rng(12);
  const ProfilePool pool = sample_pool(3, 5, 200, rng);
  for (InitAlgorithmId id : all_init_algorithms()) {
    const InitAlgorithm algorithm{id, 4, 200};
    const InitBatch a = generate_init_batch(algorithm, 3, 5, 99, &pool);
    const InitBatch b = generate_init_batch(algorithm, 3, 5, 99, &pool);
    EXPECT_EQ(a.profiles, b.profiles) << to_string(id);
    EXPECT_EQ(a.seed, 99u);
    EXPECT_EQ(a.profiles.size(), static_cast<std::size_t>(algorithm.effective_inits()));
    for (const auto& p : a.profiles) {
      for (int i = 0; i < 3; ++i) {
        double total = 0.0;
        for (double v : p.strategy(i)) {
          EXPECT_GE(v, 0.0);
          total += v;
        }
        EXPECT_NEAR(total, 1.0, 1e-9);
      }
    }
  }
}

TEST(AlgorithmNamesTest, RoundTrip) {
  for (InitAlgorithmId id : all_init_algorithms()) {
    EXPECT_EQ(parse_init_algorithm(to_string(id)), id);
  }
  EXPECT_FALSE(parse_init_algorithm("maximin").has_value());
  EXPECT_EQ(valid_algorithm_names(),
            "classic|macqueen-1|macqueen-2|maximin-u|maximin-s|fp++|k-means");
  EXPECT_THROW((InitAlgorithm{InitAlgorithmId::kFictitiousPlayPP, 5, 4}.validate()),
               std::invalid_argument);
  EXPECT_THROW((InitAlgorithm{InitAlgorithmId::kMacQueen2, 0, 0}.validate()),
               std::invalid_argument);
}

}  // namespace
}  // namespace nashinit
