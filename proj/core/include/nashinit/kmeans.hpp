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

#ifndef NASHINIT_KMEANS_HPP_
#define NASHINIT_KMEANS_HPP_

#include <cstddef>
#include <vector>

#include "nashinit/point_set.hpp"
#include "nashinit/seeding.hpp"

namespace nashinit {

struct Clustering {
  PointSet centers;
  std::vector<int> assignment;
  double sse = 0.0;
  // Lloyd iterations that updated centers.
  int iterations = 0;
  // SSE after each center update; non-increasing.
  std::vector<double> sse_history;
  // Point-to-center distance evaluations performed during assignment.
  std::size_t distance_evaluations = 0;
};

struct LloydOptions {
  int max_iterations = 50;
  // Skip centers that the triangle inequality rules out.
  bool prune = true;
};

// D^2 selection: the first index is uniform over the pool, each next one is
// drawn with probability proportional to its squared distance to the nearest
// already-selected point. When every remaining weight is zero the pick is
// uniform over the points not yet selected. Returns K distinct indices.
std::vector<std::size_t> select_d2_weighted(const PointSet& pool,
                                            std::size_t count, Rng& rng);

// k-means++ seeding; returns copies of the selected points.
PointSet kmeanspp_seed(const PointSet& pool, std::size_t count, Rng& rng);

// Lloyd's algorithm from the given centers until assignments stop changing or
// max_iterations center updates have run. An emptied cluster has its center
// moved onto the point farthest from its own center.
Clustering lloyd(const PointSet& pool, PointSet seed_centers,
                 const LloydOptions& options = {});

// Runs `restarts` independent k-means++ seedings followed by Lloyd and keeps
// the lowest SSE (first one on ties).
Clustering best_of_restarts(const PointSet& pool, std::size_t count,
                            int restarts, Rng& rng,
                            const LloydOptions& options = {});

double clustering_sse(const PointSet& pool, const PointSet& centers,
                      const std::vector<int>& assignment);

}  // namespace nashinit

#endif  // NASHINIT_KMEANS_HPP_
