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

#include "nashinit/kmeans.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace nashinit {
namespace {

// Slack on pruning tests so that rounding in bounds never skips a center that
// could tie or win.
inline double prune_threshold(double distance) {
  return distance * (1.0 + 1e-9) + 1e-12;
}

void check_pool(const PointSet& pool, std::size_t count) {
  if (count == 0) throw std::invalid_argument("cluster count must be >= 1");
  if (pool.size() < count) {
    throw std::invalid_argument("pool has " + std::to_string(pool.size()) +
                                " points, fewer than " + std::to_string(count));
  }
}

PointSet cluster_means(const PointSet& pool, const std::vector<int>& assignment,
                       std::size_t count, std::vector<std::size_t>& sizes) {
  const std::size_t dim = pool.dim();
  std::vector<double> sums(count * dim, 0.0);
  sizes.assign(count, 0);
  for (std::size_t x = 0; x < pool.size(); ++x) {
    const auto c = static_cast<std::size_t>(assignment[x]);
    ++sizes[c];
    auto p = pool[x];
    for (std::size_t k = 0; k < dim; ++k) sums[c * dim + k] += p[k];
  }
  for (std::size_t c = 0; c < count; ++c) {
    if (sizes[c] == 0) continue;
    for (std::size_t k = 0; k < dim; ++k) {
      sums[c * dim + k] /= static_cast<double>(sizes[c]);
    }
  }
  return PointSet(dim, std::move(sums));
}

}  // namespace

std::vector<std::size_t> select_d2_weighted(const PointSet& pool,
                                            std::size_t count, Rng& rng) {
  check_pool(pool, count);
  const std::size_t size = pool.size();
  std::vector<char> chosen(size, 0);
  std::vector<double> nearest(size, std::numeric_limits<double>::infinity());
  std::vector<std::size_t> picks;
  picks.reserve(count);

  auto take = [&](std::size_t index) {
    picks.push_back(index);
    chosen[index] = 1;
    auto center = pool[index];
    for (std::size_t h = 0; h < size; ++h) {
      nearest[h] = std::min(nearest[h], squared_distance(pool[h], center));
    }
    nearest[index] = 0.0;
  };

  take(uniform_index(rng, size));
  while (picks.size() < count) {
    double total = 0.0;
    for (std::size_t h = 0; h < size; ++h) {
      if (!chosen[h]) total += nearest[h];
    }
    if (total > 0.0) {
      const double target = uniform_open01(rng) * total;
      double cumulative = 0.0;
      std::size_t pick = size;
      for (std::size_t h = 0; h < size; ++h) {
        if (chosen[h] || nearest[h] <= 0.0) continue;
        cumulative += nearest[h];
        pick = h;
        if (cumulative > target) break;
      }
      take(pick);
    } else {
      std::vector<std::size_t> remaining;
      for (std::size_t h = 0; h < size; ++h) {
        if (!chosen[h]) remaining.push_back(h);
      }
      take(remaining[uniform_index(rng, remaining.size())]);
    }
  }
  return picks;
}

PointSet kmeanspp_seed(const PointSet& pool, std::size_t count, Rng& rng) {
  PointSet seeds(pool.dim());
  seeds.reserve(count);
  for (std::size_t index : select_d2_weighted(pool, count, rng)) {
    seeds.push_back(pool[index]);
  }
  return seeds;
}

double clustering_sse(const PointSet& pool, const PointSet& centers,
                      const std::vector<int>& assignment) {
  double sse = 0.0;
  for (std::size_t x = 0; x < pool.size(); ++x) {
    sse += squared_distance(pool[x], centers[assignment[x]]);
  }
  return sse;
}

Clustering lloyd(const PointSet& pool, PointSet seed_centers,
                 const LloydOptions& options) {
  const std::size_t count = seed_centers.size();
  check_pool(pool, count);
  if (seed_centers.dim() != pool.dim()) {
    throw std::invalid_argument("center dimension differs from pool");
  }
  if (options.max_iterations < 1) {
    throw std::invalid_argument("max_iterations must be >= 1");
  }
  const std::size_t size = pool.size();

  Clustering result;
  result.centers = std::move(seed_centers);
  result.assignment.assign(size, -1);
  // lower[x * count + c] <= distance from point x to center c.
  std::vector<double> lower(options.prune ? size * count : 0, 0.0);
  std::vector<double> center_gap(count * count, 0.0);
  std::vector<std::size_t> sizes;
  double total_square_norm = 0.0;
  for (std::size_t x = 0; x < size; ++x) {
    auto p = pool[x];
    for (double v : p) total_square_norm += v * v;
  }

  for (int iter = 0; iter < options.max_iterations; ++iter) {
    PointSet& centers = result.centers;
    if (options.prune) {
      for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = a + 1; b < count; ++b) {
          const double d = std::sqrt(squared_distance(centers[a], centers[b]));
          center_gap[a * count + b] = d;
          center_gap[b * count + a] = d;
        }
      }
    }

    bool changed = false;
    for (std::size_t x = 0; x < size; ++x) {
      auto point = pool[x];
      const int previous = result.assignment[x];
      std::size_t best = 0;
      double best_d2 = std::numeric_limits<double>::infinity();
      if (!options.prune || previous < 0) {
        for (std::size_t c = 0; c < count; ++c) {
          const double d2 = squared_distance(point, centers[c]);
          ++result.distance_evaluations;
          if (options.prune) lower[x * count + c] = std::sqrt(d2);
          if (d2 < best_d2) {
            best_d2 = d2;
            best = c;
          }
        }
      } else {
        best = static_cast<std::size_t>(previous);
        best_d2 = squared_distance(point, centers[best]);
        ++result.distance_evaluations;
        double best_d = std::sqrt(best_d2);
        lower[x * count + best] = best_d;
        double threshold = prune_threshold(best_d);
        for (std::size_t c = 0; c < count; ++c) {
          if (c == best) continue;
          if (lower[x * count + c] > threshold) continue;
          if (center_gap[best * count + c] > 2.0 * threshold) continue;
          const double d2 = squared_distance(point, centers[c]);
          ++result.distance_evaluations;
          const double d = std::sqrt(d2);
          lower[x * count + c] = d;
          if (d2 < best_d2 || (d2 == best_d2 && c < best)) {
            best = c;
            best_d2 = d2;
            threshold = prune_threshold(d);
          }
        }
      }
      if (static_cast<int>(best) != previous) {
        result.assignment[x] = static_cast<int>(best);
        changed = true;
      }
    }
    if (iter > 0 && !changed) break;

    PointSet updated = cluster_means(pool, result.assignment, count, sizes);
    for (std::size_t c = 0; c < count; ++c) {
      if (sizes[c] != 0) continue;
      // Farthest point from its own (updated) center among clusters that can
      // spare one.
      std::size_t far = size;
      double far_d2 = -1.0;
      for (std::size_t x = 0; x < size; ++x) {
        const auto owner = static_cast<std::size_t>(result.assignment[x]);
        if (sizes[owner] < 2) continue;
        const double d2 = squared_distance(pool[x], updated[owner]);
        if (d2 > far_d2) {
          far_d2 = d2;
          far = x;
        }
      }
      --sizes[static_cast<std::size_t>(result.assignment[far])];
      result.assignment[far] = static_cast<int>(c);
      sizes[c] = 1;
      updated = cluster_means(pool, result.assignment, count, sizes);
    }

    if (options.prune) {
      std::vector<double> drift(count);
      for (std::size_t c = 0; c < count; ++c) {
        drift[c] = std::sqrt(squared_distance(centers[c], updated[c]));
      }
      for (std::size_t x = 0; x < size; ++x) {
        double* bounds = lower.data() + x * count;
        for (std::size_t c = 0; c < count; ++c) bounds[c] -= drift[c];
      }
    }
    result.centers = std::move(updated);
    ++result.iterations;
    // With centers at cluster means, SSE = sum |x|^2 - sum_c |C| |mu_c|^2.
    double explained = 0.0;
    for (std::size_t c = 0; c < count; ++c) {
      auto mu = result.centers[c];
      double norm = 0.0;
      for (double v : mu) norm += v * v;
      explained += static_cast<double>(sizes[c]) * norm;
    }
    result.sse_history.push_back(std::max(total_square_norm - explained, 0.0));
  }
  result.sse = clustering_sse(pool, result.centers, result.assignment);
  return result;
}

Clustering best_of_restarts(const PointSet& pool, std::size_t count,
                            int restarts, Rng& rng,
                            const LloydOptions& options) {
  if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  Clustering best;
  for (int r = 0; r < restarts; ++r) {
    Clustering run = lloyd(pool, kmeanspp_seed(pool, count, rng), options);
    if (r == 0 || run.sse < best.sse) best = std::move(run);
  }
  return best;
}

}  // namespace nashinit
