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

#include "nashinit/maximin_solver.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <limits>
#include <stdexcept>

#include "nashinit/sampling.hpp"

namespace nashinit {
namespace {

void project_block(std::span<const double> v, std::span<double> out,
                   std::vector<double>& sorted) {
  sorted.assign(v.begin(), v.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double prefix = 0.0;
  double theta = 0.0;
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    prefix += sorted[j];
    const double candidate = (prefix - 1.0) / static_cast<double>(j + 1);
    if (sorted[j] - candidate > 0.0) theta = candidate;
  }
  for (std::size_t j = 0; j < v.size(); ++j) out[j] = std::max(v[j] - theta, 0.0);
}

std::size_t nearest_center(std::span<const double> x, const PointSet& centers,
                           double* d2_out) {
  std::size_t best = 0;
  double best_d2 = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < centers.size(); ++c) {
    const double d2 = squared_distance(x, centers[c]);
    if (d2 < best_d2) {
      best_d2 = d2;
      best = c;
    }
  }
  *d2_out = best_d2;
  return best;
}

// Higher objective wins; equal objectives go to the lexicographically smaller
// point so the reduction does not depend on evaluation order.
bool better(double objective, std::span<const double> point,
            double incumbent_objective, std::span<const double> incumbent) {
  if (objective != incumbent_objective) return objective > incumbent_objective;
  return std::lexicographical_compare(point.begin(), point.end(),
                                      incumbent.begin(), incumbent.end());
}

void validate_centers(int num_players, int num_actions, const PointSet& centers) {
  if (num_players < 1 || num_actions < 1) {
    throw std::invalid_argument("maximin problem needs n >= 1 and m >= 1");
  }
  if (centers.empty()) throw std::invalid_argument("maximin problem has no centers");
  if (centers.dim() != static_cast<std::size_t>(num_players) * num_actions) {
    throw ShapeMismatch();
  }
  for (std::size_t c = 0; c < centers.size(); ++c) {
    auto row = centers[c];
    // Throws unless every block is a distribution.
    StrategyProfile::from_flat(num_players, num_actions,
                               std::vector<double>(row.begin(), row.end()));
  }
}

}  // namespace

MaximinProblem::MaximinProblem(int num_players, int num_actions,
                               const std::vector<StrategyProfile>& centers)
    : num_players(num_players),
      num_actions(num_actions),
      centers(static_cast<std::size_t>(std::max(num_players, 0)) *
              std::max(num_actions, 0)) {
  for (const StrategyProfile& c : centers) {
    if (c.num_players() != num_players || c.num_actions() != num_actions) {
      throw ShapeMismatch();
    }
    this->centers.push_back(c.flat());
  }
  validate_centers(num_players, num_actions, this->centers);
}

MaximinProblem::MaximinProblem(int num_players, int num_actions,
                               PointSet centers)
    : num_players(num_players),
      num_actions(num_actions),
      centers(std::move(centers)) {
  validate_centers(num_players, num_actions, this->centers);
}

double maximin_objective(std::span<const double> x, const PointSet& centers) {
  if (centers.empty()) throw std::invalid_argument("maximin objective needs centers");
  if (x.size() != centers.dim()) throw ShapeMismatch();
  double d2 = 0.0;
  nearest_center(x, centers, &d2);
  return d2;
}

double maximin_objective(const StrategyProfile& x,
                         const std::vector<StrategyProfile>& centers) {
  if (centers.empty()) throw std::invalid_argument("maximin objective needs centers");
  PointSet points(x.flat().size());
  for (const StrategyProfile& c : centers) {
    if (c.num_players() != x.num_players() || c.num_actions() != x.num_actions()) {
      throw ShapeMismatch();
    }
    points.push_back(c.flat());
  }
  return maximin_objective(x.flat(), points);
}

std::vector<double> project_simplex(std::span<const double> v) {
  if (v.empty()) throw std::invalid_argument("cannot project an empty vector");
  std::vector<double> out(v.size());
  std::vector<double> scratch;
  project_block(v, out, scratch);
  return out;
}

AscentResult ascend(const MaximinProblem& problem, std::span<const double> start,
                    const MaximinOptions& options) {
  const std::size_t m = static_cast<std::size_t>(problem.num_actions);
  const std::size_t dim = problem.centers.dim();
  if (start.size() != dim) throw ShapeMismatch();

  AscentResult result;
  result.point.assign(start.begin(), start.end());
  double current = 0.0;
  std::size_t active = nearest_center(result.point, problem.centers, &current);
  result.objective_history.push_back(current);

  std::vector<double> gradient(dim);
  std::vector<double> moved(dim);
  std::vector<double> trial(dim);
  std::vector<double> scratch;
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    auto center = problem.centers[active];
    for (std::size_t k = 0; k < dim; ++k) {
      gradient[k] = 2.0 * (result.point[k] - center[k]);
    }
    bool improved = false;
    for (double step = options.initial_step; step >= options.min_step;
         step *= 0.5) {
      for (std::size_t k = 0; k < dim; ++k) {
        moved[k] = result.point[k] + step * gradient[k];
      }
      for (std::size_t block = 0; block < dim; block += m) {
        project_block(std::span<const double>(moved).subspan(block, m),
                      std::span<double>(trial).subspan(block, m), scratch);
      }
      double value = 0.0;
      const std::size_t trial_active =
          nearest_center(trial, problem.centers, &value);
      if (value > current) {
        result.point.swap(trial);
        current = value;
        active = trial_active;
        improved = true;
        break;
      }
    }
    if (!improved) break;
    result.objective_history.push_back(current);
  }
  result.objective = current;
  return result;
}

MaximinSolution solve_maximin(const MaximinProblem& problem, Rng& rng,
                              const MaximinOptions& options) {
  const int n = problem.num_players;
  const int m = problem.num_actions;
  const std::size_t dim = problem.centers.dim();

  std::vector<double> best_point;
  double best_objective = -std::numeric_limits<double>::infinity();
  bool best_is_vertex = false;

  const std::size_t vertex_count = payoff_tensor_size(n, m) / n;
  const bool enumerate = vertex_count != 0 && vertex_count <= options.max_vertices;
  if (enumerate) {
    std::vector<int> actions(n, 0);
    std::vector<double> vertex(dim, 0.0);
    for (int i = 0; i < n; ++i) vertex[static_cast<std::size_t>(i) * m] = 1.0;
    for (std::size_t v = 0; v < vertex_count; ++v) {
      const double value = maximin_objective(vertex, problem.centers);
      if (better(value, vertex, best_objective, best_point)) {
        best_objective = value;
        best_point = vertex;
        best_is_vertex = true;
      }
      // Odometer step, last player fastest.
      for (int i = n - 1; i >= 0; --i) {
        const std::size_t base = static_cast<std::size_t>(i) * m;
        vertex[base + actions[i]] = 0.0;
        if (++actions[i] < m) {
          vertex[base + actions[i]] = 1.0;
          break;
        }
        actions[i] = 0;
        vertex[base] = 1.0;
      }
    }
  } else {
    std::clog << "maximin: " << (vertex_count == 0 ? "too many" : std::to_string(vertex_count))
              << " vertices exceeds cap " << options.max_vertices
              << ", relying on multistart ascent only\n";
  }

  for (int r = 0; r < options.restarts; ++r) {
    const StrategyProfile start = sample_uniform(n, m, rng);
    AscentResult run = ascend(problem, start.flat(), options);
    if (better(run.objective, run.point, best_objective, best_point)) {
      best_objective = run.objective;
      best_point = std::move(run.point);
      best_is_vertex = false;
    }
  }
  if (best_point.empty()) {
    throw std::invalid_argument("maximin solver evaluated no candidates");
  }

  StrategyProfile point = StrategyProfile::from_flat(n, m, std::move(best_point));
  const double objective = maximin_objective(point.flat(), problem.centers);
  return MaximinSolution{std::move(point), objective,
                         best_is_vertex ? Certificate::kVertexOptimal
                                        : Certificate::kLocalOptimum,
                         enumerate};
}

std::string_view to_string(Certificate certificate) {
  return certificate == Certificate::kVertexOptimal ? "vertex-optimal"
                                                    : "local-optimum";
}

}  // namespace nashinit
