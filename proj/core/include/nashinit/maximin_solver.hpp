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

#ifndef NASHINIT_MAXIMIN_SOLVER_HPP_
#define NASHINIT_MAXIMIN_SOLVER_HPP_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "nashinit/game.hpp"
#include "nashinit/point_set.hpp"
#include "nashinit/seeding.hpp"

namespace nashinit {

// Find x on the product of simplices maximizing min_i ||x - center_i||^2.
//
// The objective is a pointwise minimum of convex quadratics, so the program is
// nonconvex and maxima tend to sit on vertices (pure profiles). The solver
// scores every vertex when there are few enough, then runs projected-gradient
// ascent with backtracking from random interior starts, and keeps the best
// candidate seen. No global optimality is claimed.
struct MaximinOptions {
  int restarts = 20;
  int max_iterations = 500;
  double initial_step = 0.5;
  double min_step = 1e-8;
  // Vertex enumeration is skipped above this many pure profiles.
  std::size_t max_vertices = 1'000'000;
};

struct MaximinProblem {
  int num_players = 0;
  int num_actions = 0;
  // Flat profiles, one row per center.
  PointSet centers;

  MaximinProblem(int num_players, int num_actions,
                 const std::vector<StrategyProfile>& centers);
  MaximinProblem(int num_players, int num_actions, PointSet centers);
};

enum class Certificate {
  // Winner came from exhaustive vertex enumeration.
  kVertexOptimal,
  // Winner is the end point of a gradient ascent.
  kLocalOptimum,
};

struct MaximinSolution {
  StrategyProfile point;
  double objective = 0.0;
  Certificate certificate = Certificate::kLocalOptimum;
  bool vertices_enumerated = false;
};

struct AscentResult {
  std::vector<double> point;
  double objective = 0.0;
  // Objective of each accepted iterate, starting with the start point.
  std::vector<double> objective_history;
};

// min_i ||x - center_i||^2.
double maximin_objective(std::span<const double> x, const PointSet& centers);
double maximin_objective(const StrategyProfile& x,
                         const std::vector<StrategyProfile>& centers);

// Euclidean projection onto the probability simplex (sort-and-threshold).
std::vector<double> project_simplex(std::span<const double> v);

// Projected-gradient ascent from `start` with backtracking: each iteration
// tries steps initial_step, initial_step / 2, ... down to min_step and takes
// the first that strictly improves the objective.
AscentResult ascend(const MaximinProblem& problem,
                    std::span<const double> start,
                    const MaximinOptions& options = {});

MaximinSolution solve_maximin(const MaximinProblem& problem, Rng& rng,
                              const MaximinOptions& options = {});

std::string_view to_string(Certificate certificate);

}  // namespace nashinit

#endif  // NASHINIT_MAXIMIN_SOLVER_HPP_
