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

#include "nashinit/sampling.hpp"

#include <cmath>
#include <vector>

namespace nashinit {
namespace {

template <typename Draw>
std::vector<double> draw_normalized(int num_players, int num_actions,
                                    Draw&& draw) {
  if (num_players < 1 || num_actions < 1) {
    throw std::invalid_argument("sampler needs n >= 1 and m >= 1");
  }
  std::vector<double> flat(static_cast<std::size_t>(num_players) * num_actions);
  for (int i = 0; i < num_players; ++i) {
    double* block = flat.data() + static_cast<std::size_t>(i) * num_actions;
    double total = 0.0;
    for (int j = 0; j < num_actions; ++j) {
      block[j] = draw();
      total += block[j];
    }
    // Draws are strictly positive, so total > 0.
    if (!(total > 0.0)) throw std::logic_error("zero normalizer in sampler");
    for (int j = 0; j < num_actions; ++j) block[j] /= total;
  }
  return flat;
}

}  // namespace

StrategyProfile sample_naive(int num_players, int num_actions, Rng& rng) {
  return StrategyProfile::from_flat(
      num_players, num_actions,
      draw_normalized(num_players, num_actions,
                      [&rng] { return uniform_open01(rng); }));
}

StrategyProfile sample_uniform(int num_players, int num_actions, Rng& rng) {
  return StrategyProfile::from_flat(
      num_players, num_actions,
      draw_normalized(num_players, num_actions,
                      [&rng] { return -std::log(uniform_open01(rng)); }));
}

StrategyProfile sample_profile(SamplerScheme scheme, int num_players,
                               int num_actions, Rng& rng) {
  return scheme == SamplerScheme::kNaive
             ? sample_naive(num_players, num_actions, rng)
             : sample_uniform(num_players, num_actions, rng);
}

double l2_distance(const StrategyProfile& a, const StrategyProfile& b) {
  if (a.num_players() != b.num_players() ||
      a.num_actions() != b.num_actions()) {
    throw ShapeMismatch();
  }
  return std::sqrt(squared_distance(a.flat(), b.flat()));
}

StrategyProfile ProfilePool::profile(std::size_t i) const {
  auto row = points[i];
  return StrategyProfile::from_flat(num_players, num_actions,
                                    std::vector<double>(row.begin(), row.end()));
}

ProfilePool sample_pool(int num_players, int num_actions, std::size_t count,
                        Rng& rng) {
  ProfilePool pool{num_players, num_actions,
                   PointSet(static_cast<std::size_t>(num_players) * num_actions)};
  pool.points.reserve(count);
  for (std::size_t h = 0; h < count; ++h) {
    pool.points.push_back(sample_uniform(num_players, num_actions, rng).flat());
  }
  return pool;
}

std::string_view to_string(SamplerScheme scheme) {
  return scheme == SamplerScheme::kNaive ? "naive" : "exponential";
}

}  // namespace nashinit
