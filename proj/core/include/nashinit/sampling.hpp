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

#ifndef NASHINIT_SAMPLING_HPP_
#define NASHINIT_SAMPLING_HPP_

#include <cstdint>
#include <optional>
#include <string_view>

#include "nashinit/game.hpp"
#include "nashinit/point_set.hpp"
#include "nashinit/seeding.hpp"

namespace nashinit {

enum class SamplerScheme {
  // Uniform(0,1) coordinates, normalized. Not uniform on the simplex.
  kNaive,
  // -ln(U) coordinates (unit-rate exponentials), normalized. Uniform on the
  // simplex.
  kExponential,
};

struct SamplerConfig {
  SamplerScheme scheme = SamplerScheme::kExponential;
  // Rate of the exponential. Any positive rate gives the same normalized
  // distribution; only 1 is used.
  double lambda = 1.0;
  std::uint64_t seed = 0;
};

StrategyProfile sample_naive(int num_players, int num_actions, Rng& rng);
StrategyProfile sample_uniform(int num_players, int num_actions, Rng& rng);
StrategyProfile sample_profile(SamplerScheme scheme, int num_players,
                               int num_actions, Rng& rng);

// Euclidean distance over all players' coordinates.
double l2_distance(const StrategyProfile& a, const StrategyProfile& b);

// H uniform profiles flattened into a point set, with the shape needed to turn
// rows back into profiles.
struct ProfilePool {
  int num_players = 0;
  int num_actions = 0;
  PointSet points;

  std::size_t size() const { return points.size(); }
  StrategyProfile profile(std::size_t i) const;
};

ProfilePool sample_pool(int num_players, int num_actions, std::size_t count,
                        Rng& rng);

std::string_view to_string(SamplerScheme scheme);

}  // namespace nashinit

#endif  // NASHINIT_SAMPLING_HPP_
