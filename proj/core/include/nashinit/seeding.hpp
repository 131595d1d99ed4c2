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

#ifndef NASHINIT_SEEDING_HPP_
#define NASHINIT_SEEDING_HPP_

#include <cstdint>
#include <random>
#include <string_view>

namespace nashinit {

// All randomness flows through 64-bit Mersenne Twister streams. A stream is
// addressed by (master seed, purpose tag, game index, draw index) so that any
// unit of work can rebuild its generator without knowing what ran before it.
using Rng = std::mt19937_64;

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// FNV-1a over the tag bytes.
constexpr std::uint64_t hash_tag(std::string_view tag) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

constexpr std::uint64_t stream_seed(std::uint64_t master_seed,
                                    std::string_view purpose,
                                    std::uint64_t game_index = 0,
                                    std::uint64_t draw_index = 0) {
  std::uint64_t h = mix64(master_seed);
  h = mix64(h ^ hash_tag(purpose));
  h = mix64(h ^ game_index);
  return mix64(h ^ draw_index);
}

inline Rng make_stream(std::uint64_t master_seed, std::string_view purpose,
                       std::uint64_t game_index = 0,
                       std::uint64_t draw_index = 0) {
  return Rng(stream_seed(master_seed, purpose, game_index, draw_index));
}

// Uniform draw on the open interval (0, 1). The 53-bit grid never produces 1;
// exact zeros are rejected and redrawn.
inline double uniform_open01(Rng& rng) {
  for (;;) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (u > 0.0) return u;
  }
}

// Uniform index in [0, count).
inline std::size_t uniform_index(Rng& rng, std::size_t count) {
  return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng);
}

}  // namespace nashinit

#endif  // NASHINIT_SEEDING_HPP_
