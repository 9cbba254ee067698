// Copyright 2026 The Incentive Policy Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef INCENTIVE_RNG_H_
#define INCENTIVE_RNG_H_

#include <cmath>
#include <cstdint>
#include <random>

namespace incentive {

// All randomness goes through std::mt19937_64, whose output sequence is fixed
// by the standard. The distributions below are written out by hand because the
// standard library distributions are implementation-defined.
using Engine = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent stream for item `index` of a run seeded with `seed`. `tag`
// separates streams used for different purposes on the same items.
inline Engine stream_engine(std::uint64_t seed, std::uint64_t tag,
                            std::uint64_t index) {
  return Engine(splitmix64(splitmix64(seed ^ splitmix64(tag)) + index));
}

// Uniform on the open interval (0, 1).
inline double uniform_open(Engine& engine) {
  return (static_cast<double>(engine() >> 11) + 0.5) * 0x1.0p-53;
}

inline double uniform_range(Engine& engine, double lo, double hi) {
  return lo + (hi - lo) * uniform_open(engine);
}

// Gumbel(0, scale) by inverse CDF.
inline double sample_gumbel(Engine& engine, double scale) {
  return -scale * std::log(-std::log(uniform_open(engine)));
}

// Standard normal via Box-Muller (one variate per call).
inline double sample_normal(Engine& engine) {
  const double u1 = uniform_open(engine);
  const double u2 = uniform_open(engine);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

}  // namespace incentive

#endif  // INCENTIVE_RNG_H_
