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

#ifndef INCENTIVE_EXACT_ORACLE_H_
#define INCENTIVE_EXACT_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "incentive/instance.h"

namespace incentive {

// Largest product of choice-set sizes exact_enumerate accepts.
inline constexpr double kMaxEnumerationProduct = 1e7;

struct OracleConfig {
  enum class Mode { kDp, kEnumerate };

  // Budget units per euro; weights are rounded up onto this grid.
  std::int64_t weight_scale = 100;
  // Cap on the DP choice table (individuals x budget units).
  std::size_t max_states = 100'000'000;
  Mode mode = Mode::kDp;
};

struct ExactChoice {
  IndividualId ind_id = 0;
  AlternativeId alt_id = 0;

  friend bool operator==(const ExactChoice&, const ExactChoice&) = default;
};

struct ExactSolution {
  // Sum of social gains relative to the defaults (kg CO2).
  double welfare = 0.0;
  // Sum of unrounded incentive weights of the chosen alternatives.
  double spend = 0.0;
  std::vector<ExactChoice> choices;
};

// Exhaustive search over the original alternatives, feasibility checked on
// the unrounded weights (relative slack 1e-12 for summation order). Throws
// ResourceLimitError when the product of choice-set sizes exceeds
// kMaxEnumerationProduct.
ExactSolution exact_enumerate(const Instance& instance, double budget);

// Multiple-choice knapsack DP over budget units. Exact for the instance with
// weights rounded up to 1/weight_scale (values within 1e-6 units of a grid
// point snap to it), which keeps the reported allocation feasible for the
// original weights. Throws ResourceLimitError past config.max_states.
ExactSolution exact_dp(const Instance& instance, double budget,
                       const OracleConfig& config = {});

// Exact welfare for every budget k / weight_scale, k = 0..floor(max_budget *
// weight_scale), from one DP pass.
std::vector<double> exact_dp_curve(const Instance& instance, double max_budget,
                                   const OracleConfig& config = {});

// Dispatches on config.mode.
ExactSolution exact_solve(const Instance& instance, double budget,
                          const OracleConfig& config = {});

}  // namespace incentive

#endif  // INCENTIVE_EXACT_ORACLE_H_
