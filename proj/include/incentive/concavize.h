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

#ifndef INCENTIVE_CONCAVIZE_H_
#define INCENTIVE_CONCAVIZE_H_

#include <iosfwd>
#include <span>
#include <vector>

#include "incentive/instance.h"

namespace incentive {

// Absolute tolerance on the cross product used by the hull test.
inline constexpr double kHullCrossTolerance = 1e-12;

// One alternative as a point in the (incentive weight, social gain) plane.
// social_gain is measured relative to the default alternative.
struct WeightedPoint {
  AlternativeId alt_id = 0;
  double weight = 0.0;
  double social_gain = 0.0;
};

// Entry k of an individual's ordered LP-extremes. The incr_* fields are the
// differences with entry k - 1; they are zero for the default (k = 0).
struct ExtremeEntry {
  AlternativeId alt_id = 0;
  double weight = 0.0;
  double social_gain = 0.0;
  double incr_weight = 0.0;
  double incr_social = 0.0;
  double incr_eff = 0.0;

  friend bool operator==(const ExtremeEntry&, const ExtremeEntry&) = default;
};

// Upper-left convex hull of an individual's alternatives, anchored at the
// default (0, 0). Along `extremes`, weight and social_gain strictly increase
// and incr_eff strictly decreases.
struct ExtremeProfile {
  IndividualId ind_id = 0;
  std::vector<ExtremeEntry> extremes;

  std::size_t num_steps() const {
    return extremes.empty() ? 0 : extremes.size() - 1;
  }
  friend bool operator==(const ExtremeProfile&, const ExtremeProfile&) =
      default;
};

// Builds the profile from arbitrary (weight, gain) points. `points` must
// contain the default alternative at (0, 0); every other point must have
// weight >= 0, and a zero-weight point must not have a positive gain.
// Removed: points with gain <= 0, points dominated by a cheaper point with at
// least the same gain, and points on or below the hull. Among equal weights
// the larger gain (then the lower alt_id) is kept; interior collinear points
// are dropped.
ExtremeProfile build_profile(IndividualId ind_id, AlternativeId default_alt_id,
                             std::span<const WeightedPoint> points);

// The (weight, gain) points of an individual under perfect information.
std::vector<WeightedPoint> weighted_points(const Individual& ind);

ExtremeProfile lp_extremes(const Individual& ind);

// One profile per individual in the instance's ind_id order. The OpenMP
// version splits individuals across threads; the serial one is kept as the
// reference.
std::vector<ExtremeProfile> concavize_all(const Instance& instance);
std::vector<ExtremeProfile> concavize_all_serial(const Instance& instance);

// Debug dump: ind_id,rank,alt_id,weight,social_gain,incr_weight,incr_social,
// incr_eff
void write_profiles_csv(std::ostream& out,
                        std::span<const ExtremeProfile> profiles);

}  // namespace incentive

#endif  // INCENTIVE_CONCAVIZE_H_
