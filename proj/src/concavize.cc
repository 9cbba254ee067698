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

#include "incentive/concavize.h"

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include "incentive/instance_io.h"

namespace incentive {
namespace {

// > 0 when `b` lies strictly above the segment from `a` to `c` (a.x < b.x <
// c.x).
double turn(const WeightedPoint& a, const WeightedPoint& b,
            const WeightedPoint& c) {
  return (c.weight - a.weight) * (b.social_gain - a.social_gain) -
         (b.weight - a.weight) * (c.social_gain - a.social_gain);
}

}  // namespace

ExtremeProfile build_profile(IndividualId ind_id, AlternativeId default_alt_id,
                             std::span<const WeightedPoint> points) {
  std::vector<WeightedPoint> candidates;
  candidates.reserve(points.size());
  for (const WeightedPoint& p : points) {
    if (p.alt_id == default_alt_id) continue;
    if (p.weight < 0.0 || (p.weight == 0.0 && p.social_gain > 0.0)) {
      throw std::invalid_argument(
          "build_profile: alternative " + std::to_string(p.alt_id) +
          " of individual " + std::to_string(ind_id) +
          " is at least as attractive as the default");
    }
    if (p.social_gain > 0.0) candidates.push_back(p);
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const WeightedPoint& a, const WeightedPoint& b) {
              if (a.weight != b.weight) return a.weight < b.weight;
              if (a.social_gain != b.social_gain) {
                return a.social_gain > b.social_gain;
              }
              return a.alt_id < b.alt_id;
            });

  // Monotone chain over the increasing part of the upper hull.
  std::vector<WeightedPoint> hull;
  hull.reserve(candidates.size() + 1);
  hull.push_back({default_alt_id, 0.0, 0.0});
  for (const WeightedPoint& p : candidates) {
    if (p.social_gain <= hull.back().social_gain) continue;  // dominated
    while (hull.size() >= 2 &&
           turn(hull[hull.size() - 2], hull.back(), p) <= kHullCrossTolerance) {
      hull.pop_back();
    }
    hull.push_back(p);
  }

  ExtremeProfile profile;
  profile.ind_id = ind_id;
  profile.extremes.reserve(hull.size());
  profile.extremes.push_back({default_alt_id, 0.0, 0.0, 0.0, 0.0, 0.0});
  for (std::size_t k = 1; k < hull.size(); ++k) {
    const double dw = hull[k].weight - hull[k - 1].weight;
    const double ds = hull[k].social_gain - hull[k - 1].social_gain;
    profile.extremes.push_back(
        {hull[k].alt_id, hull[k].weight, hull[k].social_gain, dw, ds, ds / dw});
  }
  return profile;
}

std::vector<WeightedPoint> weighted_points(const Individual& ind) {
  const DefaultChoice def = default_alternative(ind);
  std::vector<WeightedPoint> points;
  points.reserve(ind.alternatives.size());
  for (const Alternative& alt : ind.alternatives) {
    if (alt.alt_id == def.alt_id) {
      points.push_back({alt.alt_id, 0.0, 0.0});
    } else {
      points.push_back({alt.alt_id, def.default_utility - alt.utility,
                        alt.social - def.default_social});
    }
  }
  return points;
}

ExtremeProfile lp_extremes(const Individual& ind) {
  const DefaultChoice def = default_alternative(ind);
  return build_profile(ind.ind_id, def.alt_id, weighted_points(ind));
}

std::vector<ExtremeProfile> concavize_all(const Instance& instance) {
  const auto& individuals = instance.individuals();
  std::vector<ExtremeProfile> profiles(individuals.size());
  const auto n = static_cast<std::int64_t>(individuals.size());
#pragma omp parallel for schedule(dynamic, 1024)
  for (std::int64_t i = 0; i < n; ++i) {
    profiles[i] = lp_extremes(individuals[i]);
  }
  return profiles;
}

std::vector<ExtremeProfile> concavize_all_serial(const Instance& instance) {
  std::vector<ExtremeProfile> profiles;
  profiles.reserve(instance.size());
  for (const Individual& ind : instance.individuals()) {
    profiles.push_back(lp_extremes(ind));
  }
  return profiles;
}

void write_profiles_csv(std::ostream& out,
                        std::span<const ExtremeProfile> profiles) {
  out << "ind_id,rank,alt_id,weight,social_gain,incr_weight,incr_social,"
         "incr_eff\n";
  for (const ExtremeProfile& p : profiles) {
    for (std::size_t k = 0; k < p.extremes.size(); ++k) {
      const ExtremeEntry& e = p.extremes[k];
      out << p.ind_id << ',' << k << ',' << e.alt_id << ','
          << format_exact(e.weight) << ',' << format_exact(e.social_gain)
          << ',' << format_exact(e.incr_weight) << ','
          << format_exact(e.incr_social) << ',' << format_exact(e.incr_eff)
          << '\n';
    }
  }
}

}  // namespace incentive
