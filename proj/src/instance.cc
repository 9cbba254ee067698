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

#include "incentive/instance.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <set>
#include <string>
#include <utility>

#include "incentive/errors.h"

namespace incentive {

Instance Instance::create(std::vector<Individual> individuals,
                          Metadata metadata) {
  std::sort(individuals.begin(), individuals.end(),
            [](const Individual& a, const Individual& b) {
              return a.ind_id < b.ind_id;
            });
  for (std::size_t k = 0; k < individuals.size(); ++k) {
    const Individual& ind = individuals[k];
    const std::string who = "individual " + std::to_string(ind.ind_id);
    if (k > 0 && individuals[k - 1].ind_id == ind.ind_id) {
      throw InputError("duplicate individual: " + who);
    }
    if (ind.alternatives.empty()) {
      throw InputError("empty individual: " + who + " has no alternatives");
    }
    std::set<AlternativeId> seen;
    for (const Alternative& alt : ind.alternatives) {
      if (!seen.insert(alt.alt_id).second) {
        throw InputError("duplicate alternative: " + who + ", alternative " +
                         std::to_string(alt.alt_id));
      }
      if (!std::isfinite(alt.utility)) {
        throw InputError("non-finite utility: " + who + ", alternative " +
                         std::to_string(alt.alt_id));
      }
      if (!std::isfinite(alt.social)) {
        throw InputError("non-finite social indicator: " + who +
                         ", alternative " + std::to_string(alt.alt_id));
      }
    }
  }
  Instance instance;
  instance.individuals_ = std::move(individuals);
  instance.metadata_ = std::move(metadata);
  return instance;
}

std::size_t Instance::num_alternatives() const {
  std::size_t total = 0;
  for (const Individual& ind : individuals_) total += ind.alternatives.size();
  return total;
}

DefaultChoice default_alternative(const Individual& ind,
                                  std::span<const double> utilities) {
  assert(!ind.alternatives.empty());
  assert(utilities.size() == ind.alternatives.size());
  std::size_t best = 0;
  for (std::size_t j = 1; j < ind.alternatives.size(); ++j) {
    const Alternative& cand = ind.alternatives[j];
    const Alternative& cur = ind.alternatives[best];
    if (utilities[j] != utilities[best]) {
      if (utilities[j] > utilities[best]) best = j;
    } else if (cand.social != cur.social) {
      if (cand.social > cur.social) best = j;
    } else if (cand.alt_id < cur.alt_id) {
      best = j;
    }
  }
  const Alternative& chosen = ind.alternatives[best];
  return {ind.ind_id, chosen.alt_id, utilities[best], chosen.social};
}

DefaultChoice default_alternative(const Individual& ind) {
  std::vector<double> utilities;
  utilities.reserve(ind.alternatives.size());
  for (const Alternative& alt : ind.alternatives) {
    utilities.push_back(alt.utility);
  }
  return default_alternative(ind, utilities);
}

std::vector<IncentiveWeight> incentive_weights(const Individual& ind) {
  const DefaultChoice def = default_alternative(ind);
  std::vector<IncentiveWeight> weights;
  weights.reserve(ind.alternatives.size());
  for (const Alternative& alt : ind.alternatives) {
    const double w =
        alt.alt_id == def.alt_id ? 0.0 : def.default_utility - alt.utility;
    weights.push_back({ind.ind_id, alt.alt_id, w});
  }
  return weights;
}

}  // namespace incentive
