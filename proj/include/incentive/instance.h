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

#ifndef INCENTIVE_INSTANCE_H_
#define INCENTIVE_INSTANCE_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace incentive {

using IndividualId = std::int64_t;
using AlternativeId = std::int32_t;

// One choice option of one individual. `utility` is the intrinsic utility in
// euros, `social` the social indicator in kg of CO2 avoided per day.
struct Alternative {
  AlternativeId alt_id = 0;
  double utility = 0.0;
  double social = 0.0;
  std::string label;

  friend bool operator==(const Alternative&, const Alternative&) = default;
};

struct Individual {
  IndividualId ind_id = 0;
  std::vector<Alternative> alternatives;

  friend bool operator==(const Individual&, const Individual&) = default;
};

using Metadata = std::map<std::string, std::string>;

// A validated population. Individuals are stored in increasing ind_id order;
// the order of alternatives inside an individual is preserved. There is no
// way to mutate an Instance once create() has accepted it, so it can be
// shared freely between threads.
class Instance {
 public:
  // Throws InputError on: no alternatives for an individual, duplicate
  // ind_id, duplicate alt_id within an individual, non-finite utility or
  // social value.
  static Instance create(std::vector<Individual> individuals,
                         Metadata metadata = {});

  const std::vector<Individual>& individuals() const { return individuals_; }
  const Metadata& metadata() const { return metadata_; }
  std::size_t size() const { return individuals_.size(); }
  std::size_t num_alternatives() const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  Instance() = default;

  std::vector<Individual> individuals_;
  Metadata metadata_;
};

// The alternative chosen in the absence of incentives.
struct DefaultChoice {
  IndividualId ind_id = 0;
  AlternativeId alt_id = 0;
  double default_utility = 0.0;
  double default_social = 0.0;
};

// Minimum incentive making the individual weakly prefer `alt_id` to the
// default: default utility minus the alternative's utility.
struct IncentiveWeight {
  IndividualId ind_id = 0;
  AlternativeId alt_id = 0;
  double weight = 0.0;
};

// Utility maximiser; ties go to the larger social indicator, then to the
// lowest alt_id.
DefaultChoice default_alternative(const Individual& ind);

// Same rule on an explicit utility vector aligned with ind.alternatives.
// Used when the utilities that drive the choice are not the stored ones.
DefaultChoice default_alternative(const Individual& ind,
                                  std::span<const double> utilities);

// One weight per alternative, in the individual's alternative order.
std::vector<IncentiveWeight> incentive_weights(const Individual& ind);

}  // namespace incentive

#endif  // INCENTIVE_INSTANCE_H_
