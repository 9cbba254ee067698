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

#ifndef INCENTIVE_IMPERFECT_INFO_H_
#define INCENTIVE_IMPERFECT_INFO_H_

#include <cstdint>
#include <span>
#include <vector>

#include "incentive/concavize.h"
#include "incentive/instance.h"

namespace incentive {

// E(u_default - u_alt | u_default > u_alt) when both utilities carry i.i.d.
// Gumbel(mu) noise and the deterministic utilities differ by delta_v =
// v_default - v_alt. Closed form
//   mu * (1 + e^x) / e^x * ln(1 + e^x),  x = delta_v / mu,
// evaluated in a rearranged form that cannot overflow. The result is always
// >= max(delta_v, mu). Throws std::invalid_argument unless mu > 0 and delta_v
// is finite.
double gumbel_incentive(double delta_v, double mu);

// A deterministic instance (the stored utilities are the systematic parts
// v_ij) plus one realised Gumbel(mu) draw per alternative.
class StochasticInstance {
 public:
  // Noise for individual k (0-based position) comes from its own stream of
  // `seed`, drawn in alternative order; the OpenMP and serial paths agree.
  static StochasticInstance create(Instance deterministic, double mu,
                                   std::uint64_t seed);
  static StochasticInstance create_serial(Instance deterministic, double mu,
                                          std::uint64_t seed);
  // Explicit noise, aligned with the individuals and their alternatives.
  static StochasticInstance with_noise(Instance deterministic, double mu,
                                       std::vector<std::vector<double>> noise);

  const Instance& deterministic() const { return deterministic_; }
  double mu() const { return mu_; }
  std::uint64_t seed() const { return seed_; }
  const std::vector<std::vector<double>>& noise() const { return noise_; }

  // v + noise for the individual at position k.
  std::vector<double> realized_utilities(std::size_t k) const;
  // The instance a perfectly informed regulator would see.
  Instance realized() const;

 private:
  StochasticInstance(Instance deterministic, double mu, std::uint64_t seed,
                     std::vector<std::vector<double>> noise);

  Instance deterministic_;
  double mu_;
  std::uint64_t seed_;
  std::vector<std::vector<double>> noise_;
};

// Expected-incentive weights of one individual. The default is the one the
// individual actually picks without incentives (realised utilities); the
// social gains are relative to it.
struct WeightTable {
  IndividualId ind_id = 0;
  AlternativeId default_alt_id = 0;
  std::vector<WeightedPoint> points;
};

std::vector<WeightTable> expected_weights(const StochasticInstance& stoch);

// expected_weights fed through build_profile.
std::vector<ExtremeProfile> expected_weight_profiles(
    const StochasticInstance& stoch);

struct ProposalEvent {
  IndividualId ind_id = 0;
  AlternativeId alt_id = 0;
  double amount = 0.0;
  bool accepted = false;

  friend bool operator==(const ProposalEvent&, const ProposalEvent&) = default;
};

struct SimulationReport {
  double budget = 0.0;
  double budget_spent = 0.0;
  std::size_t proposals = 0;
  std::size_t acceptances = 0;
  double acceptance_rate = 0.0;
  double welfare = 0.0;
  std::vector<ProposalEvent> log;

  friend bool operator==(const SimulationReport&, const SimulationReport&) =
      default;
};

// Sequential proposals along the greedy queue built from the expected
// weights. Each proposal offers the cumulative weight of the target
// alternative; the individual accepts iff its realised utility plus the offer
// is >= the realised utility of its current choice plus the incentive it
// already holds. Acceptance costs the difference between the new and the held
// incentive; a refusal costs nothing and keeps the held incentive. The run
// stops at the first proposal whose cost on acceptance would exceed the
// remaining budget.
SimulationReport simulate_sequential(const StochasticInstance& stoch,
                                     double budget);

}  // namespace incentive

#endif  // INCENTIVE_IMPERFECT_INFO_H_
