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

#ifndef INCENTIVE_GREEDY_H_
#define INCENTIVE_GREEDY_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "incentive/concavize.h"

namespace incentive {

// One move of an individual from hull entry rank - 1 to hull entry rank.
struct Step {
  IndividualId ind_id = 0;
  AlternativeId alt_id = 0;
  std::uint32_t profile_index = 0;
  std::uint32_t rank = 0;
  double incr_weight = 0.0;
  double incr_social = 0.0;
  double incr_eff = 0.0;

  friend bool operator==(const Step&, const Step&) = default;
};

using StepQueue = std::vector<Step>;

// All non-default hull steps by decreasing incr_eff, ties by increasing
// ind_id. Steps of one individual keep their profile order; throws
// std::logic_error if a profile's efficiencies are not strictly decreasing.
StepQueue build_step_queue(std::span<const ExtremeProfile> profiles);

// Order-sensitive hash of the profiles; resume() uses it to refuse a result
// computed on different data.
std::uint64_t profiles_fingerprint(std::span<const ExtremeProfile> profiles);

struct AllocationEntry {
  IndividualId ind_id = 0;
  AlternativeId alt_id = 0;
  std::uint32_t rank = 0;
  double incentive = 0.0;
  double social_gain = 0.0;

  friend bool operator==(const AllocationEntry&, const AllocationEntry&) =
      default;
};

// Chosen alternative and paid incentive for every individual, aligned with
// the profiles the solver was given.
struct Allocation {
  std::vector<AllocationEntry> entries;

  const AllocationEntry* find(IndividualId ind_id) const;
  double total_incentive() const;
  friend bool operator==(const Allocation&, const Allocation&) = default;
};

struct Breakpoint {
  double spend = 0.0;
  double welfare = 0.0;
  // incr_eff of the step following this breakpoint in the queue, 0 when the
  // queue ends here. Gives the optimality bound for budgets past `spend`.
  double next_eff = 0.0;

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

// Right-continuous step function: the welfare at y is that of the last
// breakpoint with spend <= y.
struct WelfareCurve {
  std::vector<Breakpoint> breakpoints;
  double domain_max = 0.0;

  double welfare_at(double y) const;
  // Upper bound on (exact optimum at budget y) - welfare_at(y).
  double gap_bound_at(double y) const;
  friend bool operator==(const WelfareCurve&, const WelfareCurve&) = default;
};

struct SplitItem {
  IndividualId ind_id = 0;
  AlternativeId alt_id = 0;
  double eff = 0.0;

  friend bool operator==(const SplitItem&, const SplitItem&) = default;
};

struct GreedyResult {
  Allocation allocation;
  WelfareCurve curve;
  double welfare = 0.0;
  double budget_given = 0.0;
  double budget_used = 0.0;
  // First step that did not fit (or the next unprocessed step after an
  // anytime stop); absent when the queue was exhausted.
  std::optional<SplitItem> split;
  double gap_bound = 0.0;
  std::size_t iterations = 0;
  std::size_t resume_cursor = 0;
  bool truncated = false;
  std::uint64_t fingerprint = 0;
  std::shared_ptr<const StepQueue> queue;

  // Everything except the shared queue pointer.
  bool same_outcome(const GreedyResult& other) const;
};

// Greedy over the step queue: a step is taken iff it fits in what is left of
// the budget; the first one that does not fit is the split item and ends the
// scan. Throws std::invalid_argument on a negative or non-finite budget.
GreedyResult solve(std::span<const ExtremeProfile> profiles, double budget);

WelfareCurve curve(std::span<const ExtremeProfile> profiles, double budget);

// Continues `prev` with a larger budget. Same output as a fresh
// solve(profiles, new_budget). Throws std::invalid_argument if the profiles
// do not match prev's fingerprint or new_budget <= prev.budget_given.
GreedyResult resume(std::span<const ExtremeProfile> profiles,
                    const GreedyResult& prev, double new_budget);

// solve() stopped after at most max_iterations inclusions.
GreedyResult stop_anytime(std::span<const ExtremeProfile> profiles,
                          double budget, std::size_t max_iterations);

// exact_welfare - result.welfare <= result.gap_bound + 1e-9.
bool certify(const GreedyResult& result, double exact_welfare);

}  // namespace incentive

#endif  // INCENTIVE_GREEDY_H_
