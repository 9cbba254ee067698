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

#include "incentive/greedy.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace incentive {
namespace {

constexpr double kCertifyTolerance = 1e-9;

void check_budget(double budget) {
  if (!(budget >= 0.0) || !std::isfinite(budget)) {
    throw std::invalid_argument("budget must be finite and non-negative, got " +
                                std::to_string(budget));
  }
}

GreedyResult initial_state(std::span<const ExtremeProfile> profiles,
                           double budget) {
  GreedyResult r;
  r.budget_given = budget;
  r.fingerprint = profiles_fingerprint(profiles);
  r.queue = std::make_shared<const StepQueue>(build_step_queue(profiles));
  r.allocation.entries.reserve(profiles.size());
  for (const ExtremeProfile& p : profiles) {
    r.allocation.entries.push_back(
        {p.ind_id, p.extremes.front().alt_id, 0, 0.0, 0.0});
  }
  const double first_eff = r.queue->empty() ? 0.0 : r.queue->front().incr_eff;
  r.curve.breakpoints.push_back({0.0, 0.0, first_eff});
  return r;
}

// Runs the greedy loop from r.resume_cursor under r.budget_given.
void advance(std::span<const ExtremeProfile> profiles, GreedyResult& r,
             std::size_t max_iterations) {
  const StepQueue& queue = *r.queue;
  r.split.reset();
  r.truncated = false;
  std::size_t taken = 0;
  while (r.resume_cursor < queue.size()) {
    const Step& step = queue[r.resume_cursor];
    if (r.budget_used + step.incr_weight > r.budget_given) {
      r.split = SplitItem{step.ind_id, step.alt_id, step.incr_eff};
      break;
    }
    if (taken == max_iterations) {
      r.split = SplitItem{step.ind_id, step.alt_id, step.incr_eff};
      r.truncated = true;
      break;
    }
    r.budget_used += step.incr_weight;
    r.welfare += step.incr_social;
    const ExtremeEntry& e = profiles[step.profile_index].extremes[step.rank];
    r.allocation.entries[step.profile_index] = {step.ind_id, step.alt_id,
                                                step.rank, e.weight,
                                                e.social_gain};
    ++r.resume_cursor;
    ++r.iterations;
    ++taken;
    const double next_eff = r.resume_cursor < queue.size()
                                ? queue[r.resume_cursor].incr_eff
                                : 0.0;
    auto& bps = r.curve.breakpoints;
    if (r.budget_used > bps.back().spend) {
      bps.push_back({r.budget_used, r.welfare, next_eff});
    } else {
      // Spend did not move in floating point; keep spends strictly
      // increasing.
      bps.back() = {bps.back().spend, r.welfare, next_eff};
    }
  }
  r.curve.domain_max = r.budget_given;
  r.gap_bound = r.split ? r.split->eff * (r.budget_given - r.budget_used) : 0.0;
}

}  // namespace

StepQueue build_step_queue(std::span<const ExtremeProfile> profiles) {
  StepQueue queue;
  std::size_t total = 0;
  for (const ExtremeProfile& p : profiles) total += p.num_steps();
  queue.reserve(total);
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    const ExtremeProfile& p = profiles[i];
    for (std::size_t k = 1; k < p.extremes.size(); ++k) {
      const ExtremeEntry& e = p.extremes[k];
      if (k >= 2 && !(e.incr_eff < p.extremes[k - 1].incr_eff)) {
        throw std::logic_error("profile of individual " +
                               std::to_string(p.ind_id) +
                               " has non-decreasing incremental efficiency");
      }
      queue.push_back({p.ind_id, e.alt_id, static_cast<std::uint32_t>(i),
                       static_cast<std::uint32_t>(k), e.incr_weight,
                       e.incr_social, e.incr_eff});
    }
  }
  // Within one individual effs strictly decrease, so the rank key only
  // matters for duplicated ind_ids and keeps profile order there too.
  std::sort(queue.begin(), queue.end(), [](const Step& a, const Step& b) {
    if (a.incr_eff != b.incr_eff) return a.incr_eff > b.incr_eff;
    if (a.ind_id != b.ind_id) return a.ind_id < b.ind_id;
    if (a.profile_index != b.profile_index) {
      return a.profile_index < b.profile_index;
    }
    return a.rank < b.rank;
  });
  return queue;
}

std::uint64_t profiles_fingerprint(std::span<const ExtremeProfile> profiles) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  auto mix = [&h](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  mix(profiles.size());
  for (const ExtremeProfile& p : profiles) {
    mix(static_cast<std::uint64_t>(p.ind_id));
    mix(p.extremes.size());
    for (const ExtremeEntry& e : p.extremes) {
      mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(e.alt_id)));
      mix(std::bit_cast<std::uint64_t>(e.weight));
      mix(std::bit_cast<std::uint64_t>(e.social_gain));
    }
  }
  return h;
}

const AllocationEntry* Allocation::find(IndividualId ind_id) const {
  for (const AllocationEntry& e : entries) {
    if (e.ind_id == ind_id) return &e;
  }
  return nullptr;
}

double Allocation::total_incentive() const {
  double total = 0.0;
  for (const AllocationEntry& e : entries) total += e.incentive;
  return total;
}

double WelfareCurve::welfare_at(double y) const {
  if (y < 0.0) throw std::invalid_argument("curve evaluated at negative spend");
  auto it = std::upper_bound(
      breakpoints.begin(), breakpoints.end(), y,
      [](double v, const Breakpoint& b) { return v < b.spend; });
  return it == breakpoints.begin() ? 0.0 : std::prev(it)->welfare;
}

double WelfareCurve::gap_bound_at(double y) const {
  if (y < 0.0) throw std::invalid_argument("curve evaluated at negative spend");
  auto it = std::upper_bound(
      breakpoints.begin(), breakpoints.end(), y,
      [](double v, const Breakpoint& b) { return v < b.spend; });
  if (it == breakpoints.begin()) return 0.0;
  const Breakpoint& b = *std::prev(it);
  return b.next_eff * (y - b.spend);
}

bool GreedyResult::same_outcome(const GreedyResult& o) const {
  return allocation == o.allocation && curve == o.curve &&
         welfare == o.welfare && budget_given == o.budget_given &&
         budget_used == o.budget_used && split == o.split &&
         gap_bound == o.gap_bound && iterations == o.iterations &&
         resume_cursor == o.resume_cursor && truncated == o.truncated &&
         fingerprint == o.fingerprint;
}

GreedyResult solve(std::span<const ExtremeProfile> profiles, double budget) {
  check_budget(budget);
  GreedyResult r = initial_state(profiles, budget);
  advance(profiles, r, std::numeric_limits<std::size_t>::max());
  return r;
}

WelfareCurve curve(std::span<const ExtremeProfile> profiles, double budget) {
  return solve(profiles, budget).curve;
}

GreedyResult resume(std::span<const ExtremeProfile> profiles,
                    const GreedyResult& prev, double new_budget) {
  check_budget(new_budget);
  if (!(new_budget > prev.budget_given)) {
    throw std::invalid_argument("resume: new budget must exceed the old one");
  }
  if (!prev.queue || profiles_fingerprint(profiles) != prev.fingerprint) {
    throw std::invalid_argument(
        "resume: profiles do not match the previous result");
  }
  GreedyResult r = prev;
  r.budget_given = new_budget;
  advance(profiles, r, std::numeric_limits<std::size_t>::max());
  return r;
}

GreedyResult stop_anytime(std::span<const ExtremeProfile> profiles,
                          double budget, std::size_t max_iterations) {
  check_budget(budget);
  GreedyResult r = initial_state(profiles, budget);
  advance(profiles, r, max_iterations);
  return r;
}

bool certify(const GreedyResult& result, double exact_welfare) {
  return exact_welfare - result.welfare <= result.gap_bound + kCertifyTolerance;
}

}  // namespace incentive
