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

#include "incentive/exact_oracle.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "incentive/errors.h"

namespace incentive {
namespace {

constexpr double kGridSnap = 1e-6;

struct Item {
  AlternativeId alt_id;
  double weight;
  double gain;
};

std::vector<std::vector<Item>> item_sets(const Instance& instance) {
  std::vector<std::vector<Item>> sets;
  sets.reserve(instance.size());
  for (const Individual& ind : instance.individuals()) {
    const DefaultChoice def = default_alternative(ind);
    std::vector<Item> items;
    // Default first so that ties resolve towards it.
    items.push_back({def.alt_id, 0.0, 0.0});
    for (const Alternative& alt : ind.alternatives) {
      if (alt.alt_id == def.alt_id) continue;
      items.push_back({alt.alt_id, def.default_utility - alt.utility,
                       alt.social - def.default_social});
    }
    sets.push_back(std::move(items));
  }
  return sets;
}

void check_budget(double budget) {
  if (!(budget >= 0.0) || !std::isfinite(budget)) {
    throw std::invalid_argument("budget must be finite and non-negative");
  }
}

std::int64_t to_units_up(double weight, std::int64_t scale) {
  const double scaled = weight * static_cast<double>(scale);
  return static_cast<std::int64_t>(std::ceil(scaled - kGridSnap));
}

std::int64_t to_units_down(double budget, std::int64_t scale) {
  const double scaled = budget * static_cast<double>(scale);
  return static_cast<std::int64_t>(std::floor(scaled + kGridSnap));
}

// Runs the DP up to `capacity` units. Returns best welfare per capacity and
// fills `choice` (individual-major) with the item index used at each state.
std::vector<double> run_dp(const std::vector<std::vector<Item>>& sets,
                           std::int64_t capacity, const OracleConfig& config,
                           std::vector<std::uint8_t>* choice) {
  if (config.weight_scale < 1) {
    throw std::invalid_argument("weight_scale must be >= 1");
  }
  const auto width = static_cast<std::size_t>(capacity + 1);
  const double states = static_cast<double>(width) *
                        static_cast<double>(std::max<std::size_t>(sets.size(), 1));
  if (states > static_cast<double>(config.max_states)) {
    throw ResourceLimitError("DP state table of " + std::to_string(states) +
                             " entries exceeds max_states " +
                             std::to_string(config.max_states));
  }
  std::vector<double> best(width, 0.0);
  std::vector<double> next(width);
  if (choice) choice->assign(sets.size() * width, 0);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const auto& items = sets[i];
    if (items.size() > 255) {
      throw ResourceLimitError("more than 255 alternatives for one individual");
    }
    std::vector<std::int64_t> units(items.size());
    for (std::size_t j = 0; j < items.size(); ++j) {
      units[j] = to_units_up(items[j].weight, config.weight_scale);
    }
    for (std::size_t c = 0; c < width; ++c) {
      double value = best[c];  // item 0: the default, zero weight
      std::uint8_t pick = 0;
      for (std::size_t j = 1; j < items.size(); ++j) {
        if (units[j] > static_cast<std::int64_t>(c)) continue;
        const double cand = best[c - static_cast<std::size_t>(units[j])] +
                            items[j].gain;
        if (cand > value) {
          value = cand;
          pick = static_cast<std::uint8_t>(j);
        }
      }
      next[c] = value;
      if (choice) (*choice)[i * width + c] = pick;
    }
    best.swap(next);
  }
  return best;
}

}  // namespace

ExactSolution exact_enumerate(const Instance& instance, double budget) {
  check_budget(budget);
  const auto sets = item_sets(instance);
  double product = 1.0;
  for (const auto& s : sets) product *= static_cast<double>(s.size());
  if (product > kMaxEnumerationProduct) {
    throw ResourceLimitError("enumeration product " + std::to_string(product) +
                             " exceeds cap");
  }
  const double limit = budget + 1e-12 * std::max(1.0, budget);

  const std::size_t n = sets.size();
  std::vector<std::size_t> pick(n, 0);
  std::vector<std::size_t> best_pick(n, 0);
  double best_welfare = 0.0;
  double best_spend = 0.0;
  // Odometer over all joint assignments.
  while (true) {
    double spend = 0.0;
    double welfare = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      spend += sets[i][pick[i]].weight;
      welfare += sets[i][pick[i]].gain;
    }
    if (spend <= limit && welfare > best_welfare) {
      best_welfare = welfare;
      best_spend = spend;
      best_pick = pick;
    }
    std::size_t i = 0;
    while (i < n && ++pick[i] == sets[i].size()) pick[i++] = 0;
    if (i == n) break;
  }

  ExactSolution sol;
  sol.welfare = best_welfare;
  sol.spend = best_spend;
  for (std::size_t i = 0; i < n; ++i) {
    sol.choices.push_back({instance.individuals()[i].ind_id,
                           sets[i][best_pick[i]].alt_id});
  }
  return sol;
}

ExactSolution exact_dp(const Instance& instance, double budget,
                       const OracleConfig& config) {
  check_budget(budget);
  const auto sets = item_sets(instance);
  const std::int64_t capacity = to_units_down(budget, config.weight_scale);
  std::vector<std::uint8_t> choice;
  const std::vector<double> best = run_dp(sets, capacity, config, &choice);

  const auto width = static_cast<std::size_t>(capacity + 1);
  ExactSolution sol;
  sol.welfare = best[width - 1];
  sol.choices.resize(sets.size());
  std::size_t c = width - 1;
  for (std::size_t i = sets.size(); i-- > 0;) {
    const std::uint8_t j = choice[i * width + c];
    const Item& item = sets[i][j];
    sol.choices[i] = {instance.individuals()[i].ind_id, item.alt_id};
    sol.spend += item.weight;
    c -= static_cast<std::size_t>(to_units_up(item.weight, config.weight_scale));
  }
  return sol;
}

std::vector<double> exact_dp_curve(const Instance& instance, double max_budget,
                                   const OracleConfig& config) {
  check_budget(max_budget);
  const auto sets = item_sets(instance);
  return run_dp(sets, to_units_down(max_budget, config.weight_scale), config,
                nullptr);
}

ExactSolution exact_solve(const Instance& instance, double budget,
                          const OracleConfig& config) {
  return config.mode == OracleConfig::Mode::kEnumerate
             ? exact_enumerate(instance, budget)
             : exact_dp(instance, budget, config);
}

}  // namespace incentive
