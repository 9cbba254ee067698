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

#include "incentive/imperfect_info.h"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "incentive/greedy.h"
#include "incentive/rng.h"

namespace incentive {
namespace {

constexpr std::uint64_t kNoiseStream = 0x6e6f697365;  // "noise"

void check_mu(double mu) {
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw std::invalid_argument("mu must be positive and finite, got " +
                                std::to_string(mu));
  }
}

std::vector<double> draw_noise(const Individual& ind, double mu,
                               std::uint64_t seed, std::size_t k) {
  Engine engine = stream_engine(seed, kNoiseStream, k);
  std::vector<double> eps(ind.alternatives.size());
  for (double& e : eps) e = sample_gumbel(engine, mu);
  return eps;
}

}  // namespace

double gumbel_incentive(double delta_v, double mu) {
  check_mu(mu);
  if (!std::isfinite(delta_v)) {
    throw std::invalid_argument("gumbel_incentive: delta_v must be finite");
  }
  const double x = delta_v / mu;
  if (x > 0.0) {
    // (1 + e^-x) (x + ln(1 + e^-x))
    const double t = std::exp(-x);
    return mu * (1.0 + t) * (x + std::log1p(t));
  }
  // (1 + e^x) ln(1 + e^x) / e^x = 1 + h(s), s = e^x. Computing h on its own
  // keeps the result monotone down to the last ulp.
  const double s = std::exp(x);
  double h;
  if (s < 1e-3) {
    h = s * (0.5 - s * (1.0 / 6.0 - s * (1.0 / 12.0 - s / 20.0)));
  } else {
    h = (1.0 + s) * (std::log1p(s) / s) - 1.0;
  }
  return mu * (1.0 + h);
}

StochasticInstance::StochasticInstance(Instance deterministic, double mu,
                                       std::uint64_t seed,
                                       std::vector<std::vector<double>> noise)
    : deterministic_(std::move(deterministic)),
      mu_(mu),
      seed_(seed),
      noise_(std::move(noise)) {}

StochasticInstance StochasticInstance::create(Instance deterministic, double mu,
                                              std::uint64_t seed) {
  check_mu(mu);
  const auto& individuals = deterministic.individuals();
  std::vector<std::vector<double>> noise(individuals.size());
  const auto n = static_cast<std::int64_t>(individuals.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < n; ++k) {
    noise[k] = draw_noise(individuals[k], mu, seed, static_cast<std::size_t>(k));
  }
  return StochasticInstance(std::move(deterministic), mu, seed,
                            std::move(noise));
}

StochasticInstance StochasticInstance::create_serial(Instance deterministic,
                                                     double mu,
                                                     std::uint64_t seed) {
  check_mu(mu);
  std::vector<std::vector<double>> noise;
  noise.reserve(deterministic.size());
  for (std::size_t k = 0; k < deterministic.size(); ++k) {
    noise.push_back(draw_noise(deterministic.individuals()[k], mu, seed, k));
  }
  return StochasticInstance(std::move(deterministic), mu, seed,
                            std::move(noise));
}

StochasticInstance StochasticInstance::with_noise(
    Instance deterministic, double mu, std::vector<std::vector<double>> noise) {
  check_mu(mu);
  if (noise.size() != deterministic.size()) {
    throw std::invalid_argument("noise table does not match the instance");
  }
  for (std::size_t k = 0; k < noise.size(); ++k) {
    if (noise[k].size() != deterministic.individuals()[k].alternatives.size()) {
      throw std::invalid_argument("noise table does not match the instance");
    }
  }
  return StochasticInstance(std::move(deterministic), mu, 0, std::move(noise));
}

std::vector<double> StochasticInstance::realized_utilities(
    std::size_t k) const {
  const Individual& ind = deterministic_.individuals()[k];
  std::vector<double> u(ind.alternatives.size());
  for (std::size_t j = 0; j < u.size(); ++j) {
    u[j] = ind.alternatives[j].utility + noise_[k][j];
  }
  return u;
}

Instance StochasticInstance::realized() const {
  std::vector<Individual> individuals = deterministic_.individuals();
  for (std::size_t k = 0; k < individuals.size(); ++k) {
    const std::vector<double> u = realized_utilities(k);
    for (std::size_t j = 0; j < u.size(); ++j) {
      individuals[k].alternatives[j].utility = u[j];
    }
  }
  Metadata metadata = deterministic_.metadata();
  metadata["noise"] = "gumbel";
  metadata["noise_seed"] = std::to_string(seed_);
  return Instance::create(std::move(individuals), std::move(metadata));
}

std::vector<WeightTable> expected_weights(const StochasticInstance& stoch) {
  const auto& individuals = stoch.deterministic().individuals();
  std::vector<WeightTable> tables(individuals.size());
  const auto n = static_cast<std::int64_t>(individuals.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < n; ++k) {
    const Individual& ind = individuals[k];
    const DefaultChoice def = default_alternative(
        ind, stoch.realized_utilities(static_cast<std::size_t>(k)));
    double v_default = 0.0;
    for (const Alternative& alt : ind.alternatives) {
      if (alt.alt_id == def.alt_id) v_default = alt.utility;
    }
    WeightTable& table = tables[k];
    table.ind_id = ind.ind_id;
    table.default_alt_id = def.alt_id;
    table.points.reserve(ind.alternatives.size());
    for (const Alternative& alt : ind.alternatives) {
      if (alt.alt_id == def.alt_id) {
        table.points.push_back({alt.alt_id, 0.0, 0.0});
      } else {
        table.points.push_back(
            {alt.alt_id, gumbel_incentive(v_default - alt.utility, stoch.mu()),
             alt.social - def.default_social});
      }
    }
  }
  return tables;
}

std::vector<ExtremeProfile> expected_weight_profiles(
    const StochasticInstance& stoch) {
  const std::vector<WeightTable> tables = expected_weights(stoch);
  std::vector<ExtremeProfile> profiles(tables.size());
  const auto n = static_cast<std::int64_t>(tables.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < n; ++k) {
    profiles[k] = build_profile(tables[k].ind_id, tables[k].default_alt_id,
                                tables[k].points);
  }
  return profiles;
}

SimulationReport simulate_sequential(const StochasticInstance& stoch,
                                     double budget) {
  if (!(budget >= 0.0) || !std::isfinite(budget)) {
    throw std::invalid_argument("budget must be finite and non-negative");
  }
  const std::vector<ExtremeProfile> profiles = expected_weight_profiles(stoch);
  const StepQueue queue = build_step_queue(profiles);
  const auto& individuals = stoch.deterministic().individuals();

  struct State {
    std::vector<double> utility;  // realised, in alternative order
    std::size_t current = 0;      // position in alternatives
    double held = 0.0;            // incentive currently committed
  };
  auto position_of = [&](std::size_t k, AlternativeId alt_id) {
    const auto& alts = individuals[k].alternatives;
    for (std::size_t j = 0; j < alts.size(); ++j) {
      if (alts[j].alt_id == alt_id) return j;
    }
    throw std::logic_error("alternative missing from individual");
  };
  std::vector<State> state(individuals.size());
  for (std::size_t k = 0; k < individuals.size(); ++k) {
    state[k].utility = stoch.realized_utilities(k);
    state[k].current = position_of(k, profiles[k].extremes.front().alt_id);
  }

  SimulationReport report;
  report.budget = budget;
  for (const Step& step : queue) {
    const std::size_t k = step.profile_index;
    State& s = state[k];
    const double offer = profiles[k].extremes[step.rank].weight;
    const double cost = offer - s.held;
    if (report.budget_spent + cost > budget) break;
    const std::size_t target = position_of(k, step.alt_id);
    const bool accepted =
        s.utility[target] + offer >= s.utility[s.current] + s.held;
    ++report.proposals;
    report.log.push_back({step.ind_id, step.alt_id, offer, accepted});
    if (!accepted) continue;
    ++report.acceptances;
    report.budget_spent += cost;
    const auto& alts = individuals[k].alternatives;
    report.welfare += alts[target].social - alts[s.current].social;
    s.current = target;
    s.held = offer;
  }
  report.acceptance_rate =
      report.proposals == 0 ? 0.0
                            : static_cast<double>(report.acceptances) /
                                  static_cast<double>(report.proposals);
  return report;
}

}  // namespace incentive
