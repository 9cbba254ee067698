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

#include "incentive/generator.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include "incentive/errors.h"
#include "incentive/rng.h"
#include "json.hpp"

namespace incentive {
namespace {

using nlohmann::json;

constexpr std::uint64_t kPopulationStream = 0x706f70;  // "pop"

void read_range(const json& j, const char* key, double& lo, double& hi) {
  if (!j.contains(key)) return;
  const json& r = j.at(key);
  if (!r.is_array() || r.size() != 2) {
    throw InputError(std::string("mode field '") + key +
                     "' must be a [min, max] pair");
  }
  lo = r[0].get<double>();
  hi = r[1].get<double>();
}

Individual make_individual(const GeneratorConfig& config, std::uint64_t seed,
                           std::size_t index) {
  Engine engine = stream_engine(seed, kPopulationStream, index);
  const DistanceSpec& d = config.distance;
  const double distance =
      std::clamp(std::exp(d.log_mean + d.log_sd * sample_normal(engine)),
                 d.min_km, d.max_km);

  const std::size_t m = config.modes.size();
  std::vector<char> available(m);
  std::vector<double> utility(m);
  for (std::size_t k = 0; k < m; ++k) {
    const ModeSpec& mode = config.modes[k];
    // Every draw happens regardless of availability so that the stream
    // layout does not depend on the outcome.
    available[k] = uniform_open(engine) < mode.availability;
    const double asc = uniform_range(engine, mode.asc_min, mode.asc_max);
    const double per_km =
        uniform_range(engine, mode.per_km_min, mode.per_km_max);
    const double noise =
        config.include_noise ? sample_gumbel(engine, config.mu) : 0.0;
    utility[k] = asc + per_km * distance + noise;
  }
  if (std::none_of(available.begin(), available.end(),
                   [](char a) { return a != 0; })) {
    std::size_t fallback = 0;
    for (std::size_t k = 1; k < m; ++k) {
      if (config.modes[k].availability > config.modes[fallback].availability) {
        fallback = k;
      }
    }
    available[fallback] = 1;
  }

  double max_emission = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    if (available[k]) {
      max_emission = std::max(max_emission, config.modes[k].emission_g_per_km);
    }
  }
  Individual ind;
  ind.ind_id = static_cast<IndividualId>(index + 1);
  for (std::size_t k = 0; k < m; ++k) {
    if (!available[k]) continue;
    const double avoided_kg = (max_emission - config.modes[k].emission_g_per_km) /
                              1000.0 * distance * 2.0;
    ind.alternatives.push_back({static_cast<AlternativeId>(k), utility[k],
                                avoided_kg, config.modes[k].name});
  }
  return ind;
}

Metadata population_metadata(const GeneratorConfig& config,
                             std::uint64_t seed) {
  return {{"source", "synthetic"},
          {"seed", std::to_string(seed)},
          {"utility_unit", "EUR"},
          {"social_unit", "kg CO2 avoided per day"},
          {"noise", config.include_noise ? "gumbel" : "none"}};
}

}  // namespace

GeneratorConfig GeneratorConfig::defaults() {
  GeneratorConfig c;
  c.modes = {
      {"car", 193.0, 0.85, 0.0, 0.0, -0.14, -0.10},
      {"public_transit", 60.0, 0.90, -1.5, -0.3, -0.12, -0.06},
      {"walk", 0.0, 1.00, 0.5, 1.5, -1.0, -0.6},
      {"bike", 0.0, 0.80, -0.6, 0.4, -0.35, -0.20},
      {"motorcycle", 165.0, 0.15, -1.8, -0.8, -0.10, -0.07},
  };
  return c;
}

GeneratorConfig GeneratorConfig::from_json_text(const std::string& text) {
  GeneratorConfig c = defaults();
  try {
    const json j = json::parse(text);
    if (j.contains("individuals")) {
      const auto n = j.at("individuals").get<long long>();
      if (n < 0) throw InputError("'individuals' must be non-negative");
      c.individuals = static_cast<std::size_t>(n);
    }
    if (j.contains("mu")) c.mu = j.at("mu").get<double>();
    if (j.contains("include_noise")) {
      c.include_noise = j.at("include_noise").get<bool>();
    }
    if (j.contains("distance_km")) {
      const json& d = j.at("distance_km");
      if (d.contains("log_mean")) c.distance.log_mean = d.at("log_mean");
      if (d.contains("log_sd")) c.distance.log_sd = d.at("log_sd");
      if (d.contains("min")) c.distance.min_km = d.at("min");
      if (d.contains("max")) c.distance.max_km = d.at("max");
    }
    if (j.contains("modes")) {
      c.modes.clear();
      for (const json& jm : j.at("modes")) {
        ModeSpec mode;
        mode.name = jm.at("name").get<std::string>();
        mode.emission_g_per_km = jm.value("emission_g_per_km", 0.0);
        mode.availability = jm.value("availability", 1.0);
        read_range(jm, "asc", mode.asc_min, mode.asc_max);
        read_range(jm, "per_km", mode.per_km_min, mode.per_km_max);
        c.modes.push_back(std::move(mode));
      }
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("generator config: ") + e.what());
  }
  c.validate();
  return c;
}

GeneratorConfig GeneratorConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open generator config " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return from_json_text(text.str());
}

std::string GeneratorConfig::to_json_text() const {
  json j;
  j["individuals"] = individuals;
  j["mu"] = mu;
  j["include_noise"] = include_noise;
  j["distance_km"] = {{"log_mean", distance.log_mean},
                      {"log_sd", distance.log_sd},
                      {"min", distance.min_km},
                      {"max", distance.max_km}};
  j["modes"] = json::array();
  for (const ModeSpec& m : modes) {
    j["modes"].push_back({{"name", m.name},
                          {"emission_g_per_km", m.emission_g_per_km},
                          {"availability", m.availability},
                          {"asc", {m.asc_min, m.asc_max}},
                          {"per_km", {m.per_km_min, m.per_km_max}}});
  }
  return j.dump(2);
}

void GeneratorConfig::validate() const {
  if (modes.empty()) throw InputError("generator config: empty mode set");
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw InputError("generator config: mu must be positive and finite");
  }
  for (const ModeSpec& m : modes) {
    const std::string who = "generator config: mode '" + m.name + "'";
    if (!(m.availability >= 0.0 && m.availability <= 1.0)) {
      throw InputError(who + " availability must lie in [0, 1]");
    }
    if (!std::isfinite(m.emission_g_per_km) || m.emission_g_per_km < 0.0) {
      throw InputError(who + " emission factor must be finite and >= 0");
    }
    if (!(m.asc_min <= m.asc_max) || !(m.per_km_min <= m.per_km_max) ||
        !std::isfinite(m.asc_min) || !std::isfinite(m.asc_max) ||
        !std::isfinite(m.per_km_min) || !std::isfinite(m.per_km_max)) {
      throw InputError(who + " has an invalid coefficient range");
    }
  }
  const DistanceSpec& d = distance;
  if (!std::isfinite(d.log_mean) || !(d.log_sd >= 0.0) ||
      !std::isfinite(d.log_sd) || !(d.min_km > 0.0) ||
      !(d.min_km <= d.max_km) || !std::isfinite(d.max_km)) {
    throw InputError("generator config: invalid distance distribution");
  }
}

Instance synthesize_population(const GeneratorConfig& config,
                               std::uint64_t seed) {
  config.validate();
  std::vector<Individual> individuals(config.individuals);
  const auto n = static_cast<std::int64_t>(config.individuals);
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < n; ++k) {
    individuals[k] = make_individual(config, seed, static_cast<std::size_t>(k));
  }
  return Instance::create(std::move(individuals),
                          population_metadata(config, seed));
}

Instance synthesize_population_serial(const GeneratorConfig& config,
                                      std::uint64_t seed) {
  config.validate();
  std::vector<Individual> individuals;
  individuals.reserve(config.individuals);
  for (std::size_t k = 0; k < config.individuals; ++k) {
    individuals.push_back(make_individual(config, seed, k));
  }
  return Instance::create(std::move(individuals),
                          population_metadata(config, seed));
}

}  // namespace incentive
