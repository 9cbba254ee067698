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

#ifndef INCENTIVE_GENERATOR_H_
#define INCENTIVE_GENERATOR_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "incentive/instance.h"

namespace incentive {

// One transport mode. Systematic utility of the mode for an individual is
// asc + per_km * distance, with asc and per_km drawn uniformly from the
// given ranges for every individual.
struct ModeSpec {
  std::string name;
  double emission_g_per_km = 0.0;
  double availability = 1.0;
  double asc_min = 0.0;
  double asc_max = 0.0;
  double per_km_min = 0.0;
  double per_km_max = 0.0;
};

// One-way commute distance, log-normal then clamped to [min_km, max_km].
struct DistanceSpec {
  double log_mean = 2.0;
  double log_sd = 0.7;
  double min_km = 0.3;
  double max_km = 80.0;
};

// The default coefficients and emission factors are plausible placeholders
// for desk-scale experiments, not calibrated values.
struct GeneratorConfig {
  std::size_t individuals = 1000;
  std::vector<ModeSpec> modes;
  DistanceSpec distance;
  // Gumbel scale of the utility noise (euros).
  double mu = 1.0;
  // Add one Gumbel(mu) draw to every utility.
  bool include_noise = false;

  // Five modes: car, public transit, walk, bike, motorcycle.
  static GeneratorConfig defaults();
  // Fields missing from the JSON keep their default value; a "modes" array
  // replaces the default mode list entirely.
  static GeneratorConfig from_json_text(const std::string& text);
  static GeneratorConfig load(const std::filesystem::path& path);
  std::string to_json_text() const;

  // Throws InputError on an empty mode set, mu <= 0, availability outside
  // [0, 1], inverted ranges, or invalid distance parameters.
  void validate() const;
};

// Deterministic in (config, seed). Individual k (0-based) gets ind_id k + 1
// and its own random stream, so the parallel and serial versions produce the
// same Instance. alt_id is the mode's index in config.modes. The social
// indicator is the round-trip CO2 (kg) avoided relative to the most-emitting
// mode available to that individual. If no mode is drawn as available, the
// mode with the highest availability probability is used.
Instance synthesize_population(const GeneratorConfig& config,
                               std::uint64_t seed);
Instance synthesize_population_serial(const GeneratorConfig& config,
                                      std::uint64_t seed);

}  // namespace incentive

#endif  // INCENTIVE_GENERATOR_H_
