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

#ifndef INCENTIVE_REPORT_IO_H_
#define INCENTIVE_REPORT_IO_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "incentive/exact_oracle.h"
#include "incentive/greedy.h"
#include "incentive/imperfect_info.h"

namespace incentive {

// Six significant digits, "%.6g". Used for every reported number; instance
// files use format_exact instead.
std::string format_number(double value);

// {"welfare":..,"budget_given":..,"budget_used":..,"gap_bound":..,
//  "split":{"ind":..,"alt":..,"eff":..}|null,"iterations":..}
std::string result_json(const GreedyResult& result);
// Same schema for an oracle solution: split null, gap_bound 0, iterations 0.
std::string result_json(const ExactSolution& solution, double budget);

// ind_id,chosen_alt_id,incentive_eur,social_gain_kg
void write_allocation_csv(std::ostream& out, const Allocation& allocation);
// spend_eur,welfare_kg
void write_curve_csv(std::ostream& out, const WelfareCurve& curve);

// {"budget_spent":..,"proposals":..,"accepted":..,"acceptance_rate":..,
//  "welfare_kg":..}
std::string report_json(const SimulationReport& report);
// step,ind_id,alt_id,amount_eur,accepted
void write_proposal_log_csv(std::ostream& out, const SimulationReport& report);

// 64-bit FNV-1a, rendered as 16 hex digits by hash_hex.
std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h = 0xcbf29ce484222325ULL);
std::string hash_hex(std::uint64_t h);

}  // namespace incentive

#endif  // INCENTIVE_REPORT_IO_H_
