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

#include "incentive/report_io.h"

#include <cstdio>
#include <ostream>

namespace incentive {

std::string format_number(double value) {
  if (value == 0.0) return "0";  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return buf;
}

std::string result_json(const GreedyResult& r) {
  std::string split = "null";
  if (r.split) {
    split = "{\"ind\":" + std::to_string(r.split->ind_id) +
            ",\"alt\":" + std::to_string(r.split->alt_id) +
            ",\"eff\":" + format_number(r.split->eff) + "}";
  }
  return "{\"welfare\":" + format_number(r.welfare) +
         ",\"budget_given\":" + format_number(r.budget_given) +
         ",\"budget_used\":" + format_number(r.budget_used) +
         ",\"gap_bound\":" + format_number(r.gap_bound) +
         ",\"split\":" + split +
         ",\"iterations\":" + std::to_string(r.iterations) + "}\n";
}

std::string result_json(const ExactSolution& s, double budget) {
  return "{\"welfare\":" + format_number(s.welfare) +
         ",\"budget_given\":" + format_number(budget) +
         ",\"budget_used\":" + format_number(s.spend) +
         ",\"gap_bound\":0,\"split\":null,\"iterations\":0}\n";
}

void write_allocation_csv(std::ostream& out, const Allocation& allocation) {
  out << "ind_id,chosen_alt_id,incentive_eur,social_gain_kg\n";
  for (const AllocationEntry& e : allocation.entries) {
    out << e.ind_id << ',' << e.alt_id << ',' << format_number(e.incentive)
        << ',' << format_number(e.social_gain) << '\n';
  }
}

void write_curve_csv(std::ostream& out, const WelfareCurve& curve) {
  out << "spend_eur,welfare_kg\n";
  for (const Breakpoint& b : curve.breakpoints) {
    out << format_number(b.spend) << ',' << format_number(b.welfare) << '\n';
  }
}

std::string report_json(const SimulationReport& r) {
  return "{\"budget_spent\":" + format_number(r.budget_spent) +
         ",\"proposals\":" + std::to_string(r.proposals) +
         ",\"accepted\":" + std::to_string(r.acceptances) +
         ",\"acceptance_rate\":" + format_number(r.acceptance_rate) +
         ",\"welfare_kg\":" + format_number(r.welfare) + "}\n";
}

void write_proposal_log_csv(std::ostream& out, const SimulationReport& r) {
  out << "step,ind_id,alt_id,amount_eur,accepted\n";
  for (std::size_t k = 0; k < r.log.size(); ++k) {
    const ProposalEvent& e = r.log[k];
    out << k << ',' << e.ind_id << ',' << e.alt_id << ','
        << format_number(e.amount) << ',' << (e.accepted ? 1 : 0) << '\n';
  }
}

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hash_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace incentive
