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

#include <sstream>

#include "gtest/gtest.h"
#include "incentive/concavize.h"
#include "incentive/report_io.h"
#include "test_support.h"

namespace incentive {
namespace {

GreedyResult desk_result(double budget) {
  const Instance inst = testing::instance_from_points(
      {{{0, 0}, {1, 5}, {3, 9}}, {{0, 0}, {2, 8}}});
  return solve(concavize_all(inst), budget);
}

TEST(FormatNumber, SixSignificantDigits) {
  EXPECT_EQ(format_number(0.0), "0");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(13.0), "13");
  EXPECT_EQ(format_number(1.0 / 3.0), "0.333333");
  EXPECT_EQ(format_number(1798.5912), "1798.59");
  EXPECT_EQ(format_number(2.5e-7), "2.5e-07");
}

TEST(ResultJson, DeskInstance) {
  EXPECT_EQ(result_json(desk_result(4.0)),
            "{\"welfare\":13,\"budget_given\":4,\"budget_used\":3,"
            "\"gap_bound\":2,\"split\":{\"ind\":1,\"alt\":2,\"eff\":2},"
            "\"iterations\":2}\n");
  EXPECT_EQ(result_json(desk_result(10.0)),
            "{\"welfare\":17,\"budget_given\":10,\"budget_used\":5,"
            "\"gap_bound\":0,\"split\":null,\"iterations\":3}\n");
}

TEST(ResultJson, ExactSolution) {
  ExactSolution s;
  s.welfare = 13;
  s.spend = 3;
  EXPECT_EQ(result_json(s, 4.0),
            "{\"welfare\":13,\"budget_given\":4,\"budget_used\":3,"
            "\"gap_bound\":0,\"split\":null,\"iterations\":0}\n");
}

TEST(Csv, AllocationAndCurve) {
  const GreedyResult r = desk_result(4.0);
  std::ostringstream alloc, curve;
  write_allocation_csv(alloc, r.allocation);
  write_curve_csv(curve, r.curve);
  EXPECT_EQ(alloc.str(),
            "ind_id,chosen_alt_id,incentive_eur,social_gain_kg\n"
            "1,1,1,5\n"
            "2,1,2,8\n");
  EXPECT_EQ(curve.str(), "spend_eur,welfare_kg\n0,0\n1,5\n3,13\n");
}

TEST(Report, JsonAndLog) {
  SimulationReport r;
  r.budget = 10;
  r.budget_spent = 2.5;
  r.proposals = 3;
  r.acceptances = 2;
  r.acceptance_rate = 2.0 / 3.0;
  r.welfare = 7;
  r.log = {{4, 1, 1.5, true}, {9, 2, 0.75, false}, {4, 2, 2.5, true}};
  EXPECT_EQ(report_json(r),
            "{\"budget_spent\":2.5,\"proposals\":3,\"accepted\":2,"
            "\"acceptance_rate\":0.666667,\"welfare_kg\":7}\n");
  std::ostringstream log;
  write_proposal_log_csv(log, r);
  EXPECT_EQ(log.str(),
            "step,ind_id,alt_id,amount_eur,accepted\n"
            "0,4,1,1.5,1\n"
            "1,9,2,0.75,0\n"
            "2,4,2,2.5,1\n");
}

TEST(Hash, Fnv1a) {
  EXPECT_EQ(fnv1a(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(hash_hex(0xabcULL), "0000000000000abc");
}

}  // namespace
}  // namespace incentive
