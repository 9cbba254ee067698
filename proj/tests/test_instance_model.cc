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

#include <algorithm>
#include <random>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "incentive/errors.h"
#include "incentive/instance.h"
#include "incentive/instance_io.h"
#include "test_support.h"

namespace incentive {
namespace {

Individual make(std::vector<std::pair<double, double>> us) {
  Individual ind{1, {}};
  for (std::size_t j = 0; j < us.size(); ++j) {
    ind.alternatives.push_back(
        {static_cast<AlternativeId>(j), us[j].first, us[j].second, ""});
  }
  return ind;
}

std::string error_of(const std::string& csv) {
  std::istringstream in(csv);
  try {
    read_instance_csv(in);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST(LoadInstance, MinimalCsv) {
  std::istringstream in("ind_id,alt_id,utility,social\n1,0,5.0,0.0\n1,1,3.0,10.0\n");
  const Instance inst = read_instance_csv(in);
  ASSERT_EQ(inst.size(), 1u);
  EXPECT_EQ(inst.individuals()[0].alternatives.size(), 2u);
  EXPECT_EQ(inst.individuals()[0].alternatives[1].social, 10.0);
}

TEST(LoadInstance, DuplicateAlternative) {
  const std::string msg = error_of(
      "ind_id,alt_id,utility,social\n1,0,5.0,0.0\n1,0,3.0,10.0\n");
  EXPECT_NE(msg.find("duplicate alternative"), std::string::npos) << msg;
  EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
}

TEST(LoadInstance, NonFiniteUtility) {
  const std::string msg =
      error_of("ind_id,alt_id,utility,social\n1,0,inf,0.0\n");
  EXPECT_NE(msg.find("non-finite utility"), std::string::npos) << msg;
}

TEST(LoadInstance, ParseErrorsCarryLineNumbers) {
  EXPECT_NE(error_of("ind_id,alt_id,utility,social\n1,0,abc,0\n").find("line 2"),
            std::string::npos);
  EXPECT_NE(error_of("id,alt,u,s\n").find("header"), std::string::npos);
  EXPECT_NE(error_of("ind_id,alt_id,utility,social\n1,0,1\n").find("fields"),
            std::string::npos);
  EXPECT_NE(error_of("").find("empty"), std::string::npos);
}

TEST(LoadInstance, EmptyIndividualRejectedByValidation) {
  EXPECT_THROW(Instance::create({Individual{3, {}}}), InputError);
}

TEST(LoadInstance, JsonSchema) {
  std::istringstream in(
      R"({"individuals":[{"id":7,"alternatives":[{"id":0,"utility":1.5,)"
      R"("social":0,"label":"car"},{"id":2,"utility":1,"social":4}]}],)"
      R"("metadata":{"source":"test"}})");
  const Instance inst = read_instance_json(in);
  ASSERT_EQ(inst.size(), 1u);
  EXPECT_EQ(inst.individuals()[0].ind_id, 7);
  EXPECT_EQ(inst.individuals()[0].alternatives[0].label, "car");
  EXPECT_EQ(inst.metadata().at("source"), "test");
}

TEST(LoadInstance, JsonErrors) {
  std::istringstream bad_syntax("{\"individuals\": [");
  EXPECT_THROW(read_instance_json(bad_syntax), InputError);
  std::istringstream dup(
      R"({"individuals":[{"id":1,"alternatives":[{"id":0,"utility":1,"social":0},)"
      R"({"id":0,"utility":2,"social":0}]}]})");
  EXPECT_THROW(read_instance_json(dup), InputError);
  std::istringstream missing(R"({"individuals":[{"id":1}]})");
  EXPECT_THROW(read_instance_json(missing), InputError);
}

TEST(DefaultAlternative, UniqueMaximum) {
  EXPECT_EQ(default_alternative(make({{5, 0}, {3, 10}})).alt_id, 0);
}

TEST(DefaultAlternative, UtilityTieGoesToLargerSocial) {
  EXPECT_EQ(default_alternative(make({{5, 0}, {5, 10}})).alt_id, 1);
}

TEST(DefaultAlternative, FullTieGoesToLowestId) {
  Individual ind = make({{5, 4}, {5, 4}});
  std::swap(ind.alternatives[0], ind.alternatives[1]);
  EXPECT_EQ(default_alternative(ind).alt_id, 0);
}

TEST(IncentiveWeights, DirectSubtraction) {
  const auto w = incentive_weights(make({{5, 0}, {3, 0}, {1, 0}}));
  ASSERT_EQ(w.size(), 3u);
  EXPECT_EQ(w[0].weight, 0.0);
  EXPECT_EQ(w[1].weight, 2.0);
  EXPECT_EQ(w[2].weight, 4.0);
}

TEST(IncentiveWeights, IndifferenceGivesZeros) {
  for (const auto& w : incentive_weights(make({{2, 1}, {2, 3}, {2, 0}}))) {
    EXPECT_EQ(w.weight, 0.0);
  }
}

TEST(IncentiveWeights, WeightIsTheExactCompensation) {
  const Individual ind = make({{5, 0}, {3, 10}});
  const auto w = incentive_weights(ind);
  EXPECT_EQ(ind.alternatives[1].utility + w[1].weight,
            ind.alternatives[0].utility);
}

class InstanceProperties : public ::testing::TestWithParam<int> {};

TEST_P(InstanceProperties, WeightsDefaultPermutationAndTranslation) {
  std::mt19937_64 rng(GetParam());
  for (int trial = 0; trial < 50; ++trial) {
    Individual ind = testing::random_individual(rng, 1, 1, 8, 300, 20);
    const DefaultChoice def = default_alternative(ind);
    const auto weights = incentive_weights(ind);
    for (const IncentiveWeight& w : weights) {
      EXPECT_GE(w.weight, 0.0);
      if (w.alt_id == def.alt_id) EXPECT_EQ(w.weight, 0.0);
    }
    Individual shuffled = ind;
    std::shuffle(shuffled.alternatives.begin(), shuffled.alternatives.end(),
                 rng);
    EXPECT_EQ(default_alternative(shuffled).alt_id, def.alt_id);

    Individual shifted = ind;
    for (Alternative& a : shifted.alternatives) a.utility += 1024.0;
    EXPECT_EQ(default_alternative(shifted).alt_id, def.alt_id);
    const auto shifted_weights = incentive_weights(shifted);
    for (std::size_t j = 0; j < weights.size(); ++j) {
      EXPECT_NEAR(shifted_weights[j].weight, weights[j].weight, 1e-9);
    }
  }
}

TEST_P(InstanceProperties, SaveLoadRoundTrip) {
  std::mt19937_64 rng(GetParam());
  std::vector<Individual> individuals;
  std::uniform_real_distribution<double> real(-50.0, 50.0);
  for (int i = 0; i < 20; ++i) {
    Individual ind{static_cast<IndividualId>(100 - 3 * i), {}};
    const int m = testing::uniform_int(rng, 1, 5);
    for (int j = 0; j < m; ++j) {
      ind.alternatives.push_back(
          {m - j, real(rng), real(rng), j % 2 ? "mode" + std::to_string(j) : ""});
    }
    individuals.push_back(std::move(ind));
  }
  const Instance inst = Instance::create(individuals, {{"source", "prop"}});
  std::stringstream json_text;
  write_instance_json(json_text, inst);
  EXPECT_EQ(read_instance_json(json_text), inst);

  const Instance no_meta = Instance::create(individuals);
  std::stringstream csv_text;
  write_instance_csv(csv_text, no_meta);
  EXPECT_EQ(read_instance_csv(csv_text), no_meta);
}

INSTANTIATE_TEST_SUITE_P(Seeds, InstanceProperties, ::testing::Values(1, 2, 3));

}  // namespace
}  // namespace incentive
