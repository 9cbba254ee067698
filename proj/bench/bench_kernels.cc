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

// Serial reference vs OpenMP kernels. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <map>

#include "incentive/concavize.h"
#include "incentive/generator.h"
#include "incentive/greedy.h"
#include "incentive/imperfect_info.h"

namespace incentive {
namespace {

GeneratorConfig config_for(std::int64_t n) {
  GeneratorConfig c = GeneratorConfig::defaults();
  c.individuals = static_cast<std::size_t>(n);
  return c;
}

const Instance& population(std::int64_t n) {
  static std::map<std::int64_t, Instance> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, synthesize_population(config_for(n), 1)).first;
  }
  return it->second;
}

void BM_GenerateSerial(benchmark::State& state) {
  const GeneratorConfig c = config_for(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(synthesize_population_serial(c, 7));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_GenerateParallel(benchmark::State& state) {
  const GeneratorConfig c = config_for(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(synthesize_population(c, 7));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ConcavizeSerial(benchmark::State& state) {
  const Instance& inst = population(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(concavize_all_serial(inst));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ConcavizeParallel(benchmark::State& state) {
  const Instance& inst = population(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(concavize_all(inst));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_NoiseSerial(benchmark::State& state) {
  const Instance& inst = population(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(StochasticInstance::create_serial(inst, 1.0, 3));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_NoiseParallel(benchmark::State& state) {
  const Instance& inst = population(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(StochasticInstance::create(inst, 1.0, 3));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Solve(benchmark::State& state) {
  const auto profiles = concavize_all(population(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve(profiles, 1800.0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(BM_GenerateSerial)->Arg(20000)->Arg(200000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GenerateParallel)->Arg(20000)->Arg(200000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConcavizeSerial)->Arg(20000)->Arg(200000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConcavizeParallel)->Arg(20000)->Arg(200000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NoiseSerial)->Arg(20000)->Arg(200000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NoiseParallel)->Arg(20000)->Arg(200000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Solve)->Arg(200000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace incentive

BENCHMARK_MAIN();
