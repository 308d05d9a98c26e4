// Copyright 2026 The Authors.
//
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

#include <benchmark/benchmark.h>

#include "mkvc/analysis.h"
#include "mkvc/generate.h"
#include "mkvc/reduction.h"
#include "mkvc/solvers.h"

namespace mkvc {
namespace {

BipartiteInstance Instance(int n_side, int k, std::uint64_t seed = 7) {
  GenSpec spec;
  spec.n_left = n_side;
  spec.n_right = n_side;
  spec.edge_prob = 0.4;
  spec.k = k;
  spec.seed = seed;
  return GenerateInteger(spec);
}

void BM_Greedy(benchmark::State& state) {
  const int n_side = static_cast<int>(state.range(0));
  const BipartiteInstance inst = Instance(n_side, n_side / 2);
  for (auto _ : state) benchmark::DoNotOptimize(SolveGreedy(inst));
  state.SetComplexityN(n_side);
}
BENCHMARK(BM_Greedy)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_Exact(benchmark::State& state) {
  const BipartiteInstance inst = Instance(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(SolveExact(inst));
}
BENCHMARK(BM_Exact)->DenseRange(4, 10, 2);

void BM_Alg2(benchmark::State& state) {
  const BipartiteInstance inst = Instance(static_cast<int>(state.range(0)), 5);
  const SolverSpec spec = SolverSpec::Alg2(static_cast<int>(state.range(1)), SolverSpec::Greedy());
  for (auto _ : state) benchmark::DoNotOptimize(Solve(spec, inst));
}
BENCHMARK(BM_Alg2)->ArgsProduct({{8, 16, 32}, {3, 4}});

void BM_PtasDepth(benchmark::State& state) {
  const BipartiteInstance inst = Instance(8, 4);
  const SolverSpec spec = SolverSpec::Ptas(Ratio(1, 10), SolverSpec::Greedy(),
                                           static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Solve(spec, inst));
}
BENCHMARK(BM_PtasDepth)->DenseRange(1, 3);

void BM_TopSideSplit(benchmark::State& state) {
  const BipartiteInstance inst = Instance(static_cast<int>(state.range(0)), 16);
  const SolverSpec spec = SolverSpec::TopSideSplit();
  for (auto _ : state) benchmark::DoNotOptimize(Solve(spec, inst));
}
BENCHMARK(BM_TopSideSplit)->Arg(32)->Arg(128);

void BM_ScaleWeights(benchmark::State& state) {
  GenSpec spec;
  spec.n_left = static_cast<int>(state.range(0));
  spec.n_right = spec.n_left;
  spec.rational = true;
  const RationalInstance inst = Generate(spec);
  for (auto _ : state) benchmark::DoNotOptimize(ScaleWeights(inst, 3));
}
BENCHMARK(BM_ScaleWeights)->Arg(16)->Arg(64);

void BM_PtasSchedule(benchmark::State& state) {
  const Ratio epsilon(1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(PtasSchedule(GreedyRatioLowerBound(), epsilon));
}
BENCHMARK(BM_PtasSchedule)->Arg(10)->Arg(20)->Arg(50);

}  // namespace
}  // namespace mkvc

BENCHMARK_MAIN();
