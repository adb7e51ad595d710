// Copyright 2026 The wdynmo Authors
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


#include <numeric>
#include <vector>

#include <benchmark/benchmark.h>

#include "wdynmo/cascade.h"
#include "wdynmo/generators.h"
#include "wdynmo/random.h"
#include "wdynmo/solvers.h"

namespace wdynmo {
namespace {

void BM_ActivateTree(benchmark::State& state) {
  Rng rng(1);
  const int n = static_cast<int>(state.range(0));
  const WeightedInstance tree = RandomWeightedTree(rng, n, 6, 4);
  const std::vector<VertexId> seed = SolveTree(tree).monopoly;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Activate(tree, seed));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_ActivateTree)->RangeMultiplier(10)->Range(1000, 100000)
    ->Complexity();

void BM_SolveTree(benchmark::State& state) {
  Rng rng(2);
  const int n = static_cast<int>(state.range(0));
  const WeightedInstance tree = RandomWeightedTree(rng, n, 6, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SolveTree(tree));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_SolveTree)->RangeMultiplier(10)->Range(1000, 100000)
    ->Complexity();

void BM_SolveFamilyF(benchmark::State& state) {
  Rng rng(3);
  const int n = static_cast<int>(state.range(0));
  const WeightedInstance digraph = RandomFamilyF(rng, n, 2, 6, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SolveFamilyF(digraph));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_SolveFamilyF)->RangeMultiplier(10)->Range(1000, 100000)
    ->Complexity();

void BM_HalfMonopoly(benchmark::State& state) {
  Rng rng(4);
  const int n = static_cast<int>(state.range(0));
  const MultiInstance graph = RandomMajorityMultigraph(rng, n, 2, 5, true);
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  rng.Shuffle(order);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        HalfMonopoly(graph, std::span<const VertexId>(order)));
  }
}
BENCHMARK(BM_HalfMonopoly)->Arg(100)->Arg(1000);

void BM_ExpectedBound(benchmark::State& state) {
  Rng rng(5);
  const WeightedInstance graph =
      RandomSimpleGraph(rng, static_cast<int>(state.range(0)), 30);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ExpectedBound(graph));
  }
}
BENCHMARK(BM_ExpectedBound)->Arg(12)->Arg(40);

}  // namespace
}  // namespace wdynmo

BENCHMARK_MAIN();
