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

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "solver_util.h"
#include "wdynmo/errors.h"
#include "wdynmo/random.h"
#include "wdynmo/solvers.h"

namespace wdynmo {
namespace {

// Counts subsets of the ascending weights [first, end) with total below
// `limit`, bucketed by subset size.
void CountLightSubsets(const std::vector<Rational>& weights, std::size_t first,
                       int size, const Rational& sum, const Rational& limit,
                       std::vector<std::int64_t>& count_by_size) {
  ++count_by_size[size];
  for (std::size_t i = first; i < weights.size(); ++i) {
    Rational next = sum + weights[i];
    if (next >= limit) break;
    CountLightSubsets(weights, i + 1, size + 1, next, limit, count_by_size);
  }
}

std::int64_t Binomial(int n, int k) {
  std::int64_t result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

}  // namespace

std::vector<VertexId> PermutationMonopoly(
    const WeightedInstance& instance, std::span<const VertexId> permutation) {
  const int n = instance.num_vertices();
  if (static_cast<int>(permutation.size()) != n) {
    throw DomainError("permutation must list all " + std::to_string(n) +
                      " vertices");
  }
  std::vector<char> placed(n, 0);
  std::vector<VertexId> monopoly;
  for (VertexId v : permutation) {
    instance.CheckVertex(v);
    if (placed[v]) {
      throw DomainError("permutation repeats vertex " + std::to_string(v));
    }
    Rational from_predecessors;
    for (const auto& arc : instance.InArcs(v)) {
      if (placed[arc.vertex]) from_predecessors += arc.weight;
    }
    if (from_predecessors < instance.threshold(v)) monopoly.push_back(v);
    placed[v] = 1;
  }
  std::sort(monopoly.begin(), monopoly.end());
  return monopoly;
}

std::vector<VertexId> RandomPermutation(int n, std::uint64_t rng_seed,
                                        std::uint64_t stream) {
  std::vector<VertexId> permutation(n);
  std::iota(permutation.begin(), permutation.end(), 0);
  Rng rng(rng_seed, stream);
  rng.Shuffle(permutation);
  return permutation;
}

SolveReport RandomizedMonopoly(const WeightedInstance& instance,
                               std::uint64_t rng_seed) {
  auto permutation = RandomPermutation(instance.num_vertices(), rng_seed);
  SolveReport report = internal::MakeReport(
      instance, PermutationMonopoly(instance, permutation),
      SolveMethod::kRandomized, false);
  report.rng_seed = rng_seed;
  return report;
}

SolveReport RandomizedMonopoly(const MultiInstance& instance,
                               std::uint64_t rng_seed) {
  SolveReport report = RandomizedMonopoly(AsWeighted(instance), rng_seed);
  report.trace = Activate(instance, report.monopoly);
  return report;
}

Rational ExpectedBound(const WeightedInstance& instance, int max_neighbors) {
  Rational total;
  std::vector<Rational> weights;
  for (VertexId v = 0; v < instance.num_vertices(); ++v) {
    weights.clear();
    for (const auto& arc : instance.InArcs(v)) {
      if (!arc.weight.is_zero()) weights.push_back(arc.weight);
    }
    const int d = static_cast<int>(weights.size());
    if (d > max_neighbors) {
      throw ResourceError("vertex " + std::to_string(v) + " has " +
                          std::to_string(d) + " neighbors; limit is " +
                          std::to_string(max_neighbors));
    }
    if (instance.threshold(v).is_zero()) continue;
    std::sort(weights.begin(), weights.end());
    std::vector<std::int64_t> count_by_size(d + 1, 0);
    CountLightSubsets(weights, 0, 0, Rational(), instance.threshold(v),
                      count_by_size);
    // P(predecessors of v among N(v) are exactly S) = |S|!(d-|S|)!/(d+1)!
    //                                               = 1 / ((d+1) C(d,|S|)).
    for (int k = 0; k <= d; ++k) {
      if (count_by_size[k] == 0) continue;
      total += Rational(count_by_size[k], (d + 1) * Binomial(d, k));
    }
  }
  return total;
}

Rational ExpectedBound(const MultiInstance& instance, int max_neighbors) {
  return ExpectedBound(AsWeighted(instance), max_neighbors);
}

}  // namespace wdynmo
