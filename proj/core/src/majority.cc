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
#include <string>
#include <utility>

#include "solver_util.h"
#include "wdynmo/errors.h"
#include "wdynmo/reduction.h"
#include "wdynmo/solvers.h"

namespace wdynmo {

std::vector<std::int64_t> StrictMajorityThresholds(
    const MultiInstance& instance) {
  std::vector<std::int64_t> thresholds(instance.num_vertices());
  for (VertexId v = 0; v < instance.num_vertices(); ++v) {
    thresholds[v] = MultigraphDegree(instance, v) / 2 + 1;
  }
  return thresholds;
}

WeightedInstance WithStrictMajorityThresholds(
    const WeightedInstance& instance) {
  std::int64_t scale = 1;
  for (const WeightedEdge& e : instance.edges()) {
    scale = Lcm(scale, e.weight.denominator());
  }
  std::vector<Rational> thresholds;
  thresholds.reserve(instance.num_vertices());
  for (VertexId v = 0; v < instance.num_vertices(); ++v) {
    Rational degree = IncidentWeight(instance, v) * Rational(scale);
    thresholds.push_back(Rational(degree.numerator() / 2 + 1, scale));
  }
  return instance.WithThresholds(std::move(thresholds));
}

OrderingFunction ComputeOrderingFunction(const MultiInstance& instance,
                                         std::span<const VertexId> order) {
  const int n = instance.num_vertices();
  if (static_cast<int>(order.size()) != n) {
    throw DomainError("ordering must list all " + std::to_string(n) +
                      " vertices");
  }
  std::vector<int> position(n, -1);
  for (int i = 0; i < n; ++i) {
    instance.CheckVertex(order[i]);
    if (position[order[i]] != -1) {
      throw DomainError("ordering repeats vertex " +
                        std::to_string(order[i]));
    }
    position[order[i]] = i;
  }
  OrderingFunction f{{order.begin(), order.end()},
                     std::vector<std::int64_t>(n, 0)};
  for (const MultiEdge& e : instance.edges()) {
    // The later endpoint loses the multiplicity, the earlier one gains it.
    bool from_first = position[e.from] < position[e.to];
    VertexId early = from_first ? e.from : e.to;
    VertexId late = from_first ? e.to : e.from;
    f.values[early] += e.multiplicity;
    f.values[late] -= e.multiplicity;
  }
  return f;
}

namespace {

std::vector<VertexId> PruneToMinimal(const MultiInstance& instance,
                                     std::vector<VertexId> seed) {
  std::vector<VertexId> trial;
  for (std::size_t i = 0; i < seed.size();) {
    trial = seed;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (IsDynamicMonopoly(instance, trial)) {
      seed = std::move(trial);
    } else {
      ++i;
    }
  }
  return seed;
}

}  // namespace

SolveReport HalfMonopoly(const MultiInstance& instance,
                         std::optional<std::span<const VertexId>> order) {
  if (instance.directed()) {
    throw UnsupportedError("majority construction requires an undirected "
                           "multigraph");
  }
  const int n = instance.num_vertices();
  const auto majority = StrictMajorityThresholds(instance);
  for (VertexId v = 0; v < n; ++v) {
    if (instance.threshold(v) != majority[v]) {
      throw PreconditionError(
          "vertex " + std::to_string(v) + " has threshold " +
          std::to_string(instance.threshold(v)) +
          ", strict majority is " + std::to_string(majority[v]));
    }
  }
  std::vector<VertexId> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  const OrderingFunction f =
      ComputeOrderingFunction(instance, order ? *order : identity);

  std::vector<VertexId> nonnegative;
  std::vector<VertexId> nonpositive;
  for (VertexId v = 0; v < n; ++v) {
    if (f.values[v] >= 0) nonnegative.push_back(v);
    if (f.values[v] <= 0) nonpositive.push_back(v);
  }
  std::vector<VertexId> chosen = nonpositive.size() < nonnegative.size()
                                     ? std::move(nonpositive)
                                     : std::move(nonnegative);
  // Vertices with f = 0 lie in both sets, so the smaller one can exceed
  // ceil(n/2). Drop redundant seeds until the set is a minimal monopoly.
  if (chosen.size() > static_cast<std::size_t>((n + 1) / 2)) {
    chosen = PruneToMinimal(instance, std::move(chosen));
  }
  return internal::MakeReport(instance, std::move(chosen),
                              SolveMethod::kHalfMonopoly, false);
}

SolveReport HalfMonopoly(const WeightedInstance& instance,
                         std::optional<std::span<const VertexId>> order) {
  if (instance.directed()) {
    throw UnsupportedError("majority construction requires an undirected "
                           "graph");
  }
  const WeightedInstance majority = WithStrictMajorityThresholds(instance);
  for (VertexId v = 0; v < instance.num_vertices(); ++v) {
    if (instance.threshold(v) != majority.threshold(v)) {
      throw PreconditionError(
          "vertex " + std::to_string(v) + " has threshold " +
          instance.threshold(v).ToString() + ", strict majority is " +
          majority.threshold(v).ToString());
    }
  }
  SolveReport multi = HalfMonopoly(ToMultigraph(instance).multigraph, order);
  return internal::MakeReport(instance, std::move(multi.monopoly),
                              SolveMethod::kHalfMonopoly, false);
}

}  // namespace wdynmo
