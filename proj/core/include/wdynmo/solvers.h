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

// Dynamic-monopoly constructions, bounds and exact solvers.
//
// Every solver checks its answer with Activate() before returning; a seed set
// that fails to activate the whole graph is a bug and raises
// std::logic_error rather than being returned.

#ifndef WDYNMO_SOLVERS_H_
#define WDYNMO_SOLVERS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "wdynmo/cascade.h"
#include "wdynmo/graph.h"

namespace wdynmo {

enum class SolveMethod {
  kBruteForce,
  kHalfMonopoly,
  kRandomized,
  kVertexCoverExact,
  kVertexCoverGreedy,
  kFamilyF,
  kTree,
};

std::string_view MethodName(SolveMethod method);

struct SolveReport {
  std::vector<VertexId> monopoly;  // ascending
  // True only for brute force, the tree solver and the family-F solver.
  bool certified_minimum = false;
  SolveMethod method = SolveMethod::kBruteForce;
  ActivationTrace trace;
  std::optional<std::uint64_t> rng_seed;
  // Family-F solver only: vertices left when peeling stalled, which were
  // then solved by exhaustive search.
  int residual_kernel = 0;
};

// ---------------------------------------------------------------------------
// Strict majority.

// tau(u) = ceil((d(u) + 1) / 2) with d the (in-)multiplicity degree.
std::vector<std::int64_t> StrictMajorityThresholds(
    const MultiInstance& instance);

// The weighted instance whose multigraph (scaled by the lcm of the weight
// denominators) carries strict-majority thresholds: tau(v) = t(v) / l.
WeightedInstance WithStrictMajorityThresholds(
    const WeightedInstance& instance);

// sigma given as the vertex sequence order[0], order[1], ...; values[v] is
// f_sigma(v) = (multiplicity to later vertices) - (to earlier vertices).
struct OrderingFunction {
  std::vector<VertexId> order;
  std::vector<std::int64_t> values;
};

// Throws DomainError unless `order` is a permutation of the vertices.
OrderingFunction ComputeOrderingFunction(const MultiInstance& instance,
                                         std::span<const VertexId> order);

// Returns the smaller of {f >= 0} and {f <= 0} (the former on ties). If that
// set has more than ceil(n/2) vertices, seeds are dropped in ascending id
// order while the rest still activates the graph. The result can still
// exceed ceil(n/2) when the graph has isolated vertices. The identity order
// is used when none is given.
// UnsupportedError for directed input, PreconditionError unless thresholds
// are strict majority.
SolveReport HalfMonopoly(
    const MultiInstance& instance,
    std::optional<std::span<const VertexId>> order = std::nullopt);
// Weighted form: thresholds must equal WithStrictMajorityThresholds().
SolveReport HalfMonopoly(
    const WeightedInstance& instance,
    std::optional<std::span<const VertexId>> order = std::nullopt);

// ---------------------------------------------------------------------------
// Random permutation construction and its exact expectation.

// Vertices whose influence from earlier vertices of `permutation` is below
// their threshold. Always a dynamic monopoly.
std::vector<VertexId> PermutationMonopoly(
    const WeightedInstance& instance, std::span<const VertexId> permutation);

// Uniform permutation of [0, n) drawn from the given stream.
std::vector<VertexId> RandomPermutation(int n, std::uint64_t rng_seed,
                                        std::uint64_t stream = 0);

SolveReport RandomizedMonopoly(const WeightedInstance& instance,
                               std::uint64_t rng_seed);
SolveReport RandomizedMonopoly(const MultiInstance& instance,
                               std::uint64_t rng_seed);

inline constexpr int kDefaultNeighborLimit = 20;

// Expected size of PermutationMonopoly over a uniform permutation:
//   sum_v sum_{S ⊆ N(v), w(S) < tau(v)} |S|! (d - |S|)! / (d + 1)!
// with d = |N(v)| (in-neighbors when directed). Zero-weight edges are
// ignored. ResourceError if some |N(v)| exceeds max_neighbors.
Rational ExpectedBound(const WeightedInstance& instance,
                       int max_neighbors = kDefaultNeighborLimit);
Rational ExpectedBound(const MultiInstance& instance,
                       int max_neighbors = kDefaultNeighborLimit);

// ---------------------------------------------------------------------------
// Vertex cover.

enum class VertexCoverMode { kExact, kGreedy };

inline constexpr int kMaxExactVertexCover = 32;

// Minimum vertex cover by branch and bound; n <= kMaxExactVertexCover.
std::vector<VertexId> MinimumVertexCover(const WeightedInstance& graph);
// Endpoints of a greedy maximal matching (a 2-approximation).
std::vector<VertexId> MatchingVertexCover(const WeightedInstance& graph);

// A vertex cover used as a seed set. Exact mode falls back to the matching
// cover when n > kMaxExactVertexCover. Requires tau(v) <= IncidentWeight(v)
// for all v (PreconditionError otherwise) and an undirected instance.
SolveReport VertexCoverMonopoly(const WeightedInstance& instance,
                                VertexCoverMode mode);
SolveReport VertexCoverMonopoly(const MultiInstance& instance,
                                VertexCoverMode mode);

// ---------------------------------------------------------------------------
// Exact solvers.

// Order v_1..v_n in which every v_i has at most one in-neighbor among
// v_1..v_{i-1}, or nullopt. UnsupportedError for undirected input.
std::optional<std::vector<VertexId>> FamilyFOrder(
    const WeightedInstance& instance);

// Minimum dynamic monopoly of a digraph that has a FamilyFOrder. Throws
// NotInFamilyError otherwise. See family_f.cc for the reduction rules.
SolveReport SolveFamilyF(const WeightedInstance& instance);

// Minimum dynamic monopoly of an undirected forest by leaf peeling; linear
// time. DomainError if the graph has a cycle.
SolveReport SolveTree(const WeightedInstance& instance);

// Brute-force size limit: WDYNMO_BRUTE_FORCE_LIMIT or 16.
int DefaultBruteForceLimit();

// First dynamic monopoly in order of size, then lexicographic order.
// ResourceError when n > limit.
SolveReport BruteForceMinDynmo(const WeightedInstance& instance, int limit);
SolveReport BruteForceMinDynmo(const WeightedInstance& instance);
SolveReport BruteForceMinDynmo(const MultiInstance& instance);

}  // namespace wdynmo

#endif  // WDYNMO_SOLVERS_H_
