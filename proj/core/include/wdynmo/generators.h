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

// Seeded random instance generators for property tests, the acceptance
// harness and benchmarks. All draws come from the caller's Rng, so a fixed
// seed reproduces the same instances.

#ifndef WDYNMO_GENERATORS_H_
#define WDYNMO_GENERATORS_H_

#include "wdynmo/contagion.h"
#include "wdynmo/graph.h"
#include "wdynmo/random.h"

namespace wdynmo {

struct RandomInstanceOptions {
  int min_vertices = 1;
  int max_vertices = 8;
  bool directed = false;
  int edge_percent = 40;  // chance of each pair (ordered pair if directed)
  int max_denominator = 4;
  int max_numerator = 8;
  int zero_weight_percent = 0;
};

// p/q with q in [1, max_denominator] and p in [0, max_numerator].
Rational RandomRational(Rng& rng, int max_numerator, int max_denominator);

// Thresholds k/q with q in [1, max_denominator], drawn up to a little above
// each vertex's incident weight so that some vertices are unreachable.
WeightedInstance RandomWeightedInstance(Rng& rng,
                                        const RandomInstanceOptions& options);

// Undirected instance with tau(v) <= IncidentWeight(v) for every v, so that
// every vertex cover is a dynamic monopoly. Isolated vertices get tau = 0.
WeightedInstance RandomCoverableInstance(Rng& rng,
                                         const RandomInstanceOptions& options);

// Erdos-Renyi graph with unit weights and integer thresholds in
// [0, deg(v) + 1].
WeightedInstance RandomSimpleGraph(Rng& rng, int n, int edge_percent);

// Undirected multigraph with multiplicities in [1, max_multiplicity] on a
// random edge set, carrying strict-majority thresholds. With `no_isolated`
// (and n >= 2) every vertex left without neighbors is joined to a uniformly
// chosen other vertex.
MultiInstance RandomMajorityMultigraph(Rng& rng, int n, int edge_percent,
                                       int max_multiplicity,
                                       bool no_isolated = false);

// Random labelled tree (each vertex attaches to a uniformly chosen earlier
// one, then ids are shuffled) with rational weights and thresholds.
WeightedInstance RandomWeightedTree(Rng& rng, int n, int max_numerator,
                                    int max_denominator);

// A member of the in-degree-one peeling family built by reversing a peel:
// vertices are added in random order, each receiving at most one arc from
// an earlier vertex and up to max_back_arcs arcs to earlier vertices.
WeightedInstance RandomFamilyF(Rng& rng, int n, int max_back_arcs,
                               int max_numerator, int max_denominator);

// Institutions with capital in [0, 12] (some zero), recovery rates in
// [0, 1] and exposures on random ordered pairs.
BankingNetwork RandomBankingNetwork(Rng& rng, int n, int exposure_percent);

}  // namespace wdynmo

#endif  // WDYNMO_GENERATORS_H_
