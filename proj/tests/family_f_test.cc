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

#include <optional>
#include <vector>

#include <gtest/gtest.h>

#include "test_util.h"
#include "wdynmo/cascade.h"
#include "wdynmo/errors.h"
#include "wdynmo/generators.h"
#include "wdynmo/solvers.h"

namespace wdynmo {
namespace {

using testing::Weighted;

// Every vertex has at most one in-neighbor among the vertices before it.
bool IsWitness(const WeightedInstance& g, const std::vector<VertexId>& order) {
  std::vector<int> position(g.num_vertices(), -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    position[order[i]] = i;
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (position[v] < 0) return false;
    int earlier = 0;
    for (const auto& arc : g.InArcs(v)) {
      if (position[arc.vertex] < position[v]) ++earlier;
    }
    if (earlier > 1) return false;
  }
  return true;
}

WeightedInstance CompleteDigraph(int n) {
  std::vector<testing::Edge> arcs;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u != v) arcs.push_back({u, v, Rational(1)});
    }
  }
  return Weighted(n, true, arcs, std::vector<Rational>(n, 1));
}

TEST(FamilyFOrderTest, DirectedPath) {
  WeightedInstance g = Weighted(
      3, true, {{0, 1, Rational(1)}, {1, 2, Rational(1)}}, {1, 1, 1});
  EXPECT_EQ(FamilyFOrder(g), (std::vector<VertexId>{0, 1, 2}));
}

TEST(FamilyFOrderTest, TwoCycle) {
  WeightedInstance g = Weighted(
      2, true, {{0, 1, Rational(1)}, {1, 0, Rational(1)}}, {1, 1});
  std::optional<std::vector<VertexId>> order = FamilyFOrder(g);
  ASSERT_TRUE(order.has_value());
  EXPECT_TRUE(IsWitness(g, *order));
}

TEST(FamilyFOrderTest, CompleteDigraphIsNotAMember) {
  EXPECT_FALSE(FamilyFOrder(CompleteDigraph(3)).has_value());
}

TEST(FamilyFOrderTest, UndirectedIsUnsupported) {
  WeightedInstance g = Weighted(2, false, {{0, 1, Rational(1)}}, {1, 1});
  EXPECT_THROW(FamilyFOrder(g), UnsupportedError);
}

TEST(SolveFamilyFTest, SingleArc) {
  WeightedInstance g = Weighted(2, true, {{0, 1, Rational(1)}}, {1, 1});
  SolveReport report = SolveFamilyF(g);
  EXPECT_EQ(report.monopoly, (std::vector<VertexId>{0}));
  EXPECT_TRUE(report.certified_minimum);
  EXPECT_EQ(report.residual_kernel, 0);
}

TEST(SolveFamilyFTest, PathWithHeavyMiddle) {
  WeightedInstance g = Weighted(
      3, true, {{0, 1, Rational(1)}, {1, 2, Rational(1)}}, {1, 2, 1});
  EXPECT_EQ(SolveFamilyF(g).monopoly, (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(testing::NaiveMinMonopolySize(g), 2);
}

TEST(SolveFamilyFTest, TwoCycle) {
  WeightedInstance g = Weighted(
      2, true, {{0, 1, Rational(1)}, {1, 0, Rational(1)}}, {1, 1});
  EXPECT_EQ(SolveFamilyF(g).monopoly.size(), 1u);
}

// Deleting v from u -> v -> x would lose its influence on x; the optimum
// is one seed.
TEST(SolveFamilyFTest, ContractionKeepsOutgoingInfluence) {
  WeightedInstance g = Weighted(
      3, true, {{0, 1, Rational(1)}, {1, 2, Rational(1)}}, {1, 1, 1});
  EXPECT_EQ(SolveFamilyF(g).monopoly, (std::vector<VertexId>{0}));
}

TEST(SolveFamilyFTest, Errors) {
  EXPECT_THROW(SolveFamilyF(CompleteDigraph(3)), NotInFamilyError);
  WeightedInstance g = Weighted(2, false, {{0, 1, Rational(1)}}, {1, 1});
  EXPECT_THROW(SolveFamilyF(g), UnsupportedError);
}

TEST(SolveFamilyFTest, HugeDenominatorsUseExactArithmetic) {
  // The common denominator of these weights does not fit in 64 bits.
  const std::int64_t primes[] = {1000003, 1000033, 1000037, 1000039};
  std::vector<testing::Edge> arcs;
  std::vector<Rational> thresholds = {1};
  for (int i = 0; i < 4; ++i) {
    arcs.push_back({i, i + 1, Rational(1, primes[i])});
    thresholds.push_back(Rational(1, primes[(i + 1) % 4]));
  }
  WeightedInstance g = Weighted(5, true, arcs, thresholds);
  SolveReport report = SolveFamilyF(g);
  EXPECT_EQ(static_cast<int>(report.monopoly.size()),
            testing::NaiveMinMonopolySize(g));
  EXPECT_TRUE(IsDynamicMonopoly(g, report.monopoly));
}

// Family member built from an undirected graph G whose minimum monopoly is
// the vertex cover number of G: vertex nodes x, edge nodes e (threshold 1,
// fed by both endpoints) and one collector per x that needs every edge node
// and feeds x. Peeling alone stalls on these.
WeightedInstance CoverMember(int n, const std::vector<testing::Edge>& edges) {
  const int m = static_cast<int>(edges.size());
  auto collector = [](int x) { return x; };
  auto edge_node = [n](int i) { return n + i; };
  auto vertex_node = [n, m](int x) { return n + m + x; };
  std::vector<testing::Edge> arcs;
  std::vector<Rational> thresholds(2 * n + m);
  for (int x = 0; x < n; ++x) {
    for (int i = 0; i < m; ++i) {
      arcs.push_back({edge_node(i), collector(x), Rational(1)});
    }
    arcs.push_back({collector(x), vertex_node(x), Rational(1)});
    thresholds[collector(x)] = Rational(m);
    thresholds[vertex_node(x)] = Rational(1);
  }
  for (int i = 0; i < m; ++i) {
    arcs.push_back({vertex_node(edges[i].from), edge_node(i), Rational(1)});
    arcs.push_back({vertex_node(edges[i].to), edge_node(i), Rational(1)});
    thresholds[edge_node(i)] = Rational(1);
  }
  return Weighted(2 * n + m, true, arcs, thresholds);
}

TEST(SolveFamilyFTest, VertexCoverMembersNeedKernelSearch) {
  const std::vector<testing::Edge> cycle = {{0, 1, Rational(1)},
                                            {1, 2, Rational(1)},
                                            {2, 3, Rational(1)},
                                            {3, 4, Rational(1)},
                                            {4, 0, Rational(1)}};
  const WeightedInstance g = CoverMember(5, cycle);
  std::optional<std::vector<VertexId>> order = FamilyFOrder(g);
  ASSERT_TRUE(order.has_value());
  EXPECT_TRUE(IsWitness(g, *order));
  SolveReport report = SolveFamilyF(g);
  EXPECT_TRUE(report.certified_minimum);
  EXPECT_GT(report.residual_kernel, 0);
  EXPECT_EQ(report.monopoly.size(), 3u);
  EXPECT_EQ(testing::NaiveMinMonopolySize(g), 3);
}

TEST(FamilyFPropertyTest, GeneratedInstancesAreMembers) {
  Rng rng(91);
  for (int t = 0; t < 300; ++t) {
    const int n = static_cast<int>(rng.Between(1, 40));
    WeightedInstance g = RandomFamilyF(rng, n, 3, 6, 4);
    std::optional<std::vector<VertexId>> order = FamilyFOrder(g);
    ASSERT_TRUE(order.has_value());
    EXPECT_TRUE(IsWitness(g, *order));
  }
}

TEST(FamilyFPropertyTest, MatchesExhaustiveSearch) {
  Rng rng(92);
  for (int t = 0; t < 400; ++t) {
    const int n = static_cast<int>(rng.Between(1, 10));
    WeightedInstance g = RandomFamilyF(rng, n, static_cast<int>(rng.Between(0, 3)),
                                       6, 4);
    SolveReport report = SolveFamilyF(g);
    EXPECT_EQ(static_cast<int>(report.monopoly.size()),
              testing::NaiveMinMonopolySize(g));
    EXPECT_TRUE(testing::NaiveIsMonopoly(g, report.monopoly));
  }
}

// Random digraphs that happen to have a peeling order.
TEST(FamilyFPropertyTest, ArbitraryMembersMatchExhaustiveSearch) {
  Rng rng(93);
  int checked = 0;
  while (checked < 200) {
    RandomInstanceOptions options;
    options.max_vertices = 9;
    options.directed = true;
    options.edge_percent = static_cast<int>(rng.Between(5, 35));
    WeightedInstance g = RandomWeightedInstance(rng, options);
    if (!FamilyFOrder(g)) {
      EXPECT_THROW(SolveFamilyF(g), NotInFamilyError);
      continue;
    }
    ++checked;
    EXPECT_EQ(static_cast<int>(SolveFamilyF(g).monopoly.size()),
              testing::NaiveMinMonopolySize(g));
  }
}

}  // namespace
}  // namespace wdynmo
