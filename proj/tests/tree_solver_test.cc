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

#include <vector>

#include <gtest/gtest.h>

#include "test_util.h"
#include "wdynmo/errors.h"
#include "wdynmo/generators.h"
#include "wdynmo/solvers.h"

namespace wdynmo {
namespace {

using testing::Weighted;

TEST(SolveTreeTest, PathWithHeavyMiddle) {
  WeightedInstance g = Weighted(
      3, false, {{0, 1, Rational(1)}, {1, 2, Rational(1)}}, {1, 2, 1});
  SolveReport report = SolveTree(g);
  EXPECT_EQ(report.monopoly, (std::vector<VertexId>{1}));
  EXPECT_TRUE(report.certified_minimum);
  EXPECT_EQ(report.method, SolveMethod::kTree);
}

TEST(SolveTreeTest, Star) {
  WeightedInstance g = Weighted(
      4, false,
      {{0, 1, Rational(1)}, {0, 2, Rational(1)}, {0, 3, Rational(1)}},
      {3, 1, 1, 1});
  EXPECT_EQ(SolveTree(g).monopoly, (std::vector<VertexId>{0}));
}

TEST(SolveTreeTest, HalfWeightEdge) {
  WeightedInstance g = Weighted(2, false, {{0, 1, Rational(1, 2)}},
                                {1, Rational(1, 2)});
  EXPECT_EQ(SolveTree(g).monopoly, (std::vector<VertexId>{0}));
}

TEST(SolveTreeTest, ForestAndIsolatedVertices) {
  WeightedInstance g = Weighted(5, false, {{0, 1, Rational(1)}}, {1, 1, 1, 0, 2});
  std::vector<VertexId> d = SolveTree(g).monopoly;
  ASSERT_EQ(d.size(), 3u);
  EXPECT_EQ(d[1], 2);
  EXPECT_EQ(d[2], 4);
}

TEST(SolveTreeTest, CycleIsRejected) {
  WeightedInstance g = Weighted(
      3, false,
      {{0, 1, Rational(1)}, {1, 2, Rational(1)}, {0, 2, Rational(1)}},
      {1, 1, 1});
  EXPECT_THROW(SolveTree(g), DomainError);
  WeightedInstance directed = Weighted(2, true, {{0, 1, Rational(1)}}, {1, 1});
  EXPECT_THROW(SolveTree(directed), UnsupportedError);
}

TEST(TreePropertyTest, MatchesExhaustiveSearch) {
  Rng rng(101);
  for (int t = 0; t < 400; ++t) {
    const int n = static_cast<int>(rng.Between(1, 11));
    WeightedInstance g = RandomWeightedTree(rng, n, 6, 4);
    SolveReport report = SolveTree(g);
    EXPECT_EQ(static_cast<int>(report.monopoly.size()),
              testing::NaiveMinMonopolySize(g));
    EXPECT_TRUE(testing::NaiveIsMonopoly(g, report.monopoly));
  }
}

TEST(TreePropertyTest, ForestsMatchExhaustiveSearch) {
  Rng rng(102);
  for (int t = 0; t < 200; ++t) {
    // Drop some edges of a random tree.
    WeightedInstance tree =
        RandomWeightedTree(rng, static_cast<int>(rng.Between(1, 10)), 4, 3);
    std::vector<testing::Edge> kept;
    for (const WeightedEdge& e : tree.edges()) {
      if (rng.Chance(2, 3)) kept.push_back({e.from, e.to, e.weight});
    }
    WeightedInstance g =
        Weighted(tree.num_vertices(), false, kept, tree.thresholds());
    EXPECT_EQ(static_cast<int>(SolveTree(g).monopoly.size()),
              testing::NaiveMinMonopolySize(g));
  }
}

}  // namespace
}  // namespace wdynmo
