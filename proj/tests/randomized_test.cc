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
#include <vector>

#include <gtest/gtest.h>

#include "test_util.h"
#include "wdynmo/cascade.h"
#include "wdynmo/errors.h"
#include "wdynmo/generators.h"
#include "wdynmo/reduction.h"
#include "wdynmo/solvers.h"

namespace wdynmo {
namespace {

using testing::Weighted;

WeightedInstance Triangle(Rational threshold) {
  return Weighted(
      3, false,
      {{0, 1, Rational(1)}, {1, 2, Rational(1)}, {0, 2, Rational(1)}},
      {threshold, threshold, threshold});
}

TEST(PermutationMonopolyTest, TriangleUnitThresholds) {
  std::vector<VertexId> order = {0, 1, 2};
  EXPECT_EQ(PermutationMonopoly(Triangle(1), order),
            (std::vector<VertexId>{0}));
}

TEST(PermutationMonopolyTest, FirstVertexIsAlwaysSeeded) {
  WeightedInstance g = Triangle(1);
  for (VertexId first = 0; first < 3; ++first) {
    std::vector<VertexId> order = {first};
    for (VertexId v = 0; v < 3; ++v) {
      if (v != first) order.push_back(v);
    }
    auto d = PermutationMonopoly(g, order);
    EXPECT_TRUE(std::binary_search(d.begin(), d.end(), first));
  }
}

TEST(PermutationMonopolyTest, HeavyEdge) {
  WeightedInstance g = Weighted(2, false, {{0, 1, Rational(2)}}, {2, 2});
  for (std::vector<VertexId> order :
       {std::vector<VertexId>{0, 1}, std::vector<VertexId>{1, 0}}) {
    auto d = PermutationMonopoly(g, order);
    EXPECT_EQ(d, (std::vector<VertexId>{order[0]}));
    EXPECT_TRUE(IsDynamicMonopoly(g, d));
  }
}

TEST(PermutationMonopolyTest, RejectsNonPermutation) {
  std::vector<VertexId> repeated = {0, 0, 1};
  EXPECT_THROW(PermutationMonopoly(Triangle(1), repeated), DomainError);
}

TEST(RandomizedMonopolyTest, RecordsSeedAndIsReproducible) {
  WeightedInstance g = Triangle(2);
  SolveReport a = RandomizedMonopoly(g, 99);
  SolveReport b = RandomizedMonopoly(g, 99);
  EXPECT_EQ(a.rng_seed, 99u);
  EXPECT_EQ(a.monopoly, b.monopoly);
  EXPECT_EQ(a.method, SolveMethod::kRandomized);
}

TEST(RandomizedMonopolyPropertyTest, ValidForEverySeed) {
  Rng rng(61);
  for (int t = 0; t < 200; ++t) {
    RandomInstanceOptions options;
    options.max_vertices = 15;
    options.directed = rng.Chance(1, 2);
    WeightedInstance g = RandomWeightedInstance(rng, options);
    MultiInstance m = ToMultigraph(g).multigraph;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      EXPECT_TRUE(IsDynamicMonopoly(g, RandomizedMonopoly(g, seed).monopoly));
      EXPECT_TRUE(IsDynamicMonopoly(m, RandomizedMonopoly(m, seed).monopoly));
    }
  }
}

TEST(ExpectedBoundTest, Examples) {
  EXPECT_EQ(ExpectedBound(Triangle(1)), Rational(1));
  WeightedInstance heavy = Weighted(2, false, {{0, 1, Rational(2)}}, {2, 2});
  EXPECT_EQ(ExpectedBound(heavy), Rational(1));
  WeightedInstance free = Weighted(2, false, {{0, 1, Rational(1)}}, {0, 0});
  EXPECT_EQ(ExpectedBound(free), Rational(0));
}

TEST(ExpectedBoundTest, NeighborLimit) {
  std::vector<testing::Edge> star;
  for (VertexId v = 1; v <= 5; ++v) star.push_back({0, v, Rational(1)});
  WeightedInstance g = Weighted(6, false, star, std::vector<Rational>(6, 1));
  EXPECT_THROW(ExpectedBound(g, 4), ResourceError);
  EXPECT_NO_THROW(ExpectedBound(g, 5));
}

// The bound is the exact mean of PermutationMonopoly, so it must equal the
// average over all n! orders.
TEST(ExpectedBoundPropertyTest, EqualsMeanOverAllPermutations) {
  Rng rng(62);
  for (int t = 0; t < 150; ++t) {
    RandomInstanceOptions options;
    options.max_vertices = 6;
    options.directed = rng.Chance(1, 2);
    options.zero_weight_percent = 10;
    WeightedInstance g = RandomWeightedInstance(rng, options);
    EXPECT_EQ(ExpectedBound(g), testing::NaivePermutationMean(g));
    EXPECT_EQ(ExpectedBound(ToMultigraph(g).multigraph), ExpectedBound(g));
  }
}

TEST(ExpectedBoundPropertyTest, SimpleGraphClosedForm) {
  Rng rng(63);
  for (int t = 0; t < 200; ++t) {
    const int n = static_cast<int>(rng.Between(1, 14));
    WeightedInstance g = RandomSimpleGraph(rng, n, 40);
    Rational closed;
    for (VertexId v = 0; v < n; ++v) {
      const std::int64_t d = g.InArcs(v).size();
      const std::int64_t tau = g.threshold(v).numerator();
      closed += Rational(std::min(tau, d + 1), d + 1);
    }
    EXPECT_EQ(ExpectedBound(g), closed);
  }
}

}  // namespace
}  // namespace wdynmo
