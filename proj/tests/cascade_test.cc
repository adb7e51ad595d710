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

#include "wdynmo/cascade.h"

#include <algorithm>
#include <vector>

#include <gtest/gtest.h>

#include "test_util.h"
#include "wdynmo/errors.h"
#include "wdynmo/generators.h"
#include "wdynmo/reduction.h"

namespace wdynmo {
namespace {

using testing::NaivePhases;
using testing::Weighted;

std::vector<std::vector<VertexId>> Phases(const ActivationTrace& trace) {
  std::vector<std::vector<VertexId>> phases;
  for (int i = 0; i <= trace.rounds(); ++i) phases.push_back(trace.Phase(i));
  return phases;
}

std::vector<VertexId> ToSet(const std::vector<bool>& mask) {
  std::vector<VertexId> set;
  for (VertexId v = 0; v < static_cast<VertexId>(mask.size()); ++v) {
    if (mask[v]) set.push_back(v);
  }
  return set;
}

TEST(ActivateTest, OneStepActivation) {
  WeightedInstance g = Weighted(2, false, {{0, 1, Rational(1)}}, {1, 1});
  std::vector<VertexId> seed = {0};
  ActivationTrace trace = Activate(g, seed);
  EXPECT_EQ(Phases(trace),
            (std::vector<std::vector<VertexId>>{{0}, {0, 1}}));
  EXPECT_EQ(trace.rounds(), 1);
  EXPECT_EQ(trace.PhaseOf(1), 1);
}

TEST(ActivateTest, ZeroThresholdsActivateFromEmptySeed) {
  WeightedInstance g = Weighted(3, false, {{0, 1, Rational(1)}}, {0, 0, 0});
  ActivationTrace trace = Activate(g, std::vector<VertexId>{});
  EXPECT_EQ(Phases(trace),
            (std::vector<std::vector<VertexId>>{{}, {0, 1, 2}}));
}

TEST(ActivateTest, PathWithFractionalWeights) {
  // a-b (1/2), b-c (1); tau = (0, 1/2, 1), seed {a}.
  WeightedInstance g = Weighted(
      3, false, {{0, 1, Rational(1, 2)}, {1, 2, Rational(1)}},
      {0, Rational(1, 2), 1});
  std::vector<VertexId> seed = {0};
  EXPECT_EQ(Phases(Activate(g, seed)),
            (std::vector<std::vector<VertexId>>{{0}, {0, 1}, {0, 1, 2}}));
}

TEST(ActivateTest, InvalidSeedThrows) {
  WeightedInstance g = Weighted(2, false, {}, {1, 1});
  std::vector<VertexId> seed = {2};
  EXPECT_THROW(Activate(g, seed), DomainError);
}

TEST(ActivateTest, RepeatedSeedEntriesAreIgnored) {
  WeightedInstance g = Weighted(2, false, {{0, 1, Rational(1)}}, {1, 1});
  std::vector<VertexId> seed = {0, 0};
  EXPECT_EQ(Activate(g, seed).num_active(), 2);
}

TEST(IsDynamicMonopolyTest, FullSeed) {
  WeightedInstance g = Weighted(3, false, {{0, 1, Rational(1)}}, {5, 5, 5});
  std::vector<VertexId> all = {0, 1, 2};
  EXPECT_TRUE(IsDynamicMonopoly(g, all));
}

TEST(IsDynamicMonopolyTest, EdgeWithUnitThresholds) {
  WeightedInstance g = Weighted(2, false, {{0, 1, Rational(1)}}, {1, 1});
  std::vector<VertexId> seed = {0};
  EXPECT_TRUE(IsDynamicMonopoly(g, seed));
}

TEST(IsDynamicMonopolyTest, ArcDoesNotFlowBackwards) {
  WeightedInstance g = Weighted(2, true, {{0, 1, Rational(1)}}, {1, 1});
  std::vector<VertexId> seed = {1};
  EXPECT_FALSE(IsDynamicMonopoly(g, seed));
}

TEST(ActivateTest, MultigraphRule) {
  MultiInstance m(3, false, {{0, 1, 2}, {1, 2, 1}}, {1, 2, 1});
  std::vector<VertexId> seed = {0};
  ActivationTrace trace = Activate(m, seed);
  EXPECT_EQ(Phases(trace),
            (std::vector<std::vector<VertexId>>{{0}, {0, 1}, {0, 1, 2}}));
}

// Random instances and seeds against a full re-evaluation of every phase.
TEST(CascadePropertyTest, MatchesNaivePhases) {
  Rng rng(21);
  for (int t = 0; t < 500; ++t) {
    RandomInstanceOptions options;
    options.max_vertices = 9;
    options.directed = rng.Chance(1, 2);
    options.zero_weight_percent = 10;
    WeightedInstance g = RandomWeightedInstance(rng, options);
    const int n = g.num_vertices();
    std::vector<VertexId> seed;
    for (VertexId v = 0; v < n; ++v) {
      if (rng.Chance(1, 3)) seed.push_back(v);
    }
    ActivationTrace trace = Activate(g, seed);
    std::vector<std::vector<bool>> naive = NaivePhases(g, seed);
    ASSERT_EQ(trace.rounds() + 1, static_cast<int>(naive.size()));
    for (int i = 0; i <= trace.rounds(); ++i) {
      EXPECT_EQ(trace.Phase(i), ToSet(naive[i]));
    }
  }
}

TEST(CascadePropertyTest, TraceInvariants) {
  Rng rng(22);
  for (int t = 0; t < 500; ++t) {
    RandomInstanceOptions options;
    options.max_vertices = 12;
    options.directed = rng.Chance(1, 2);
    WeightedInstance g = RandomWeightedInstance(rng, options);
    const int n = g.num_vertices();
    std::vector<VertexId> seed;
    for (VertexId v = 0; v < n; ++v) {
      if (rng.Chance(1, 4)) seed.push_back(v);
    }
    ActivationTrace trace = Activate(g, seed);
    EXPECT_LE(trace.rounds(), n);
    EXPECT_EQ(trace, Activate(g, seed));
    for (int i = 1; i <= trace.rounds(); ++i) {
      EXPECT_FALSE(trace.Layer(i).empty());
      const std::vector<VertexId> prev = trace.Phase(i - 1);
      const std::vector<VertexId> cur = trace.Phase(i);
      EXPECT_TRUE(std::includes(cur.begin(), cur.end(), prev.begin(),
                                prev.end()));
    }
    // The fixpoint is closed.
    std::vector<bool> active(n, false);
    for (VertexId v : trace.Fixpoint()) active[v] = true;
    for (VertexId v = 0; v < n; ++v) {
      if (!active[v]) {
        EXPECT_LT(testing::NaiveInfluence(g, active, v), g.threshold(v));
      }
    }
  }
}

TEST(CascadePropertyTest, SeedMonotonicity) {
  Rng rng(23);
  for (int t = 0; t < 500; ++t) {
    RandomInstanceOptions options;
    options.max_vertices = 10;
    options.directed = rng.Chance(1, 2);
    WeightedInstance g = RandomWeightedInstance(rng, options);
    std::vector<VertexId> a, b;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      const std::uint64_t r = rng.Below(4);
      if (r == 0) a.push_back(v);
      if (r <= 1) b.push_back(v);
    }
    const std::vector<VertexId> fa = Activate(g, a).Fixpoint();
    const std::vector<VertexId> fb = Activate(g, b).Fixpoint();
    EXPECT_TRUE(std::includes(fb.begin(), fb.end(), fa.begin(), fa.end()));
  }
}

TEST(CascadePropertyTest, MultigraphTracesMatchWeighted) {
  Rng rng(24);
  for (int t = 0; t < 100; ++t) {
    RandomInstanceOptions options;
    options.max_vertices = 7;
    options.directed = rng.Chance(1, 2);
    options.zero_weight_percent = 10;
    WeightedInstance g = RandomWeightedInstance(rng, options);
    MultiInstance m = ToMultigraph(g).multigraph;
    const int n = g.num_vertices();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<VertexId> seed = testing::MaskToSet(mask, n);
      ASSERT_EQ(Activate(g, seed), Activate(m, seed));
    }
  }
}

}  // namespace
}  // namespace wdynmo
