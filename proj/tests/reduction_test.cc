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

#include "wdynmo/reduction.h"

#include <vector>

#include <gtest/gtest.h>

#include "test_util.h"
#include "wdynmo/errors.h"
#include "wdynmo/generators.h"
#include "wdynmo/solvers.h"
#include "wdynmo/tree_decomposition.h"

namespace wdynmo {
namespace {

using testing::Weighted;

TEST(CommonScaleTest, LcmOfWeightDenominators) {
  WeightedInstance g = Weighted(
      3, false, {{0, 1, Rational(3, 2)}, {1, 2, Rational(1, 3)}}, {1, 1, 1});
  EXPECT_EQ(CommonScale(g), 6);
}

TEST(CommonScaleTest, IntegralInstanceAndEdgeless) {
  WeightedInstance g = Weighted(2, false, {{0, 1, Rational(2)}}, {1, 3});
  EXPECT_EQ(CommonScale(g), 1);
  EXPECT_EQ(CommonScale(Weighted(2, false, {}, {0, 0})), 1);
}

TEST(CommonScaleTest, IncludesThresholdDenominators) {
  WeightedInstance g = Weighted(2, false, {{0, 1, Rational(1, 4)}},
                                {Rational(1, 6), 0});
  EXPECT_EQ(CommonScale(g), 12);
}

TEST(ToMultigraphTest, SingleEdge) {
  WeightedInstance g = Weighted(2, false, {{0, 1, Rational(3, 2)}}, {1, 1});
  MultigraphReduction r = ToMultigraph(g);
  EXPECT_EQ(r.scale, 2);
  EXPECT_EQ(r.multigraph.Multiplicity(0, 1), 3);
  EXPECT_EQ(r.multigraph.thresholds(), (std::vector<std::int64_t>{2, 2}));
}

TEST(ToMultigraphTest, DirectedArc) {
  WeightedInstance g = Weighted(2, true, {{0, 1, Rational(1, 3)}},
                                {0, Rational(2, 3)});
  MultigraphReduction r = ToMultigraph(g);
  EXPECT_EQ(r.scale, 3);
  EXPECT_TRUE(r.multigraph.directed());
  EXPECT_EQ(r.multigraph.Multiplicity(0, 1), 1);
  EXPECT_EQ(r.multigraph.Multiplicity(1, 0), 0);
  EXPECT_EQ(r.multigraph.threshold(1), 2);
}

TEST(ToMultigraphTest, IntegerTriangleIsIdentity) {
  WeightedInstance g = Weighted(
      3, false,
      {{0, 1, Rational(1)}, {1, 2, Rational(1)}, {0, 2, Rational(1)}},
      {2, 2, 2});
  MultigraphReduction r = ToMultigraph(g);
  EXPECT_EQ(r.scale, 1);
  EXPECT_EQ(r.multigraph.edges().size(), 3u);
  for (const MultiEdge& e : r.multigraph.edges()) {
    EXPECT_EQ(e.multiplicity, 1);
  }
}

TEST(ToMultigraphTest, ZeroWeightEdgesVanish) {
  WeightedInstance g = Weighted(2, false, {{0, 1, Rational(0)}}, {1, 1});
  EXPECT_TRUE(ToMultigraph(g).multigraph.edges().empty());
}

TEST(GadgetTest, SingleEdgeThreeHalves) {
  WeightedInstance g = Weighted(2, false, {{0, 1, Rational(3, 2)}}, {1, 1});
  Gadget h = BuildGadget(g);
  EXPECT_EQ(h.graph.num_vertices(), 4);
  EXPECT_EQ(h.map.scale, 2);
  ASSERT_EQ(h.map.edges.size(), 1u);
  EXPECT_EQ(h.map.edges[0].middles, (std::vector<VertexId>{2, 3}));
  EXPECT_EQ(h.graph.thresholds(),
            (std::vector<Rational>{2, 2, 1, 1}));
  // u-v, u-m1, m1-v, u-m2, m2-v.
  EXPECT_EQ(h.graph.edges().size(), 5u);
  for (const WeightedEdge& e : h.graph.edges()) {
    EXPECT_EQ(e.weight, Rational(1));
  }
}

TEST(GadgetTest, UnitEdgeHasNoMiddles) {
  WeightedInstance g = Weighted(2, false, {{0, 1, Rational(1)}}, {1, 1});
  Gadget h = BuildGadget(g);
  EXPECT_EQ(h.graph.num_vertices(), 2);
  EXPECT_TRUE(h.map.edges[0].middles.empty());
  EXPECT_EQ(h.graph.thresholds(), (std::vector<Rational>{1, 1}));
}

TEST(GadgetTest, PathWithOneDoubleEdge) {
  WeightedInstance g = Weighted(
      3, false, {{0, 1, Rational(2)}, {1, 2, Rational(1)}}, {1, 2, 1});
  Gadget h = BuildGadget(g);
  EXPECT_EQ(h.map.scale, 1);
  EXPECT_EQ(h.graph.num_vertices(), 4);
  EXPECT_EQ(h.map.edges[0].middles, (std::vector<VertexId>{3}));
}

TEST(GadgetTest, DirectedIsUnsupported) {
  WeightedInstance g = Weighted(2, true, {{0, 1, Rational(1)}}, {1, 1});
  EXPECT_THROW(BuildGadget(g), UnsupportedError);
}

TEST(TransformTreeDecompositionTest, SingleEdgeGetsOneBag) {
  WeightedInstance g = Weighted(2, false, {{0, 1, Rational(3, 2)}}, {1, 1});
  TreeDecomposition td{{{0, 1}}, {}};
  TreeDecomposition out = TransformTreeDecomposition(td, g);
  ASSERT_EQ(out.bags.size(), 2u);
  EXPECT_EQ(out.bags[1], (std::vector<VertexId>{0, 1, 2, 3}));
  EXPECT_EQ(out.width(), 3);
  EXPECT_TRUE(ValidateTreeDecomposition(out, BuildGadget(g).graph));
}

TEST(TransformTreeDecompositionTest, UnitWeightsLeaveInputUnchanged) {
  WeightedInstance g = Weighted(
      3, false, {{0, 1, Rational(1)}, {1, 2, Rational(1)}}, {1, 1, 1});
  TreeDecomposition td{{{0, 1}, {1, 2}}, {{0, 1}}};
  TreeDecomposition out = TransformTreeDecomposition(td, g);
  EXPECT_EQ(out.bags, td.bags);
  EXPECT_EQ(out.tree_edges, td.tree_edges);
}

TEST(TransformTreeDecompositionTest, PathAttachesToCoveringBag) {
  WeightedInstance g = Weighted(
      3, false, {{0, 1, Rational(2)}, {1, 2, Rational(1)}}, {1, 2, 1});
  TreeDecomposition td{{{0, 1}, {1, 2}}, {{0, 1}}};
  TreeDecomposition out = TransformTreeDecomposition(td, g);
  ASSERT_EQ(out.bags.size(), 3u);
  EXPECT_EQ(out.bags[2], (std::vector<VertexId>{0, 1, 3}));
  EXPECT_EQ(out.tree_edges.back(), (std::pair<int, int>{0, 2}));
  EXPECT_EQ(out.width(), 2);
}

TEST(TransformTreeDecompositionTest, RejectsInvalidDecomposition) {
  WeightedInstance g = Weighted(
      3, false, {{0, 1, Rational(2)}, {1, 2, Rational(1)}}, {1, 2, 1});
  TreeDecomposition td{{{0}, {1, 2}}, {{0, 1}}};
  EXPECT_THROW(TransformTreeDecomposition(td, g), DomainError);
}

TEST(WeightedTreewidthTest, Examples) {
  WeightedInstance mixed = Weighted(
      3, false, {{0, 1, Rational(3, 2)}, {1, 2, Rational(1, 3)}}, {1, 1, 1});
  EXPECT_EQ(WeightedTreewidth(mixed, 1), 9);
  WeightedInstance unit = Weighted(
      3, false, {{0, 1, Rational(1)}, {1, 2, Rational(1)}}, {1, 1, 1});
  EXPECT_EQ(WeightedTreewidth(unit, 4), 4);
  WeightedInstance five = Weighted(2, false, {{0, 1, Rational(5)}}, {1, 1});
  EXPECT_EQ(WeightedTreewidth(five, 1), 5);
  EXPECT_EQ(WeightedTreewidth(Weighted(3, false, {}, {1, 1, 1}), 0), 0);
}

TEST(ReductionPropertyTest, MultigraphRoundTripRecoversWeights) {
  Rng rng(31);
  for (int t = 0; t < 300; ++t) {
    RandomInstanceOptions options;
    options.max_vertices = 10;
    options.directed = rng.Chance(1, 2);
    options.max_denominator = 6;
    WeightedInstance g = RandomWeightedInstance(rng, options);
    MultigraphReduction r = ToMultigraph(g);
    const Rational unit(1, r.scale);
    for (const WeightedEdge& e : g.edges()) {
      EXPECT_EQ(Rational(r.multigraph.Multiplicity(e.from, e.to)) * unit,
                e.weight);
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      EXPECT_EQ(Rational(r.multigraph.threshold(v)) * unit, g.threshold(v));
    }
  }
}

TEST(ReductionPropertyTest, GadgetPreservesMinimumMonopoly) {
  Rng rng(32);
  int checked = 0;
  while (checked < 60) {
    RandomInstanceOptions options;
    options.max_vertices = 6;
    options.max_denominator = 2;
    options.max_numerator = 3;
    WeightedInstance g = RandomWeightedInstance(rng, options);
    Gadget h = BuildGadget(g);
    if (h.graph.num_vertices() - g.num_vertices() > 6) continue;
    ++checked;
    EXPECT_EQ(testing::NaiveMinMonopolySize(g),
              testing::NaiveMinMonopolySize(h.graph));
  }
}

TEST(ReductionPropertyTest, GadgetVertexCountAndMiddleDegrees) {
  Rng rng(33);
  for (int t = 0; t < 200; ++t) {
    RandomInstanceOptions options;
    options.max_vertices = 8;
    options.zero_weight_percent = 15;
    WeightedInstance g = RandomWeightedInstance(rng, options);
    Gadget h = BuildGadget(g);
    const std::int64_t scale = h.map.scale;
    std::int64_t expected = g.num_vertices();
    Rational total;
    for (const WeightedEdge& e : g.edges()) {
      total += e.weight;
      if (!e.weight.is_zero()) {
        expected += (e.weight * Rational(scale)).numerator() - 1;
      }
    }
    EXPECT_EQ(h.graph.num_vertices(), expected);
    EXPECT_LE(Rational(h.graph.num_vertices()),
              Rational(g.num_vertices()) + Rational(scale) * total);
    for (const GadgetEdge& bundle : h.map.edges) {
      EXPECT_EQ(static_cast<std::int64_t>(bundle.middles.size()),
                bundle.bundle - 1);
      for (VertexId m : bundle.middles) {
        EXPECT_EQ(h.graph.InArcs(m).size(), 2u);
        EXPECT_EQ(h.graph.threshold(m), Rational(1));
      }
    }
  }
}

TEST(ReductionPropertyTest, TransformedDecompositionIsValidAndBounded) {
  Rng rng(34);
  for (int t = 0; t < 200; ++t) {
    RandomInstanceOptions options;
    options.max_vertices = 9;
    WeightedInstance g = RandomWeightedInstance(rng, options);
    std::vector<VertexId> order = RandomPermutation(
        g.num_vertices(), rng.Next());
    TreeDecomposition td = EliminationDecomposition(g, order);
    TreeDecomposition out = TransformTreeDecomposition(td, g);
    EXPECT_TRUE(ValidateTreeDecomposition(out, BuildGadget(g).graph));
    EXPECT_LE(out.width(), WeightedTreewidth(g, td.width()));
  }
}

}  // namespace
}  // namespace wdynmo
