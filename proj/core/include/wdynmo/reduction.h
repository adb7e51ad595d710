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

// Exact reductions of a weighted instance:
//
//   (G, w, tau)  --scale by l-->  multigraph (M, l*tau)
//                --split bundles-->  simple unweighted gadget graph H
//
// Both preserve the set of dynamic monopolies on the original vertices, and
// the multigraph step preserves the phase-by-phase activation trace.

#ifndef WDYNMO_REDUCTION_H_
#define WDYNMO_REDUCTION_H_

#include <cstdint>
#include <vector>

#include "wdynmo/graph.h"
#include "wdynmo/tree_decomposition.h"

namespace wdynmo {

// l: least common multiple of every edge-weight and threshold denominator,
// so that l*w(e) and l*tau(v) are integers. 1 when all values are integral.
std::int64_t CommonScale(const WeightedInstance& instance);

struct MultigraphReduction {
  MultiInstance multigraph;  // same vertex ids as the input
  std::int64_t scale = 1;
};

// m_uv = l*w(uv) and tau'(v) = l*tau(v). Zero-weight edges vanish.
MultigraphReduction ToMultigraph(const WeightedInstance& instance);

// One bundle of l*w(e) parallel edges, realized in H as the direct edge
// u-v plus (bundle - 1) paths u-m-v through middle vertices.
struct GadgetEdge {
  VertexId u;
  VertexId v;
  std::int64_t bundle;
  std::vector<VertexId> middles;
};

struct GadgetMap {
  int num_original = 0;  // ids [0, num_original) are the vertices of G
  std::int64_t scale = 1;
  std::vector<GadgetEdge> edges;  // ascending (u, v), zero bundles omitted
};

struct Gadget {
  WeightedInstance graph;  // unit weights, integer thresholds
  GadgetMap map;
};

// Middle vertices get threshold 1 and ids n, n+1, ... in (u, v) order.
// Throws UnsupportedError for directed input.
Gadget BuildGadget(const WeightedInstance& instance);

// Extends a decomposition of G to one of BuildGadget(instance).graph by
// attaching, for every bundle of size >= 2, a bag {u, v, middles...} to some
// bag that contains u and v. Throws DomainError if `td` is not valid for G.
TreeDecomposition TransformTreeDecomposition(const TreeDecomposition& td,
                                             const WeightedInstance& instance);

// max{tw_g, max over edges of l*w(e)}; tw_g for edgeless graphs.
std::int64_t WeightedTreewidth(const WeightedInstance& instance,
                               std::int64_t tw_g);

}  // namespace wdynmo

#endif  // WDYNMO_REDUCTION_H_
