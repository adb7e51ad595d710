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

#ifndef WDYNMO_TREE_DECOMPOSITION_H_
#define WDYNMO_TREE_DECOMPOSITION_H_

#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "wdynmo/graph.h"

namespace wdynmo {

struct TreeDecomposition {
  std::vector<std::vector<VertexId>> bags;
  // Pairs of bag indices; must form a tree over all bags.
  std::vector<std::pair<int, int>> tree_edges;

  // Largest bag size minus one; -1 when there are no bags.
  int width() const;
};

// True iff the bags cover every vertex, every edge of the (undirected shadow
// of the) graph lies in some bag, and the bags containing any one vertex are
// connected in the tree.
//
// Throws DomainError if tree_edges do not form a tree on the bags or a bag
// holds an out-of-range vertex.
bool ValidateTreeDecomposition(const TreeDecomposition& td,
                               const WeightedInstance& graph);

// Decomposition induced by eliminating vertices in `order` (a permutation of
// the vertex ids). Always valid; its width is an upper bound on treewidth.
TreeDecomposition EliminationDecomposition(const WeightedInstance& graph,
                                           std::span<const VertexId> order);

// Greedy min-fill elimination. An upper bound, not the exact treewidth.
TreeDecomposition MinFillDecomposition(const WeightedInstance& graph);

// PACE .td format: "s td <bags> <width+1> <n>", then "b <id> <v...>" lines
// and "<id> <id>" tree-edge lines. Bag ids and vertex ids are 1-based on
// disk; lines starting with 'c' are comments. Throws ParseError.
TreeDecomposition ReadTreeDecomposition(std::istream& in, int* num_vertices);
void WriteTreeDecomposition(std::ostream& out, const TreeDecomposition& td,
                            int num_vertices);

}  // namespace wdynmo

#endif  // WDYNMO_TREE_DECOMPOSITION_H_
