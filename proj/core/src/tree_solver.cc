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
#include <utility>

#include "solver_util.h"
#include "wdynmo/errors.h"
#include "wdynmo/solvers.h"

namespace wdynmo {

// Leaf peeling. For a leaf v hanging from u with residual threshold r(v):
//   r(v) = 0          v activates on its own and helps u: r(u) -= w(uv).
//   r(v) > w(uv)      no help from u suffices, so v is seeded; r(u) -= w(uv).
//   0 < r(v) <= w(uv) v activates exactly when u does, after it; some
//                     minimum monopoly avoids v, and v never helps u.
// Thresholds saturate at zero. A vertex left with no neighbors is seeded iff
// its residual threshold is positive.
SolveReport SolveTree(const WeightedInstance& instance) {
  if (instance.directed()) {
    throw UnsupportedError("tree solver requires an undirected graph");
  }
  const int n = instance.num_vertices();
  {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const WeightedEdge& e : instance.edges()) {
      int a = find(e.from);
      int b = find(e.to);
      if (a == b) throw DomainError("tree solver input contains a cycle");
      parent[a] = b;
    }
  }

  std::vector<Rational> residual = instance.thresholds();
  std::vector<int> degree(n);
  std::vector<char> removed(n, 0);
  std::vector<VertexId> stack;
  for (VertexId v = 0; v < n; ++v) {
    degree[v] = static_cast<int>(instance.InArcs(v).size());
    if (degree[v] <= 1) stack.push_back(v);
  }

  std::vector<VertexId> monopoly;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    if (removed[v]) continue;
    removed[v] = 1;
    if (degree[v] == 0) {
      if (!residual[v].is_zero()) monopoly.push_back(v);
      continue;
    }
    const Arc<Rational>* link = nullptr;
    for (const auto& arc : instance.InArcs(v)) {
      if (!removed[arc.vertex]) {
        link = &arc;
        break;
      }
    }
    VertexId u = link->vertex;
    if (residual[v].is_zero()) {
      residual[u] = SaturatingSub(residual[u], link->weight);
    } else if (residual[v] > link->weight) {
      monopoly.push_back(v);
      residual[u] = SaturatingSub(residual[u], link->weight);
    }
    if (--degree[u] <= 1) stack.push_back(u);
  }
  return internal::MakeReport(instance, std::move(monopoly),
                              SolveMethod::kTree, true);
}

}  // namespace wdynmo
