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

#include <bit>
#include <string>
#include <utility>

#include "solver_util.h"
#include "wdynmo/errors.h"
#include "wdynmo/solvers.h"

namespace wdynmo {
namespace {

using Mask = std::uint64_t;

Mask Bit(VertexId v) { return Mask{1} << v; }

class CoverSearch {
 public:
  explicit CoverSearch(const WeightedInstance& graph)
      : adj_(graph.num_vertices(), 0) {
    for (const WeightedEdge& e : graph.edges()) {
      adj_[e.from] |= Bit(e.to);
      adj_[e.to] |= Bit(e.from);
    }
    for (VertexId v = 0; v < graph.num_vertices(); ++v) {
      if (adj_[v] != 0) best_ |= Bit(v);
    }
    best_size_ = std::popcount(best_);
  }

  Mask Solve() {
    Mask alive = 0;
    for (VertexId v = 0; v < static_cast<VertexId>(adj_.size()); ++v) {
      alive |= Bit(v);
    }
    Branch(alive, 0, 0);
    return best_;
  }

 private:
  int Degree(VertexId v, Mask alive) const {
    return std::popcount(adj_[v] & alive);
  }

  void Branch(Mask alive, Mask chosen, int size) {
    // Isolated vertices never need covering; a degree-one vertex is covered
    // at no loss by taking its neighbor.
    for (bool changed = true; changed;) {
      changed = false;
      for (Mask rest = alive; rest != 0; rest &= rest - 1) {
        VertexId v = std::countr_zero(rest);
        if (!(alive & Bit(v))) continue;
        int degree = Degree(v, alive);
        if (degree == 0) {
          alive &= ~Bit(v);
          changed = true;
        } else if (degree == 1) {
          VertexId u = std::countr_zero(adj_[v] & alive);
          chosen |= Bit(u);
          ++size;
          alive &= ~(Bit(u) | Bit(v));
          changed = true;
        }
      }
    }
    if (size >= best_size_) return;

    int edges2 = 0;
    int max_degree = 0;
    VertexId pivot = -1;
    for (Mask rest = alive; rest != 0; rest &= rest - 1) {
      VertexId v = std::countr_zero(rest);
      int degree = Degree(v, alive);
      edges2 += degree;
      if (degree > max_degree) {
        max_degree = degree;
        pivot = v;
      }
    }
    if (edges2 == 0) {
      best_ = chosen;
      best_size_ = size;
      return;
    }
    int edges = edges2 / 2;
    if (size + (edges + max_degree - 1) / max_degree >= best_size_) return;

    Branch(alive & ~Bit(pivot), chosen | Bit(pivot), size + 1);
    Mask neighbors = adj_[pivot] & alive;
    Branch(alive & ~Bit(pivot) & ~neighbors, chosen | neighbors,
           size + std::popcount(neighbors));
  }

  std::vector<Mask> adj_;
  Mask best_ = 0;
  int best_size_ = 0;
};

std::vector<VertexId> ToList(Mask mask) {
  std::vector<VertexId> out;
  for (; mask != 0; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

}  // namespace

std::vector<VertexId> MinimumVertexCover(const WeightedInstance& graph) {
  if (graph.num_vertices() > kMaxExactVertexCover) {
    throw ResourceError("exact vertex cover is limited to " +
                        std::to_string(kMaxExactVertexCover) + " vertices");
  }
  return ToList(CoverSearch(graph).Solve());
}

std::vector<VertexId> MatchingVertexCover(const WeightedInstance& graph) {
  std::vector<char> matched(graph.num_vertices(), 0);
  std::vector<VertexId> cover;
  for (const WeightedEdge& e : graph.edges()) {
    if (matched[e.from] || matched[e.to]) continue;
    matched[e.from] = matched[e.to] = 1;
    cover.push_back(e.from);
    cover.push_back(e.to);
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

SolveReport VertexCoverMonopoly(const WeightedInstance& instance,
                                VertexCoverMode mode) {
  if (instance.directed()) {
    throw UnsupportedError("vertex-cover monopoly requires an undirected "
                           "graph");
  }
  for (VertexId v = 0; v < instance.num_vertices(); ++v) {
    Rational incident = IncidentWeight(instance, v);
    if (instance.threshold(v) > incident) {
      throw PreconditionError(
          "vertex " + std::to_string(v) + " has threshold " +
          instance.threshold(v).ToString() + " above its incident weight " +
          incident.ToString());
    }
  }
  bool exact = mode == VertexCoverMode::kExact &&
               instance.num_vertices() <= kMaxExactVertexCover;
  return internal::MakeReport(
      instance,
      exact ? MinimumVertexCover(instance) : MatchingVertexCover(instance),
      exact ? SolveMethod::kVertexCoverExact : SolveMethod::kVertexCoverGreedy,
      false);
}

SolveReport VertexCoverMonopoly(const MultiInstance& instance,
                                VertexCoverMode mode) {
  SolveReport report = VertexCoverMonopoly(AsWeighted(instance), mode);
  report.trace = Activate(instance, report.monopoly);
  return report;
}

}  // namespace wdynmo
