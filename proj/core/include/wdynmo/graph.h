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

// Threshold instances on edge-weighted graphs and on multigraphs.
//
// Both kinds are immutable once constructed. Vertices are dense ids in
// [0, n). Undirected edges are stored with from < to; edge lists are kept
// sorted so that iteration order is deterministic.

#ifndef WDYNMO_GRAPH_H_
#define WDYNMO_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wdynmo/rational.h"

namespace wdynmo {

using VertexId = std::int32_t;

template <typename Weight>
struct Arc {
  VertexId vertex;
  Weight weight;
};

// Compressed per-vertex arc lists.
template <typename Weight>
class Adjacency {
 public:
  Adjacency() = default;

  // Each triple (u, v, w) stores arc (v, w) in the list of u.
  template <typename Triples>
  static Adjacency Build(int num_vertices, const Triples& triples) {
    Adjacency adj;
    adj.offsets_.assign(static_cast<std::size_t>(num_vertices) + 1, 0);
    for (const auto& [u, v, w] : triples) ++adj.offsets_[u + 1];
    for (int i = 0; i < num_vertices; ++i) {
      adj.offsets_[i + 1] += adj.offsets_[i];
    }
    std::vector<std::size_t> cursor(adj.offsets_.begin(),
                                    adj.offsets_.end() - 1);
    adj.arcs_.resize(adj.offsets_.back(), Arc<Weight>{0, Weight{}});
    for (const auto& [u, v, w] : triples) adj.arcs_[cursor[u]++] = {v, w};
    return adj;
  }

  std::span<const Arc<Weight>> operator[](VertexId v) const {
    return {arcs_.data() + offsets_[v], arcs_.data() + offsets_[v + 1]};
  }

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<Arc<Weight>> arcs_;
};

struct WeightedEdge {
  VertexId from;
  VertexId to;
  Rational weight;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// The triple (G, w, tau): a simple graph (or digraph with at most one arc per
// ordered pair), non-negative rational edge weights and vertex thresholds.
class WeightedInstance {
 public:
  WeightedInstance() = default;
  // Throws DomainError on loops, out-of-range ids, duplicate edges or a
  // threshold vector whose size is not num_vertices.
  WeightedInstance(int num_vertices, bool directed,
                   std::vector<WeightedEdge> edges,
                   std::vector<Rational> thresholds);

  int num_vertices() const { return static_cast<int>(thresholds_.size()); }
  bool directed() const { return directed_; }
  const std::vector<WeightedEdge>& edges() const { return edges_; }
  const std::vector<Rational>& thresholds() const { return thresholds_; }
  const Rational& threshold(VertexId v) const { return thresholds_[v]; }

  // Arcs whose tail influences v: in-arcs when directed, incident edges
  // otherwise. Arc::vertex is the neighbor.
  std::span<const Arc<Rational>> InArcs(VertexId v) const { return in_[v]; }
  // Arcs along which v exerts influence.
  std::span<const Arc<Rational>> OutArcs(VertexId v) const {
    return out_[v];
  }

  // Same graph and weights with new thresholds.
  WeightedInstance WithThresholds(std::vector<Rational> thresholds) const;

  // Throws DomainError unless 0 <= v < num_vertices().
  void CheckVertex(VertexId v) const;

 private:
  bool directed_ = false;
  std::vector<WeightedEdge> edges_;
  std::vector<Rational> thresholds_;
  Adjacency<Rational> in_;
  Adjacency<Rational> out_;
};

struct MultiEdge {
  VertexId from;
  VertexId to;
  std::int64_t multiplicity;

  friend bool operator==(const MultiEdge&, const MultiEdge&) = default;
};

// A multigraph (M, tau') with integer multiplicities m_uv and integer
// thresholds.
class MultiInstance {
 public:
  MultiInstance() = default;
  // Repeated pairs accumulate their multiplicities; zero multiplicities are
  // dropped. Throws DomainError on loops, negative values or bad ids.
  MultiInstance(int num_vertices, bool directed, std::vector<MultiEdge> edges,
                std::vector<std::int64_t> thresholds);

  int num_vertices() const { return static_cast<int>(thresholds_.size()); }
  bool directed() const { return directed_; }
  const std::vector<MultiEdge>& edges() const { return edges_; }
  const std::vector<std::int64_t>& thresholds() const { return thresholds_; }
  std::int64_t threshold(VertexId v) const { return thresholds_[v]; }

  // m_uv; for directed instances the number of parallel arcs u -> v.
  std::int64_t Multiplicity(VertexId u, VertexId v) const;

  std::span<const Arc<std::int64_t>> InArcs(VertexId v) const {
    return in_[v];
  }
  std::span<const Arc<std::int64_t>> OutArcs(VertexId v) const {
    return out_[v];
  }

  MultiInstance WithThresholds(std::vector<std::int64_t> thresholds) const;
  void CheckVertex(VertexId v) const;

 private:
  bool directed_ = false;
  std::vector<MultiEdge> edges_;
  std::vector<std::int64_t> thresholds_;
  Adjacency<std::int64_t> in_;
  Adjacency<std::int64_t> out_;
};

// Total weight of the edges incident to v (undirected) or of the arcs
// entering v (directed).
Rational IncidentWeight(const WeightedInstance& instance, VertexId v);

// d(v) = sum of m_uv over u; in-multiplicity for directed multigraphs.
std::int64_t MultigraphDegree(const MultiInstance& instance, VertexId v);

// Views a multigraph as a weighted instance with integer weights m_uv.
WeightedInstance AsWeighted(const MultiInstance& instance);

}  // namespace wdynmo

#endif  // WDYNMO_GRAPH_H_
