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

#include "wdynmo/graph.h"

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>

#include "wdynmo/errors.h"

namespace wdynmo {
namespace {

template <typename Weight>
struct Triple {
  VertexId u;
  VertexId v;
  Weight w;
};

void CheckEndpoints(int n, VertexId from, VertexId to) {
  if (from < 0 || from >= n || to < 0 || to >= n) {
    throw DomainError("edge endpoint out of range: (" + std::to_string(from) +
                      ", " + std::to_string(to) + ") with n = " +
                      std::to_string(n));
  }
  if (from == to) {
    throw DomainError("self-loop at vertex " + std::to_string(from));
  }
}

// Builds (in, out) adjacency for an edge list with fields from/to and a
// weight extracted by `weight_of`.
template <typename Weight, typename Edge, typename WeightOf>
std::pair<Adjacency<Weight>, Adjacency<Weight>> BuildAdjacency(
    int n, bool directed, const std::vector<Edge>& edges,
    WeightOf weight_of) {
  std::vector<Triple<Weight>> in;
  std::vector<Triple<Weight>> out;
  in.reserve(edges.size() * (directed ? 1 : 2));
  out.reserve(in.capacity());
  for (const Edge& e : edges) {
    Weight w = weight_of(e);
    in.push_back({e.to, e.from, w});
    out.push_back({e.from, e.to, w});
    if (!directed) {
      in.push_back({e.from, e.to, w});
      out.push_back({e.to, e.from, w});
    }
  }
  return {Adjacency<Weight>::Build(n, in), Adjacency<Weight>::Build(n, out)};
}

}  // namespace

WeightedInstance::WeightedInstance(int num_vertices, bool directed,
                                   std::vector<WeightedEdge> edges,
                                   std::vector<Rational> thresholds)
    : directed_(directed),
      edges_(std::move(edges)),
      thresholds_(std::move(thresholds)) {
  if (num_vertices < 0 ||
      static_cast<std::size_t>(num_vertices) != thresholds_.size()) {
    throw DomainError("expected " + std::to_string(num_vertices) +
                      " thresholds, got " +
                      std::to_string(thresholds_.size()));
  }
  for (WeightedEdge& e : edges_) {
    CheckEndpoints(num_vertices, e.from, e.to);
    if (!directed_ && e.from > e.to) std::swap(e.from, e.to);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const WeightedEdge& a, const WeightedEdge& b) {
              return std::tie(a.from, a.to) < std::tie(b.from, b.to);
            });
  auto dup = std::adjacent_find(
      edges_.begin(), edges_.end(),
      [](const WeightedEdge& a, const WeightedEdge& b) {
        return a.from == b.from && a.to == b.to;
      });
  if (dup != edges_.end()) {
    throw DomainError("duplicate edge (" + std::to_string(dup->from) + ", " +
                      std::to_string(dup->to) + ")");
  }
  std::tie(in_, out_) = BuildAdjacency<Rational>(
      num_vertices, directed_, edges_,
      [](const WeightedEdge& e) { return e.weight; });
}

WeightedInstance WeightedInstance::WithThresholds(
    std::vector<Rational> thresholds) const {
  WeightedInstance copy = *this;
  if (thresholds.size() != thresholds_.size()) {
    throw DomainError("threshold vector has the wrong size");
  }
  copy.thresholds_ = std::move(thresholds);
  return copy;
}

void WeightedInstance::CheckVertex(VertexId v) const {
  if (v < 0 || v >= num_vertices()) {
    throw DomainError("invalid vertex id " + std::to_string(v));
  }
}

MultiInstance::MultiInstance(int num_vertices, bool directed,
                             std::vector<MultiEdge> edges,
                             std::vector<std::int64_t> thresholds)
    : directed_(directed), thresholds_(std::move(thresholds)) {
  if (num_vertices < 0 ||
      static_cast<std::size_t>(num_vertices) != thresholds_.size()) {
    throw DomainError("expected " + std::to_string(num_vertices) +
                      " thresholds, got " +
                      std::to_string(thresholds_.size()));
  }
  for (std::int64_t t : thresholds_) {
    if (t < 0) throw DomainError("negative multigraph threshold");
  }
  for (MultiEdge& e : edges) {
    CheckEndpoints(num_vertices, e.from, e.to);
    if (e.multiplicity < 0) throw DomainError("negative multiplicity");
    if (!directed_ && e.from > e.to) std::swap(e.from, e.to);
  }
  std::sort(edges.begin(), edges.end(),
            [](const MultiEdge& a, const MultiEdge& b) {
              return std::tie(a.from, a.to) < std::tie(b.from, b.to);
            });
  for (const MultiEdge& e : edges) {
    if (!edges_.empty() && edges_.back().from == e.from &&
        edges_.back().to == e.to) {
      edges_.back().multiplicity += e.multiplicity;
    } else {
      edges_.push_back(e);
    }
  }
  std::erase_if(edges_, [](const MultiEdge& e) { return e.multiplicity == 0; });
  std::tie(in_, out_) = BuildAdjacency<std::int64_t>(
      num_vertices, directed_, edges_,
      [](const MultiEdge& e) { return e.multiplicity; });
}

std::int64_t MultiInstance::Multiplicity(VertexId u, VertexId v) const {
  CheckVertex(u);
  CheckVertex(v);
  if (!directed_ && u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair(u, v),
                             [](const MultiEdge& e, std::pair<VertexId, VertexId> key) {
                               return std::pair(e.from, e.to) < key;
                             });
  if (it != edges_.end() && it->from == u && it->to == v) {
    return it->multiplicity;
  }
  return 0;
}

MultiInstance MultiInstance::WithThresholds(
    std::vector<std::int64_t> thresholds) const {
  if (thresholds.size() != thresholds_.size()) {
    throw DomainError("threshold vector has the wrong size");
  }
  for (std::int64_t t : thresholds) {
    if (t < 0) throw DomainError("negative multigraph threshold");
  }
  MultiInstance copy = *this;
  copy.thresholds_ = std::move(thresholds);
  return copy;
}

void MultiInstance::CheckVertex(VertexId v) const {
  if (v < 0 || v >= num_vertices()) {
    throw DomainError("invalid vertex id " + std::to_string(v));
  }
}

Rational IncidentWeight(const WeightedInstance& instance, VertexId v) {
  instance.CheckVertex(v);
  Rational total;
  for (const auto& arc : instance.InArcs(v)) total += arc.weight;
  return total;
}

std::int64_t MultigraphDegree(const MultiInstance& instance, VertexId v) {
  instance.CheckVertex(v);
  std::int64_t total = 0;
  for (const auto& arc : instance.InArcs(v)) total += arc.weight;
  return total;
}

WeightedInstance AsWeighted(const MultiInstance& instance) {
  std::vector<WeightedEdge> edges;
  edges.reserve(instance.edges().size());
  for (const MultiEdge& e : instance.edges()) {
    edges.push_back({e.from, e.to, Rational(e.multiplicity)});
  }
  std::vector<Rational> thresholds(instance.thresholds().begin(),
                                   instance.thresholds().end());
  return WeightedInstance(instance.num_vertices(), instance.directed(),
                          std::move(edges), std::move(thresholds));
}

}  // namespace wdynmo
