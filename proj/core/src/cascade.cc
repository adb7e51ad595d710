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
#include <utility>

namespace wdynmo {
namespace {

// Influence only changes along out-arcs of the previous layer, so each phase
// only re-examines the vertices touched by it. Vertices with threshold zero
// are candidates for phase 1 unconditionally.
template <typename Instance, typename Weight>
ActivationTrace Run(const Instance& instance, std::span<const VertexId> seed) {
  const int n = instance.num_vertices();
  for (VertexId v : seed) instance.CheckVertex(v);

  std::vector<char> active(n, 0);
  std::vector<Weight> received(n, Weight{});
  std::vector<char> touched(n, 0);
  std::vector<std::vector<VertexId>> layers;

  std::vector<VertexId> layer;
  for (VertexId v : seed) {
    if (!active[v]) {
      active[v] = 1;
      layer.push_back(v);
    }
  }
  std::sort(layer.begin(), layer.end());

  std::vector<VertexId> candidates;
  for (VertexId v = 0; v < n; ++v) {
    if (!active[v] && instance.threshold(v) == Weight{}) {
      touched[v] = 1;
      candidates.push_back(v);
    }
  }

  while (true) {
    for (VertexId u : layer) {
      for (const auto& arc : instance.OutArcs(u)) {
        VertexId x = arc.vertex;
        if (active[x]) continue;
        received[x] += arc.weight;
        if (!touched[x]) {
          touched[x] = 1;
          candidates.push_back(x);
        }
      }
    }
    layers.push_back(std::move(layer));
    layer.clear();
    for (VertexId x : candidates) {
      touched[x] = 0;
      if (received[x] >= instance.threshold(x)) layer.push_back(x);
    }
    candidates.clear();
    if (layer.empty()) break;
    for (VertexId x : layer) active[x] = 1;
    std::sort(layer.begin(), layer.end());
  }
  return ActivationTrace(n, std::move(layers));
}

}  // namespace

ActivationTrace::ActivationTrace(int num_vertices,
                                 std::vector<std::vector<VertexId>> layers)
    : layers_(std::move(layers)), phase_of_(num_vertices, kNeverActive) {
  if (layers_.empty()) layers_.emplace_back();
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    for (VertexId v : layers_[i]) phase_of_[v] = static_cast<int>(i);
    num_active_ += static_cast<int>(layers_[i].size());
  }
}

std::vector<VertexId> ActivationTrace::Phase(int i) const {
  std::vector<VertexId> set;
  for (int j = 0; j <= i && j < static_cast<int>(layers_.size()); ++j) {
    set.insert(set.end(), layers_[j].begin(), layers_[j].end());
  }
  std::sort(set.begin(), set.end());
  return set;
}

ActivationTrace Activate(const WeightedInstance& instance,
                         std::span<const VertexId> seed) {
  return Run<WeightedInstance, Rational>(instance, seed);
}

ActivationTrace Activate(const MultiInstance& instance,
                         std::span<const VertexId> seed) {
  return Run<MultiInstance, std::int64_t>(instance, seed);
}

bool IsDynamicMonopoly(const WeightedInstance& instance,
                       std::span<const VertexId> seed) {
  return Activate(instance, seed).AllActive();
}

bool IsDynamicMonopoly(const MultiInstance& instance,
                       std::span<const VertexId> seed) {
  return Activate(instance, seed).AllActive();
}

}  // namespace wdynmo
