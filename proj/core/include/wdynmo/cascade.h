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

// Synchronous irreversible activation.
//
// Starting from D_0 = seed, an inactive vertex u joins D_{i+1} iff the total
// weight (or multiplicity) of its in-arcs from D_i is at least tau(u). All
// inactive vertices are evaluated against the same D_i. The process stops at
// the first phase that adds nothing.

#ifndef WDYNMO_CASCADE_H_
#define WDYNMO_CASCADE_H_

#include <span>
#include <vector>

#include "wdynmo/graph.h"

namespace wdynmo {

// The monotone chain D_0 ⊆ D_1 ⊆ ... ⊆ D_t, stored as the layers
// M_i = D_i \ D_{i-1} so that long cascades stay linear in size.
class ActivationTrace {
 public:
  static constexpr int kNeverActive = -1;

  ActivationTrace() = default;
  ActivationTrace(int num_vertices, std::vector<std::vector<VertexId>> layers);

  int num_vertices() const { return static_cast<int>(phase_of_.size()); }
  // t: the index of the last phase. A seed that spreads nowhere has t = 0.
  int rounds() const { return static_cast<int>(layers_.size()) - 1; }

  // Vertices first active in phase i, ascending. Layer 0 is the seed.
  std::span<const VertexId> Layer(int i) const { return layers_[i]; }
  // D_i, ascending.
  std::vector<VertexId> Phase(int i) const;
  // D_t, ascending.
  std::vector<VertexId> Fixpoint() const { return Phase(rounds()); }
  // Phase in which v became active, or kNeverActive.
  int PhaseOf(VertexId v) const { return phase_of_[v]; }
  int num_active() const { return num_active_; }
  bool AllActive() const { return num_active_ == num_vertices(); }

  friend bool operator==(const ActivationTrace&,
                         const ActivationTrace&) = default;

 private:
  std::vector<std::vector<VertexId>> layers_{{}};
  std::vector<int> phase_of_;
  int num_active_ = 0;
};

// Throws DomainError if the seed contains an invalid id. Repeated seed
// entries are ignored.
ActivationTrace Activate(const WeightedInstance& instance,
                         std::span<const VertexId> seed);
ActivationTrace Activate(const MultiInstance& instance,
                         std::span<const VertexId> seed);

bool IsDynamicMonopoly(const WeightedInstance& instance,
                       std::span<const VertexId> seed);
bool IsDynamicMonopoly(const MultiInstance& instance,
                       std::span<const VertexId> seed);

}  // namespace wdynmo

#endif  // WDYNMO_CASCADE_H_
