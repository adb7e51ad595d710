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

// Text formats for instances, banking networks and results.
//
// Instance JSON:
//   {"version": "wdynmo/1", "directed": false,
//    "vertices": [{"id": "a", "threshold": "1"}, ...],
//    "edges": [{"from": "a", "to": "b", "weight": "3/2"}, ...]}
//
// Numbers are strings ("3", "3/2" or "0.25") or JSON integers. Floating-point
// JSON numbers are rejected because they are not exact. "version" is
// optional; unknown top-level keys are ignored so that reduction outputs can
// be read back as instances.
//
// Edge-list text, one record per line, '#' starts a comment:
//   directed | undirected     (optional, first record; default undirected)
//   <u> <v> <weight>
//   t <v> <threshold>         (required for every vertex)
//
// In both formats vertex ids are arbitrary labels. Dense ids follow the
// lexicographic order of the labels.

#ifndef WDYNMO_IO_H_
#define WDYNMO_IO_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wdynmo/contagion.h"
#include "wdynmo/graph.h"
#include "wdynmo/reduction.h"
#include "wdynmo/solvers.h"

namespace wdynmo {

inline constexpr std::string_view kInstanceVersion = "wdynmo/1";

// Dense-id <-> label correspondence shared by instances and networks.
class LabelMap {
 public:
  LabelMap() = default;
  // Labels must be unique.
  explicit LabelMap(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& Label(VertexId v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<VertexId> Find(std::string_view label) const;
  // Throws DomainError for an unknown label.
  VertexId IdOf(std::string_view label) const;
  std::vector<std::string> Labels(std::span<const VertexId> ids) const;

 private:
  std::vector<std::string> labels_;
  std::map<std::string, VertexId, std::less<>> ids_;
};

struct LabeledInstance {
  WeightedInstance instance;
  LabelMap labels;
};

// Throw ParseError whose location is a JSON pointer (or "line N").
LabeledInstance ParseInstanceJson(std::string_view text);
LabeledInstance ParseEdgeList(std::string_view text);
// JSON if the first non-blank character is '{', edge list otherwise.
LabeledInstance ParseInstance(std::string_view text);

// Canonical JSON (vertices in id order, edges in stored order, rationals in
// lowest terms); parse(serialize(x)) reproduces x.
std::string InstanceToJson(const LabeledInstance& instance);

// The multigraph as an integer-weighted instance document with an extra
// "scale" key. Vertex labels are unchanged.
std::string MultigraphToJson(const MultigraphReduction& reduction,
                             const LabelMap& labels);

// Gadget graph H as an instance document plus a "correspondence" object
// listing each bundle and the labels of its middle vertices. Middle vertex
// labels are "<u>~<v>#<k>"; DomainError if one collides with an input label.
std::string GadgetToJson(const Gadget& gadget, const LabelMap& labels);
LabelMap GadgetLabels(const Gadget& gadget, const LabelMap& labels);

// {"method", "monopoly", "size", "certified_minimum", "rounds",
//  "rng_seed", "residual_kernel"}; rng_seed is null for deterministic
// methods.
std::string SolveReportToJson(const SolveReport& report,
                              const LabelMap& labels);
// The "monopoly" labels of a report produced by SolveReportToJson.
std::vector<std::string> ParseReportMonopoly(std::string_view text);

// "phase <i>: <labels of M_i>" lines followed by "active <k>/<n>".
std::string TraceToText(const ActivationTrace& trace, const LabelMap& labels);

struct LabeledNetwork {
  BankingNetwork network;
  LabelMap labels;
};

// {"institutions": [{"id", "capital", "recovery"}],
//  "exposures": [{"creditor", "debtor", "amount"}]}
LabeledNetwork ParseBankingNetwork(std::string_view text);
std::string CascadeResultToJson(const CascadeResult& result,
                                const LabelMap& labels);
// Activation instance document plus a "seed" key.
std::string ActivationMappingToJson(const ActivationMapping& mapping,
                                    const LabelMap& labels);

}  // namespace wdynmo

#endif  // WDYNMO_IO_H_
