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

#include "wdynmo/io.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "wdynmo/errors.h"

namespace wdynmo {
namespace {

using Json = nlohmann::ordered_json;

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "malformed JSON");
  }
}

const Json& Member(const Json& object, const char* key,
                   const std::string& where) {
  if (!object.is_object()) throw ParseError(where, "expected an object");
  auto it = object.find(key);
  if (it == object.end()) {
    throw ParseError(where + "/" + key, "missing required field");
  }
  return *it;
}

const Json& ArrayMember(const Json& object, const char* key,
                        const std::string& where) {
  const Json& node = Member(object, key, where);
  if (!node.is_array()) {
    throw ParseError(where + "/" + key, "expected an array");
  }
  return node;
}

Rational ReadRational(const Json& node, const std::string& where) {
  if (node.is_number_unsigned()) {
    auto value = node.get<std::uint64_t>();
    if (value > static_cast<std::uint64_t>(INT64_MAX)) {
      throw ParseError(where, "number out of range");
    }
    return Rational(static_cast<std::int64_t>(value));
  }
  if (node.is_number_integer()) {
    throw ParseError(where, "negative value");
  }
  if (node.is_number_float()) {
    throw ParseError(where,
                     "floating-point numbers are inexact; use a string such "
                     "as \"3/2\" or \"0.25\"");
  }
  if (!node.is_string()) throw ParseError(where, "expected a number");
  try {
    return Rational::Parse(node.get<std::string>());
  } catch (const Error& e) {
    throw ParseError(where, e.what());
  }
}

std::string ReadLabel(const Json& node, const std::string& where) {
  if (node.is_string()) return node.get<std::string>();
  if (node.is_number_integer()) return std::to_string(node.get<std::int64_t>());
  throw ParseError(where, "expected a string or integer id");
}

// Sorted unique labels; ParseError at where(i) for the first duplicate.
template <typename Where>
LabelMap BuildLabels(std::vector<std::string> raw, Where where) {
  std::vector<std::string> sorted = raw;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    auto index = std::find(raw.begin(), raw.end(), *dup) - raw.begin();
    auto second = std::find(raw.begin() + index + 1, raw.end(), *dup);
    throw ParseError(where(second - raw.begin()),
                     "duplicate id '" + *dup + "'");
  }
  return LabelMap(std::move(sorted));
}

VertexId LookUp(const LabelMap& labels, const std::string& label,
                const std::string& where) {
  std::optional<VertexId> id = labels.Find(label);
  if (!id) throw ParseError(where, "unknown vertex '" + label + "'");
  return *id;
}

// Key identifying an edge for duplicate detection.
std::pair<VertexId, VertexId> EdgeKey(bool directed, VertexId u, VertexId v) {
  if (!directed && u > v) std::swap(u, v);
  return {u, v};
}

WeightedInstance Assemble(int n, bool directed, std::vector<WeightedEdge> edges,
                          std::vector<Rational> thresholds) {
  try {
    return WeightedInstance(n, directed, std::move(edges),
                            std::move(thresholds));
  } catch (const DomainError& e) {
    throw ParseError("", e.what());
  }
}

Json InstanceDocument(const WeightedInstance& instance,
                      const LabelMap& labels) {
  Json doc;
  doc["version"] = kInstanceVersion;
  doc["directed"] = instance.directed();
  Json vertices = Json::array();
  for (VertexId v = 0; v < instance.num_vertices(); ++v) {
    vertices.push_back({{"id", labels.Label(v)},
                        {"threshold", instance.threshold(v).ToString()}});
  }
  doc["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (const WeightedEdge& e : instance.edges()) {
    edges.push_back({{"from", labels.Label(e.from)},
                     {"to", labels.Label(e.to)},
                     {"weight", e.weight.ToString()}});
  }
  doc["edges"] = std::move(edges);
  return doc;
}

Json LabelArray(const LabelMap& labels, std::span<const VertexId> ids) {
  Json out = Json::array();
  for (VertexId v : ids) out.push_back(labels.Label(v));
  return out;
}

std::string Dump(const Json& doc) { return doc.dump(2) + "\n"; }

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    std::size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

}  // namespace

LabelMap::LabelMap(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!ids_.emplace(labels_[i], static_cast<VertexId>(i)).second) {
      throw DomainError("duplicate label '" + labels_[i] + "'");
    }
  }
}

std::optional<VertexId> LabelMap::Find(std::string_view label) const {
  auto it = ids_.find(label);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

VertexId LabelMap::IdOf(std::string_view label) const {
  std::optional<VertexId> id = Find(label);
  if (!id) throw DomainError("unknown vertex '" + std::string(label) + "'");
  return *id;
}

std::vector<std::string> LabelMap::Labels(
    std::span<const VertexId> ids) const {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (VertexId v : ids) out.push_back(labels_[v]);
  return out;
}

LabeledInstance ParseInstanceJson(std::string_view text) {
  const Json doc = ParseJson(text);
  if (!doc.is_object()) throw ParseError("", "expected a JSON object");
  if (auto it = doc.find("version"); it != doc.end()) {
    if (!it->is_string() || it->get<std::string>() != kInstanceVersion) {
      throw ParseError("/version", "unsupported format version");
    }
  }
  const Json& directed_node = Member(doc, "directed", "");
  if (!directed_node.is_boolean()) {
    throw ParseError("/directed", "expected true or false");
  }
  const bool directed = directed_node.get<bool>();

  const Json& vertices = ArrayMember(doc, "vertices", "");
  std::vector<std::string> raw_labels;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    std::string where = "/vertices/" + std::to_string(i);
    raw_labels.push_back(ReadLabel(Member(vertices[i], "id", where),
                                   where + "/id"));
  }
  LabelMap labels = BuildLabels(raw_labels, [](std::ptrdiff_t i) {
    return "/vertices/" + std::to_string(i) + "/id";
  });
  const int n = labels.size();
  std::vector<Rational> thresholds(n);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    std::string where = "/vertices/" + std::to_string(i);
    thresholds[labels.IdOf(raw_labels[i])] = ReadRational(
        Member(vertices[i], "threshold", where), where + "/threshold");
  }

  const Json& edge_nodes = ArrayMember(doc, "edges", "");
  std::vector<WeightedEdge> edges;
  std::set<std::pair<VertexId, VertexId>> seen;
  for (std::size_t i = 0; i < edge_nodes.size(); ++i) {
    std::string where = "/edges/" + std::to_string(i);
    const Json& node = edge_nodes[i];
    VertexId u = LookUp(labels,
                        ReadLabel(Member(node, "from", where), where + "/from"),
                        where + "/from");
    VertexId v = LookUp(labels,
                        ReadLabel(Member(node, "to", where), where + "/to"),
                        where + "/to");
    if (u == v) throw ParseError(where, "self-loop");
    if (!seen.insert(EdgeKey(directed, u, v)).second) {
      throw ParseError(where, "duplicate edge");
    }
    edges.push_back(
        {u, v, ReadRational(Member(node, "weight", where), where + "/weight")});
  }
  return {Assemble(n, directed, std::move(edges), std::move(thresholds)),
          std::move(labels)};
}

LabeledInstance ParseEdgeList(std::string_view text) {
  struct RawEdge {
    std::string u, v;
    Rational weight;
    int line;
  };
  bool directed = false;
  bool seen_record = false;
  std::map<std::string, std::pair<Rational, int>> threshold_of;
  std::vector<RawEdge> raw_edges;

  int line_number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::vector<std::string_view> tokens = Tokens(line);
    if (tokens.empty()) continue;
    const std::string where = "line " + std::to_string(line_number);
    auto number = [&](std::string_view token) {
      try {
        return Rational::Parse(token);
      } catch (const Error& e) {
        throw ParseError(where, e.what());
      }
    };
    if (tokens.size() == 1 &&
        (tokens[0] == "directed" || tokens[0] == "undirected")) {
      if (seen_record) {
        throw ParseError(where, "orientation must be the first record");
      }
      directed = tokens[0] == "directed";
    } else if (tokens.size() == 3 && tokens[0] == "t") {
      std::string label(tokens[1]);
      if (!threshold_of.emplace(label, std::pair{number(tokens[2]),
                                                 line_number})
               .second) {
        throw ParseError(where, "second threshold for '" + label + "'");
      }
    } else if (tokens.size() == 3) {
      raw_edges.push_back({std::string(tokens[0]), std::string(tokens[1]),
                           number(tokens[2]), line_number});
    } else {
      throw ParseError(where, "expected '<u> <v> <weight>' or 't <v> <tau>'");
    }
    seen_record = true;
  }

  std::vector<std::string> names;
  std::vector<Rational> thresholds;
  for (const auto& [label, value] : threshold_of) {
    names.push_back(label);
    thresholds.push_back(value.first);
  }
  LabelMap labels(std::move(names));
  std::vector<WeightedEdge> edges;
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const RawEdge& e : raw_edges) {
    const std::string where = "line " + std::to_string(e.line);
    VertexId u = LookUp(labels, e.u, where);
    VertexId v = LookUp(labels, e.v, where);
    if (u == v) throw ParseError(where, "self-loop");
    if (!seen.insert(EdgeKey(directed, u, v)).second) {
      throw ParseError(where, "duplicate edge");
    }
    edges.push_back({u, v, e.weight});
  }
  return {Assemble(labels.size(), directed, std::move(edges),
                   std::move(thresholds)),
          std::move(labels)};
}

LabeledInstance ParseInstance(std::string_view text) {
  auto first = std::find_if(text.begin(), text.end(), [](char c) {
    return !std::isspace(static_cast<unsigned char>(c));
  });
  if (first != text.end() && *first == '{') return ParseInstanceJson(text);
  return ParseEdgeList(text);
}

std::string InstanceToJson(const LabeledInstance& instance) {
  return Dump(InstanceDocument(instance.instance, instance.labels));
}

std::string MultigraphToJson(const MultigraphReduction& reduction,
                             const LabelMap& labels) {
  Json doc = InstanceDocument(AsWeighted(reduction.multigraph), labels);
  doc["scale"] = std::to_string(reduction.scale);
  return Dump(doc);
}

LabelMap GadgetLabels(const Gadget& gadget, const LabelMap& labels) {
  std::vector<std::string> names = labels.labels();
  names.resize(gadget.graph.num_vertices());
  for (const GadgetEdge& e : gadget.map.edges) {
    for (std::size_t k = 0; k < e.middles.size(); ++k) {
      names[e.middles[k]] = labels.Label(e.u) + "~" + labels.Label(e.v) + "#" +
                            std::to_string(k + 1);
    }
  }
  return LabelMap(std::move(names));
}

std::string GadgetToJson(const Gadget& gadget, const LabelMap& labels) {
  const LabelMap h_labels = GadgetLabels(gadget, labels);
  Json doc = InstanceDocument(gadget.graph, h_labels);
  Json bundles = Json::array();
  for (const GadgetEdge& e : gadget.map.edges) {
    bundles.push_back({{"u", labels.Label(e.u)},
                       {"v", labels.Label(e.v)},
                       {"bundle", e.bundle},
                       {"middles", LabelArray(h_labels, e.middles)}});
  }
  doc["correspondence"] = {{"scale", std::to_string(gadget.map.scale)},
                           {"original", labels.labels()},
                           {"bundles", std::move(bundles)}};
  return Dump(doc);
}

std::string SolveReportToJson(const SolveReport& report,
                              const LabelMap& labels) {
  Json doc;
  doc["method"] = MethodName(report.method);
  doc["monopoly"] = LabelArray(labels, report.monopoly);
  doc["size"] = report.monopoly.size();
  doc["certified_minimum"] = report.certified_minimum;
  doc["rounds"] = report.trace.rounds();
  doc["rng_seed"] =
      report.rng_seed ? Json(*report.rng_seed) : Json(nullptr);
  if (report.method == SolveMethod::kFamilyF) {
    doc["residual_kernel"] = report.residual_kernel;
  }
  return Dump(doc);
}

std::vector<std::string> ParseReportMonopoly(std::string_view text) {
  const Json doc = ParseJson(text);
  const Json& monopoly = ArrayMember(doc, "monopoly", "");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < monopoly.size(); ++i) {
    out.push_back(ReadLabel(monopoly[i], "/monopoly/" + std::to_string(i)));
  }
  return out;
}

std::string TraceToText(const ActivationTrace& trace, const LabelMap& labels) {
  std::ostringstream out;
  for (int i = 0; i <= trace.rounds(); ++i) {
    out << "phase " << i << ":";
    for (VertexId v : trace.Layer(i)) out << ' ' << labels.Label(v);
    out << '\n';
  }
  out << "active " << trace.num_active() << '/' << trace.num_vertices()
      << '\n';
  return out.str();
}

LabeledNetwork ParseBankingNetwork(std::string_view text) {
  const Json doc = ParseJson(text);
  if (!doc.is_object()) throw ParseError("", "expected a JSON object");
  const Json& institutions = ArrayMember(doc, "institutions", "");
  std::vector<std::string> raw_labels;
  for (std::size_t i = 0; i < institutions.size(); ++i) {
    std::string where = "/institutions/" + std::to_string(i);
    raw_labels.push_back(
        ReadLabel(Member(institutions[i], "id", where), where + "/id"));
  }
  LabelMap labels = BuildLabels(raw_labels, [](std::ptrdiff_t i) {
    return "/institutions/" + std::to_string(i) + "/id";
  });
  const int n = labels.size();
  std::vector<Rational> capital(n);
  std::vector<Rational> recovery(n);
  for (std::size_t i = 0; i < institutions.size(); ++i) {
    std::string where = "/institutions/" + std::to_string(i);
    VertexId id = labels.IdOf(raw_labels[i]);
    capital[id] = ReadRational(Member(institutions[i], "capital", where),
                               where + "/capital");
    recovery[id] = ReadRational(Member(institutions[i], "recovery", where),
                                where + "/recovery");
    if (recovery[id] > Rational(1)) {
      throw ParseError(where + "/recovery", "recovery rate above 1");
    }
  }
  const Json& exposure_nodes = ArrayMember(doc, "exposures", "");
  std::vector<Exposure> exposures;
  std::set<std::pair<VertexId, VertexId>> seen;
  for (std::size_t i = 0; i < exposure_nodes.size(); ++i) {
    std::string where = "/exposures/" + std::to_string(i);
    const Json& node = exposure_nodes[i];
    VertexId creditor = LookUp(
        labels, ReadLabel(Member(node, "creditor", where), where + "/creditor"),
        where + "/creditor");
    VertexId debtor = LookUp(
        labels, ReadLabel(Member(node, "debtor", where), where + "/debtor"),
        where + "/debtor");
    if (creditor == debtor) throw ParseError(where, "self-exposure");
    if (!seen.emplace(creditor, debtor).second) {
      throw ParseError(where, "duplicate exposure");
    }
    exposures.push_back({creditor, debtor,
                         ReadRational(Member(node, "amount", where),
                                      where + "/amount")});
  }
  try {
    return {BankingNetwork(std::move(capital), std::move(recovery),
                           std::move(exposures)),
            std::move(labels)};
  } catch (const DomainError& e) {
    throw ParseError("", e.what());
  }
}

std::string CascadeResultToJson(const CascadeResult& result,
                                const LabelMap& labels) {
  Json doc;
  doc["insolvent"] = LabelArray(labels, result.insolvent);
  Json steps = Json::object();
  for (std::size_t j = 0; j < result.default_step.size(); ++j) {
    if (result.default_step[j] >= 0) {
      steps[labels.Label(static_cast<VertexId>(j))] = result.default_step[j];
    }
  }
  doc["default_step"] = std::move(steps);
  Json sequence = Json::array();
  for (const std::vector<Rational>& row : result.capital_sequence) {
    Json values = Json::array();
    for (const Rational& c : row) values.push_back(c.ToString());
    sequence.push_back(std::move(values));
  }
  doc["institutions"] = labels.labels();
  doc["capital_sequence"] = std::move(sequence);
  return Dump(doc);
}

std::string ActivationMappingToJson(const ActivationMapping& mapping,
                                    const LabelMap& labels) {
  Json doc = InstanceDocument(mapping.instance, labels);
  doc["seed"] = LabelArray(labels, mapping.seed);
  return Dump(doc);
}

}  // namespace wdynmo
