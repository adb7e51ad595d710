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

#include "wdynmo/reduction.h"

#include <algorithm>
#include <utility>

#include "wdynmo/errors.h"

namespace wdynmo {
namespace {

// scale * value, which must be integral by choice of scale.
std::int64_t Scaled(const Rational& value, std::int64_t scale) {
  std::int64_t factor = scale / value.denominator();
  std::int64_t result = 0;
  if (__builtin_mul_overflow(value.numerator(), factor, &result)) {
    throw ResourceError("scaled value overflowed 64 bits");
  }
  return result;
}

}  // namespace

std::int64_t CommonScale(const WeightedInstance& instance) {
  std::int64_t scale = 1;
  for (const WeightedEdge& e : instance.edges()) {
    scale = Lcm(scale, e.weight.denominator());
  }
  for (const Rational& t : instance.thresholds()) {
    scale = Lcm(scale, t.denominator());
  }
  return scale;
}

MultigraphReduction ToMultigraph(const WeightedInstance& instance) {
  const std::int64_t scale = CommonScale(instance);
  std::vector<MultiEdge> edges;
  edges.reserve(instance.edges().size());
  for (const WeightedEdge& e : instance.edges()) {
    if (e.weight.is_zero()) continue;
    edges.push_back({e.from, e.to, Scaled(e.weight, scale)});
  }
  std::vector<std::int64_t> thresholds;
  thresholds.reserve(instance.num_vertices());
  for (const Rational& t : instance.thresholds()) {
    thresholds.push_back(Scaled(t, scale));
  }
  return {MultiInstance(instance.num_vertices(), instance.directed(),
                        std::move(edges), std::move(thresholds)),
          scale};
}

Gadget BuildGadget(const WeightedInstance& instance) {
  if (instance.directed()) {
    throw UnsupportedError("gadget construction requires an undirected graph");
  }
  const int n = instance.num_vertices();
  const std::int64_t scale = CommonScale(instance);

  GadgetMap map;
  map.num_original = n;
  map.scale = scale;
  std::vector<WeightedEdge> edges;
  std::vector<Rational> thresholds;
  thresholds.reserve(n);
  for (const Rational& t : instance.thresholds()) {
    thresholds.emplace_back(Scaled(t, scale));
  }

  // instance.edges() is already sorted by (from, to) with from < to.
  VertexId next_id = n;
  for (const WeightedEdge& e : instance.edges()) {
    if (e.weight.is_zero()) continue;
    GadgetEdge bundle{e.from, e.to, Scaled(e.weight, scale), {}};
    if (bundle.bundle - 1 > std::int64_t{1} << 30) {
      throw ResourceError("gadget bundle too large");
    }
    edges.push_back({e.from, e.to, Rational(1)});
    for (std::int64_t k = 1; k < bundle.bundle; ++k) {
      VertexId m = next_id++;
      bundle.middles.push_back(m);
      thresholds.emplace_back(1);
      edges.push_back({e.from, m, Rational(1)});
      edges.push_back({m, e.to, Rational(1)});
    }
    map.edges.push_back(std::move(bundle));
  }
  return {WeightedInstance(next_id, false, std::move(edges),
                           std::move(thresholds)),
          std::move(map)};
}

TreeDecomposition TransformTreeDecomposition(
    const TreeDecomposition& td, const WeightedInstance& instance) {
  if (!ValidateTreeDecomposition(td, instance)) {
    throw DomainError("tree decomposition is not valid for the input graph");
  }
  const Gadget gadget = BuildGadget(instance);
  const int n = instance.num_vertices();

  std::vector<std::vector<VertexId>> sorted_bags = td.bags;
  std::vector<std::vector<int>> bags_of(n);
  for (std::size_t i = 0; i < sorted_bags.size(); ++i) {
    std::sort(sorted_bags[i].begin(), sorted_bags[i].end());
    for (VertexId v : sorted_bags[i]) bags_of[v].push_back(static_cast<int>(i));
  }

  TreeDecomposition out = td;
  for (const GadgetEdge& e : gadget.map.edges) {
    if (e.middles.empty()) continue;
    auto host = std::find_if(
        bags_of[e.u].begin(), bags_of[e.u].end(), [&](int bag) {
          return std::binary_search(sorted_bags[bag].begin(),
                                    sorted_bags[bag].end(), e.v);
        });
    std::vector<VertexId> bag = {e.u, e.v};
    bag.insert(bag.end(), e.middles.begin(), e.middles.end());
    out.tree_edges.emplace_back(*host, static_cast<int>(out.bags.size()));
    out.bags.push_back(std::move(bag));
  }
  return out;
}

std::int64_t WeightedTreewidth(const WeightedInstance& instance,
                               std::int64_t tw_g) {
  const std::int64_t scale = CommonScale(instance);
  std::int64_t result = tw_g;
  for (const WeightedEdge& e : instance.edges()) {
    result = std::max(result, Scaled(e.weight, scale));
  }
  return result;
}

}  // namespace wdynmo
