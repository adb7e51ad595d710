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

#include "wdynmo/generators.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "wdynmo/solvers.h"

namespace wdynmo {
namespace {

bool Percent(Rng& rng, int percent) { return rng.Chance(percent, 100); }

std::vector<VertexId> ShuffledIds(Rng& rng, int n) {
  std::vector<VertexId> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  rng.Shuffle(ids);
  return ids;
}

// Thresholds k/q with k/q <= incident weight + 1.
std::vector<Rational> RandomThresholds(Rng& rng, const WeightedInstance& g,
                                       int max_denominator) {
  std::vector<Rational> thresholds;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    std::int64_t q = rng.Between(1, max_denominator);
    Rational cap = (IncidentWeight(g, v) + Rational(1)) * Rational(q);
    thresholds.emplace_back(rng.Between(0, cap.Floor()), q);
  }
  return thresholds;
}

}  // namespace

Rational RandomRational(Rng& rng, int max_numerator, int max_denominator) {
  std::int64_t q = rng.Between(1, max_denominator);
  return Rational(rng.Between(0, max_numerator), q);
}

WeightedInstance RandomWeightedInstance(Rng& rng,
                                        const RandomInstanceOptions& options) {
  const int n = static_cast<int>(
      rng.Between(options.min_vertices, options.max_vertices));
  std::vector<WeightedEdge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = options.directed ? 0 : u + 1; v < n; ++v) {
      if (u == v || !Percent(rng, options.edge_percent)) continue;
      Rational w = Percent(rng, options.zero_weight_percent)
                       ? Rational()
                       : Rational(rng.Between(1, options.max_numerator),
                                  rng.Between(1, options.max_denominator));
      edges.push_back({u, v, w});
    }
  }
  WeightedInstance shape(n, options.directed, std::move(edges),
                         std::vector<Rational>(n));
  return shape.WithThresholds(
      RandomThresholds(rng, shape, options.max_denominator));
}

WeightedInstance RandomCoverableInstance(
    Rng& rng, const RandomInstanceOptions& options) {
  RandomInstanceOptions undirected = options;
  undirected.directed = false;
  const WeightedInstance shape = RandomWeightedInstance(rng, undirected);
  std::vector<Rational> thresholds;
  for (VertexId v = 0; v < shape.num_vertices(); ++v) {
    std::int64_t q = rng.Between(1, options.max_denominator);
    Rational cap = IncidentWeight(shape, v) * Rational(q);
    thresholds.emplace_back(rng.Between(0, cap.Floor()), q);
  }
  return shape.WithThresholds(std::move(thresholds));
}

WeightedInstance RandomSimpleGraph(Rng& rng, int n, int edge_percent) {
  std::vector<WeightedEdge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (Percent(rng, edge_percent)) edges.push_back({u, v, Rational(1)});
    }
  }
  WeightedInstance shape(n, false, std::move(edges),
                         std::vector<Rational>(n));
  std::vector<Rational> thresholds;
  for (VertexId v = 0; v < n; ++v) {
    auto degree = static_cast<std::int64_t>(shape.InArcs(v).size());
    thresholds.emplace_back(rng.Between(0, degree + 1));
  }
  return shape.WithThresholds(std::move(thresholds));
}

MultiInstance RandomMajorityMultigraph(Rng& rng, int n, int edge_percent,
                                       int max_multiplicity,
                                       bool no_isolated) {
  std::vector<MultiEdge> edges;
  std::vector<bool> touched(n, false);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (Percent(rng, edge_percent)) {
        edges.push_back({u, v, rng.Between(1, max_multiplicity)});
        touched[u] = touched[v] = true;
      }
    }
  }
  if (no_isolated && n >= 2) {
    for (VertexId u = 0; u < n; ++u) {
      if (touched[u]) continue;
      VertexId v = static_cast<VertexId>(rng.Below(n - 1));
      if (v >= u) ++v;
      edges.push_back({std::min(u, v), std::max(u, v),
                       rng.Between(1, max_multiplicity)});
      touched[u] = touched[v] = true;
    }
  }
  MultiInstance shape(n, false, std::move(edges),
                      std::vector<std::int64_t>(n, 0));
  return shape.WithThresholds(StrictMajorityThresholds(shape));
}

WeightedInstance RandomWeightedTree(Rng& rng, int n, int max_numerator,
                                    int max_denominator) {
  const std::vector<VertexId> ids = ShuffledIds(rng, n);
  std::vector<WeightedEdge> edges;
  for (int i = 1; i < n; ++i) {
    VertexId parent = ids[rng.Below(i)];
    edges.push_back({parent, ids[i],
                     Rational(rng.Between(1, max_numerator),
                              rng.Between(1, max_denominator))});
  }
  WeightedInstance shape(n, false, std::move(edges),
                         std::vector<Rational>(n));
  return shape.WithThresholds(RandomThresholds(rng, shape, max_denominator));
}

WeightedInstance RandomFamilyF(Rng& rng, int n, int max_back_arcs,
                               int max_numerator, int max_denominator) {
  const std::vector<VertexId> ids = ShuffledIds(rng, n);
  std::vector<WeightedEdge> arcs;
  auto weight = [&] {
    return Rational(rng.Between(1, max_numerator),
                    rng.Between(1, max_denominator));
  };
  std::set<VertexId> targets;
  for (int i = 1; i < n; ++i) {
    if (rng.Chance(3, 4)) {
      arcs.push_back({ids[rng.Below(i)], ids[i], weight()});
    }
    targets.clear();
    int back = static_cast<int>(rng.Between(0, max_back_arcs));
    for (int k = 0; k < back; ++k) targets.insert(ids[rng.Below(i)]);
    for (VertexId t : targets) arcs.push_back({ids[i], t, weight()});
  }
  WeightedInstance shape(n, true, std::move(arcs), std::vector<Rational>(n));
  return shape.WithThresholds(RandomThresholds(rng, shape, max_denominator));
}

BankingNetwork RandomBankingNetwork(Rng& rng, int n, int exposure_percent) {
  std::vector<Rational> capital;
  std::vector<Rational> recovery;
  for (int i = 0; i < n; ++i) {
    capital.push_back(rng.Chance(1, 5) ? Rational()
                                       : RandomRational(rng, 12, 4));
    std::int64_t q = rng.Between(1, 5);
    recovery.emplace_back(rng.Between(0, q), q);
  }
  std::vector<Exposure> exposures;
  for (VertexId creditor = 0; creditor < n; ++creditor) {
    for (VertexId debtor = 0; debtor < n; ++debtor) {
      if (creditor != debtor && Percent(rng, exposure_percent)) {
        exposures.push_back(
            {creditor, debtor, Rational(rng.Between(1, 20), rng.Between(1, 4))});
      }
    }
  }
  return BankingNetwork(std::move(capital), std::move(recovery),
                        std::move(exposures));
}

}  // namespace wdynmo
