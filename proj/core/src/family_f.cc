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

// Minimum dynamic monopolies on digraphs with an in-degree-one peeling
// order.
//
// The solver keeps a residual instance: live vertices, the arcs among them
// and residual thresholds r(v) (the original threshold minus the influence
// already received from vertices known to end up active, floored at zero).
// It repeatedly takes a live vertex v and applies the first rule that fits:
//
//   r(v) = 0                 v activates unaided. Remove it and subtract its
//                            arc weights from its out-neighbors.
//   r(v) > in-weight(v)      nothing can activate v: seed it, then as above.
//   single in-neighbor u,    v is active iff u is. Contract v into u: every
//   0 < r(v) <= w(u->v)      arc v->x becomes u->x (adding weights when u->x
//                            already exists) and v->u is dropped.
//
// Each rule preserves the minimum: seeded vertices are forced, vertices that
// activate unaided never need a seed, and a minimum monopoly containing a
// contracted v can swap v for u.
//
// Contraction can leave a residual in which every vertex has in-degree >= 2
// even though the input had a peeling order (minimum target set on this
// family is NP-hard, by a reduction from vertex cover). That residual kernel
// is then solved exhaustively, subject to DefaultBruteForceLimit().

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>

#include "solver_util.h"
#include "wdynmo/errors.h"
#include "wdynmo/reduction.h"
#include "wdynmo/solvers.h"

namespace wdynmo {
namespace {

// Arithmetic on the two weight representations: integers scaled by the
// common denominator (the fast path) and exact rationals.
bool IsZero(std::int64_t x) { return x == 0; }
bool IsZero(const Rational& x) { return x.is_zero(); }
std::int64_t Saturating(std::int64_t a, std::int64_t b) {
  return a > b ? a - b : 0;
}
Rational Saturating(const Rational& a, const Rational& b) {
  return SaturatingSub(a, b);
}
Rational Unscale(std::int64_t x, std::int64_t scale) {
  return Rational(x, scale);
}
Rational Unscale(const Rational& x, std::int64_t) { return x; }

// Arcs are stored once, grouped by their original source. Each live vertex
// owns a linked list of these groups; contracting v into u splices v's list
// onto u's, so arcs v->u become loops of u, which are skipped like arcs to
// removed vertices. A vertex may thus own parallel arcs to one target.
// Distinct in-neighbors are tracked through the count, sum and sum of squares
// of the source ids of live in-arcs: all sources are equal iff
// sum^2 = count*sumsq.
template <typename W, typename Square>
class ResidualPeeler {
 public:
  // weights[i] and thresholds[v] are the instance's values, scaled by
  // `scale` when W is an integer type.
  ResidualPeeler(const WeightedInstance& instance, const std::vector<W>& weights,
                 std::vector<W> thresholds, std::int64_t scale)
      : n_(instance.num_vertices()),
        scale_(scale),
        state_(n_),
        offsets_(n_ + 1, 0),
        head_(n_),
        tail_(n_),
        next_(n_, -1) {
    for (VertexId v = 0; v < n_; ++v) {
      state_[v].residual = thresholds[v];
      head_[v] = tail_[v] = v;
    }
    // edges() is sorted by source, so the groups come out in order.
    const std::vector<WeightedEdge>& edges = instance.edges();
    arcs_.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (IsZero(weights[i])) continue;
      const WeightedEdge& e = edges[i];
      arcs_.push_back({e.to, weights[i]});
      ++offsets_[e.from + 1];
      State& x = state_[e.to];
      x.in_weight += weights[i];
      x.sources.Add(e.from);
    }
    for (VertexId v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];
    stack_.reserve(n_);
    for (VertexId v = 0; v < n_; ++v) stack_.push_back(v);
  }

  void Run() {
    while (!stack_.empty()) {
      VertexId v = stack_.back();
      stack_.pop_back();
      const State& state = state_[v];
      if (!state.alive) continue;
      if (IsZero(state.residual)) {
        RemoveActive(v);
      } else if (state.residual > state.in_weight) {
        seeds_.push_back(v);
        RemoveActive(v);
      } else if (std::optional<VertexId> u = state.sources.Single()) {
        Contract(v, *u);
      }
    }
  }

  // Live vertices after Run(): empty unless peeling stalled.
  std::vector<VertexId> Kernel() const {
    std::vector<VertexId> kernel;
    for (VertexId v = 0; v < n_; ++v) {
      if (state_[v].alive) kernel.push_back(v);
    }
    return kernel;
  }

  // The residual instance restricted to the kernel, with compact ids and
  // parallel arcs merged.
  WeightedInstance KernelInstance(const std::vector<VertexId>& kernel) const {
    std::vector<VertexId> local(n_, -1);
    for (std::size_t i = 0; i < kernel.size(); ++i) {
      local[kernel[i]] = static_cast<VertexId>(i);
    }
    std::vector<Rational> thresholds;
    for (VertexId v : kernel) {
      thresholds.push_back(Unscale(state_[v].residual, scale_));
    }
    std::vector<std::tuple<VertexId, VertexId, W>> arcs;
    for (VertexId v : kernel) {
      ForEachArc(v, [&](const OutArc& arc) {
        if (arc.to != v && state_[arc.to].alive) {
          arcs.emplace_back(local[v], local[arc.to], arc.weight);
        }
      });
    }
    std::sort(arcs.begin(), arcs.end(), [](const auto& a, const auto& b) {
      return std::tie(std::get<0>(a), std::get<1>(a)) <
             std::tie(std::get<0>(b), std::get<1>(b));
    });
    std::vector<WeightedEdge> edges;
    for (std::size_t i = 0; i < arcs.size();) {
      auto [from, to, w] = arcs[i];
      for (++i; i < arcs.size() && std::get<0>(arcs[i]) == from &&
                std::get<1>(arcs[i]) == to;
           ++i) {
        w += std::get<2>(arcs[i]);
      }
      edges.push_back({from, to, Unscale(w, scale_)});
    }
    return WeightedInstance(static_cast<int>(kernel.size()), true,
                            std::move(edges), std::move(thresholds));
  }

  std::vector<VertexId>& seeds() { return seeds_; }

 private:
  struct OutArc {
    VertexId to;
    W weight;
  };

  // Multiset of the source ids of a vertex's live in-arcs.
  struct Sources {
    std::int64_t count = 0;
    std::int64_t sum = 0;
    Square sum_of_squares = 0;

    void Add(VertexId u) {
      ++count;
      sum += u;
      sum_of_squares += static_cast<Square>(u) * u;
    }
    void Remove(VertexId u) {
      --count;
      sum -= u;
      sum_of_squares -= static_cast<Square>(u) * u;
    }
    std::optional<VertexId> Single() const {
      if (count == 0) return std::nullopt;
      Square s = sum;
      if (s * s != count * sum_of_squares) return std::nullopt;
      return static_cast<VertexId>(sum / count);
    }
  };

  struct State {
    Sources sources;
    W residual{};
    W in_weight{};
    bool alive = true;
  };

  template <typename F>
  void ForEachArc(VertexId v, F&& f) const {
    for (VertexId group = head_[v]; group != -1; group = next_[group]) {
      for (std::size_t i = offsets_[group]; i < offsets_[group + 1]; ++i) {
        f(arcs_[i]);
      }
    }
  }

  void RemoveActive(VertexId v) {
    state_[v].alive = false;
    ForEachArc(v, [&](const OutArc& arc) {
      State& x = state_[arc.to];
      if (!x.alive) return;
      x.in_weight -= arc.weight;
      x.sources.Remove(v);
      x.residual = Saturating(x.residual, arc.weight);
      stack_.push_back(arc.to);
    });
  }

  // v has the single in-neighbor u and r(v) <= w(u -> v).
  void Contract(VertexId v, VertexId u) {
    state_[v].alive = false;
    ForEachArc(v, [&](const OutArc& arc) {
      State& x = state_[arc.to];
      if (!x.alive) return;
      x.sources.Remove(v);
      if (arc.to == u) {
        x.in_weight -= arc.weight;
      } else {
        x.sources.Add(u);
      }
      stack_.push_back(arc.to);
    });
    next_[tail_[u]] = head_[v];
    tail_[u] = tail_[v];
  }

  int n_;
  std::int64_t scale_;
  std::vector<State> state_;
  std::vector<OutArc> arcs_;
  std::vector<std::size_t> offsets_;
  // Groups owned by each vertex: head_[v], next_[head_[v]], ..., tail_[v].
  std::vector<VertexId> head_;
  std::vector<VertexId> tail_;
  std::vector<VertexId> next_;
  std::vector<VertexId> stack_;
  std::vector<VertexId> seeds_;
};

struct PeelResult {
  std::vector<VertexId> monopoly;
  int kernel_size = 0;
};

template <typename W, typename Square>
PeelResult Peel(const WeightedInstance& instance, const std::vector<W>& weights,
                std::vector<W> thresholds, std::int64_t scale) {
  ResidualPeeler<W, Square> peeler(instance, weights, std::move(thresholds),
                                   scale);
  peeler.Run();
  PeelResult result{std::move(peeler.seeds()), 0};
  const std::vector<VertexId> kernel = peeler.Kernel();
  if (!kernel.empty()) {
    SolveReport inner = BruteForceMinDynmo(peeler.KernelInstance(kernel));
    for (VertexId local : inner.monopoly) {
      result.monopoly.push_back(kernel[local]);
    }
  }
  result.kernel_size = static_cast<int>(kernel.size());
  return result;
}

// Weights and thresholds times the common denominator, if every value and
// the total weight fit in 64 bits.
bool ScaleToIntegers(const WeightedInstance& instance, std::int64_t* scale,
                     std::vector<std::int64_t>* weights,
                     std::vector<std::int64_t>* thresholds) {
  try {
    *scale = CommonScale(instance);
  } catch (const ResourceError&) {
    return false;
  }
  auto scaled = [&](const Rational& x, std::int64_t* out) {
    return !__builtin_mul_overflow(x.numerator(), *scale / x.denominator(),
                                   out);
  };
  std::int64_t total = 0;
  for (const WeightedEdge& e : instance.edges()) {
    std::int64_t w = 0;
    if (!scaled(e.weight, &w) || __builtin_add_overflow(total, w, &total)) {
      return false;
    }
    weights->push_back(w);
  }
  for (const Rational& t : instance.thresholds()) {
    std::int64_t value = 0;
    if (!scaled(t, &value)) return false;
    thresholds->push_back(value);
  }
  return true;
}

// Whether sum^2 and count * sum of squares of source ids stay below 2^62.
// Both are at most (d * (n - 1))^2 for maximum in-degree d, and contraction
// never raises an in-arc count.
bool FitsSquares(const WeightedInstance& instance) {
  std::int64_t max_in = 0;
  for (VertexId v = 0; v < instance.num_vertices(); ++v) {
    max_in = std::max<std::int64_t>(max_in, instance.InArcs(v).size());
  }
  const __int128 bound =
      static_cast<__int128>(max_in) * std::max(instance.num_vertices() - 1, 0);
  return bound * bound < (static_cast<__int128>(1) << 62);
}

}  // namespace

std::optional<std::vector<VertexId>> FamilyFOrder(
    const WeightedInstance& instance) {
  if (!instance.directed()) {
    throw UnsupportedError("family-f requires directed");
  }
  const int n = instance.num_vertices();
  std::vector<int> in_degree(n);
  std::vector<char> queued(n, 0);
  std::vector<char> removed(n, 0);
  std::vector<VertexId> stack;
  for (VertexId v = 0; v < n; ++v) {
    in_degree[v] = static_cast<int>(instance.InArcs(v).size());
    if (in_degree[v] <= 1) {
      queued[v] = 1;
      stack.push_back(v);
    }
  }
  // Removing a vertex never raises an in-degree, so any vertex that becomes
  // removable stays removable and the greedy choice cannot get stuck early.
  std::vector<VertexId> removal;
  removal.reserve(n);
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    removed[v] = 1;
    removal.push_back(v);
    for (const auto& arc : instance.OutArcs(v)) {
      VertexId x = arc.vertex;
      if (removed[x]) continue;
      if (--in_degree[x] <= 1 && !queued[x]) {
        queued[x] = 1;
        stack.push_back(x);
      }
    }
  }
  if (static_cast<int>(removal.size()) < n) return std::nullopt;
  std::reverse(removal.begin(), removal.end());
  return removal;
}

SolveReport SolveFamilyF(const WeightedInstance& instance) {
  if (!FamilyFOrder(instance)) {
    throw NotInFamilyError(
        "digraph has no order with in-degree at most one per prefix");
  }
  std::int64_t scale = 1;
  std::vector<std::int64_t> weights;
  std::vector<std::int64_t> thresholds;
  PeelResult peeled;
  if (ScaleToIntegers(instance, &scale, &weights, &thresholds)) {
    peeled = FitsSquares(instance)
                 ? Peel<std::int64_t, std::int64_t>(
                       instance, weights, std::move(thresholds), scale)
                 : Peel<std::int64_t, __int128>(
                       instance, weights, std::move(thresholds), scale);
  } else {
    std::vector<Rational> exact;
    for (const WeightedEdge& e : instance.edges()) exact.push_back(e.weight);
    peeled = Peel<Rational, __int128>(instance, exact, instance.thresholds(),
                                      1);
  }
  SolveReport report = internal::MakeReport(
      instance, std::move(peeled.monopoly), SolveMethod::kFamilyF, true);
  report.residual_kernel = peeled.kernel_size;
  return report;
}

}  // namespace wdynmo
