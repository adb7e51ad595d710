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

#include "harness.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "wdynmo/cascade.h"
#include "wdynmo/contagion.h"
#include "wdynmo/generators.h"
#include "wdynmo/random.h"
#include "wdynmo/reduction.h"
#include "wdynmo/solvers.h"
#include "wdynmo/tree_decomposition.h"

namespace wdynmo::bench {
namespace {

using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

std::string TrialName(int criterion, int trial) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "c%d-%04d", criterion, trial);
  return buffer;
}

std::string Str(std::int64_t x) { return std::to_string(x); }

// Records the rows and the verdict of one criterion.
class Recorder {
 public:
  Recorder(int criterion, std::string name, const Options& options,
           Results& results)
      : criterion_(criterion),
        name_(std::move(name)),
        options_(options),
        results_(results) {}

  std::uint64_t Seed(int trial) const {
    return TrialSeed(options_.rng_seed, criterion_, trial);
  }

  void Add(int trial, int n, std::string method, std::string size,
           std::string bound, std::optional<double> runtime_ms = {}) {
    Row row{TrialName(criterion_, trial), n, std::move(method),
            std::move(size), std::move(bound), std::nullopt, Seed(trial)};
    // Without an explicit time, a row covers the work since the last row.
    if (options_.timing) {
      row.runtime_ms = runtime_ms ? runtime_ms : MillisSince(last_);
    }
    last_ = Clock::now();
    results_.rows.push_back(std::move(row));
  }

  void AddNamed(std::string instance, std::uint64_t seed, int n,
                std::string method, std::string size,
                std::optional<double> runtime_ms) {
    Row row{std::move(instance), n, std::move(method), std::move(size), "-",
            std::nullopt, seed};
    if (options_.timing) row.runtime_ms = runtime_ms;
    last_ = Clock::now();
    results_.rows.push_back(std::move(row));
  }

  void Finish(bool passed, std::string detail) {
    results_.verdicts.push_back(
        {criterion_, name_, passed, std::move(detail)});
  }

 private:
  int criterion_;
  std::string name_;
  const Options& options_;
  Results& results_;
  Clock::time_point last_ = Clock::now();
};

// ---------------------------------------------------------------------------
// Independent oracles.

// beta(G) by scanning every vertex subset.
int EnumeratedVertexCoverNumber(const WeightedInstance& graph) {
  const int n = graph.num_vertices();
  int best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size >= best) continue;
    bool covers = std::all_of(
        graph.edges().begin(), graph.edges().end(), [&](const auto& e) {
          return ((mask >> e.from) & 1u) || ((mask >> e.to) & 1u);
        });
    if (covers) best = size;
  }
  return best;
}

// sum over v of min(tau(v), d(v) + 1) / (d(v) + 1) for unit-weight graphs
// with integer thresholds.
Rational SimpleGraphExpectation(const WeightedInstance& graph) {
  Rational total;
  for (VertexId v = 0; v < graph.num_vertices(); ++v) {
    std::int64_t d = static_cast<std::int64_t>(graph.InArcs(v).size());
    std::int64_t tau = graph.threshold(v).Ceil();
    total += Rational(std::min(tau, d + 1), d + 1);
  }
  return total;
}

// ---------------------------------------------------------------------------
// Scaling measurements.

// Larger than any cache level, so each timed run starts cold whatever the
// instance size.
constexpr std::size_t kEvictBytes = std::size_t{512} << 20;
volatile unsigned evict_sink = 0;

void EvictCaches() {
  static std::vector<unsigned char> buffer(kEvictBytes);
  unsigned sum = 0;
  for (std::size_t i = 0; i < buffer.size(); i += 64) {
    buffer[i] = static_cast<unsigned char>(buffer[i] + 1);
    sum += buffer[i];
  }
  evict_sink = sum;
}

double LogLogSlope(const std::vector<std::pair<double, double>>& points) {
  double mx = 0, my = 0;
  for (auto [x, y] : points) {
    mx += std::log(x);
    my += std::log(y);
  }
  mx /= points.size();
  my /= points.size();
  double num = 0, den = 0;
  for (auto [x, y] : points) {
    num += (std::log(x) - mx) * (std::log(y) - my);
    den += (std::log(x) - mx) * (std::log(x) - mx);
  }
  return num / den;
}

constexpr int kScalingSizes[] = {1000, 10000, 100000};
constexpr int kScalingRepeats = 7;
constexpr double kMaxSlope = 1.15;

// Median cold-cache runtime per size; returns the fitted slope.
template <typename Make, typename Solve>
double MeasureScaling(Recorder& recorder, int criterion, const char* method,
                      Make make, Solve solve) {
  std::vector<std::pair<double, double>> points;
  int index = 0;
  for (int n : kScalingSizes) {
    std::vector<double> times;
    double total_size = 0;
    for (int r = 0; r < kScalingRepeats; ++r) {
      std::uint64_t seed = recorder.Seed(100000 + index++);
      Rng rng(seed);
      const WeightedInstance instance = make(rng, n);
      total_size += n + static_cast<double>(instance.edges().size());
      EvictCaches();
      Clock::time_point start = Clock::now();
      SolveReport report = solve(instance);
      double ms = MillisSince(start);
      times.push_back(ms);
      recorder.AddNamed("c" + Str(criterion) + "-scale-" + Str(n) + "-" +
                            Str(r),
                        seed, n, method, Str(report.monopoly.size()), ms);
    }
    std::nth_element(times.begin(), times.begin() + kScalingRepeats / 2,
                     times.end());
    points.emplace_back(total_size / kScalingRepeats,
                        times[kScalingRepeats / 2]);
  }
  return LogLogSlope(points);
}

std::string SlopeText(double slope) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "log-log slope %.3f (limit %.2f)",
                slope, kMaxSlope);
  return buffer;
}

// ---------------------------------------------------------------------------
// Criteria.

void HalfBound(Recorder& recorder) {
  constexpr int kTrials = 1000;
  int violations = 0;
  Clock::time_point start = Clock::now();
  for (int t = 0; t < kTrials; ++t) {
    Rng rng(recorder.Seed(t));
    int n = static_cast<int>(rng.Between(1, 200));
    int percent = static_cast<int>(rng.Between(1, 30));
    MultiInstance g = RandomMajorityMultigraph(rng, n, percent, 5, true);
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 0);
    rng.Shuffle(order);
    SolveReport report = HalfMonopoly(g, std::span<const VertexId>(order));
    const int bound = (n + 1) / 2;
    const int size = static_cast<int>(report.monopoly.size());
    if (!IsDynamicMonopoly(g, report.monopoly) || size > bound) ++violations;
    recorder.Add(t, n, "majority", Str(size), Str(bound));
  }
  const double seconds = MillisSince(start) / 1000;
  char detail[128];
  std::snprintf(detail, sizeof(detail),
                "%d violations in %d multigraphs, %.1f s (limit 60 s)",
                violations, kTrials, seconds);
  recorder.Finish(violations == 0 && seconds < 60, detail);
}

void MultigraphIff(Recorder& recorder) {
  constexpr int kTrials = 200;
  int disagreements = 0;
  for (int t = 0; t < kTrials; ++t) {
    Rng rng(recorder.Seed(t));
    RandomInstanceOptions options;
    options.max_vertices = 8;
    options.directed = rng.Chance(1, 2);
    options.edge_percent = static_cast<int>(rng.Between(10, 70));
    options.max_denominator = 4;
    const WeightedInstance g = RandomWeightedInstance(rng, options);
    const MultiInstance m = ToMultigraph(g).multigraph;
    const int n = g.num_vertices();
    int monopolies = 0;
    std::vector<VertexId> seed;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      seed.clear();
      for (VertexId v = 0; v < n; ++v) {
        if ((mask >> v) & 1u) seed.push_back(v);
      }
      const ActivationTrace weighted = Activate(g, seed);
      const ActivationTrace multi = Activate(m, seed);
      if (!(weighted == multi)) ++disagreements;
      if (weighted.AllActive()) ++monopolies;
    }
    recorder.Add(t, n, "multigraph", Str(monopolies), Str(1u << n));
  }
  recorder.Finish(disagreements == 0,
                  Str(disagreements) + " disagreements over all seeds of " +
                      Str(kTrials) + " instances");
}

void GadgetEquivalence(Recorder& recorder) {
  constexpr int kTrials = 100;
  constexpr int kMaxGadget = 14;
  int mismatches = 0;
  for (int t = 0; t < kTrials; ++t) {
    Rng rng(recorder.Seed(t));
    RandomInstanceOptions options;
    options.min_vertices = 2;
    options.max_vertices = 6;
    options.edge_percent = 50;
    options.max_denominator = 2;
    options.max_numerator = 3;
    WeightedInstance g;
    Gadget h;
    do {
      g = RandomWeightedInstance(rng, options);
      h = BuildGadget(g);
    } while (h.graph.num_vertices() > kMaxGadget);
    const auto dyn_g = BruteForceMinDynmo(g, kMaxGadget).monopoly.size();
    const auto dyn_h = BruteForceMinDynmo(h.graph, kMaxGadget).monopoly.size();
    if (dyn_g != dyn_h) ++mismatches;
    recorder.Add(t, g.num_vertices(), "gadget", Str(dyn_g), Str(dyn_h));
  }
  recorder.Finish(mismatches == 0, Str(mismatches) + " mismatches in " +
                                       Str(kTrials) + " instances");
}

void WidthBound(Recorder& recorder) {
  constexpr int kTrials = 100;
  int violations = 0;
  for (int t = 0; t < kTrials; ++t) {
    Rng rng(recorder.Seed(t));
    RandomInstanceOptions options;
    options.max_vertices = 10;
    options.edge_percent = static_cast<int>(rng.Between(10, 60));
    options.max_denominator = 3;
    options.max_numerator = 3;
    const WeightedInstance g = RandomWeightedInstance(rng, options);
    std::vector<VertexId> order(g.num_vertices());
    std::iota(order.begin(), order.end(), 0);
    rng.Shuffle(order);
    const TreeDecomposition td = EliminationDecomposition(g, order);
    const std::int64_t bound = WeightedTreewidth(g, td.width());
    const TreeDecomposition out = TransformTreeDecomposition(td, g);
    bool valid = false;
    try {
      valid = ValidateTreeDecomposition(out, BuildGadget(g).graph);
    } catch (const std::exception&) {
      valid = false;
    }
    if (!valid || out.width() > bound) ++violations;
    recorder.Add(t, g.num_vertices(), "td-transform", Str(out.width()),
                 Str(bound));
  }
  recorder.Finish(violations == 0, Str(violations) + " violations in " +
                                       Str(kTrials) + " decompositions");
}

void ExpectedBoundCheck(Recorder& recorder) {
  constexpr int kTrials = 50;
  constexpr int kPermutations = 10000;
  int outside = 0;
  int formula_mismatches = 0;
  double worst = 0;
  for (int t = 0; t < kTrials; ++t) {
    Rng rng(recorder.Seed(t));
    const int n = static_cast<int>(rng.Between(1, 12));
    const WeightedInstance g =
        RandomSimpleGraph(rng, n, static_cast<int>(rng.Between(10, 70)));
    const Rational expected = ExpectedBound(g);
    if (expected != SimpleGraphExpectation(g)) ++formula_mismatches;

    std::vector<VertexId> permutation(n);
    std::iota(permutation.begin(), permutation.end(), 0);
    std::int64_t sum = 0;
    std::int64_t sum_of_squares = 0;
    for (int k = 0; k < kPermutations; ++k) {
      rng.Shuffle(permutation);
      auto size =
          static_cast<std::int64_t>(PermutationMonopoly(g, permutation).size());
      sum += size;
      sum_of_squares += size * size;
    }
    const double mean = static_cast<double>(sum) / kPermutations;
    const double variance =
        (static_cast<double>(sum_of_squares) - mean * sum) /
        (kPermutations - 1);
    const double standard_error = std::sqrt(variance / kPermutations);
    const double gap = std::abs(mean - expected.ToDouble());
    if (gap > 3 * standard_error + 1e-12) ++outside;
    if (standard_error > 0) worst = std::max(worst, gap / standard_error);
    recorder.Add(t, n, "random", Rational(sum, kPermutations).ToString(),
                 expected.ToString());
  }
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "%d of %d means beyond 3 SE (worst %.2f SE), %d formula "
                "mismatches",
                outside, kTrials, worst, formula_mismatches);
  recorder.Finish(outside == 0 && formula_mismatches == 0, detail);
}

void VertexCoverBound(Recorder& recorder) {
  constexpr int kTrials = 100;
  int failures = 0;
  for (int t = 0; t < kTrials; ++t) {
    Rng rng(recorder.Seed(t));
    RandomInstanceOptions options;
    options.max_vertices = 12;
    options.edge_percent = static_cast<int>(rng.Between(10, 60));
    const WeightedInstance g = RandomCoverableInstance(rng, options);
    const SolveReport report =
        VertexCoverMonopoly(g, VertexCoverMode::kExact);
    const int beta = EnumeratedVertexCoverNumber(g);
    const int size = static_cast<int>(report.monopoly.size());
    const int optimum =
        static_cast<int>(BruteForceMinDynmo(g, 12).monopoly.size());
    if (!IsDynamicMonopoly(g, report.monopoly) || size != beta ||
        optimum > beta) {
      ++failures;
    }
    recorder.Add(t, g.num_vertices(), "vc-exact", Str(size), Str(beta));
    recorder.Add(t, g.num_vertices(), "exact", Str(optimum), Str(beta));
  }
  recorder.Finish(failures == 0, Str(failures) + " failures in " +
                                     Str(kTrials) + " instances");
}

void FamilyF(Recorder& recorder) {
  constexpr int kTrials = 300;
  int gaps = 0;
  int stalled = 0;
  for (int t = 0; t < kTrials; ++t) {
    Rng rng(recorder.Seed(t));
    const int n = static_cast<int>(rng.Between(1, 12));
    const WeightedInstance g = RandomFamilyF(rng, n, 3, 6, 4);
    const SolveReport report = SolveFamilyF(g);
    const auto optimum = BruteForceMinDynmo(g, 12).monopoly.size();
    if (report.monopoly.size() != optimum) ++gaps;
    if (report.residual_kernel > 0) ++stalled;
    recorder.Add(t, n, "family-f", Str(report.monopoly.size()),
                 Str(optimum));
  }
  const double slope = MeasureScaling(
      recorder, 7, "family-f",
      [](Rng& rng, int n) { return RandomFamilyF(rng, n, 2, 6, 4); },
      [](const WeightedInstance& g) { return SolveFamilyF(g); });
  recorder.Finish(gaps == 0 && slope <= kMaxSlope,
                  Str(gaps) + " gaps in " + Str(kTrials) + " digraphs (" +
                      Str(stalled) + " needed kernel search), " +
                      SlopeText(slope));
}

void Trees(Recorder& recorder) {
  constexpr int kTrials = 300;
  int gaps = 0;
  for (int t = 0; t < kTrials; ++t) {
    Rng rng(recorder.Seed(t));
    const int n = static_cast<int>(rng.Between(1, 14));
    const WeightedInstance g = RandomWeightedTree(rng, n, 6, 4);
    const SolveReport report = SolveTree(g);
    const auto optimum = BruteForceMinDynmo(g, 14).monopoly.size();
    if (report.monopoly.size() != optimum) ++gaps;
    recorder.Add(t, n, "tree", Str(report.monopoly.size()), Str(optimum));
  }
  const double slope = MeasureScaling(
      recorder, 8, "tree",
      [](Rng& rng, int n) { return RandomWeightedTree(rng, n, 6, 4); },
      [](const WeightedInstance& g) { return SolveTree(g); });
  recorder.Finish(gaps == 0 && slope <= kMaxSlope,
                  Str(gaps) + " gaps in " + Str(kTrials) + " trees, " +
                      SlopeText(slope));
}

void Contagion(Recorder& recorder) {
  constexpr int kTrials = 300;
  int disagreements = 0;
  for (int t = 0; t < kTrials; ++t) {
    Rng rng(recorder.Seed(t));
    const int n = static_cast<int>(rng.Between(1, 10));
    const BankingNetwork network =
        RandomBankingNetwork(rng, n, static_cast<int>(rng.Between(10, 60)));
    const CascadeResult cascade = LossCascade(network);
    const ActivationMapping mapping = ToActivationInstance(network);
    const ActivationTrace trace = Activate(mapping.instance, mapping.seed);
    bool agree = cascade.insolvent == trace.Fixpoint();
    for (VertexId j = 0; j < n; ++j) {
      if (cascade.default_step[j] != trace.PhaseOf(j)) agree = false;
    }
    if (!agree) ++disagreements;
    recorder.Add(t, n, "contagion", Str(cascade.insolvent.size()),
                 Str(trace.num_active()));
  }
  recorder.Finish(disagreements == 0, Str(disagreements) +
                                           " disagreements in " +
                                           Str(kTrials) + " networks");
}

}  // namespace

std::uint64_t TrialSeed(std::uint64_t master, int criterion, int trial) {
  return Rng(master, static_cast<std::uint64_t>(criterion) << 32 |
                         static_cast<std::uint32_t>(trial))
      .Next();
}

void RunCriterion(int criterion, const Options& options, Results& results) {
  if (criterion < 1 || criterion > kNumCriteria) {
    throw std::out_of_range("no criterion " + std::to_string(criterion));
  }
  static constexpr const char* kNames[] = {
      "half bound",           "multigraph reduction", "gadget equivalence",
      "width bound",          "expected bound",       "vertex-cover bound",
      "family-F solver",      "weighted trees",       "contagion equivalence",
  };
  static constexpr void (*kRun[])(Recorder&) = {
      HalfBound,          MultigraphIff,    GadgetEquivalence,
      WidthBound,         ExpectedBoundCheck, VertexCoverBound,
      FamilyF,            Trees,            Contagion,
  };
  Recorder recorder(criterion, kNames[criterion - 1], options, results);
  kRun[criterion - 1](recorder);
}

Results RunSuite(const Options& options) {
  Results results;
  for (int c = 1; c <= kNumCriteria; ++c) RunCriterion(c, options, results);
  return results;
}

void WriteCsv(std::ostream& out, const std::vector<Row>& rows) {
  out << "instance,n,method,size,bound,runtime_ms,rng_seed\n";
  for (const Row& row : rows) {
    out << row.instance << ',' << row.n << ',' << row.method << ','
        << row.size << ',' << row.bound << ',';
    if (row.runtime_ms) {
      char buffer[32];
      std::snprintf(buffer, sizeof(buffer), "%.3f", *row.runtime_ms);
      out << buffer;
    } else {
      out << '-';
    }
    out << ',' << row.rng_seed << '\n';
  }
}

std::string FormatVerdict(const Verdict& verdict) {
  std::ostringstream out;
  out << "criterion " << verdict.criterion << ' '
      << (verdict.passed ? "PASS" : "FAIL") << ' ' << verdict.name << ": "
      << verdict.detail;
  return out.str();
}

}  // namespace wdynmo::bench
