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

#include "cli.h"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "harness.h"
#include "wdynmo/cascade.h"
#include "wdynmo/contagion.h"
#include "wdynmo/errors.h"
#include "wdynmo/io.h"
#include "wdynmo/reduction.h"
#include "wdynmo/solvers.h"
#include "wdynmo/tree_decomposition.h"

namespace wdynmo::cli {
namespace {

class Session {
 public:
  Session(std::istream& in, std::ostream& out, std::ostream& err)
      : in_(in), out_(out), err_(err) {}

  std::string ReadText(const std::string& path) {
    if (path == "-") {
      return std::string(std::istreambuf_iterator<char>(in_), {});
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw ParseError(path, "cannot open file");
    return std::string(std::istreambuf_iterator<char>(file), {});
  }

  LabeledInstance ReadInstance(const std::string& path) {
    try {
      return ParseInstance(ReadText(path));
    } catch (const ParseError& e) {
      throw ParseError(path, e.what());
    }
  }

  // Writes to `path`, or to stdout when it is empty or "-".
  void Emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
      out_ << text;
      return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text)) {
      throw ParseError(path, "cannot write file");
    }
  }

  std::ostream& out() { return out_; }
  std::ostream& err() { return err_; }

 private:
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

// Comma-separated labels; the empty string is the empty set.
std::vector<VertexId> ParseSeedSet(const std::string& text,
                                   const LabelMap& labels) {
  std::vector<VertexId> seed;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    auto begin = item.find_first_not_of(" \t");
    if (begin == std::string::npos) continue;
    auto end = item.find_last_not_of(" \t");
    seed.push_back(labels.IdOf(item.substr(begin, end - begin + 1)));
  }
  return seed;
}

std::string ApproxText(const Rational& value, bool approx) {
  if (!approx) return value.ToString();
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value.ToDouble());
  return buffer;
}

// ceil(n/2) fails with isolated vertices: each one must be seeded.
void RequireMajorityThresholds(const LabeledInstance& input) {
  const WeightedInstance& g = input.instance;
  if (g.directed()) {
    throw UnsupportedError("majority bound requires an undirected graph");
  }
  if (g.thresholds() != WithStrictMajorityThresholds(g).thresholds()) {
    throw PreconditionError("thresholds are not strict majority");
  }
  if (g.num_vertices() < 2) return;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (IncidentWeight(g, v).is_zero()) {
      throw PreconditionError("vertex '" + input.labels.Label(v) +
                              "' has no neighbors");
    }
  }
}

void RequireCoverable(const LabeledInstance& input) {
  const WeightedInstance& g = input.instance;
  if (g.directed()) {
    throw UnsupportedError("vertex-cover bound requires an undirected graph");
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.threshold(v) > IncidentWeight(g, v)) {
      throw PreconditionError("vertex '" + input.labels.Label(v) +
                              "' has threshold above its incident weight");
    }
  }
}

struct Arguments {
  std::string instance;
  std::string seed_set;
  std::string report;
  std::string method;
  std::uint64_t rng_seed = 0;
  bool rng_seed_given = false;
  std::string vc_mode = "exact";
  std::string to;
  std::string out;
  std::string td;
  std::string td_out;
  std::string kind;
  bool approx = false;
  int max_neighbors = kDefaultNeighborLimit;
  bool timing = false;
  std::uint64_t bench_seed = 1;
  std::vector<int> criteria;
};

int Simulate(Session& s, const Arguments& a) {
  const LabeledInstance input = s.ReadInstance(a.instance);
  const ActivationTrace trace =
      Activate(input.instance, ParseSeedSet(a.seed_set, input.labels));
  s.out() << TraceToText(trace, input.labels);
  return kOk;
}

int Verify(Session& s, const Arguments& a) {
  const LabeledInstance input = s.ReadInstance(a.instance);
  std::vector<VertexId> seed;
  if (!a.report.empty()) {
    for (const std::string& label : ParseReportMonopoly(s.ReadText(a.report))) {
      seed.push_back(input.labels.IdOf(label));
    }
  } else {
    seed = ParseSeedSet(a.seed_set, input.labels);
  }
  s.out() << (IsDynamicMonopoly(input.instance, seed) ? "true" : "false")
          << '\n';
  return kOk;
}

int Solve(Session& s, const Arguments& a) {
  const LabeledInstance input = s.ReadInstance(a.instance);
  const WeightedInstance& g = input.instance;
  SolveReport report;
  if (a.method == "exact") {
    report = BruteForceMinDynmo(g);
  } else if (a.method == "majority") {
    report = HalfMonopoly(g);
  } else if (a.method == "random") {
    report = RandomizedMonopoly(g, a.rng_seed);
  } else if (a.method == "vc") {
    report = VertexCoverMonopoly(g, a.vc_mode == "greedy"
                                        ? VertexCoverMode::kGreedy
                                        : VertexCoverMode::kExact);
  } else if (a.method == "family-f") {
    report = SolveFamilyF(g);
  } else {
    report = SolveTree(g);
  }
  s.out() << SolveReportToJson(report, input.labels);
  return kOk;
}

int Reduce(Session& s, const Arguments& a) {
  const LabeledInstance input = s.ReadInstance(a.instance);
  const WeightedInstance& g = input.instance;
  if (a.to == "multigraph") {
    s.Emit(a.out, MultigraphToJson(ToMultigraph(g), input.labels));
  } else if (a.to == "majority") {
    s.Emit(a.out,
           InstanceToJson({WithStrictMajorityThresholds(g), input.labels}));
  } else {
    const Gadget gadget = BuildGadget(g);
    if (!a.td_out.empty()) {
      TreeDecomposition td;
      if (!a.td.empty()) {
        std::istringstream text(s.ReadText(a.td));
        int n = 0;
        td = ReadTreeDecomposition(text, &n);
        if (n != g.num_vertices()) {
          throw DomainError("decomposition is for " + std::to_string(n) +
                            " vertices, instance has " +
                            std::to_string(g.num_vertices()));
        }
      } else {
        td = MinFillDecomposition(g);
      }
      std::ostringstream text;
      WriteTreeDecomposition(text, TransformTreeDecomposition(td, g),
                             gadget.graph.num_vertices());
      s.Emit(a.td_out, text.str());
    }
    s.Emit(a.out, GadgetToJson(gadget, input.labels));
  }
  return kOk;
}

int Bound(Session& s, const Arguments& a) {
  const LabeledInstance input = s.ReadInstance(a.instance);
  const WeightedInstance& g = input.instance;
  Rational value;
  if (a.kind == "expected") {
    value = ExpectedBound(g, a.max_neighbors);
  } else if (a.kind == "majority") {
    RequireMajorityThresholds(input);
    value = Rational((g.num_vertices() + 1) / 2);
  } else {
    RequireCoverable(input);
    value = Rational(static_cast<std::int64_t>(MinimumVertexCover(g).size()));
  }
  s.out() << ApproxText(value, a.approx) << '\n';
  return kOk;
}

int ContagionRun(Session& s, const Arguments& a) {
  const LabeledNetwork input = ParseBankingNetwork(s.ReadText(a.instance));
  s.out() << CascadeResultToJson(LossCascade(input.network), input.labels);
  return kOk;
}

int ContagionMap(Session& s, const Arguments& a) {
  const LabeledNetwork input = ParseBankingNetwork(s.ReadText(a.instance));
  s.Emit(a.out, ActivationMappingToJson(ToActivationInstance(input.network),
                                        input.labels));
  return kOk;
}

int Bench(Session& s, const Arguments& a) {
  bench::Options options;
  options.rng_seed = a.bench_seed;
  options.timing = a.timing;
  bench::Results results;
  if (a.criteria.empty()) {
    results = bench::RunSuite(options);
  } else {
    for (int c : a.criteria) bench::RunCriterion(c, options, results);
  }
  std::ostringstream csv;
  bench::WriteCsv(csv, results.rows);
  s.Emit(a.out, csv.str());
  for (const bench::Verdict& verdict : results.verdicts) {
    s.err() << bench::FormatVerdict(verdict) << '\n';
  }
  return kOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app("Weighted threshold activation and dynamic monopolies",
               "wdynmo");
  app.require_subcommand(1);
  Arguments a;

  auto instance_arg = [&](CLI::App* sub, const char* what) {
    sub->add_option("instance", a.instance, what)->required();
  };

  CLI::App* simulate =
      app.add_subcommand("simulate", "Print the activation phases of a seed");
  instance_arg(simulate, "Instance file (JSON or edge list, '-' for stdin)");
  simulate->add_option("--seed-set", a.seed_set, "Comma-separated vertex ids")
      ->required();

  CLI::App* verify =
      app.add_subcommand("verify", "Check whether a seed is a monopoly");
  instance_arg(verify, "Instance file");
  auto* verify_seed = verify->add_option("--seed-set", a.seed_set,
                                         "Comma-separated vertex ids");
  auto* verify_report =
      verify->add_option("--report", a.report, "Report written by solve");
  verify_seed->excludes(verify_report);

  CLI::App* solve = app.add_subcommand("solve", "Find a dynamic monopoly");
  instance_arg(solve, "Instance file");
  solve->add_option("--method", a.method, "Construction or solver")
      ->required()
      ->check(CLI::IsMember(
          {"exact", "majority", "random", "vc", "family-f", "tree"}));
  solve->add_option("--rng-seed", a.rng_seed, "Seed for --method random");
  solve->add_option("--vc-mode", a.vc_mode, "Vertex cover: exact or greedy")
      ->check(CLI::IsMember({"exact", "greedy"}));

  CLI::App* reduce =
      app.add_subcommand("reduce", "Write a reduced, equivalent instance");
  instance_arg(reduce, "Instance file");
  reduce->add_option("--to", a.to, "multigraph, gadget or majority")
      ->required()
      ->check(CLI::IsMember({"multigraph", "gadget", "majority"}));
  reduce->add_option("--out", a.out, "Output file (default stdout)");
  auto* td = reduce->add_option("--td", a.td,
                                "Tree decomposition of the input (.td)");
  auto* td_out = reduce->add_option(
      "--td-out", a.td_out, "Write a decomposition of the gadget graph");
  td->needs(td_out);

  CLI::App* bound = app.add_subcommand("bound", "Print an upper bound");
  instance_arg(bound, "Instance file");
  bound->add_option("--kind", a.kind, "expected, majority or vc")
      ->required()
      ->check(CLI::IsMember({"expected", "majority", "vc"}));
  bound->add_flag("--approx", a.approx, "Print a decimal approximation");
  bound->add_option("--max-neighbors", a.max_neighbors,
                    "Neighborhood size limit for --kind expected")
      ->check(CLI::Range(1, 62));

  CLI::App* contagion =
      app.add_subcommand("contagion", "Banking default cascades");
  contagion->require_subcommand(1);
  CLI::App* contagion_run =
      contagion->add_subcommand("run", "Print the loss cascade");
  instance_arg(contagion_run, "Banking network file");
  CLI::App* contagion_map = contagion->add_subcommand(
      "map", "Write the equivalent activation instance and seed");
  instance_arg(contagion_map, "Banking network file");
  contagion_map->add_option("--out", a.out, "Output file (default stdout)");

  CLI::App* bench =
      app.add_subcommand("bench", "Run the acceptance suite, print CSV");
  bench->add_option("--rng-seed", a.bench_seed, "Master seed");
  bench->add_option("--out", a.out, "CSV file (default stdout)");
  bench->add_flag("--timing", a.timing, "Fill the runtime_ms column");
  bench->add_option("--criteria", a.criteria, "Subset of criteria 1-9")
      ->delimiter(',')
      ->check(CLI::Range(1, bench::kNumCriteria));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (*verify && verify_seed->count() == 0 && verify_report->count() == 0) {
    err << "verify: one of --seed-set or --report is required\n";
    return kUsage;
  }

  Session session(in, out, err);
  try {
    if (*simulate) return Simulate(session, a);
    if (*verify) return Verify(session, a);
    if (*solve) return Solve(session, a);
    if (*reduce) return Reduce(session, a);
    if (*bound) return Bound(session, a);
    if (*contagion_run) return ContagionRun(session, a);
    if (*contagion_map) return ContagionMap(session, a);
    if (*bench) return Bench(session, a);
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const DomainError& e) {
    err << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << '\n';
    return kPrecondition;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << '\n';
    return kPrecondition;
  } catch (const ResourceError& e) {
    err << "resource: " << e.what() << '\n';
    return kResource;
  }
  return kUsage;
}

}  // namespace wdynmo::cli
