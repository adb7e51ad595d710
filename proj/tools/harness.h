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

// The acceptance suite behind `wdynmo bench`: criteria 1-9, each run over
// seeded random instances, producing one CSV row per trial and one
// pass/fail verdict per criterion.

#ifndef WDYNMO_TOOLS_HARNESS_H_
#define WDYNMO_TOOLS_HARNESS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wdynmo::bench {

struct Row {
  std::string instance;
  int n = 0;
  std::string method;
  std::string size;
  std::string bound;
  std::optional<double> runtime_ms;
  std::uint64_t rng_seed = 0;
};

struct Verdict {
  int criterion = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Options {
  std::uint64_t rng_seed = 1;
  // Record wall-clock times in the rows. Off by default so that the CSV is
  // byte-identical across runs.
  bool timing = false;
};

struct Results {
  std::vector<Row> rows;
  std::vector<Verdict> verdicts;
};

inline constexpr int kNumCriteria = 9;

// Seed of trial `trial` of criterion `criterion`, derived from the master
// seed so that every row can be regenerated on its own.
std::uint64_t TrialSeed(std::uint64_t master, int criterion, int trial);

// Runs criterion 1..kNumCriteria, appending its rows to `results`.
void RunCriterion(int criterion, const Options& options, Results& results);
Results RunSuite(const Options& options);

void WriteCsv(std::ostream& out, const std::vector<Row>& rows);
// "criterion <k> <PASS|FAIL> <name>: <detail>"
std::string FormatVerdict(const Verdict& verdict);

}  // namespace wdynmo::bench

#endif  // WDYNMO_TOOLS_HARNESS_H_
