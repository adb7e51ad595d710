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

#include <cstdlib>
#include <numeric>
#include <string>
#include <utility>

#include "solver_util.h"
#include "wdynmo/errors.h"
#include "wdynmo/solvers.h"

namespace wdynmo {
namespace {

// Advances `combo` (ascending indices into [0, n)) to the next k-subset in
// lexicographic order. Returns false after the last one.
bool NextCombination(std::vector<VertexId>& combo, int n) {
  const int k = static_cast<int>(combo.size());
  int i = k - 1;
  while (i >= 0 && combo[i] == n - k + i) --i;
  if (i < 0) return false;
  ++combo[i];
  for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
  return true;
}

}  // namespace

int DefaultBruteForceLimit() {
  if (const char* env = std::getenv("WDYNMO_BRUTE_FORCE_LIMIT")) {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0 && value <= 30) {
      return static_cast<int>(value);
    }
  }
  return 16;
}

SolveReport BruteForceMinDynmo(const WeightedInstance& instance, int limit) {
  const int n = instance.num_vertices();
  if (n > limit) {
    throw ResourceError("brute force is limited to " + std::to_string(limit) +
                        " vertices; instance has " + std::to_string(n));
  }
  for (int k = 0; k <= n; ++k) {
    std::vector<VertexId> combo(k);
    std::iota(combo.begin(), combo.end(), 0);
    do {
      if (IsDynamicMonopoly(instance, combo)) {
        return internal::MakeReport(instance, std::move(combo),
                                    SolveMethod::kBruteForce, true);
      }
    } while (NextCombination(combo, n));
  }
  throw std::logic_error("the full vertex set is always a dynamic monopoly");
}

SolveReport BruteForceMinDynmo(const WeightedInstance& instance) {
  return BruteForceMinDynmo(instance, DefaultBruteForceLimit());
}

SolveReport BruteForceMinDynmo(const MultiInstance& instance) {
  SolveReport report = BruteForceMinDynmo(AsWeighted(instance));
  report.trace = Activate(instance, report.monopoly);
  return report;
}

}  // namespace wdynmo
