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

#include "solver_util.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace wdynmo {
namespace internal {
namespace {

template <typename Instance>
SolveReport Make(const Instance& instance, std::vector<VertexId> monopoly,
                 SolveMethod method, bool certified_minimum) {
  std::sort(monopoly.begin(), monopoly.end());
  monopoly.erase(std::unique(monopoly.begin(), monopoly.end()),
                 monopoly.end());
  SolveReport report;
  report.trace = Activate(instance, monopoly);
  if (!report.trace.AllActive()) {
    throw std::logic_error(std::string(MethodName(method)) +
                           " produced a set that is not a dynamic monopoly");
  }
  report.monopoly = std::move(monopoly);
  report.method = method;
  report.certified_minimum = certified_minimum;
  return report;
}

}  // namespace

SolveReport MakeReport(const WeightedInstance& instance,
                       std::vector<VertexId> monopoly, SolveMethod method,
                       bool certified_minimum) {
  return Make(instance, std::move(monopoly), method, certified_minimum);
}

SolveReport MakeReport(const MultiInstance& instance,
                       std::vector<VertexId> monopoly, SolveMethod method,
                       bool certified_minimum) {
  return Make(instance, std::move(monopoly), method, certified_minimum);
}

}  // namespace internal

std::string_view MethodName(SolveMethod method) {
  switch (method) {
    case SolveMethod::kBruteForce:
      return "exact";
    case SolveMethod::kHalfMonopoly:
      return "majority";
    case SolveMethod::kRandomized:
      return "random";
    case SolveMethod::kVertexCoverExact:
      return "vc-exact";
    case SolveMethod::kVertexCoverGreedy:
      return "vc-greedy";
    case SolveMethod::kFamilyF:
      return "family-f";
    case SolveMethod::kTree:
      return "tree";
  }
  return "unknown";
}

}  // namespace wdynmo
