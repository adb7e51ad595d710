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

#ifndef WDYNMO_SOLVER_UTIL_H_
#define WDYNMO_SOLVER_UTIL_H_

#include <vector>

#include "wdynmo/graph.h"
#include "wdynmo/solvers.h"

namespace wdynmo::internal {

// Sorts the seed set, runs the cascade and fills in a report. Throws
// std::logic_error if the set is not a dynamic monopoly.
SolveReport MakeReport(const WeightedInstance& instance,
                       std::vector<VertexId> monopoly, SolveMethod method,
                       bool certified_minimum);
SolveReport MakeReport(const MultiInstance& instance,
                       std::vector<VertexId> monopoly, SolveMethod method,
                       bool certified_minimum);

}  // namespace wdynmo::internal

#endif  // WDYNMO_SOLVER_UTIL_H_
