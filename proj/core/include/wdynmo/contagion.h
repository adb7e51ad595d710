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

// Deterministic default cascade on an interbank exposure network and its
// translation into a weighted directed activation instance.
//
//   c_0(j)     = c(j)
//   c_{k+1}(j) = max{ c_0(j) - sum over i with c_k(i) = 0 of (1-R_i) E_ji, 0 }
//
// where E_ji is the exposure of creditor j to debtor i and R_i the recovery
// rate on i's liabilities. j is insolvent once its capital reaches zero.

#ifndef WDYNMO_CONTAGION_H_
#define WDYNMO_CONTAGION_H_

#include <vector>

#include "wdynmo/graph.h"

namespace wdynmo {

struct Exposure {
  VertexId creditor;
  VertexId debtor;
  Rational amount;  // E_{creditor, debtor}
};

class BankingNetwork {
 public:
  BankingNetwork() = default;
  // Throws DomainError on self-exposure, duplicate (creditor, debtor) pairs,
  // bad ids, size mismatches or a recovery rate above 1.
  BankingNetwork(std::vector<Rational> capital, std::vector<Rational> recovery,
                 std::vector<Exposure> exposures);

  int size() const { return static_cast<int>(capital_.size()); }
  const std::vector<Rational>& capital() const { return capital_; }
  const std::vector<Rational>& recovery() const { return recovery_; }
  // Sorted by (creditor, debtor).
  const std::vector<Exposure>& exposures() const { return exposures_; }

 private:
  std::vector<Rational> capital_;
  std::vector<Rational> recovery_;
  std::vector<Exposure> exposures_;
};

struct CascadeResult {
  // capital_sequence[k][j] = c_k(j) for k = 0 .. n-1 (padded with the
  // fixpoint once it is reached).
  std::vector<std::vector<Rational>> capital_sequence;
  std::vector<VertexId> insolvent;  // {j : c_{n-1}(j) = 0}, ascending
  // First k with c_k(j) = 0, or -1.
  std::vector<int> default_step;
};

CascadeResult LossCascade(const BankingNetwork& network);

struct ActivationMapping {
  WeightedInstance instance;  // directed
  std::vector<VertexId> seed;  // initially insolvent institutions
};

// Arc i -> j of weight (1 - R_i) E_ji whenever that is positive;
// tau(j) = c(j); seed = {j : c(j) = 0}.
ActivationMapping ToActivationInstance(const BankingNetwork& network);

}  // namespace wdynmo

#endif  // WDYNMO_CONTAGION_H_
