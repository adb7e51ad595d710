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

#include "wdynmo/contagion.h"

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>

#include "wdynmo/errors.h"

namespace wdynmo {
namespace {

Rational LossGivenDefault(const Rational& recovery) {
  return Rational(1) - recovery;
}

}  // namespace

BankingNetwork::BankingNetwork(std::vector<Rational> capital,
                               std::vector<Rational> recovery,
                               std::vector<Exposure> exposures)
    : capital_(std::move(capital)),
      recovery_(std::move(recovery)),
      exposures_(std::move(exposures)) {
  const int n = size();
  if (recovery_.size() != capital_.size()) {
    throw DomainError("capital and recovery vectors differ in size");
  }
  for (int i = 0; i < n; ++i) {
    if (recovery_[i] > Rational(1)) {
      throw DomainError("recovery rate of institution " + std::to_string(i) +
                        " exceeds 1");
    }
  }
  for (const Exposure& e : exposures_) {
    if (e.creditor < 0 || e.creditor >= n || e.debtor < 0 || e.debtor >= n) {
      throw DomainError("exposure refers to an unknown institution");
    }
    if (e.creditor == e.debtor) {
      throw DomainError("institution " + std::to_string(e.creditor) +
                        " is exposed to itself");
    }
  }
  std::sort(exposures_.begin(), exposures_.end(),
            [](const Exposure& a, const Exposure& b) {
              return std::tie(a.creditor, a.debtor) <
                     std::tie(b.creditor, b.debtor);
            });
  for (std::size_t i = 1; i < exposures_.size(); ++i) {
    if (exposures_[i].creditor == exposures_[i - 1].creditor &&
        exposures_[i].debtor == exposures_[i - 1].debtor) {
      throw DomainError("duplicate exposure of " +
                        std::to_string(exposures_[i].creditor) + " to " +
                        std::to_string(exposures_[i].debtor));
    }
  }
}

CascadeResult LossCascade(const BankingNetwork& network) {
  const int n = network.size();
  // Losses a default of i inflicts, grouped by debtor i.
  std::vector<std::vector<std::pair<VertexId, Rational>>> losses_from(n);
  for (const Exposure& e : network.exposures()) {
    Rational loss = LossGivenDefault(network.recovery()[e.debtor]) * e.amount;
    if (!loss.is_zero()) losses_from[e.debtor].emplace_back(e.creditor, loss);
  }

  CascadeResult result;
  result.default_step.assign(n, -1);
  std::vector<Rational> accumulated(n);
  std::vector<Rational> capital = network.capital();
  std::vector<VertexId> newly_defaulted;
  for (VertexId j = 0; j < n; ++j) {
    if (capital[j].is_zero()) {
      result.default_step[j] = 0;
      newly_defaulted.push_back(j);
    }
  }
  result.capital_sequence.push_back(capital);

  // c_{k+1} only depends on {i : c_k(i) = 0}, which grows monotonically, so
  // losses can be accumulated incrementally from the newest defaults.
  for (int k = 0; k + 1 < n && !newly_defaulted.empty(); ++k) {
    std::vector<VertexId> hit;
    for (VertexId i : newly_defaulted) {
      for (const auto& [j, loss] : losses_from[i]) {
        if (result.default_step[j] != -1) continue;
        accumulated[j] += loss;
        hit.push_back(j);
      }
    }
    newly_defaulted.clear();
    std::sort(hit.begin(), hit.end());
    hit.erase(std::unique(hit.begin(), hit.end()), hit.end());
    for (VertexId j : hit) {
      capital[j] = SaturatingSub(network.capital()[j], accumulated[j]);
      if (capital[j].is_zero()) {
        result.default_step[j] = k + 1;
        newly_defaulted.push_back(j);
      }
    }
    result.capital_sequence.push_back(capital);
  }
  while (static_cast<int>(result.capital_sequence.size()) < n) {
    result.capital_sequence.push_back(capital);
  }
  for (VertexId j = 0; j < n; ++j) {
    if (capital[j].is_zero()) result.insolvent.push_back(j);
  }
  return result;
}

ActivationMapping ToActivationInstance(const BankingNetwork& network) {
  std::vector<WeightedEdge> arcs;
  for (const Exposure& e : network.exposures()) {
    Rational weight = LossGivenDefault(network.recovery()[e.debtor]) * e.amount;
    if (!weight.is_zero()) arcs.push_back({e.debtor, e.creditor, weight});
  }
  ActivationMapping mapping{
      WeightedInstance(network.size(), true, std::move(arcs),
                       network.capital()),
      {}};
  for (VertexId j = 0; j < network.size(); ++j) {
    if (network.capital()[j].is_zero()) mapping.seed.push_back(j);
  }
  return mapping;
}

}  // namespace wdynmo
