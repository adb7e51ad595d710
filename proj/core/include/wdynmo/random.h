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

#ifndef WDYNMO_RANDOM_H_
#define WDYNMO_RANDOM_H_

#include <cstdint>
#include <random>
#include <vector>

namespace wdynmo {

// Seedable mt19937_64 stream. Bounded draws use rejection sampling instead of
// std::uniform_int_distribution so that sequences are identical across
// standard library implementations. Stream `s` of seed `x` is independent of
// stream `s'` (seeded through std::seed_seq).
class Rng {
 public:
  static constexpr const char* kName = "mt19937_64";

  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t Next() { return engine_(); }
  // Uniform in [0, bound); bound must be positive.
  std::uint64_t Below(std::uint64_t bound);
  // Uniform in [lo, hi].
  std::int64_t Between(std::int64_t lo, std::int64_t hi);
  bool Chance(std::uint64_t numerator, std::uint64_t denominator) {
    return Below(denominator) < numerator;
  }

  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[Below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace wdynmo

#endif  // WDYNMO_RANDOM_H_
