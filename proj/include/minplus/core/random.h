// Copyright 2026 The minplus Authors
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

#ifndef MINPLUS_CORE_RANDOM_H_
#define MINPLUS_CORE_RANDOM_H_

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace minplus {

// Independent stream for a named sub-task of a seeded call.
uint64_t DeriveSeed(uint64_t seed, uint64_t tag);
uint64_t DeriveSeed(uint64_t seed, std::string_view tag);

// mt19937_64 with portable helpers; std distributions are implementation
// defined, which would break byte-determinism across toolchains.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }
  double Uniform01() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }
  bool Bernoulli(double p) { return p >= 1.0 || Uniform01() < p; }
  // Uniform in [0, n).
  int64_t Below(int64_t n) {
    return static_cast<int64_t>(Next() % static_cast<uint64_t>(n));
  }
  int64_t Between(int64_t lo, int64_t hi) { return lo + Below(hi - lo + 1); }
  std::vector<int> Sample(int n, double rate);

 private:
  std::mt19937_64 engine_;
};

}  // namespace minplus

#endif  // MINPLUS_CORE_RANDOM_H_
