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

#include "minplus/core/random.h"

namespace minplus {

namespace {
uint64_t SplitMix(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
}  // namespace

uint64_t DeriveSeed(uint64_t seed, uint64_t tag) {
  return SplitMix(SplitMix(seed) ^ SplitMix(tag + 0x632be59bd9b4e019ULL));
}

uint64_t DeriveSeed(uint64_t seed, std::string_view tag) {
  uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return DeriveSeed(seed, h);
}

std::vector<int> Rng::Sample(int n, double rate) {
  std::vector<int> out;
  for (int k = 0; k < n; ++k)
    if (Bernoulli(rate)) out.push_back(k);
  return out;
}

}  // namespace minplus
