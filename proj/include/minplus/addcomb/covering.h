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

#ifndef MINPLUS_ADDCOMB_COVERING_H_
#define MINPLUS_ADDCOMB_COVERING_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "minplus/addcomb/integer_set.h"

namespace minplus {

// Shifts S with X ⊆ Y + S, chosen greedily by multiplicity. Ties prefer the
// shift closest to zero, then the smaller one.
std::vector<int64_t> GreedyCover(const IntegerSet& X, const IntegerSet& Y);

// max(1, ceil(|Y-X|/|Y| · ln|X|)).
int64_t GreedyCoverBound(const IntegerSet& X, const IntegerSet& Y);

struct BsgCover {
  std::vector<std::pair<IntegerSet, IntegerSet>> rectangles;
  // Pairs (x, y) with x+y ∈ Z outside every rectangle, sorted.
  std::vector<std::pair<int64_t, int64_t>> remainder;
};

// Greedy: up to L rectangles X_z × (z - X_z) with X_z = X ∩ (z - Y), each
// chosen to cover the most uncovered pairs. The remainder is exact; no size
// bound on the rectangle sumsets is certified.
BsgCover BsgCoverGreedy(const IntegerSet& X, const IntegerSet& Y,
                        const IntegerSet& Z, int L);

}  // namespace minplus

#endif  // MINPLUS_ADDCOMB_COVERING_H_
