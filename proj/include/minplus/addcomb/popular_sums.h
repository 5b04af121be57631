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

#ifndef MINPLUS_ADDCOMB_POPULAR_SUMS_H_
#define MINPLUS_ADDCOMB_POPULAR_SUMS_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "minplus/addcomb/integer_set.h"

namespace minplus {

// One side of the decomposition. parts[g][i] ⊆ patterns[g] + shifts[g][i];
// rest[i] is what remains of the i-th set.
struct PopularSumSide {
  std::vector<IntegerSet> patterns;
  std::vector<std::vector<std::optional<int64_t>>> shifts;
  std::vector<std::vector<IntegerSet>> parts;
  std::vector<IntegerSet> rest;
  int iterations = 0;
};

struct PopularSumDecomposition {
  int d = 0;
  int64_t p = 1;
  PopularSumSide x;
  PopularSumSide y;
};

// Peels off shifted copies of a common pattern until at most n·m/p pairs
// (X_i*, Y_j) have a (2d/p)-popular sum; symmetric for Y. Popular sums are
// computed exactly. Throws std::domain_error when a set exceeds d elements
// or p < 1.
PopularSumDecomposition PopularSumDecompose(const std::vector<IntegerSet>& X,
                                            const std::vector<IntegerSet>& Y,
                                            int d, int64_t p);

}  // namespace minplus

#endif  // MINPLUS_ADDCOMB_POPULAR_SUMS_H_
