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

#ifndef MINPLUS_RANK_REGULARIZE_H_
#define MINPLUS_RANK_REGULARIZE_H_

#include <cstdint>

#include "minplus/core/masked_matrix.h"
#include "minplus/rank/decomposition.h"

namespace minplus {

// Selector usage per (row, ℓ) and per (ℓ, column).
struct RegularityReport {
  int64_t R = 0;
  IntMatrix row_counts;  // n × r
  IntMatrix col_counts;  // r × m

  static RegularityReport Of(const RankDecomposition& d, int64_t R);
  // Every row count <= R*m/r.
  bool RowRegular() const;
  // Every column count <= R*n/r.
  bool ColRegular() const;
};

// 64 * ceil(log2(n m) + 1).
int64_t DefaultRegularityFactor(int n, int m);

struct RegularizedDecomposition {
  int64_t R = 0;
  MaskedMatrix row_part;
  RankDecomposition row_decomposition;  // R-row-regular
  MaskedMatrix col_part;
  RankDecomposition col_decomposition;  // R-column-regular
  MaskedMatrix small_part;
  RankDecomposition small_decomposition;  // rank <= r/2 for the default R
};

// Splits A into a row-regular part, a column-regular part and a part of
// smaller rank. `R` overrides the default factor (0 keeps the default);
// the rank-halving guarantee only holds for the default.
RegularizedDecomposition RegularizeDecomposition(const MaskedMatrix& A,
                                                 const RankDecomposition& d,
                                                 int64_t R = 0);

}  // namespace minplus

#endif  // MINPLUS_RANK_REGULARIZE_H_
