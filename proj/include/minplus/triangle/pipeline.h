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

#ifndef MINPLUS_TRIANGLE_PIPELINE_H_
#define MINPLUS_TRIANGLE_PIPELINE_H_

#include <cstdint>

#include "minplus/core/triangle.h"
#include "minplus/rank/decomposition.h"
#include "minplus/triangle/reduction.h"

namespace minplus {

// Correctness never depends on these; they trade instance count against
// enumeration work.
struct TriangleKnobs {
  int t = 2;
  int64_t p = 4;     // t^2
  int64_t q = 1024;  // t^10
  // Heavy-entry threshold for the regularity split; doubled whenever a
  // split fails to shrink the rank.
  int64_t q_regular = 2;
  int L = 2;      // rectangles in the sumset cover
  int64_t K = 4;  // doubling limit reported on emitted instances
  int64_t regularity_factor = 0;  // 0 keeps DefaultRegularityFactor
  int max_depth = 64;
  // List triangles directly once the rank exceeds the smallest dimension.
  bool brute_rank_fallback = true;
};

// All reductions take a decomposition of C. Every emitted instance
// satisfies its tags, which the constraint recounts can confirm.

// Instances are r-slice-uniform: their A has at most r distinct entries per
// column.
ReductionOutput ReduceLowRankToSliceUniform(const TriangleInstance& inst,
                                            const RankDecomposition& dc,
                                            const TriangleKnobs& knobs = {});

// Requires one orientation whose first matrix has at most d distinct
// entries per row (std::domain_error otherwise). Instances have summed
// distinct-entry count at most max(d, 3).
ReductionOutput ReduceSliceUniformToUniform(const TriangleInstance& inst,
                                            int64_t d,
                                            const TriangleKnobs& knobs = {});

// Instances are D-uniform and 1/D-regular. Throws std::runtime_error when
// the recursion exceeds knobs.max_depth.
ReductionOutput ReduceLowRankToUniformRegular(const TriangleInstance& inst,
                                              const RankDecomposition& dc,
                                              const TriangleKnobs& knobs = {});

// Requires inst to have at most D distinct entries and be 1/D-regular
// (std::domain_error otherwise). Instances carry their doubling constant
// and are flagged when it exceeds knobs.K.
ReductionOutput ReduceUniformRegularToLowDoubling(
    const TriangleInstance& inst, int64_t D, const TriangleKnobs& knobs = {});

ReductionOutput ReduceLowRankToLowDoubling(const TriangleInstance& inst,
                                           const RankDecomposition& dc,
                                           const TriangleKnobs& knobs = {});

}  // namespace minplus

#endif  // MINPLUS_TRIANGLE_PIPELINE_H_
