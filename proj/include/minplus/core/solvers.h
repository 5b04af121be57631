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

#ifndef MINPLUS_CORE_SOLVERS_H_
#define MINPLUS_CORE_SOLVERS_H_

#include <cstdint>

#include "minplus/core/masked_matrix.h"
#include "minplus/core/triangle.h"

namespace minplus {

// Min-plus product of matrices with entries in {0..u} through polynomial
// matrix multiplication. Throws std::domain_error on out-of-range entries.
MaskedMatrix MinPlusSmallUniverse(const MaskedMatrix& A, const MaskedMatrix& B,
                                  int64_t u);

struct ScalingStats {
  int depth = 0;            // number of halvings
  int triangle_calls = 0;
};

// Computes A*B for non-negative A, B by recursing on floor(A/2), floor(B/2)
// and testing the three candidates 2C'+z with the triangle solver.
MaskedMatrix MinPlusViaExactTriangle(const MaskedMatrix& A,
                                     const MaskedMatrix& B,
                                     const TriangleSolver& solver,
                                     ScalingStats* stats = nullptr);

}  // namespace minplus

#endif  // MINPLUS_CORE_SOLVERS_H_
