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

#ifndef MINPLUS_REDUCTIONS_SMALL_UNIVERSE_H_
#define MINPLUS_REDUCTIONS_SMALL_UNIVERSE_H_

#include <cstdint>
#include <functional>

#include "minplus/core/masked_matrix.h"
#include "minplus/core/triangle.h"
#include "minplus/reductions/config.h"
#include "minplus/triangle/orientation.h"

namespace minplus {

using LowRankTriangleSolver = std::function<EdgeFlags(const LowRankInstance&)>;

struct SmallUniverseStats {
  int depth = 0;  // levels of halving, base case included
  int64_t small_calls = 0;
  int64_t triangle_calls = 0;
  int64_t unpopular_samples = 0;
  int64_t max_rank = 0;  // largest decomposition handed to the triangle solver
};

// A*B for entries in {0..u}, using only products with universe n2_small and
// low-rank exact-triangle calls. The product at half resolution, found by
// recursion, pins every output to a window of three values. Each residue
// class pair is then handled in base q = ⌈u/n2_small⌉: pairs with at most
// t·n2/n2_small pseudo-witnesses by sampling the middle index, the others
// by a triangle instance whose third matrix has rank |sample|·q.
MaskedMatrix SmallUniverseReduction(const MaskedMatrix& A,
                                    const MaskedMatrix& B, int n2_small, int t,
                                    const MinPlusSolver& small_solver,
                                    const LowRankTriangleSolver& triangle_solver,
                                    uint64_t seed,
                                    const SamplingConfig& cfg = {},
                                    SmallUniverseStats* stats = nullptr);

}  // namespace minplus

#endif  // MINPLUS_REDUCTIONS_SMALL_UNIVERSE_H_
