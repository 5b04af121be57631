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

#ifndef MINPLUS_TRIANGLE_ORIENTATION_H_
#define MINPLUS_TRIANGLE_ORIENTATION_H_

#include <vector>

#include "minplus/core/triangle.h"
#include "minplus/rank/decomposition.h"
#include "minplus/triangle/reduction.h"

namespace minplus {

// Rotate: (A, B, C) -> (C, -Bᵀ, A), triple (i,k,j) -> (i,j,k).
// Transpose: (A, B, C) -> (Bᵀ, Aᵀ, Cᵀ), triple (i,k,j) -> (j,k,i).
// Both are involutions and preserve exactness of every triple.
enum class OrientOp { kRotate, kTranspose };
using Orientation = std::vector<OrientOp>;

// The six orientations, identity first.
const std::vector<Orientation>& AllOrientations();

enum class Role { kA = 0, kB = 1, kC = 2 };

// An instance together with a rank decomposition of one of its matrices.
struct LowRankInstance {
  TriangleInstance inst;
  Role role = Role::kC;
  RankDecomposition d;
};

TriangleInstance Orient(const TriangleInstance& inst, const Orientation& o);
LowRankInstance Orient(const LowRankInstance& lr, const Orientation& o);
// An orientation that moves the decomposed matrix into the C role.
Orientation ToCRole(Role role);

// Map results on Orient(src, o) back to src.
EdgeFlags Unorient(const EdgeFlags& f, const Orientation& o);
Triple Unorient(const Triple& t, const Orientation& o);
PotentialAdjustment Unorient(const PotentialAdjustment& adj,
                             const Orientation& o);
ReductionOutput Unorient(ReductionOutput out, const Orientation& o);

}  // namespace minplus

#endif  // MINPLUS_TRIANGLE_ORIENTATION_H_
