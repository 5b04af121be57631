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

#ifndef MINPLUS_TRIANGLE_CONSTRAINTS_H_
#define MINPLUS_TRIANGLE_CONSTRAINTS_H_

#include <cstdint>

#include "minplus/addcomb/integer_set.h"
#include "minplus/core/triangle.h"
#include "minplus/triangle/reduction.h"

namespace minplus {

// Smallest d such that, for one of the three matrices and one axis, every
// line has at most d distinct entries.
int64_t SliceUniformity(const TriangleInstance& inst);
// |vals(A)| + |vals(B)| + |vals(C)|.
int64_t SummedEntryCount(const TriangleInstance& inst);
// |vals(A) ∪ vals(B) ∪ vals(C)|.
IntegerSet JointEntrySet(const TriangleInstance& inst);
// count * D <= line length for every value in every row and column.
bool IsRegular(const TriangleInstance& inst, int64_t D);
bool IsRegular(const MaskedMatrix& M, int64_t D);

// Recounts every claim in `tags` on `inst`.
bool TagsHold(const TriangleInstance& inst, const InstanceTags& tags);

}  // namespace minplus

#endif  // MINPLUS_TRIANGLE_CONSTRAINTS_H_
