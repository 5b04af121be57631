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

#include "minplus/triangle/constraints.h"

#include <algorithm>
#include <map>
#include <vector>

namespace minplus {

namespace {

int64_t MaxRowDistinct(const MaskedMatrix& M) {
  int64_t best = 0;
  for (int i = 0; i < M.rows(); ++i) {
    best = std::max<int64_t>(best, M.RowValues(i).size());
  }
  return best;
}

bool LinesRegular(const MaskedMatrix& M, int64_t D) {
  for (int i = 0; i < M.rows(); ++i) {
    std::map<int64_t, int64_t> count;
    for (int j = 0; j < M.cols(); ++j) {
      if (M.has(i, j) && ++count[M.at(i, j)] * D > M.cols()) return false;
    }
  }
  return true;
}

}  // namespace

int64_t SliceUniformity(const TriangleInstance& inst) {
  int64_t best = -1;
  for (const MaskedMatrix* M : {&inst.A, &inst.B, &inst.C}) {
    for (int64_t d : {MaxRowDistinct(*M), MaxRowDistinct(M->Transposed())}) {
      if (best < 0 || d < best) best = d;
    }
  }
  return best;
}

int64_t SummedEntryCount(const TriangleInstance& inst) {
  return static_cast<int64_t>(inst.A.DistinctValues().size() +
                              inst.B.DistinctValues().size() +
                              inst.C.DistinctValues().size());
}

IntegerSet JointEntrySet(const TriangleInstance& inst) {
  std::vector<int64_t> all;
  for (const MaskedMatrix* M : {&inst.A, &inst.B, &inst.C}) {
    auto vals = M->DistinctValues();
    all.insert(all.end(), vals.begin(), vals.end());
  }
  return IntegerSet::FromUnsorted(std::move(all));
}

bool IsRegular(const MaskedMatrix& M, int64_t D) {
  return LinesRegular(M, D) && LinesRegular(M.Transposed(), D);
}

bool IsRegular(const TriangleInstance& inst, int64_t D) {
  return IsRegular(inst.A, D) && IsRegular(inst.B, D) && IsRegular(inst.C, D);
}

bool TagsHold(const TriangleInstance& inst, const InstanceTags& tags) {
  if (tags.slice_uniform && SliceUniformity(inst) > *tags.slice_uniform) {
    return false;
  }
  if (tags.uniform && SummedEntryCount(inst) > *tags.uniform) return false;
  if (tags.regular && !IsRegular(inst, *tags.regular)) return false;
  if (tags.doubling) {
    IntegerSet joint = JointEntrySet(inst);
    if (joint.empty() || !(DoublingConstant(joint) == *tags.doubling)) {
      return false;
    }
    bool exceeded =
        tags.doubling_limit && !tags.doubling->AtMost(*tags.doubling_limit);
    if (exceeded != tags.heuristic_exceeded) return false;
  }
  return true;
}

}  // namespace minplus
