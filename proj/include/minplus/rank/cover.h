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

#ifndef MINPLUS_RANK_COVER_H_
#define MINPLUS_RANK_COVER_H_

#include <cstdint>
#include <vector>

namespace minplus {

// Items x_i in [0, r) with conflict sets C_i ⊆ [0, r), x_i ∉ C_i.
struct CoverInstance {
  int r = 0;
  std::vector<int> items;
  std::vector<std::vector<int>> conflicts;

  int MaxConflicts() const;
};

// Set S covers item i when x_i ∈ S and C_i ∩ S = ∅.
struct CoverResult {
  std::vector<std::vector<int>> sets;  // each sorted
  std::vector<int> assignment;         // item -> index into sets
};

// Deterministic construction by conditional expectations: each set grows
// one element at a time, choosing the element by a binary search over
// dyadic intervals of [r] on the potential |G| - |B|/(2s).
// Throws std::domain_error on a malformed instance.
CoverResult ConflictFreeCover(const CoverInstance& inst);

// ceil(16 s ln n) + 1.
int64_t CoverSizeBound(int64_t n, int64_t s);

// True when every item is covered by its assigned set.
bool IsValidCover(const CoverInstance& inst, const CoverResult& res);

}  // namespace minplus

#endif  // MINPLUS_RANK_COVER_H_
