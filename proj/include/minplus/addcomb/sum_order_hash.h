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

#ifndef MINPLUS_ADDCOMB_SUM_ORDER_HASH_H_
#define MINPLUS_ADDCOMB_SUM_ORDER_HASH_H_

#include <cstdint>
#include <vector>

#include "minplus/addcomb/integer_set.h"

namespace minplus {

// h: domain -> {0..N}; values[t] is the image of domain[t].
struct SumOrderHash {
  IntegerSet domain;
  std::vector<int64_t> values;

  int64_t operator()(int64_t x) const;  // x must be in the domain
};

// x1+x2 < y1+y2 implies h(x1)+h(x2) < h(y1)+h(y2), over all quadruples.
bool VerifySumOrderPreserving(const SumOrderHash& h);

enum class HashSearchStatus { kFound, kNone, kBudget };

struct HashSearchResult {
  HashSearchStatus status = HashSearchStatus::kNone;
  SumOrderHash hash;
  int64_t nodes = 0;
};

// Looks for h: Y -> {0..|X|} with Y ⊆ X as large as possible. Sets with at
// most `full_search_limit` elements try every subset by decreasing size;
// larger sets only try Y = X. kBudget means the node budget ran out before
// the answer was settled.
HashSearchResult SumOrderHashSearch(const IntegerSet& X,
                                    int64_t budget = int64_t{1} << 22,
                                    int full_search_limit = 6);

}  // namespace minplus

#endif  // MINPLUS_ADDCOMB_SUM_ORDER_HASH_H_
