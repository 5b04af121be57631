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

#ifndef MINPLUS_REDUCTIONS_HASH_COMPRESSION_H_
#define MINPLUS_REDUCTIONS_HASH_COMPRESSION_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "minplus/addcomb/integer_set.h"
#include "minplus/addcomb/sum_order_hash.h"
#include "minplus/core/masked_matrix.h"
#include "minplus/core/triangle.h"
#include "minplus/reductions/config.h"

namespace minplus {

// The hash source gave up; the reduction has nothing to fall back on.
class HashUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Produces a sum-order-preserving hash on some subset of X, or nothing.
using HashSource =
    std::function<std::optional<SumOrderHash>(const IntegerSet& X)>;

// Exhaustive search within a node budget.
HashSource SearchHashSource(int64_t budget = int64_t{1} << 22);

// One shift pair: A_s = h(A − s) on entries with A − s in the hash domain,
// likewise B_t = h(B − t).
struct CompressedPair {
  int64_t s = 0;
  int64_t t = 0;
  MaskedMatrix A;
  MaskedMatrix B;
};

std::vector<CompressedPair> CompressByHash(const MaskedMatrix& A,
                                           const MaskedMatrix& B,
                                           const SumOrderHash& h,
                                           const std::vector<int64_t>& shifts);

struct HashCompressionStats {
  int64_t entry_values = 0;  // |X|
  int64_t domain_size = 0;   // |Y|
  int64_t shifts = 0;        // |S|
  int64_t universe = 0;      // largest hashed value
  int64_t small_calls = 0;
};

// A*B from products over the hash range. X, the set of entries, is covered
// by translates Y + s of the hash domain; for every shift pair a minimizer
// of the hashed product is a true minimizer whenever some true minimizer
// survives the shift, since the hash keeps strict order of pair sums.
MaskedMatrix HashUniverseCompression(const MaskedMatrix& A,
                                     const MaskedMatrix& B,
                                     const HashSource& source,
                                     const MinPlusSolver& small_solver,
                                     uint64_t seed,
                                     const SamplingConfig& cfg = {},
                                     HashCompressionStats* stats = nullptr);

}  // namespace minplus

#endif  // MINPLUS_REDUCTIONS_HASH_COMPRESSION_H_
