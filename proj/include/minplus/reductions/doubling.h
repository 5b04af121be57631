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

#ifndef MINPLUS_REDUCTIONS_DOUBLING_H_
#define MINPLUS_REDUCTIONS_DOUBLING_H_

#include <cstdint>
#include <map>
#include <string>

#include "minplus/core/masked_matrix.h"
#include "minplus/core/triangle.h"
#include "minplus/reductions/config.h"
#include "minplus/triangle/pipeline.h"

namespace minplus {

// Pair classes DoublingReduction runs; all three are needed for exactness.
enum DoublingPairClass : unsigned {
  kPopularPairs = 1,
  kUnpopularPairs = 2,
  kOrdinaryPairs = 4,
  kAllPairClasses = 7,
};

struct DoublingStats {
  int levels = 0;  // scales 0..L
  int64_t t = 0;   // witnesses listed per pair
  // Entries lowered by each pair class.
  int64_t popular_updates = 0;
  int64_t unpopular_updates = 0;
  int64_t ordinary_updates = 0;
  int64_t sample_size = 0;  // middle indices behind the approximate product
  int64_t reductions = 0;   // (ℓ, x, y, z) combinations reduced
  int64_t instances = 0;    // low-doubling instances handed to the solver
  int64_t triples = 0;      // triangles listed directly by the reductions
  int64_t heuristic_exceeded = 0;
  int64_t solver_calls = 0;
  std::map<std::string, int64_t> counters;  // summed over the reductions
};

// A*B for non-negative entries, using a solver for the uniform, regular,
// low-doubling products the triangle reductions emit. Pairs with more than
// t witnesses are settled by a sampled product, pairs with at most t
// candidate k at the coarsest scale by listing them, and the rest at the
// scale ℓ where their near-witness count crosses t: there the product of
// ⌊A/2^ℓ⌋ and ⌊B/2^ℓ⌋ split by residue class is pinned by a sampled product
// R, and each (class, offset) triangle instance with third matrix
// ⌊R/2^ℓ⌋ − z goes through the low-rank reductions. t is K.
MaskedMatrix DoublingReduction(const MaskedMatrix& A, const MaskedMatrix& B,
                               int64_t K, const MinPlusSolver& solver,
                               uint64_t seed, const SamplingConfig& cfg = {},
                               const TriangleKnobs& knobs = {},
                               DoublingStats* stats = nullptr,
                               unsigned classes = kAllPairClasses);

}  // namespace minplus

#endif  // MINPLUS_REDUCTIONS_DOUBLING_H_
