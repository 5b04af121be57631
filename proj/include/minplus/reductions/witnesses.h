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

#ifndef MINPLUS_REDUCTIONS_WITNESSES_H_
#define MINPLUS_REDUCTIONS_WITNESSES_H_

#include <cstdint>
#include <functional>

#include "minplus/core/brute.h"
#include "minplus/core/masked_matrix.h"
#include "minplus/core/triangle.h"

namespace minplus {

struct MinPlusListing {
  WitnessLists lists;  // n1 × n3, sorted, at most t each
  int64_t solver_calls = 0;
};

// Up to t witnesses of every finite (A*B)[i,j], found with a product solver
// alone: the middle index is sampled at rates 1, 1/2, ..., isolated
// witnesses are decoded bit by bit, and each is checked against the product.
MinPlusListing ListWitnessesMinPlus(const MaskedMatrix& A,
                                    const MaskedMatrix& B, int t,
                                    const MinPlusSolver& solver,
                                    uint64_t seed, double delta = 1e-3);

// Where the reductions get their witnesses from once a product is known.
using MinPlusWitnessSource = std::function<WitnessLists(
    const MaskedMatrix& A, const MaskedMatrix& B, const MaskedMatrix& product,
    int t)>;

// Scans k directly. Deterministic.
MinPlusWitnessSource ScanWitnessSource();
// Listing by sampling, with a fresh seed for every call.
MinPlusWitnessSource SampledWitnessSource(MinPlusSolver solver, uint64_t seed,
                                          double delta = 1e-3);

// Witnesses of the C edges of a triangle instance, given their flags.
using TriangleWitnessSource = std::function<WitnessLists(
    const TriangleInstance& inst, const FlagMatrix& c, int t)>;

TriangleWitnessSource ScanTriangleWitnessSource();
TriangleWitnessSource SampledTriangleWitnessSource(TriangleSolver solver,
                                                   uint64_t seed,
                                                   double delta = 1e-3);

}  // namespace minplus

#endif  // MINPLUS_REDUCTIONS_WITNESSES_H_
