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

#ifndef MINPLUS_REDUCTIONS_CONFIG_H_
#define MINPLUS_REDUCTIONS_CONFIG_H_

#include <cstdint>

#include "minplus/core/masked_matrix.h"
#include "minplus/reductions/witnesses.h"

namespace minplus {

// Knobs shared by the sampling-based reductions. A rate written as
// Θ(f · log n) in the analysis is min(1, constant · f · ln(n1·n3/δ)).
struct SamplingConfig {
  double constant = 4.0;
  double failure_probability = 1e-6;  // δ
  // Listing by sampling instead of scanning k once a product is known.
  bool sampled_witnesses = false;
  double listing_failure = 1e-3;
};

// constant · ln(n1·n3/δ), the factor every rate and count above carries.
double SamplingLogFactor(const SamplingConfig& cfg, int n1, int n3);

// The product witness source picked by the config. Sampled listing uses the
// given solver.
MinPlusWitnessSource MakeWitnessSource(const SamplingConfig& cfg,
                                       const MinPlusSolver& solver,
                                       uint64_t seed);

// Lowers C[i,j] to A[i,k] + B[k,j] for every listed k. Returns the number of
// entries that changed.
int64_t RelaxFromWitnesses(const MaskedMatrix& A, const MaskedMatrix& B,
                           const WitnessLists& lists, MaskedMatrix& C);

}  // namespace minplus

#endif  // MINPLUS_REDUCTIONS_CONFIG_H_
