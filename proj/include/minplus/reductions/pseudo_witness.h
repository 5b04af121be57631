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

#ifndef MINPLUS_REDUCTIONS_PSEUDO_WITNESS_H_
#define MINPLUS_REDUCTIONS_PSEUDO_WITNESS_H_

#include <cstdint>
#include <vector>

#include "minplus/core/masked_matrix.h"

namespace minplus {

// Two notions of "almost a witness" for a threshold q:
//   kTruncated: ⌊A[i,k]/q⌋ + ⌊B[k,j]/q⌋ = (⌊A/q⌋ * ⌊B/q⌋)[i,j]
//   kSlack:     A[i,k] + B[k,j] < (A*B)[i,j] + q
enum class PseudoWitnessKind { kTruncated, kSlack };

struct PseudoWitnessProfile {
  PseudoWitnessKind kind = PseudoWitnessKind::kSlack;
  std::vector<int64_t> thresholds;
  std::vector<IntMatrix> counts;  // one n1 × n3 matrix per threshold
  IntMatrix witnesses;            // exact witness counts
};

// Thresholds must be positive.
PseudoWitnessProfile ProfilePseudoWitnesses(const MaskedMatrix& A,
                                            const MaskedMatrix& B,
                                            PseudoWitnessKind kind,
                                            const std::vector<int64_t>& qs);

// Slack counts are at least the witness count and do not drop as q grows.
// Truncated counts are positive wherever a witness exists.
bool ProfileConsistent(const PseudoWitnessProfile& p);

}  // namespace minplus

#endif  // MINPLUS_REDUCTIONS_PSEUDO_WITNESS_H_
