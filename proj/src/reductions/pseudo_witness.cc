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

#include "minplus/reductions/pseudo_witness.h"

#include <stdexcept>

#include "minplus/core/brute.h"
#include "minplus/core/checked.h"

namespace minplus {

namespace {

// Number of k with A[i,k] + B[k,j] < P[i,j] + slack.
IntMatrix CountBelow(const MaskedMatrix& A, const MaskedMatrix& B,
                     const MaskedMatrix& P, int64_t slack) {
  IntMatrix out(A.rows(), B.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < B.cols(); ++j) {
      if (!P.has(i, j)) continue;
      for (int k = 0; k < A.cols(); ++k)
        if (A.has(i, k) && B.has(k, j) &&
            A.at(i, k) + B.at(k, j) < P.at(i, j) + slack)
          ++out(i, j);
    }
  return out;
}

}  // namespace

PseudoWitnessProfile ProfilePseudoWitnesses(const MaskedMatrix& A,
                                            const MaskedMatrix& B,
                                            PseudoWitnessKind kind,
                                            const std::vector<int64_t>& qs) {
  CheckProductShapes(A, B);
  PseudoWitnessProfile p;
  p.kind = kind;
  p.thresholds = qs;
  p.witnesses = CountBelow(A, B, MinPlusBrute(A, B), 1);
  for (int64_t q : qs) {
    if (q < 1) throw std::domain_error("thresholds must be positive");
    if (kind == PseudoWitnessKind::kSlack) {
      p.counts.push_back(CountBelow(A, B, MinPlusBrute(A, B), q));
    } else {
      const MaskedMatrix Aq = A.FloorDivided(q), Bq = B.FloorDivided(q);
      p.counts.push_back(CountBelow(Aq, Bq, MinPlusBrute(Aq, Bq), 1));
    }
  }
  return p;
}

bool ProfileConsistent(const PseudoWitnessProfile& p) {
  if (p.counts.size() != p.thresholds.size()) return false;
  for (size_t a = 0; a < p.counts.size(); ++a)
    for (int i = 0; i < p.witnesses.rows(); ++i)
      for (int j = 0; j < p.witnesses.cols(); ++j) {
        // Truncation can rank a witness above a non-witness, so only
        // nonemptiness carries over to that kind.
        if (p.kind != PseudoWitnessKind::kSlack) {
          if (p.witnesses(i, j) > 0 && p.counts[a](i, j) == 0) return false;
          continue;
        }
        if (p.counts[a](i, j) < p.witnesses(i, j)) return false;
        for (size_t b = 0; b < p.counts.size(); ++b)
          if (p.thresholds[a] <= p.thresholds[b] &&
              p.counts[a](i, j) > p.counts[b](i, j))
            return false;
      }
  return true;
}

}  // namespace minplus
