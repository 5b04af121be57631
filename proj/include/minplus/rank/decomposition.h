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

#ifndef MINPLUS_RANK_DECOMPOSITION_H_
#define MINPLUS_RANK_DECOMPOSITION_H_

#include <cstdint>

#include "minplus/core/masked_matrix.h"

namespace minplus {

// target[i,j] = U[i,S[i,j]] + V[S[i,j],j], and S[i,j] = ⊥ iff target is ⊥.
// Selectors are 0-based.
struct RankDecomposition {
  int r = 0;
  IntMatrix U;     // n × r
  IntMatrix V;     // r × m
  MaskedMatrix S;  // n × m, entries in [0, r) or ⊥

  bool operator==(const RankDecomposition& o) const = default;
};

// Throws ShapeError when the shapes do not line up.
bool VerifyDecomposition(const MaskedMatrix& A, const RankDecomposition& d);

enum class TrivialMode { kSize, kUniverse };

// Size mode: r = min(n, m). Universe mode: entries must lie in {1..u},
// r = u. An all-⊥ matrix gets r = 0 in both modes.
RankDecomposition TrivialDecomposition(const MaskedMatrix& A, TrivialMode mode,
                                       int64_t u = 0);

// Decomposition of the entry-wise sum with rank r1*r2; pair (k1, k2) maps
// to selector k1*r2 + k2.
RankDecomposition SumDecomposition(const RankDecomposition& d1,
                                   const RankDecomposition& d2);

// Decomposition of the transposed / negated target.
RankDecomposition TransposeDecomposition(const RankDecomposition& d);
RankDecomposition NegateDecomposition(const RankDecomposition& d);

// Keeps the selectors only where `support` is present.
RankDecomposition RestrictDecomposition(const RankDecomposition& d,
                                        const MaskedMatrix& support);

// Entries of the represented matrix; ⊥ wherever S is ⊥.
MaskedMatrix Evaluate(const RankDecomposition& d);

}  // namespace minplus

#endif  // MINPLUS_RANK_DECOMPOSITION_H_
