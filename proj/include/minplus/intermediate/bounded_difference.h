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

#ifndef MINPLUS_INTERMEDIATE_BOUNDED_DIFFERENCE_H_
#define MINPLUS_INTERMEDIATE_BOUNDED_DIFFERENCE_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "minplus/addcomb/integer_set.h"
#include "minplus/core/masked_matrix.h"
#include "minplus/core/triangle.h"

namespace minplus {

// Adjacent entries along every row (column) differ by at most c. A ⊥
// anywhere fails.
bool IsRowBoundedDifference(const MaskedMatrix& M, int64_t c);
bool IsColumnBoundedDifference(const MaskedMatrix& M, int64_t c);
// 0 ≤ M[i,0] ≤ ... ≤ M[i,m−1] ≤ bound for every row.
bool IsRowMonotone(const MaskedMatrix& M, int64_t bound);
// 0 ≤ M[n−1,j] ≤ ... ≤ M[0,j] ≤ bound for every column.
bool IsColumnMonotone(const MaskedMatrix& M, int64_t bound);

// B'[k,j] = min over k' of B[k',j] + |k − k'|·c, with ⊥ as +∞; one pass
// down each column and one pass up.
MaskedMatrix DistanceTransform(const MaskedMatrix& B, int64_t c);

// A row-bounded-difference product rewritten so that A is row-monotone
// and B column-monotone, both bounded-difference with constant 2c and with
// entries in O(n2·c). The product changes only by the recorded offsets.
struct MonotoneBdInstance {
  MaskedMatrix A;
  MaskedMatrix B;
  int64_t c = 0;
  std::vector<int64_t> row_offsets;  // taken off the rows of A
  std::vector<int64_t> col_offsets;  // taken off the columns of B
  std::vector<bool> empty_cols;      // columns of B without entries
  int64_t shift = 0;                 // n2·c, added by the ramps
  int64_t universe = 0;              // largest entry of A or B
};

// Throws std::domain_error naming the first ⊥ or adjacent pair of A that
// breaks the bound c.
MonotoneBdInstance MonotoneBdTransform(const MaskedMatrix& A,
                                       const MaskedMatrix& B, int64_t c);
// A*B from the product of the transformed pair.
MaskedMatrix ReconstructProduct(const MonotoneBdInstance& t,
                                const MaskedMatrix& C);

// Sum ranks on X × X, and f ≥ rank made L-bounded-difference in y by
// lifting f(x,y) to f(x,y') − L, scanning y downwards. Pairs where the
// lift happened are bad.
struct RankSubstitution {
  IntegerSet values;  // X
  IntegerSet sums;    // X + X; select(r) = sums[r]
  int64_t L = 1;
  IntMatrix rank;     // |X| × |X|, by index into values
  IntMatrix f;
  std::vector<std::pair<int64_t, int64_t>> bad;  // (x, y)
};
RankSubstitution BuildRankSubstitution(const IntegerSet& X, int64_t L);

// The padded instance: columns (k, y) carry f(A[i,k], y), dummy columns
// interpolate so every row steps by at most 1, and B'' has a 0 at
// ((k, B[k,j]), j) and ⊥ elsewhere. Rows where A[i,k] is ⊥ take the value
// |X + X| on block k, which decodes to ⊥.
struct PaddedBdInstance {
  MaskedMatrix A;
  MaskedMatrix B;
  std::vector<std::vector<int>> column_of;  // [k][index of y]
};
PaddedBdInstance BuildPaddedBdInstance(const MaskedMatrix& A,
                                       const MaskedMatrix& B,
                                       const RankSubstitution& rs);

struct RankSubstitutionStats {
  int64_t values = 0;     // |X|
  int64_t sums = 0;       // |X + X|
  int64_t bad_pairs = 0;  // |R|
  bool bad_bound_holds = true;  // |R|·L ≤ |X + X|·|X|
  int64_t inner = 0;      // columns of the padded A
  int64_t nonzeros = 0;   // entries of the padded B
  int64_t bad_updates = 0;
};

// A*B through one row-bounded-difference (constant 1) product solved by
// bd_solver, plus direct enumeration over the bad value pairs. With
// require_regular, A and B must be |X|-uniform and 1/|X|-regular.
MaskedMatrix RankSubstitutionBdReduction(const MaskedMatrix& A,
                                         const MaskedMatrix& B, int64_t L,
                                         const MinPlusSolver& bd_solver,
                                         bool require_regular = true,
                                         RankSubstitutionStats* stats = nullptr);

}  // namespace minplus

#endif  // MINPLUS_INTERMEDIATE_BOUNDED_DIFFERENCE_H_
