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

#ifndef MINPLUS_INTERMEDIATE_PRODUCTS_H_
#define MINPLUS_INTERMEDIATE_PRODUCTS_H_

#include <array>
#include <cstdint>
#include <vector>

#include "minplus/addcomb/integer_set.h"
#include "minplus/core/masked_matrix.h"

namespace minplus {

// Boolean operands must be fully populated with 0/1; anything else throws
// std::domain_error. Integer operands may hold ⊥, which never matches.

// C[i,j] = min A[i,k] over k with B[k,j] = 1.
MaskedMatrix MinProductBrute(const MaskedMatrix& A, const MaskedMatrix& B01);
// C[i,j] = min over k of max(A[i,k], B[k,j]).
MaskedMatrix MinMaxBrute(const MaskedMatrix& A, const MaskedMatrix& B);
// C[i,j] = min A[i,k] over k with A[i,k] = B[k,j].
MaskedMatrix MinEqBrute(const MaskedMatrix& A, const MaskedMatrix& B);
// C[i,j] = least k with A[i,k] = B[k,j] = 1.
MaskedMatrix MinWitnessBrute(const MaskedMatrix& A01, const MaskedMatrix& B01);

// The min product as a min-max product: 1 becomes a value below every
// entry of A and 0 one above, and results equal to the upper sentinel
// decode to ⊥.
struct MinMaxEncoding {
  MaskedMatrix B;
  int64_t low = 0;
  int64_t high = 0;
};
MinMaxEncoding EncodeMinProductAsMinMax(const MaskedMatrix& A,
                                        const MaskedMatrix& B01);
MaskedMatrix DecodeMinMax(const MinMaxEncoding& e, const MaskedMatrix& C);

// Min-plus as a min product: A'[i,(k,x)] = A[i,k] + x and B'[(k,x),j] = 1
// iff B[k,j] = x. The min product of the pair is A*B itself.
struct MinProductInstance {
  IntegerSet values;  // X, the entries of A and B
  MaskedMatrix A;     // n1 × (n2·|X|), column k·|X| + index of x
  MaskedMatrix B;     // (n2·|X|) × n3, boolean
};
MinProductInstance ReduceMinPlusToMinProduct(const MaskedMatrix& A,
                                             const MaskedMatrix& B);

// Min-plus as a min-equality product over Z = X − X:
// A'[i,(k,z)] = 2A[i,k] − z and B'[(k,z),j] = 2B[k,j] + z agree exactly
// when z = A[i,k] − B[k,j], and then both equal A[i,k] + B[k,j].
struct MinEqInstance {
  IntegerSet differences;  // Z
  MaskedMatrix A;          // column k·|Z| + index of z
  MaskedMatrix B;
};
MinEqInstance ReduceMinPlusToMinEquality(const MaskedMatrix& A,
                                         const MaskedMatrix& B);

// Min-plus as a min-witness product. The inner index runs over triples
// (k, x, y), A'[i,(k,x,y)] = [A[i,k] = x], B'[(k,x,y),j] = [B[k,j] = y],
// ordered by x + y, then x, then k; the least common triple names the
// minimum sum and one of its witnesses.
struct MinWitnessInstance {
  std::vector<std::array<int64_t, 3>> order;  // position -> (k, x, y)
  MaskedMatrix A;
  MaskedMatrix B;
};
MinWitnessInstance ReduceMinPlusToMinWitness(const MaskedMatrix& A,
                                             const MaskedMatrix& B);
// Positions from the min-witness product to sums; witnesses, if asked for,
// receive the k of each decoded triple.
MaskedMatrix DecodeMinWitness(const MinWitnessInstance& inst,
                              const MaskedMatrix& positions,
                              MaskedMatrix* witnesses = nullptr);

}  // namespace minplus

#endif  // MINPLUS_INTERMEDIATE_PRODUCTS_H_
