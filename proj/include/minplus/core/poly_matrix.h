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

#ifndef MINPLUS_CORE_POLY_MATRIX_H_
#define MINPLUS_CORE_POLY_MATRIX_H_

#include <cstdint>
#include <vector>

#include "minplus/core/masked_matrix.h"

namespace minplus {

// Matrix whose entries are polynomials of degree <= degree(), stored as
// dense coefficient vectors.
class PolyMatrix {
 public:
  PolyMatrix(int rows, int cols, int degree);

  // Entry x becomes z^(x - shift); ⊥ becomes the zero polynomial.
  static PolyMatrix FromMonomials(const MaskedMatrix& m, int64_t shift,
                                  int degree);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int degree() const { return degree_; }
  int64_t& coef(int i, int j, int e) { return data_[Offset(i, j) + e]; }
  int64_t coef(int i, int j, int e) const { return data_[Offset(i, j) + e]; }
  // Smallest exponent with a nonzero coefficient, or -1.
  int LowestExponent(int i, int j) const;

 private:
  size_t Offset(int i, int j) const {
    return (static_cast<size_t>(i) * cols_ + j) * (degree_ + 1);
  }
  int rows_;
  int cols_;
  int degree_;
  std::vector<int64_t> data_;
};

// Naive cubic product; each entry product is a convolution.
PolyMatrix Multiply(const PolyMatrix& P, const PolyMatrix& Q);

}  // namespace minplus

#endif  // MINPLUS_CORE_POLY_MATRIX_H_
