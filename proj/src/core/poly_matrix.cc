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

#include "minplus/core/poly_matrix.h"

#include "minplus/core/checked.h"

namespace minplus {

PolyMatrix::PolyMatrix(int rows, int cols, int degree)
    : rows_(rows), cols_(cols), degree_(degree),
      data_(static_cast<size_t>(rows) * cols * (degree + 1), 0) {}

PolyMatrix PolyMatrix::FromMonomials(const MaskedMatrix& m, int64_t shift,
                                     int degree) {
  PolyMatrix p(m.rows(), m.cols(), degree);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (!m.has(i, j)) continue;
      const int64_t e = CheckedSub(m.at(i, j), shift);
      if (e < 0 || e > degree) {
        throw std::domain_error("exponent out of range in polynomial encoding");
      }
      p.coef(i, j, static_cast<int>(e)) = 1;
    }
  return p;
}

int PolyMatrix::LowestExponent(int i, int j) const {
  const size_t base = Offset(i, j);
  for (int e = 0; e <= degree_; ++e)
    if (data_[base + e] != 0) return e;
  return -1;
}

PolyMatrix Multiply(const PolyMatrix& P, const PolyMatrix& Q) {
  if (P.cols() != Q.rows()) throw ShapeError("polynomial matrix shapes");
  PolyMatrix R(P.rows(), Q.cols(), P.degree() + Q.degree());
  for (int i = 0; i < P.rows(); ++i)
    for (int k = 0; k < P.cols(); ++k)
      for (int a = 0; a <= P.degree(); ++a) {
        const int64_t pa = P.coef(i, k, a);
        if (pa == 0) continue;
        for (int j = 0; j < Q.cols(); ++j)
          for (int b = 0; b <= Q.degree(); ++b) {
            const int64_t qb = Q.coef(k, j, b);
            if (qb != 0) R.coef(i, j, a + b) += pa * qb;
          }
      }
  return R;
}

}  // namespace minplus
