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

#include "minplus/rank/decomposition.h"

#include <algorithm>
#include <stdexcept>

#include "minplus/core/checked.h"

namespace minplus {

namespace {

void CheckShapes(const MaskedMatrix& A, const RankDecomposition& d) {
  if (d.r < 0 || d.U.rows() != A.rows() || d.U.cols() != d.r ||
      d.V.rows() != d.r || d.V.cols() != A.cols() || d.S.rows() != A.rows() ||
      d.S.cols() != A.cols()) {
    throw ShapeError("rank decomposition shape does not match target");
  }
}

}  // namespace

bool VerifyDecomposition(const MaskedMatrix& A, const RankDecomposition& d) {
  CheckShapes(A, d);
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) {
      if (A.has(i, j) != d.S.has(i, j)) return false;
      if (!A.has(i, j)) continue;
      const int64_t l = d.S.at(i, j);
      if (l < 0 || l >= d.r) return false;
      int64_t v;
      if (__builtin_add_overflow(d.U(i, l), d.V(l, j), &v)) return false;
      if (v != A.at(i, j)) return false;
    }
  return true;
}

RankDecomposition TrivialDecomposition(const MaskedMatrix& A, TrivialMode mode,
                                       int64_t u) {
  const int n = A.rows();
  const int m = A.cols();
  RankDecomposition d;
  d.S = MaskedMatrix(n, m);
  if (A.Empty()) {
    d.U = IntMatrix(n, 0);
    d.V = IntMatrix(0, m);
    return d;
  }
  if (mode == TrivialMode::kUniverse) {
    if (u < 1 || u > (1 << 24)) {
      throw std::domain_error("universe bound out of range");
    }
    d.r = static_cast<int>(u);
    d.U = IntMatrix(n, d.r, 0);
    d.V = IntMatrix(d.r, m, 0);
    for (int l = 0; l < d.r; ++l)
      for (int j = 0; j < m; ++j) d.V(l, j) = l + 1;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) {
        if (!A.has(i, j)) continue;
        const int64_t x = A.at(i, j);
        if (x < 1 || x > u) {
          throw std::domain_error("entry " + std::to_string(x) +
                                  " outside {1.." + std::to_string(u) + "}");
        }
        d.S.set(i, j, x - 1);
      }
    return d;
  }
  if (n <= m) {
    // U = 0, V = A, S[i,j] = i.
    d.r = n;
    d.U = IntMatrix(n, n, 0);
    d.V = IntMatrix(n, m, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j)
        if (A.has(i, j)) {
          d.V(i, j) = A.at(i, j);
          d.S.set(i, j, int64_t{i});
        }
  } else {
    d.r = m;
    d.U = IntMatrix(n, m, 0);
    d.V = IntMatrix(m, m, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j)
        if (A.has(i, j)) {
          d.U(i, j) = A.at(i, j);
          d.S.set(i, j, int64_t{j});
        }
  }
  return d;
}

RankDecomposition SumDecomposition(const RankDecomposition& d1,
                                   const RankDecomposition& d2) {
  const int n = d1.S.rows();
  const int m = d1.S.cols();
  if (d2.S.rows() != n || d2.S.cols() != m) {
    throw ShapeError("sum of decompositions with different target shapes");
  }
  RankDecomposition d;
  d.r = d1.r * d2.r;
  d.U = IntMatrix(n, d.r);
  d.V = IntMatrix(d.r, m);
  d.S = MaskedMatrix(n, m);
  for (int k1 = 0; k1 < d1.r; ++k1)
    for (int k2 = 0; k2 < d2.r; ++k2) {
      const int k = k1 * d2.r + k2;
      for (int i = 0; i < n; ++i) d.U(i, k) = CheckedAdd(d1.U(i, k1), d2.U(i, k2));
      for (int j = 0; j < m; ++j) d.V(k, j) = CheckedAdd(d1.V(k1, j), d2.V(k2, j));
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      if (d1.S.has(i, j) && d2.S.has(i, j))
        d.S.set(i, j, d1.S.at(i, j) * d2.r + d2.S.at(i, j));
  return d;
}

RankDecomposition TransposeDecomposition(const RankDecomposition& d) {
  return RankDecomposition{d.r, d.V.Transposed(), d.U.Transposed(),
                           d.S.Transposed()};
}

RankDecomposition NegateDecomposition(const RankDecomposition& d) {
  RankDecomposition out = d;
  for (int i = 0; i < d.U.rows(); ++i)
    for (int l = 0; l < d.r; ++l) out.U(i, l) = CheckedNeg(d.U(i, l));
  for (int l = 0; l < d.r; ++l)
    for (int j = 0; j < d.V.cols(); ++j) out.V(l, j) = CheckedNeg(d.V(l, j));
  return out;
}

RankDecomposition RestrictDecomposition(const RankDecomposition& d,
                                        const MaskedMatrix& support) {
  RankDecomposition out = d;
  for (int i = 0; i < d.S.rows(); ++i)
    for (int j = 0; j < d.S.cols(); ++j)
      if (!support.has(i, j)) out.S.clear(i, j);
  return out;
}

MaskedMatrix Evaluate(const RankDecomposition& d) {
  MaskedMatrix out(d.S.rows(), d.S.cols());
  for (int i = 0; i < d.S.rows(); ++i)
    for (int j = 0; j < d.S.cols(); ++j)
      if (d.S.has(i, j)) {
        const int l = static_cast<int>(d.S.at(i, j));
        out.set(i, j, CheckedAdd(d.U(i, l), d.V(l, j)));
      }
  return out;
}

}  // namespace minplus
