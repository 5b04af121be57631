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

#include "minplus/intermediate/products.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "minplus/addcomb/popular_sums.h"
#include "minplus/core/brute.h"

namespace minplus {

namespace {

void RequireBoolean(const MaskedMatrix& M, const char* name) {
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j)
      if (!M.has(i, j) || (M.at(i, j) != 0 && M.at(i, j) != 1))
        throw std::domain_error(std::string(name) + " must be boolean; entry (" +
                                std::to_string(i) + "," + std::to_string(j) +
                                ") is not");
}

IntegerSet EntryValues(const MaskedMatrix& A, const MaskedMatrix& B) {
  std::vector<int64_t> xs = A.DistinctValues();
  const std::vector<int64_t> ys = B.DistinctValues();
  xs.insert(xs.end(), ys.begin(), ys.end());
  return IntegerSet::FromUnsorted(std::move(xs));
}

}  // namespace

MaskedMatrix MinProductBrute(const MaskedMatrix& A, const MaskedMatrix& B01) {
  CheckProductShapes(A, B01);
  RequireBoolean(B01, "B");
  MaskedMatrix C(A.rows(), B01.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int k = 0; k < A.cols(); ++k) {
      if (!A.has(i, k)) continue;
      for (int j = 0; j < B01.cols(); ++j)
        if (B01.at(k, j) == 1) C.RelaxMin(i, j, A.at(i, k));
    }
  return C;
}

MaskedMatrix MinMaxBrute(const MaskedMatrix& A, const MaskedMatrix& B) {
  CheckProductShapes(A, B);
  MaskedMatrix C(A.rows(), B.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int k = 0; k < A.cols(); ++k) {
      if (!A.has(i, k)) continue;
      for (int j = 0; j < B.cols(); ++j)
        if (B.has(k, j)) C.RelaxMin(i, j, std::max(A.at(i, k), B.at(k, j)));
    }
  return C;
}

MaskedMatrix MinEqBrute(const MaskedMatrix& A, const MaskedMatrix& B) {
  CheckProductShapes(A, B);
  MaskedMatrix C(A.rows(), B.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int k = 0; k < A.cols(); ++k) {
      if (!A.has(i, k)) continue;
      for (int j = 0; j < B.cols(); ++j)
        if (B.has(k, j) && A.at(i, k) == B.at(k, j)) C.RelaxMin(i, j, A.at(i, k));
    }
  return C;
}

MaskedMatrix MinWitnessBrute(const MaskedMatrix& A01, const MaskedMatrix& B01) {
  CheckProductShapes(A01, B01);
  RequireBoolean(A01, "A");
  RequireBoolean(B01, "B");
  MaskedMatrix C(A01.rows(), B01.cols());
  for (int i = 0; i < A01.rows(); ++i)
    for (int j = 0; j < B01.cols(); ++j)
      for (int k = 0; k < A01.cols(); ++k)
        if (A01.at(i, k) == 1 && B01.at(k, j) == 1) {
          C.set(i, j, k);
          break;
        }
  return C;
}

MinMaxEncoding EncodeMinProductAsMinMax(const MaskedMatrix& A,
                                        const MaskedMatrix& B01) {
  CheckProductShapes(A, B01);
  RequireBoolean(B01, "B");
  MinMaxEncoding e;
  e.low = A.MinValue().value_or(0) - 1;
  e.high = A.MaxValue().value_or(0) + 1;
  e.B = MaskedMatrix(B01.rows(), B01.cols());
  for (int k = 0; k < B01.rows(); ++k)
    for (int j = 0; j < B01.cols(); ++j)
      e.B.set(k, j, B01.at(k, j) == 1 ? e.low : e.high);
  return e;
}

MaskedMatrix DecodeMinMax(const MinMaxEncoding& e, const MaskedMatrix& C) {
  MaskedMatrix out = C;
  for (int i = 0; i < C.rows(); ++i)
    for (int j = 0; j < C.cols(); ++j)
      if (C.has(i, j) && C.at(i, j) >= e.high) out.clear(i, j);
  return out;
}

MinProductInstance ReduceMinPlusToMinProduct(const MaskedMatrix& A,
                                             const MaskedMatrix& B) {
  CheckProductShapes(A, B);
  MinProductInstance out;
  out.values = EntryValues(A, B);
  const int nx = static_cast<int>(out.values.size());
  const int n1 = A.rows(), n2 = A.cols(), n3 = B.cols();
  out.A = MaskedMatrix(n1, n2 * nx);
  out.B = MaskedMatrix::Filled(n2 * nx, n3, 0);
  for (int k = 0; k < n2; ++k)
    for (int t = 0; t < nx; ++t) {
      const int col = k * nx + t;
      const int64_t x = out.values[t];
      for (int i = 0; i < n1; ++i)
        if (A.has(i, k)) out.A.set(i, col, A.at(i, k) + x);
      for (int j = 0; j < n3; ++j)
        if (B.has(k, j) && B.at(k, j) == x) out.B.set(col, j, 1);
    }
  return out;
}

MinEqInstance ReduceMinPlusToMinEquality(const MaskedMatrix& A,
                                         const MaskedMatrix& B) {
  CheckProductShapes(A, B);
  MinEqInstance out;
  const IntegerSet X = EntryValues(A, B);
  out.differences = Difference(X, X);
  const int nz = static_cast<int>(out.differences.size());
  const int n1 = A.rows(), n2 = A.cols(), n3 = B.cols();
  out.A = MaskedMatrix(n1, n2 * nz);
  out.B = MaskedMatrix(n2 * nz, n3);
  for (int k = 0; k < n2; ++k)
    for (int t = 0; t < nz; ++t) {
      const int col = k * nz + t;
      const int64_t z = out.differences[t];
      for (int i = 0; i < n1; ++i)
        if (A.has(i, k)) out.A.set(i, col, 2 * A.at(i, k) - z);
      for (int j = 0; j < n3; ++j)
        if (B.has(k, j)) out.B.set(col, j, 2 * B.at(k, j) + z);
    }
  return out;
}

MinWitnessInstance ReduceMinPlusToMinWitness(const MaskedMatrix& A,
                                             const MaskedMatrix& B) {
  CheckProductShapes(A, B);
  MinWitnessInstance out;
  const IntegerSet X = EntryValues(A, B);
  const int n1 = A.rows(), n2 = A.cols(), n3 = B.cols();
  for (int k = 0; k < n2; ++k)
    for (int64_t x : X)
      for (int64_t y : X) out.order.push_back({k, x, y});
  std::sort(out.order.begin(), out.order.end(),
            [](const auto& p, const auto& q) {
              const int64_t sp = p[1] + p[2], sq = q[1] + q[2];
              if (sp != sq) return sp < sq;
              if (p[1] != q[1]) return p[1] < q[1];
              return p[0] < q[0];
            });
  const int inner = static_cast<int>(out.order.size());
  out.A = MaskedMatrix::Filled(n1, inner, 0);
  out.B = MaskedMatrix::Filled(inner, n3, 0);
  for (int p = 0; p < inner; ++p) {
    const auto [k, x, y] = out.order[p];
    for (int i = 0; i < n1; ++i)
      if (A.has(i, k) && A.at(i, k) == x) out.A.set(i, p, 1);
    for (int j = 0; j < n3; ++j)
      if (B.has(k, j) && B.at(k, j) == y) out.B.set(p, j, 1);
  }
  return out;
}

MaskedMatrix DecodeMinWitness(const MinWitnessInstance& inst,
                              const MaskedMatrix& positions,
                              MaskedMatrix* witnesses) {
  MaskedMatrix C(positions.rows(), positions.cols());
  if (witnesses != nullptr)
    *witnesses = MaskedMatrix(positions.rows(), positions.cols());
  for (int i = 0; i < positions.rows(); ++i)
    for (int j = 0; j < positions.cols(); ++j) {
      if (!positions.has(i, j)) continue;
      const auto [k, x, y] = inst.order.at(positions.at(i, j));
      C.set(i, j, x + y);
      if (witnesses != nullptr) witnesses->set(i, j, k);
    }
  return C;
}

}  // namespace minplus
