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

#include "minplus/core/solvers.h"

#include <algorithm>
#include <stdexcept>

#include "minplus/core/brute.h"
#include "minplus/core/checked.h"
#include "minplus/core/poly_matrix.h"

namespace minplus {

namespace {

void RequireRange(const MaskedMatrix& M, int64_t lo, int64_t hi,
                  const char* name) {
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j)
      if (M.has(i, j) && (M.at(i, j) < lo || M.at(i, j) > hi)) {
        throw std::domain_error(std::string(name) + "[" + std::to_string(i) +
                                "," + std::to_string(j) + "]=" +
                                std::to_string(M.at(i, j)) +
                                " outside the allowed range");
      }
}

MaskedMatrix Recurse(const MaskedMatrix& A, const MaskedMatrix& B,
                     const TriangleSolver& solver, ScalingStats* stats,
                     int level) {
  const int n1 = A.rows();
  const int n3 = B.cols();
  const int64_t top =
      std::max({int64_t{0}, A.MaxValue().value_or(0), B.MaxValue().value_or(0)});
  MaskedMatrix out(n1, n3);
  if (top == 0) {
    // Boolean product: a triangle with C = 0 exists iff some k connects i, j.
    TriangleInstance inst{A, B, MaskedMatrix::Filled(n1, n3, 0)};
    ++stats->triangle_calls;
    EdgeFlags f = solver(inst);
    for (int i = 0; i < n1; ++i)
      for (int j = 0; j < n3; ++j)
        if (f.c.get(i, j)) out.set(i, j, int64_t{0});
    stats->depth = std::max(stats->depth, level);
    return out;
  }
  MaskedMatrix half =
      Recurse(A.FloorDivided(2), B.FloorDivided(2), solver, stats, level + 1);
  // 2*half <= A*B <= 2*half + 2 entry-wise.
  FlagMatrix done(n1, n3);
  for (int z = 0; z <= 2; ++z) {
    MaskedMatrix cand(n1, n3);
    for (int i = 0; i < n1; ++i)
      for (int j = 0; j < n3; ++j)
        if (half.has(i, j) && !done.get(i, j))
          cand.set(i, j, CheckedAdd(CheckedMul(2, half.at(i, j)), z));
    if (cand.Empty()) break;
    ++stats->triangle_calls;
    EdgeFlags f = solver(TriangleInstance{A, B, cand});
    for (int i = 0; i < n1; ++i)
      for (int j = 0; j < n3; ++j)
        if (cand.has(i, j) && f.c.get(i, j)) {
          out.set(i, j, cand.at(i, j));
          done.set(i, j);
        }
  }
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n3; ++j)
      if (half.has(i, j) && !done.get(i, j)) {
        throw std::logic_error(
            "triangle solver found no candidate in [2T, 2T+2] for cell (" +
            std::to_string(i) + "," + std::to_string(j) + ")");
      }
  return out;
}

}  // namespace

MaskedMatrix MinPlusSmallUniverse(const MaskedMatrix& A, const MaskedMatrix& B,
                                  int64_t u) {
  CheckProductShapes(A, B);
  if (u < 0) throw std::domain_error("universe bound must be non-negative");
  RequireRange(A, 0, u, "A");
  RequireRange(B, 0, u, "B");
  const int deg = static_cast<int>(u);
  PolyMatrix P = Multiply(PolyMatrix::FromMonomials(A, 0, deg),
                          PolyMatrix::FromMonomials(B, 0, deg));
  MaskedMatrix C(A.rows(), B.cols());
  for (int i = 0; i < C.rows(); ++i)
    for (int j = 0; j < C.cols(); ++j) {
      const int e = P.LowestExponent(i, j);
      if (e >= 0) C.set(i, j, int64_t{e});
    }
  return C;
}

MaskedMatrix MinPlusViaExactTriangle(const MaskedMatrix& A,
                                     const MaskedMatrix& B,
                                     const TriangleSolver& solver,
                                     ScalingStats* stats) {
  CheckProductShapes(A, B);
  RequireRange(A, 0, INT64_MAX / 4, "A");
  RequireRange(B, 0, INT64_MAX / 4, "B");
  ScalingStats local;
  MaskedMatrix out = Recurse(A, B, solver, stats ? stats : &local, 0);
  return out;
}

}  // namespace minplus
