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

#include "minplus/intermediate/bounded_difference.h"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>

#include "minplus/addcomb/popular_sums.h"
#include "minplus/core/brute.h"
#include "minplus/triangle/constraints.h"

namespace minplus {

namespace {

std::string Cell(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

bool Full(const MaskedMatrix& M) {
  return M.CountPresent() == static_cast<int64_t>(M.rows()) * M.cols();
}

}  // namespace

bool IsRowBoundedDifference(const MaskedMatrix& M, int64_t c) {
  if (!Full(M)) return false;
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j + 1 < M.cols(); ++j)
      if (std::abs(M.at(i, j) - M.at(i, j + 1)) > c) return false;
  return true;
}

bool IsColumnBoundedDifference(const MaskedMatrix& M, int64_t c) {
  return IsRowBoundedDifference(M.Transposed(), c);
}

bool IsRowMonotone(const MaskedMatrix& M, int64_t bound) {
  if (!Full(M)) return false;
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) {
      if (M.at(i, j) < 0 || M.at(i, j) > bound) return false;
      if (j > 0 && M.at(i, j - 1) > M.at(i, j)) return false;
    }
  return true;
}

bool IsColumnMonotone(const MaskedMatrix& M, int64_t bound) {
  if (!Full(M)) return false;
  for (int j = 0; j < M.cols(); ++j)
    for (int i = 0; i < M.rows(); ++i) {
      if (M.at(i, j) < 0 || M.at(i, j) > bound) return false;
      if (i > 0 && M.at(i - 1, j) < M.at(i, j)) return false;
    }
  return true;
}

MaskedMatrix DistanceTransform(const MaskedMatrix& B, int64_t c) {
  const int n = B.rows();
  MaskedMatrix down(B.rows(), B.cols()), out(B.rows(), B.cols());
  for (int j = 0; j < B.cols(); ++j) {
    for (int k = 0; k < n; ++k) {
      if (B.has(k, j)) down.set(k, j, B.at(k, j));
      if (k > 0 && down.has(k - 1, j)) down.RelaxMin(k, j, down.at(k - 1, j) + c);
    }
    for (int k = n - 1; k >= 0; --k) {
      if (down.has(k, j)) out.set(k, j, down.at(k, j));
      if (k + 1 < n && out.has(k + 1, j)) out.RelaxMin(k, j, out.at(k + 1, j) + c);
    }
  }
  return out;
}

MonotoneBdInstance MonotoneBdTransform(const MaskedMatrix& A,
                                       const MaskedMatrix& B, int64_t c) {
  CheckProductShapes(A, B);
  if (c < 0) throw std::domain_error("difference bound must be non-negative");
  const int n1 = A.rows(), n2 = A.cols(), n3 = B.cols();
  for (int i = 0; i < n1; ++i)
    for (int k = 0; k < n2; ++k) {
      if (!A.has(i, k))
        throw std::domain_error("A has ⊥ at " + Cell(i, k));
      if (k + 1 < n2 && A.has(i, k + 1) &&
          std::abs(A.at(i, k) - A.at(i, k + 1)) > c)
        throw std::domain_error("A breaks the difference bound between " +
                                Cell(i, k) + " and " + Cell(i, k + 1));
    }
  MonotoneBdInstance t;
  t.c = c;
  t.shift = static_cast<int64_t>(n2) * c;

  // Rows of A into {0..u}.
  t.A = A;
  t.row_offsets.assign(n1, 0);
  int64_t u = 0;
  for (int i = 0; i < n1; ++i) {
    int64_t lo = n2 > 0 ? A.at(i, 0) : 0;
    for (int k = 0; k < n2; ++k) lo = std::min(lo, A.at(i, k));
    t.row_offsets[i] = lo;
    for (int k = 0; k < n2; ++k) {
      t.A.set(i, k, A.at(i, k) - lo);
      u = std::max(u, A.at(i, k) - lo);
    }
  }

  // Columns of B into {0..2u}: nothing above the column minimum plus 2u can
  // win against that minimum, ⊥ included.
  MaskedMatrix b(n2, n3);
  t.col_offsets.assign(n3, 0);
  t.empty_cols.assign(n3, false);
  for (int j = 0; j < n3; ++j) {
    std::optional<int64_t> lo;
    for (int k = 0; k < n2; ++k)
      if (B.has(k, j)) lo = lo ? std::min(*lo, B.at(k, j)) : B.at(k, j);
    t.empty_cols[j] = !lo.has_value();
    t.col_offsets[j] = lo.value_or(0);
    for (int k = 0; k < n2; ++k) {
      const int64_t v = B.has(k, j) ? B.at(k, j) - t.col_offsets[j] : 2 * u;
      b.set(k, j, std::min(v, 2 * u));
    }
  }

  // Column-bounded-difference, then the ramps.
  t.B = DistanceTransform(b, c);
  for (int k = 0; k < n2; ++k) {
    for (int i = 0; i < n1; ++i) t.A.set(i, k, t.A.at(i, k) + k * c);
    for (int j = 0; j < n3; ++j)
      t.B.set(k, j, t.B.at(k, j) + (n2 - k) * c);
  }
  t.universe = std::max(t.A.MaxValue().value_or(0), t.B.MaxValue().value_or(0));
  return t;
}

MaskedMatrix ReconstructProduct(const MonotoneBdInstance& t,
                                const MaskedMatrix& C) {
  MaskedMatrix out(C.rows(), C.cols());
  for (int i = 0; i < C.rows(); ++i)
    for (int j = 0; j < C.cols(); ++j)
      if (C.has(i, j) && !t.empty_cols[j])
        out.set(i, j, C.at(i, j) + t.row_offsets[i] + t.col_offsets[j] - t.shift);
  return out;
}

RankSubstitution BuildRankSubstitution(const IntegerSet& X, int64_t L) {
  if (L < 1) throw std::domain_error("L must be positive");
  RankSubstitution rs;
  rs.values = X;
  rs.sums = Sumset(X, X);
  rs.L = L;
  const int n = static_cast<int>(X.size());
  rs.rank = IntMatrix(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) rs.rank(a, b) = rs.sums.IndexOf(X[a] + X[b]);
  rs.f = rs.rank;
  for (int a = n - 1; a >= 0; --a)
    for (int b = n - 2; b >= 0; --b)
      if (rs.f(a, b) < rs.f(a, b + 1) - L) rs.f(a, b) = rs.f(a, b + 1) - L;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (rs.f(a, b) != rs.rank(a, b)) rs.bad.push_back({X[a], X[b]});
  return rs;
}

PaddedBdInstance BuildPaddedBdInstance(const MaskedMatrix& A,
                                       const MaskedMatrix& B,
                                       const RankSubstitution& rs) {
  CheckProductShapes(A, B);
  const int n1 = A.rows(), n2 = A.cols(), n3 = B.cols();
  const int nx = static_cast<int>(rs.values.size());
  const int64_t top = rs.sums.size();
  PaddedBdInstance out;
  out.column_of.assign(n2, std::vector<int>(nx));
  // Gaps inside a block are at most L and between blocks at most |X + X|,
  // so that many steps of size 1 bridge them.
  int pos = 0;
  for (int k = 0; k < n2; ++k)
    for (int t = 0; t < nx; ++t) {
      if (t > 0) {
        pos += static_cast<int>(rs.L) - 1;
      } else if (k > 0) {
        pos += static_cast<int>(top) - 1;
      }
      out.column_of[k][t] = pos++;
    }
  out.A = MaskedMatrix(n1, pos);
  out.B = MaskedMatrix(pos, n3);
  for (int i = 0; i < n1; ++i) {
    int prev_col = -1;
    int64_t prev = 0;
    for (int k = 0; k < n2; ++k)
      for (int t = 0; t < nx; ++t) {
        const int col = out.column_of[k][t];
        int64_t v = top;
        if (A.has(i, k)) v = rs.f(rs.values.IndexOf(A.at(i, k)), t);
        out.A.set(i, col, v);
        for (int p = prev_col + 1; p < col && prev_col >= 0; ++p) {
          const int64_t gap = v - prev;
          const int64_t step = std::min<int64_t>(p - prev_col, std::abs(gap));
          out.A.set(i, p, prev + (gap < 0 ? -step : step));
        }
        prev_col = col;
        prev = v;
      }
  }
  for (int k = 0; k < n2; ++k)
    for (int j = 0; j < n3; ++j)
      if (B.has(k, j))
        out.B.set(out.column_of[k][rs.values.IndexOf(B.at(k, j))], j, 0);
  return out;
}

MaskedMatrix RankSubstitutionBdReduction(const MaskedMatrix& A,
                                         const MaskedMatrix& B, int64_t L,
                                         const MinPlusSolver& bd_solver,
                                         bool require_regular,
                                         RankSubstitutionStats* stats) {
  CheckProductShapes(A, B);
  std::vector<int64_t> xs = A.DistinctValues();
  for (int64_t y : B.DistinctValues()) xs.push_back(y);
  const IntegerSet X = IntegerSet::FromUnsorted(std::move(xs));
  const int64_t D = std::max<int64_t>(1, X.size());
  if (require_regular && !(IsRegular(A, D) && IsRegular(B, D)))
    throw std::domain_error("operands are not 1/D-regular for D = |X| = " +
                            std::to_string(D));
  RankSubstitutionStats local;
  RankSubstitutionStats& st = stats != nullptr ? *stats : local;
  st = RankSubstitutionStats{};
  const RankSubstitution rs = BuildRankSubstitution(X, L);
  st.values = X.size();
  st.sums = rs.sums.size();
  st.bad_pairs = static_cast<int64_t>(rs.bad.size());
  st.bad_bound_holds = st.bad_pairs * L <= st.sums * st.values;

  // Good pairs: the padded product in rank space, read back through select.
  const PaddedBdInstance padded = BuildPaddedBdInstance(A, B, rs);
  st.inner = padded.A.cols();
  st.nonzeros = padded.B.CountPresent();
  const MaskedMatrix Cp = bd_solver(padded.A, padded.B);
  MaskedMatrix C(A.rows(), B.cols());
  for (int i = 0; i < C.rows(); ++i)
    for (int j = 0; j < C.cols(); ++j)
      if (Cp.has(i, j) && Cp.at(i, j) < rs.sums.size())
        C.set(i, j, rs.sums[static_cast<size_t>(Cp.at(i, j))]);

  // Bad pairs: enumerate the positions holding them.
  for (const auto& [x, y] : rs.bad)
    for (int k = 0; k < A.cols(); ++k)
      for (int i = 0; i < A.rows(); ++i) {
        if (!A.has(i, k) || A.at(i, k) != x) continue;
        for (int j = 0; j < B.cols(); ++j)
          if (B.has(k, j) && B.at(k, j) == y) {
            const int64_t before = C.has(i, j) ? C.at(i, j) : x + y + 1;
            C.RelaxMin(i, j, x + y);
            if (x + y < before) ++st.bad_updates;
          }
      }
  return C;
}

}  // namespace minplus
