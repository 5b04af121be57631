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

#include "minplus/rank/regularize.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "minplus/rank/cover.h"

namespace minplus {

RegularityReport RegularityReport::Of(const RankDecomposition& d, int64_t R) {
  RegularityReport rep;
  rep.R = R;
  rep.row_counts = IntMatrix(d.S.rows(), d.r, 0);
  rep.col_counts = IntMatrix(d.r, d.S.cols(), 0);
  for (int i = 0; i < d.S.rows(); ++i)
    for (int j = 0; j < d.S.cols(); ++j)
      if (d.S.has(i, j)) {
        const int l = static_cast<int>(d.S.at(i, j));
        ++rep.row_counts(i, l);
        ++rep.col_counts(l, j);
      }
  return rep;
}

bool RegularityReport::RowRegular() const {
  const int64_t r = row_counts.cols();
  const int64_t m = col_counts.cols();
  for (int i = 0; i < row_counts.rows(); ++i)
    for (int l = 0; l < r; ++l)
      if (row_counts(i, l) * r > R * m) return false;
  return true;
}

bool RegularityReport::ColRegular() const {
  const int64_t r = col_counts.rows();
  const int64_t n = row_counts.rows();
  for (int l = 0; l < r; ++l)
    for (int j = 0; j < col_counts.cols(); ++j)
      if (col_counts(l, j) * r > R * n) return false;
  return true;
}

int64_t DefaultRegularityFactor(int n, int m) {
  const double lg = std::log2(static_cast<double>(n) * static_cast<double>(m));
  return 64 * static_cast<int64_t>(std::ceil(lg + 1.0 - 1e-12));
}

RegularizedDecomposition RegularizeDecomposition(const MaskedMatrix& A,
                                                 const RankDecomposition& d,
                                                 int64_t R) {
  if (!VerifyDecomposition(A, d)) {
    throw std::invalid_argument("regularization needs a valid decomposition");
  }
  const int n = A.rows();
  const int m = A.cols();
  const int r = d.r;
  RegularizedDecomposition out;
  out.R = R > 0 ? R : DefaultRegularityFactor(n, m);
  out.row_part = MaskedMatrix(n, m);
  out.col_part = MaskedMatrix(n, m);
  out.small_part = MaskedMatrix(n, m);
  out.small_decomposition =
      RankDecomposition{0, IntMatrix(n, 0), IntMatrix(0, m), MaskedMatrix(n, m)};
  if (r <= out.R) {
    out.row_part = A;
    out.row_decomposition = d;
    out.col_decomposition = RestrictDecomposition(d, out.col_part);
    return out;
  }

  // Violation sets: I_ℓ holds rows using ℓ more than R·m/r times, J_ℓ the
  // columns using ℓ more than R·n/r times.
  RegularityReport counts = RegularityReport::Of(d, out.R);
  std::vector<std::vector<uint8_t>> in_I(r, std::vector<uint8_t>(n, 0));
  std::vector<std::vector<uint8_t>> in_J(r, std::vector<uint8_t>(m, 0));
  std::vector<std::vector<int>> row_violations(n), col_violations(m);
  for (int l = 0; l < r; ++l) {
    for (int i = 0; i < n; ++i)
      if (counts.row_counts(i, l) * r > out.R * m) {
        in_I[l][i] = 1;
        row_violations[i].push_back(l);
      }
    for (int j = 0; j < m; ++j)
      if (counts.col_counts(l, j) * r > out.R * n) {
        in_J[l][j] = 1;
        col_violations[j].push_back(l);
      }
  }

  CoverInstance cover;
  cover.r = r;
  std::vector<std::pair<int, int>> irregular;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      if (!A.has(i, j)) continue;
      const int l = static_cast<int>(d.S.at(i, j));
      if (!in_I[l][i]) {
        out.row_part.set(i, j, A.at(i, j));
      } else if (!in_J[l][j]) {
        out.col_part.set(i, j, A.at(i, j));
      } else {
        out.small_part.set(i, j, A.at(i, j));
        irregular.emplace_back(i, j);
        std::vector<int> conflicts;
        std::set_union(row_violations[i].begin(), row_violations[i].end(),
                       col_violations[j].begin(), col_violations[j].end(),
                       std::back_inserter(conflicts));
        conflicts.erase(std::remove(conflicts.begin(), conflicts.end(), l),
                        conflicts.end());
        cover.items.push_back(l);
        cover.conflicts.push_back(std::move(conflicts));
      }
    }
  out.row_decomposition = RestrictDecomposition(d, out.row_part);
  out.col_decomposition = RestrictDecomposition(d, out.col_part);
  if (irregular.empty()) return out;

  CoverResult sets = ConflictFreeCover(cover);
  const int rs = static_cast<int>(sets.sets.size());
  RankDecomposition& sm = out.small_decomposition;
  sm.r = rs;
  sm.U = IntMatrix(n, rs, 0);
  sm.V = IntMatrix(rs, m, 0);
  for (int t = 0; t < rs; ++t) {
    // Within a chosen set, at most one ℓ can have i ∈ I_ℓ for the rows that
    // use it, so the first match is the only one that matters.
    for (int i = 0; i < n; ++i)
      for (int l : sets.sets[t])
        if (in_I[l][i]) {
          sm.U(i, t) = d.U(i, l);
          break;
        }
    for (int j = 0; j < m; ++j)
      for (int l : sets.sets[t])
        if (in_J[l][j]) {
          sm.V(t, j) = d.V(l, j);
          break;
        }
  }
  for (size_t p = 0; p < irregular.size(); ++p)
    sm.S.set(irregular[p].first, irregular[p].second,
             int64_t{sets.assignment[p]});
  return out;
}

}  // namespace minplus
