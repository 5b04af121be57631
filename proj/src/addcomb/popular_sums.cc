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

#include "minplus/addcomb/popular_sums.h"

#include <stdexcept>
#include <string>

namespace minplus {

namespace {

// The most popular sum of X+Y if it reaches num/den, preferring the smaller
// sum on ties.
std::optional<int64_t> BestPopularSum(const IntegerSet& X, const IntegerSet& Y,
                                      int64_t num, int64_t den) {
  std::optional<int64_t> best;
  int64_t best_count = 0;
  for (const auto& [z, count] : SumsetWithMultiplicities(X, Y)) {
    if (count * den < num) continue;
    if (!best || count > best_count) {
      best = z;
      best_count = count;
    }
  }
  return best;
}

// Peels `mine` against the fixed family `other`, using the candidate sums
// P(rest_i, other_j).
PopularSumSide Peel(const std::vector<IntegerSet>& mine,
                    const std::vector<IntegerSet>& other, int d, int64_t p) {
  const int n = static_cast<int>(mine.size());
  const int m = static_cast<int>(other.size());
  PopularSumSide side;
  side.rest = mine;
  const int64_t num = 2 * static_cast<int64_t>(d);  // threshold 2d/p
  while (true) {
    std::vector<int> good_count(m, 0);
    int64_t nonempty = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j)
        if (BestPopularSum(side.rest[i], other[j], num, p)) {
          ++good_count[j];
          ++nonempty;
        }
    if (nonempty * p <= static_cast<int64_t>(n) * m) break;
    if (side.iterations >= p * p) {
      throw std::logic_error("popular-sum decomposition exceeded p^2 rounds");
    }
    int j = 0;
    for (int jj = 1; jj < m; ++jj)
      if (good_count[jj] > good_count[j]) j = jj;
    const IntegerSet pattern = other[j].Negated();
    std::vector<std::optional<int64_t>> shifts(n);
    std::vector<IntegerSet> parts(n);
    for (int i = 0; i < n; ++i) {
      shifts[i] = BestPopularSum(side.rest[i], other[j], num, p);
      if (!shifts[i]) continue;
      parts[i] = side.rest[i].Intersect(pattern.Shifted(*shifts[i]));
      side.rest[i] = side.rest[i].Minus(parts[i]);
    }
    side.patterns.push_back(pattern);
    side.shifts.push_back(std::move(shifts));
    side.parts.push_back(std::move(parts));
    ++side.iterations;
  }
  return side;
}

void CheckSizes(const std::vector<IntegerSet>& sets, int d, const char* name) {
  for (size_t i = 0; i < sets.size(); ++i)
    if (sets[i].size() > d) {
      throw std::domain_error(std::string(name) + "_" + std::to_string(i) +
                              " has more than d elements");
    }
}

}  // namespace

PopularSumDecomposition PopularSumDecompose(const std::vector<IntegerSet>& X,
                                            const std::vector<IntegerSet>& Y,
                                            int d, int64_t p) {
  if (p < 1) throw std::domain_error("p must be >= 1");
  if (d < 0) throw std::domain_error("d must be >= 0");
  CheckSizes(X, d, "X");
  CheckSizes(Y, d, "Y");
  PopularSumDecomposition dec;
  dec.d = d;
  dec.p = p;
  dec.x = Peel(X, Y, d, p);
  // Sumsets commute, so the Y side is the same loop with the roles swapped.
  dec.y = Peel(Y, X, d, p);
  return dec;
}

}  // namespace minplus
