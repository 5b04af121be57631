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

#include "minplus/addcomb/covering.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "minplus/core/checked.h"

namespace minplus {

std::vector<int64_t> GreedyCover(const IntegerSet& X, const IntegerSet& Y) {
  std::vector<int64_t> shifts;
  if (X.empty() || Y.empty()) return shifts;
  // x is covered by shift s iff x - s ∈ Y, so the gain of s is r_{X-Y}(s)
  // over the uncovered part of X.
  std::unordered_map<int64_t, int64_t> gain;
  for (int64_t x : X)
    for (int64_t y : Y) ++gain[CheckedSub(x, y)];
  using Key = std::tuple<int64_t, int64_t, int64_t>;  // (-gain, |s|, s)
  auto key = [](int64_t s, int64_t g) {
    return Key{-g, s < 0 ? -s : s, s};
  };
  std::set<Key> order;
  for (const auto& [s, g] : gain) order.insert(key(s, g));

  std::unordered_set<int64_t> uncovered(X.begin(), X.end());
  while (!uncovered.empty()) {
    const int64_t s = std::get<2>(*order.begin());
    shifts.push_back(s);
    for (int64_t y : Y) {
      const int64_t x = y + s;
      if (!uncovered.erase(x)) continue;
      for (int64_t y2 : Y) {
        const int64_t t = x - y2;
        int64_t& g = gain[t];
        order.erase(key(t, g));
        if (--g > 0) order.insert(key(t, g));
      }
    }
  }
  return shifts;
}

int64_t GreedyCoverBound(const IntegerSet& X, const IntegerSet& Y) {
  const double ratio = static_cast<double>(Difference(Y, X).size()) /
                       static_cast<double>(Y.size());
  const double b =
      std::ceil(ratio * std::log(static_cast<double>(X.size())) - 1e-9);
  return std::max<int64_t>(1, static_cast<int64_t>(b));
}

BsgCover BsgCoverGreedy(const IntegerSet& X, const IntegerSet& Y,
                        const IntegerSet& Z, int L) {
  BsgCover out;
  std::set<std::pair<int64_t, int64_t>> open;
  for (int64_t x : X)
    for (int64_t y : Y)
      if (Z.contains(CheckedAdd(x, y))) open.emplace(x, y);

  for (int round = 0; round < L && !open.empty(); ++round) {
    int64_t best_gain = 0;
    int64_t best_sumset = 0;
    IntegerSet best_x, best_y;
    for (int64_t z : Z) {
      std::vector<int64_t> xs;
      for (int64_t x : X)
        if (Y.contains(z - x)) xs.push_back(x);
      if (xs.empty()) continue;
      IntegerSet Xz = IntegerSet::FromUnsorted(xs);
      IntegerSet Yz = Xz.Negated().Shifted(z);
      int64_t gain = 0;
      for (int64_t x : Xz)
        for (int64_t y : Yz) gain += open.count({x, y});
      if (gain == 0) continue;
      const int64_t sumset = Sumset(Xz, Yz).size();
      // More coverage first, then the smaller sumset.
      if (gain > best_gain ||
          (gain == best_gain && sumset < best_sumset)) {
        best_gain = gain;
        best_sumset = sumset;
        best_x = Xz;
        best_y = Yz;
      }
    }
    if (best_gain == 0) break;
    for (int64_t x : best_x)
      for (int64_t y : best_y) open.erase({x, y});
    out.rectangles.emplace_back(best_x, best_y);
  }
  out.remainder.assign(open.begin(), open.end());
  return out;
}

}  // namespace minplus
