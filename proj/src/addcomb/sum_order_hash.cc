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

#include "minplus/addcomb/sum_order_hash.h"

#include <stdexcept>

namespace minplus {

int64_t SumOrderHash::operator()(int64_t x) const {
  const int64_t t = domain.IndexOf(x);
  if (t < 0) throw std::out_of_range("value outside the hash domain");
  return values[t];
}

bool VerifySumOrderPreserving(const SumOrderHash& h) {
  const auto& y = h.domain.elements();
  const size_t m = y.size();
  if (h.values.size() != m) return false;
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b)
      for (size_t c = 0; c < m; ++c)
        for (size_t d = 0; d < m; ++d)
          if (y[a] + y[b] < y[c] + y[d] &&
              !(h.values[a] + h.values[b] < h.values[c] + h.values[d]))
            return false;
  return true;
}

namespace {

class Backtracker {
 public:
  Backtracker(const std::vector<int64_t>& y, int64_t top, int64_t* nodes,
              int64_t budget)
      : y_(y), top_(top), nodes_(nodes), budget_(budget), h_(y.size()) {}

  // kFound fills values(); kBudget aborts the whole search.
  HashSearchStatus Run() { return Extend(0); }
  const std::vector<int64_t>& values() const { return h_; }

 private:
  // New element t must agree with every quadruple it takes part in. Since
  // x < y forces 2h(x) < 2h(y), images are strictly increasing.
  bool Consistent(size_t t) const {
    for (size_t a = 0; a <= t; ++a)
      for (size_t b = a; b <= t; ++b)
        for (size_t c = 0; c <= t; ++c) {
          const int64_t lhs = y_[a] + y_[b];
          const int64_t hl = h_[a] + h_[b];
          // Pairs (c, t) against (a, b), in both directions.
          const int64_t rhs = y_[c] + y_[t];
          const int64_t hr = h_[c] + h_[t];
          if (lhs < rhs && !(hl < hr)) return false;
          if (rhs < lhs && !(hr < hl)) return false;
        }
    return true;
  }

  HashSearchStatus Extend(size_t t) {
    if (t == y_.size()) return HashSearchStatus::kFound;
    const int64_t lo = t == 0 ? 0 : h_[t - 1] + 1;
    for (int64_t v = lo; v <= top_; ++v) {
      if (++*nodes_ > budget_) return HashSearchStatus::kBudget;
      h_[t] = v;
      if (!Consistent(t)) continue;
      HashSearchStatus s = Extend(t + 1);
      if (s != HashSearchStatus::kNone) return s;
    }
    return HashSearchStatus::kNone;
  }

  const std::vector<int64_t>& y_;
  int64_t top_;
  int64_t* nodes_;
  int64_t budget_;
  std::vector<int64_t> h_;
};

// Visits every k-subset of [n] in lexicographic order until `fn` says stop.
template <typename Fn>
bool ForEachSubset(int n, int k, Fn&& fn) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (fn(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

HashSearchResult SumOrderHashSearch(const IntegerSet& X, int64_t budget,
                                    int full_search_limit) {
  HashSearchResult res;
  const int n = static_cast<int>(X.size());
  if (n == 0) return res;
  const int64_t top = n;
  const int smallest = n <= full_search_limit ? 1 : n;
  for (int k = n; k >= smallest; --k) {
    bool budget_hit = false;
    const bool found = ForEachSubset(n, k, [&](const std::vector<int>& idx) {
      std::vector<int64_t> y;
      for (int i : idx) y.push_back(X[i]);
      Backtracker bt(y, top, &res.nodes, budget);
      HashSearchStatus s = bt.Run();
      if (s == HashSearchStatus::kBudget) {
        budget_hit = true;
        return true;
      }
      if (s == HashSearchStatus::kFound) {
        res.hash.domain = IntegerSet::FromUnsorted(y);
        res.hash.values = bt.values();
        return true;
      }
      return false;
    });
    if (budget_hit) {
      res.status = HashSearchStatus::kBudget;
      res.hash = {};
      return res;
    }
    if (found) {
      res.status = HashSearchStatus::kFound;
      return res;
    }
  }
  res.status = HashSearchStatus::kNone;
  return res;
}

}  // namespace minplus
