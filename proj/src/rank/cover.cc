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

#include "minplus/rank/cover.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace minplus {

int CoverInstance::MaxConflicts() const {
  size_t s = 0;
  for (const auto& c : conflicts) s = std::max(s, c.size());
  return static_cast<int>(s);
}

int64_t CoverSizeBound(int64_t n, int64_t s) {
  if (n <= 1) return 1;
  return static_cast<int64_t>(
             std::ceil(16.0 * static_cast<double>(s) *
                       std::log(static_cast<double>(n)) - 1e-9)) +
         1;
}

bool IsValidCover(const CoverInstance& inst, const CoverResult& res) {
  if (res.assignment.size() != inst.items.size()) return false;
  for (size_t i = 0; i < inst.items.size(); ++i) {
    const int a = res.assignment[i];
    if (a < 0 || a >= static_cast<int>(res.sets.size())) return false;
    const auto& S = res.sets[a];
    if (!std::binary_search(S.begin(), S.end(), inst.items[i])) return false;
    for (int c : inst.conflicts[i])
      if (std::binary_search(S.begin(), S.end(), c)) return false;
  }
  return true;
}

namespace {

enum class State : uint8_t { kUndecided, kGood, kBad, kDone };

// Segment-tree layout over [0, width): node 1 is the whole range, node v has
// children 2v and 2v+1, leaf for j is width + j.
class DyadicSums {
 public:
  explicit DyadicSums(int width) : width_(width), sum_(2 * width, 0) {}
  void Add(int j, int64_t delta) {
    for (int v = width_ + j; v >= 1; v >>= 1) sum_[v] += delta;
  }
  // Descends into the left child J1 iff 2 N(J1) >= N(J), the integer form
  // of E_{J1} >= E_J.
  int Descend() const {
    int v = 1;
    while (v < width_) {
      v = (2 * sum_[2 * v] >= sum_[v]) ? 2 * v : 2 * v + 1;
    }
    return v - width_;
  }
  int64_t Leaf(int j) const { return sum_[width_ + j]; }
  int64_t Root() const { return sum_[1]; }

 private:
  int width_;
  std::vector<int64_t> sum_;
};

void Validate(const CoverInstance& inst) {
  if (inst.r < 0) throw std::domain_error("cover universe must be >= 0");
  if (inst.items.size() != inst.conflicts.size()) {
    throw std::domain_error("items and conflict sets differ in length");
  }
  for (size_t i = 0; i < inst.items.size(); ++i) {
    const int x = inst.items[i];
    if (x < 0 || x >= inst.r) {
      throw std::domain_error("item " + std::to_string(i) + " out of range");
    }
    for (int c : inst.conflicts[i]) {
      if (c < 0 || c >= inst.r) {
        throw std::domain_error("conflict of item " + std::to_string(i) +
                                " out of range");
      }
      if (c == x) {
        throw std::domain_error("item " + std::to_string(i) +
                                " conflicts with its own element");
      }
    }
  }
}

}  // namespace

CoverResult ConflictFreeCover(const CoverInstance& inst) {
  Validate(inst);
  const int n = static_cast<int>(inst.items.size());
  CoverResult res;
  res.assignment.assign(n, -1);
  if (n == 0) return res;

  std::vector<std::vector<int>> conflicts(n);
  for (int i = 0; i < n; ++i) {
    conflicts[i] = inst.conflicts[i];
    std::sort(conflicts[i].begin(), conflicts[i].end());
    conflicts[i].erase(std::unique(conflicts[i].begin(), conflicts[i].end()),
                       conflicts[i].end());
  }
  const int64_t s = inst.MaxConflicts();
  if (s == 0) {
    std::vector<int> all(inst.items.begin(), inst.items.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    res.sets.push_back(all);
    res.assignment.assign(n, 0);
    return res;
  }

  int width = 1;
  while (width < inst.r) width <<= 1;
  std::vector<std::vector<int>> by_item(inst.r), by_conflict(inst.r);
  for (int i = 0; i < n; ++i) {
    by_item[inst.items[i]].push_back(i);
    for (int c : conflicts[i]) by_conflict[c].push_back(i);
  }

  std::vector<State> state(n, State::kUndecided);
  int remaining = n;
  while (remaining > 0) {
    // N(J) = 2s·Σ_U [x_i∈J] − 2s·Σ_G |C_i∩J| − Σ_{G∪U} |C_i∩J|.
    DyadicSums N(width);
    for (int i = 0; i < n; ++i) {
      if (state[i] == State::kDone) continue;
      state[i] = State::kUndecided;
      N.Add(inst.items[i], 2 * s);
      for (int c : conflicts[i]) N.Add(c, -1);
    }
    const int64_t live = remaining;
    int64_t good = 0;
    std::vector<int> S;
    std::vector<uint8_t> in_S(inst.r, 0);
    while (16 * s * good < live) {
      const int j = N.Descend();
      if (j >= inst.r || in_S[j] || N.Leaf(j) <= 0) {
        throw std::logic_error("conflict-free cover: no improving element");
      }
      in_S[j] = 1;
      S.push_back(j);
      for (int i : by_conflict[j]) {
        if (state[i] == State::kUndecided) {
          N.Add(inst.items[i], -2 * s);
          for (int c : conflicts[i]) N.Add(c, 1);
          state[i] = State::kBad;
        } else if (state[i] == State::kGood) {
          for (int c : conflicts[i]) N.Add(c, 2 * s + 1);
          state[i] = State::kBad;
          --good;
        }
      }
      for (int i : by_item[j]) {
        if (state[i] != State::kUndecided) continue;
        // x_i = j just entered S; C_i ∩ S = ∅ still holds.
        N.Add(inst.items[i], -2 * s);
        for (int c : conflicts[i]) N.Add(c, -2 * s);
        state[i] = State::kGood;
        ++good;
      }
    }
    std::sort(S.begin(), S.end());
    const int index = static_cast<int>(res.sets.size());
    res.sets.push_back(std::move(S));
    for (int i = 0; i < n; ++i)
      if (state[i] == State::kGood) {
        state[i] = State::kDone;
        res.assignment[i] = index;
        --remaining;
      }
  }
  return res;
}

}  // namespace minplus
