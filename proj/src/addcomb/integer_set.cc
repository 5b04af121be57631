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

#include "minplus/addcomb/integer_set.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "minplus/core/checked.h"

namespace minplus {

IntegerSet::IntegerSet(std::initializer_list<int64_t> xs)
    : IntegerSet(FromUnsorted(std::vector<int64_t>(xs))) {}

IntegerSet IntegerSet::FromUnsorted(std::vector<int64_t> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  IntegerSet s;
  s.elems_ = std::move(xs);
  return s;
}

IntegerSet IntegerSet::Range(int64_t lo, int64_t hi) {
  IntegerSet s;
  for (int64_t x = lo; x <= hi; ++x) s.elems_.push_back(x);
  return s;
}

bool IntegerSet::contains(int64_t x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

int64_t IntegerSet::IndexOf(int64_t x) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
  if (it == elems_.end() || *it != x) return -1;
  return it - elems_.begin();
}

IntegerSet IntegerSet::Shifted(int64_t s) const {
  IntegerSet out;
  out.elems_.reserve(elems_.size());
  for (int64_t x : elems_) out.elems_.push_back(CheckedAdd(x, s));
  return out;
}

IntegerSet IntegerSet::Negated() const {
  IntegerSet out;
  for (auto it = elems_.rbegin(); it != elems_.rend(); ++it)
    out.elems_.push_back(CheckedNeg(*it));
  return out;
}

IntegerSet IntegerSet::Intersect(const IntegerSet& o) const {
  IntegerSet out;
  std::set_intersection(elems_.begin(), elems_.end(), o.elems_.begin(),
                        o.elems_.end(), std::back_inserter(out.elems_));
  return out;
}

IntegerSet IntegerSet::Union(const IntegerSet& o) const {
  IntegerSet out;
  std::set_union(elems_.begin(), elems_.end(), o.elems_.begin(),
                 o.elems_.end(), std::back_inserter(out.elems_));
  return out;
}

IntegerSet IntegerSet::Minus(const IntegerSet& o) const {
  IntegerSet out;
  std::set_difference(elems_.begin(), elems_.end(), o.elems_.begin(),
                      o.elems_.end(), std::back_inserter(out.elems_));
  return out;
}

std::string IntegerSet::DebugString() const {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < elems_.size(); ++i) os << (i ? "," : "") << elems_[i];
  os << "}";
  return os.str();
}

Multiplicities SumsetWithMultiplicities(const IntegerSet& X,
                                        const IntegerSet& Y) {
  Multiplicities r;
  for (int64_t x : X)
    for (int64_t y : Y) ++r[CheckedAdd(x, y)];
  return r;
}

IntegerSet Sumset(const IntegerSet& X, const IntegerSet& Y) {
  std::vector<int64_t> v;
  v.reserve(X.size() * Y.size());
  for (int64_t x : X)
    for (int64_t y : Y) v.push_back(CheckedAdd(x, y));
  return IntegerSet::FromUnsorted(std::move(v));
}

IntegerSet Difference(const IntegerSet& X, const IntegerSet& Y) {
  return Sumset(X, Y.Negated());
}

IntegerSet IteratedSumset(const IntegerSet& X, int n, int m) {
  IntegerSet acc{0};
  for (int t = 0; t < n; ++t) acc = Sumset(acc, X);
  const IntegerSet neg = X.Negated();
  for (int t = 0; t < m; ++t) acc = Sumset(acc, neg);
  return acc;
}

IntegerSet PopularSums(const IntegerSet& X, const IntegerSet& Y, int64_t s) {
  if (s < 1) throw std::domain_error("popularity threshold must be >= 1");
  return PopularSumsAtLeast(X, Y, s, 1);
}

IntegerSet PopularSumsAtLeast(const IntegerSet& X, const IntegerSet& Y,
                              int64_t num, int64_t den) {
  std::vector<int64_t> v;
  for (const auto& [z, count] : SumsetWithMultiplicities(X, Y))
    if (count * den >= num) v.push_back(z);
  return IntegerSet::FromUnsorted(std::move(v));
}

std::string Ratio::ToString() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

Ratio DoublingConstant(const IntegerSet& X) {
  if (X.empty()) throw std::domain_error("doubling of the empty set");
  return Ratio{Sumset(X, X).size(), X.size()};
}

}  // namespace minplus
