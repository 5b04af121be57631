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

#ifndef MINPLUS_ADDCOMB_INTEGER_SET_H_
#define MINPLUS_ADDCOMB_INTEGER_SET_H_

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace minplus {

// Sorted, duplicate-free set of integers.
class IntegerSet {
 public:
  IntegerSet() = default;
  IntegerSet(std::initializer_list<int64_t> xs);
  static IntegerSet FromUnsorted(std::vector<int64_t> xs);
  static IntegerSet Range(int64_t lo, int64_t hi);  // {lo..hi}

  const std::vector<int64_t>& elements() const { return elems_; }
  int64_t size() const { return static_cast<int64_t>(elems_.size()); }
  bool empty() const { return elems_.empty(); }
  bool contains(int64_t x) const;
  // Position of x among the elements, or -1.
  int64_t IndexOf(int64_t x) const;
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }
  int64_t operator[](size_t i) const { return elems_[i]; }

  IntegerSet Shifted(int64_t s) const;
  IntegerSet Negated() const;
  IntegerSet Intersect(const IntegerSet& o) const;
  IntegerSet Union(const IntegerSet& o) const;
  IntegerSet Minus(const IntegerSet& o) const;

  bool operator==(const IntegerSet& o) const = default;
  std::string DebugString() const;

 private:
  std::vector<int64_t> elems_;
};

// z -> r_{X+Y}(z), for every z in X+Y.
using Multiplicities = std::map<int64_t, int64_t>;

Multiplicities SumsetWithMultiplicities(const IntegerSet& X,
                                        const IntegerSet& Y);
IntegerSet Sumset(const IntegerSet& X, const IntegerSet& Y);
IntegerSet Difference(const IntegerSet& X, const IntegerSet& Y);  // X - Y
// nX - mX; 0X is {0}.
IntegerSet IteratedSumset(const IntegerSet& X, int n, int m);

// {z : r_{X+Y}(z) >= s}. Throws std::domain_error for s < 1.
IntegerSet PopularSums(const IntegerSet& X, const IntegerSet& Y, int64_t s);
// {z : r_{X+Y}(z) >= num/den}, for fractional thresholds.
IntegerSet PopularSumsAtLeast(const IntegerSet& X, const IntegerSet& Y,
                              int64_t num, int64_t den);

// |X+X| / |X|, kept unreduced.
struct Ratio {
  int64_t num = 0;
  int64_t den = 1;
  double value() const { return static_cast<double>(num) / den; }
  bool operator==(const Ratio& o) const { return num * o.den == o.num * den; }
  bool AtMost(int64_t k) const { return num <= k * den; }
  std::string ToString() const;
};

// Throws std::domain_error for an empty set.
Ratio DoublingConstant(const IntegerSet& X);

}  // namespace minplus

#endif  // MINPLUS_ADDCOMB_INTEGER_SET_H_
