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

#ifndef MINPLUS_CORE_MASKED_MATRIX_H_
#define MINPLUS_CORE_MASKED_MATRIX_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace minplus {

// Missing entries are std::nullopt. x + ⊥ = ⊥ and min(x, ⊥) = x.
using Entry = std::optional<int64_t>;

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class MaskedMatrix {
 public:
  MaskedMatrix() = default;
  MaskedMatrix(int rows, int cols);  // all entries ⊥

  static MaskedMatrix FromRows(const std::vector<std::vector<Entry>>& rows);
  // Fully populated matrix.
  static MaskedMatrix Filled(int rows, int cols, int64_t value);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool has(int i, int j) const { return present_[Index(i, j)] != 0; }
  // Value of a present entry; undefined for ⊥.
  int64_t at(int i, int j) const { return values_[Index(i, j)]; }
  Entry get(int i, int j) const {
    return has(i, j) ? Entry(at(i, j)) : std::nullopt;
  }
  void set(int i, int j, int64_t v) {
    values_[Index(i, j)] = v;
    present_[Index(i, j)] = 1;
  }
  void set(int i, int j, Entry v) {
    if (v) {
      set(i, j, *v);
    } else {
      clear(i, j);
    }
  }
  void clear(int i, int j) {
    values_[Index(i, j)] = 0;
    present_[Index(i, j)] = 0;
  }
  // Lowers the entry to v if v is smaller or the entry is ⊥.
  void RelaxMin(int i, int j, int64_t v) {
    if (!has(i, j) || v < at(i, j)) set(i, j, v);
  }

  int64_t CountPresent() const;
  bool Empty() const { return CountPresent() == 0; }
  // Sorted distinct non-⊥ values.
  std::vector<int64_t> DistinctValues() const;
  std::vector<int64_t> RowValues(int i) const;  // sorted distinct
  std::vector<int64_t> ColValues(int j) const;  // sorted distinct
  std::optional<int64_t> MinValue() const;
  std::optional<int64_t> MaxValue() const;

  MaskedMatrix Transposed() const;
  MaskedMatrix Negated() const;
  // Entries floor-divided by a positive divisor.
  MaskedMatrix FloorDivided(int64_t divisor) const;
  MaskedMatrix SelectCols(const std::vector<int>& cols) const;
  MaskedMatrix SelectRows(const std::vector<int>& rows) const;

  bool operator==(const MaskedMatrix& o) const = default;

  std::string DebugString() const;

 private:
  size_t Index(int i, int j) const {
    return static_cast<size_t>(i) * static_cast<size_t>(cols_) +
           static_cast<size_t>(j);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<int64_t> values_;
  std::vector<uint8_t> present_;
};

// Dense integer matrix, used for U and V of rank decompositions.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols, int64_t fill = 0)
      : rows_(rows), cols_(cols),
        data_(static_cast<size_t>(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int64_t& operator()(int i, int j) {
    return data_[static_cast<size_t>(i) * cols_ + j];
  }
  int64_t operator()(int i, int j) const {
    return data_[static_cast<size_t>(i) * cols_ + j];
  }
  IntMatrix Transposed() const;
  bool operator==(const IntMatrix& o) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int64_t> data_;
};

// Boolean per-entry flags with the same shape as some MaskedMatrix.
class FlagMatrix {
 public:
  FlagMatrix() = default;
  FlagMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool get(int i, int j) const {
    return data_[static_cast<size_t>(i) * cols_ + j] != 0;
  }
  void set(int i, int j, bool v = true) {
    data_[static_cast<size_t>(i) * cols_ + j] = v ? 1 : 0;
  }
  int64_t Count() const;
  FlagMatrix Transposed() const;
  void OrWith(const FlagMatrix& o);
  bool operator==(const FlagMatrix& o) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<uint8_t> data_;
};

// A = A_1 ⊔ ... ⊔ A_p: every present entry of `source` is present in exactly
// one part with the same value, and parts have no other entries.
bool IsPartitionOf(const MaskedMatrix& source,
                   const std::vector<MaskedMatrix>& parts);

}  // namespace minplus

#endif  // MINPLUS_CORE_MASKED_MATRIX_H_
