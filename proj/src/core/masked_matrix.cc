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

#include "minplus/core/masked_matrix.h"

#include <algorithm>
#include <sstream>

#include "minplus/core/checked.h"

namespace minplus {

MaskedMatrix::MaskedMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw ShapeError("negative matrix dimension");
  values_.assign(static_cast<size_t>(rows) * cols, 0);
  present_.assign(static_cast<size_t>(rows) * cols, 0);
}

MaskedMatrix MaskedMatrix::FromRows(
    const std::vector<std::vector<Entry>>& rows) {
  const int n = static_cast<int>(rows.size());
  const int m = n == 0 ? 0 : static_cast<int>(rows[0].size());
  MaskedMatrix out(n, m);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != m) {
      throw ShapeError("ragged rows in matrix literal");
    }
    for (int j = 0; j < m; ++j) out.set(i, j, rows[i][j]);
  }
  return out;
}

MaskedMatrix MaskedMatrix::Filled(int rows, int cols, int64_t value) {
  MaskedMatrix out(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out.set(i, j, value);
  return out;
}

int64_t MaskedMatrix::CountPresent() const {
  return std::count(present_.begin(), present_.end(), uint8_t{1});
}

namespace {
std::vector<int64_t> SortedUnique(std::vector<int64_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}
}  // namespace

std::vector<int64_t> MaskedMatrix::DistinctValues() const {
  std::vector<int64_t> v;
  for (size_t p = 0; p < values_.size(); ++p)
    if (present_[p]) v.push_back(values_[p]);
  return SortedUnique(std::move(v));
}

std::vector<int64_t> MaskedMatrix::RowValues(int i) const {
  std::vector<int64_t> v;
  for (int j = 0; j < cols_; ++j)
    if (has(i, j)) v.push_back(at(i, j));
  return SortedUnique(std::move(v));
}

std::vector<int64_t> MaskedMatrix::ColValues(int j) const {
  std::vector<int64_t> v;
  for (int i = 0; i < rows_; ++i)
    if (has(i, j)) v.push_back(at(i, j));
  return SortedUnique(std::move(v));
}

std::optional<int64_t> MaskedMatrix::MinValue() const {
  std::optional<int64_t> best;
  for (size_t p = 0; p < values_.size(); ++p)
    if (present_[p] && (!best || values_[p] < *best)) best = values_[p];
  return best;
}

std::optional<int64_t> MaskedMatrix::MaxValue() const {
  std::optional<int64_t> best;
  for (size_t p = 0; p < values_.size(); ++p)
    if (present_[p] && (!best || values_[p] > *best)) best = values_[p];
  return best;
}

MaskedMatrix MaskedMatrix::Transposed() const {
  MaskedMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (has(i, j)) out.set(j, i, at(i, j));
  return out;
}

MaskedMatrix MaskedMatrix::Negated() const {
  MaskedMatrix out(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (has(i, j)) out.set(i, j, CheckedNeg(at(i, j)));
  return out;
}

MaskedMatrix MaskedMatrix::FloorDivided(int64_t divisor) const {
  MaskedMatrix out(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (has(i, j)) out.set(i, j, FloorDiv(at(i, j), divisor));
  return out;
}

MaskedMatrix MaskedMatrix::SelectCols(const std::vector<int>& cols) const {
  MaskedMatrix out(rows_, static_cast<int>(cols.size()));
  for (int i = 0; i < rows_; ++i)
    for (size_t c = 0; c < cols.size(); ++c)
      out.set(i, static_cast<int>(c), get(i, cols[c]));
  return out;
}

MaskedMatrix MaskedMatrix::SelectRows(const std::vector<int>& rows) const {
  MaskedMatrix out(static_cast<int>(rows.size()), cols_);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int j = 0; j < cols_; ++j)
      out.set(static_cast<int>(r), j, get(rows[r], j));
  return out;
}

std::string MaskedMatrix::DebugString() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ",";
      if (has(i, j)) {
        os << at(i, j);
      } else {
        os << "_";
      }
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

IntMatrix IntMatrix::Transposed() const {
  IntMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

int64_t FlagMatrix::Count() const {
  return std::count(data_.begin(), data_.end(), uint8_t{1});
}

FlagMatrix FlagMatrix::Transposed() const {
  FlagMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(j, i, get(i, j));
  return out;
}

void FlagMatrix::OrWith(const FlagMatrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) {
    throw ShapeError("flag matrix shape mismatch");
  }
  for (size_t p = 0; p < data_.size(); ++p) data_[p] |= o.data_[p];
}

bool IsPartitionOf(const MaskedMatrix& source,
                   const std::vector<MaskedMatrix>& parts) {
  for (const MaskedMatrix& p : parts) {
    if (p.rows() != source.rows() || p.cols() != source.cols()) return false;
  }
  for (int i = 0; i < source.rows(); ++i) {
    for (int j = 0; j < source.cols(); ++j) {
      int hits = 0;
      for (const MaskedMatrix& p : parts) {
        if (!p.has(i, j)) continue;
        if (!source.has(i, j) || p.at(i, j) != source.at(i, j)) return false;
        ++hits;
      }
      if (hits != (source.has(i, j) ? 1 : 0)) return false;
    }
  }
  return true;
}

}  // namespace minplus
