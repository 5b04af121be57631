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

#ifndef MINPLUS_CORE_TRIANGLE_H_
#define MINPLUS_CORE_TRIANGLE_H_

#include <array>
#include <functional>
#include <vector>

#include "minplus/core/masked_matrix.h"

namespace minplus {

// A is n1×n2, B is n2×n3, C is n1×n3. Triple (i, k, j) is exact when
// A[i,k] + B[k,j] = C[i,j].
struct TriangleInstance {
  MaskedMatrix A;
  MaskedMatrix B;
  MaskedMatrix C;

  int n1() const { return A.rows(); }
  int n2() const { return A.cols(); }
  int n3() const { return B.cols(); }

  // Throws ShapeError on incompatible dimensions.
  void Validate() const;
  bool IsExact(int i, int k, int j) const;
  bool operator==(const TriangleInstance& o) const = default;
};

// Per-edge participation flags for the three matrices.
struct EdgeFlags {
  FlagMatrix a;
  FlagMatrix b;
  FlagMatrix c;

  static EdgeFlags For(const TriangleInstance& inst);
  void Mark(int i, int k, int j) {
    a.set(i, k);
    b.set(k, j);
    c.set(i, j);
  }
  void OrWith(const EdgeFlags& o);
  bool operator==(const EdgeFlags& o) const = default;
};

using Triple = std::array<int, 3>;  // (i, k, j)

using TriangleSolver = std::function<EdgeFlags(const TriangleInstance&)>;
using MinPlusSolver =
    std::function<MaskedMatrix(const MaskedMatrix&, const MaskedMatrix&)>;

}  // namespace minplus

#endif  // MINPLUS_CORE_TRIANGLE_H_
