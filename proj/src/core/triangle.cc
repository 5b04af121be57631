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

#include "minplus/core/triangle.h"

#include <string>

#include "minplus/core/checked.h"

namespace minplus {

void TriangleInstance::Validate() const {
  if (A.cols() != B.rows() || A.rows() != C.rows() || B.cols() != C.cols()) {
    throw ShapeError("triangle instance shapes disagree: A " +
                     std::to_string(A.rows()) + "x" + std::to_string(A.cols()) +
                     ", B " + std::to_string(B.rows()) + "x" +
                     std::to_string(B.cols()) + ", C " +
                     std::to_string(C.rows()) + "x" + std::to_string(C.cols()));
  }
}

bool TriangleInstance::IsExact(int i, int k, int j) const {
  return A.has(i, k) && B.has(k, j) && C.has(i, j) &&
         CheckedAdd(A.at(i, k), B.at(k, j)) == C.at(i, j);
}

EdgeFlags EdgeFlags::For(const TriangleInstance& inst) {
  return EdgeFlags{FlagMatrix(inst.n1(), inst.n2()),
                   FlagMatrix(inst.n2(), inst.n3()),
                   FlagMatrix(inst.n1(), inst.n3())};
}

void EdgeFlags::OrWith(const EdgeFlags& o) {
  a.OrWith(o.a);
  b.OrWith(o.b);
  c.OrWith(o.c);
}

}  // namespace minplus
