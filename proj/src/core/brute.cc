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

#include "minplus/core/brute.h"

#include "minplus/core/checked.h"

namespace minplus {

void CheckProductShapes(const MaskedMatrix& A, const MaskedMatrix& B) {
  if (A.cols() != B.rows()) {
    throw ShapeError("inner dimensions disagree: " + std::to_string(A.cols()) +
                     " vs " + std::to_string(B.rows()));
  }
}

MaskedMatrix MinPlusBrute(const MaskedMatrix& A, const MaskedMatrix& B) {
  CheckProductShapes(A, B);
  MaskedMatrix C(A.rows(), B.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int k = 0; k < A.cols(); ++k) {
      if (!A.has(i, k)) continue;
      for (int j = 0; j < B.cols(); ++j)
        if (B.has(k, j)) C.RelaxMin(i, j, CheckedAdd(A.at(i, k), B.at(k, j)));
    }
  return C;
}

EdgeFlags ExactTriangleBrute(const TriangleInstance& inst) {
  inst.Validate();
  EdgeFlags f = EdgeFlags::For(inst);
  for (const Triple& t : ExactTrianglesBrute(inst)) f.Mark(t[0], t[1], t[2]);
  return f;
}

std::vector<Triple> ExactTrianglesBrute(const TriangleInstance& inst) {
  inst.Validate();
  std::vector<Triple> out;
  for (int i = 0; i < inst.n1(); ++i)
    for (int k = 0; k < inst.n2(); ++k) {
      if (!inst.A.has(i, k)) continue;
      for (int j = 0; j < inst.n3(); ++j)
        if (inst.IsExact(i, k, j)) out.push_back({i, k, j});
    }
  return out;
}

WitnessLists MinPlusWitnessesBrute(const MaskedMatrix& A,
                                   const MaskedMatrix& B) {
  MaskedMatrix C = MinPlusBrute(A, B);
  WitnessLists w(A.rows(), std::vector<std::vector<int>>(B.cols()));
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < B.cols(); ++j) {
      if (!C.has(i, j)) continue;
      for (int k = 0; k < A.cols(); ++k)
        if (A.has(i, k) && B.has(k, j) && A.at(i, k) + B.at(k, j) == C.at(i, j))
          w[i][j].push_back(k);
    }
  return w;
}

}  // namespace minplus
