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

#ifndef MINPLUS_CORE_BRUTE_H_
#define MINPLUS_CORE_BRUTE_H_

#include <vector>

#include "minplus/core/masked_matrix.h"
#include "minplus/core/triangle.h"

namespace minplus {

// Triple-loop reference implementations. Everything else is checked
// against these.
MaskedMatrix MinPlusBrute(const MaskedMatrix& A, const MaskedMatrix& B);
EdgeFlags ExactTriangleBrute(const TriangleInstance& inst);
std::vector<Triple> ExactTrianglesBrute(const TriangleInstance& inst);

// All witnesses of every cell of A*B, in increasing k. Indexed [i][j].
using WitnessLists = std::vector<std::vector<std::vector<int>>>;
WitnessLists MinPlusWitnessesBrute(const MaskedMatrix& A,
                                   const MaskedMatrix& B);

void CheckProductShapes(const MaskedMatrix& A, const MaskedMatrix& B);

}  // namespace minplus

#endif  // MINPLUS_CORE_BRUTE_H_
