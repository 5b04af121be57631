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

#include "minplus/reductions/config.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace minplus {

double SamplingLogFactor(const SamplingConfig& cfg, int n1, int n3) {
  const double delta = cfg.failure_probability;
  if (!(delta > 0.0 && delta < 1.0) || !(cfg.constant > 0.0))
    throw std::domain_error("sampling needs 0 < δ < 1 and a positive constant");
  const double cells = std::max(1.0, static_cast<double>(n1) * n3);
  return cfg.constant * std::log(cells / delta);
}

MinPlusWitnessSource MakeWitnessSource(const SamplingConfig& cfg,
                                       const MinPlusSolver& solver,
                                       uint64_t seed) {
  if (cfg.sampled_witnesses)
    return SampledWitnessSource(solver, seed, cfg.listing_failure);
  return ScanWitnessSource();
}

int64_t RelaxFromWitnesses(const MaskedMatrix& A, const MaskedMatrix& B,
                           const WitnessLists& lists, MaskedMatrix& C) {
  int64_t changed = 0;
  for (int i = 0; i < C.rows(); ++i)
    for (int j = 0; j < C.cols(); ++j)
      for (int k : lists[i][j]) {
        if (!A.has(i, k) || !B.has(k, j)) continue;
        const int64_t v = A.at(i, k) + B.at(k, j);
        if (!C.has(i, j) || v < C.at(i, j)) {
          C.set(i, j, v);
          ++changed;
        }
      }
  return changed;
}

}  // namespace minplus
