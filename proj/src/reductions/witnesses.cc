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

#include "minplus/reductions/witnesses.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "minplus/core/random.h"
#include "minplus/triangle/solve.h"

namespace minplus {

namespace {

bool IsWitness(const MaskedMatrix& A, const MaskedMatrix& B,
               const MaskedMatrix& P, int i, int k, int j) {
  return A.has(i, k) && B.has(k, j) && P.has(i, j) &&
         A.at(i, k) + B.at(k, j) == P.at(i, j);
}

MinPlusListing ListWithProduct(const MaskedMatrix& A, const MaskedMatrix& B,
                               const MaskedMatrix& P, int t,
                               const MinPlusSolver& solver, uint64_t seed,
                               double delta) {
  const int n1 = A.rows(), n2 = A.cols(), n3 = B.cols();
  MinPlusListing out;
  out.lists.assign(n1, std::vector<std::vector<int>>(n3));
  if (n2 == 0) return out;
  const int64_t reps =
      ListingRepetitions(static_cast<int64_t>(n1) * n3, t, delta);
  int64_t open = P.CountPresent();
  auto restrict_to = [&](const std::vector<bool>& keep) {
    MaskedMatrix x = A;
    for (int k = 0; k < n2; ++k)
      if (!keep[k])
        for (int i = 0; i < n1; ++i) x.clear(i, k);
    ++out.solver_calls;
    return solver(x, B);
  };
  // A cell is hit when the restricted product still attains the full value.
  auto hit = [&](const MaskedMatrix& Q, int i, int j) {
    return Q.has(i, j) && Q.at(i, j) == P.at(i, j);
  };
  Rng rng(seed);
  const int bits = std::max(
      1, static_cast<int>(std::bit_width(static_cast<unsigned>(n2 - 1))));
  const int levels = static_cast<int>(std::bit_width(static_cast<unsigned>(n2)));
  for (int level = 0; level < levels && open > 0; ++level) {
    const double rate = std::ldexp(1.0, -level);
    const int64_t level_reps = level == 0 ? 1 : reps;
    for (int64_t rep = 0; rep < level_reps && open > 0; ++rep) {
      std::vector<bool> keep(n2, false);
      for (int k = 0; k < n2; ++k) keep[k] = rng.Bernoulli(rate);
      const MaskedMatrix base = level == 0 ? P : restrict_to(keep);
      bool any = false;
      for (int i = 0; i < n1 && !any; ++i)
        for (int j = 0; j < n3 && !any; ++j)
          any = P.has(i, j) && hit(base, i, j);
      if (!any) continue;
      std::vector<MaskedMatrix> by_bit;
      for (int b = 0; b < bits; ++b) {
        std::vector<bool> sub = keep;
        for (int k = 0; k < n2; ++k) sub[k] = sub[k] && ((k >> b) & 1);
        by_bit.push_back(restrict_to(sub));
      }
      for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n3; ++j) {
          if (!P.has(i, j) || !hit(base, i, j)) continue;
          int k = 0;
          for (int b = 0; b < bits; ++b)
            if (hit(by_bit[b], i, j)) k |= 1 << b;
          auto& list = out.lists[i][j];
          if (k < n2 && keep[k] && IsWitness(A, B, P, i, k, j) &&
              static_cast<int>(list.size()) < t &&
              std::find(list.begin(), list.end(), k) == list.end()) {
            list.push_back(k);
            if (static_cast<int>(list.size()) == t) --open;
          }
        }
    }
  }
  for (auto& row : out.lists)
    for (auto& list : row) std::sort(list.begin(), list.end());
  return out;
}

}  // namespace

MinPlusListing ListWitnessesMinPlus(const MaskedMatrix& A,
                                    const MaskedMatrix& B, int t,
                                    const MinPlusSolver& solver,
                                    uint64_t seed, double delta) {
  CheckProductShapes(A, B);
  if (t < 1) throw std::domain_error("witness count must be positive");
  const MaskedMatrix P = solver(A, B);
  MinPlusListing out = ListWithProduct(A, B, P, t, solver, seed, delta);
  ++out.solver_calls;
  return out;
}

MinPlusWitnessSource ScanWitnessSource() {
  return [](const MaskedMatrix& A, const MaskedMatrix& B,
            const MaskedMatrix& P, int t) {
    WitnessLists out(A.rows(), std::vector<std::vector<int>>(B.cols()));
    for (int i = 0; i < A.rows(); ++i)
      for (int j = 0; j < B.cols(); ++j)
        for (int k = 0; k < A.cols() && static_cast<int>(out[i][j].size()) < t;
             ++k)
          if (IsWitness(A, B, P, i, k, j)) out[i][j].push_back(k);
    return out;
  };
}

MinPlusWitnessSource SampledWitnessSource(MinPlusSolver solver, uint64_t seed,
                                          double delta) {
  auto calls = std::make_shared<uint64_t>(0);
  return [solver = std::move(solver), seed, delta, calls](
             const MaskedMatrix& A, const MaskedMatrix& B,
             const MaskedMatrix& P, int t) {
    return ListWithProduct(A, B, P, t, solver, DeriveSeed(seed, (*calls)++),
                           delta)
        .lists;
  };
}

TriangleWitnessSource ScanTriangleWitnessSource() {
  return [](const TriangleInstance& inst, const FlagMatrix& c, int t) {
    WitnessLists out(inst.n1(), std::vector<std::vector<int>>(inst.n3()));
    for (int i = 0; i < inst.n1(); ++i)
      for (int j = 0; j < inst.n3(); ++j) {
        if (!c.get(i, j)) continue;
        for (int k = 0; k < inst.n2() && static_cast<int>(out[i][j].size()) < t;
             ++k)
          if (inst.IsExact(i, k, j)) out[i][j].push_back(k);
      }
    return out;
  };
}

TriangleWitnessSource SampledTriangleWitnessSource(TriangleSolver solver,
                                                   uint64_t seed,
                                                   double delta) {
  auto calls = std::make_shared<uint64_t>(0);
  return [solver = std::move(solver), seed, delta, calls](
             const TriangleInstance& inst, const FlagMatrix&, int t) {
    return ListThirdEdgeWitnesses(inst, t, solver,
                                  DeriveSeed(seed, (*calls)++), delta);
  };
}

}  // namespace minplus
