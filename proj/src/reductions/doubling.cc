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

#include "minplus/reductions/doubling.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "minplus/core/brute.h"
#include "minplus/core/checked.h"
#include "minplus/core/random.h"
#include "minplus/rank/decomposition.h"

namespace minplus {

namespace {

// ⌊M/2^l⌋ on the entries whose residue mod 2^l is in the lower (x = 0) or
// upper (x = 1) half. At l = 0 everything is in the lower half.
MaskedMatrix ScaleClass(const MaskedMatrix& M, int l, int x) {
  MaskedMatrix out(M.rows(), M.cols());
  const int64_t base = int64_t{1} << l;
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) {
      if (!M.has(i, j)) continue;
      const int64_t v = M.at(i, j);
      const bool upper = l > 0 && FloorMod(v, base) >= base / 2;
      if (upper == (x == 1)) out.set(i, j, FloorDiv(v, base));
    }
  return out;
}

int64_t RelaxFrom(const MaskedMatrix& A, const MaskedMatrix& B,
                  const std::vector<int>& cols, const MaskedMatrix& AK,
                  const MaskedMatrix& BK, const MaskedMatrix& P,
                  MaskedMatrix& C) {
  int64_t changed = 0;
  for (int i = 0; i < C.rows(); ++i)
    for (int j = 0; j < C.cols(); ++j) {
      if (!P.has(i, j)) continue;
      for (size_t s = 0; s < cols.size(); ++s)
        if (AK.has(i, s) && BK.has(s, j) &&
            AK.at(i, s) + BK.at(s, j) == P.at(i, j)) {
          const int k = cols[s];
          const int64_t v = A.at(i, k) + B.at(k, j);
          if (!C.has(i, j) || v < C.at(i, j)) {
            C.set(i, j, v);
            ++changed;
          }
        }
    }
  return changed;
}

}  // namespace

MaskedMatrix DoublingReduction(const MaskedMatrix& A, const MaskedMatrix& B,
                               int64_t K, const MinPlusSolver& solver,
                               uint64_t seed, const SamplingConfig& cfg,
                               const TriangleKnobs& knobs,
                               DoublingStats* stats, unsigned classes) {
  CheckProductShapes(A, B);
  if (A.MinValue().value_or(0) < 0 || B.MinValue().value_or(0) < 0)
    throw std::domain_error("entries must be non-negative");
  if (K < 1) throw std::domain_error("doubling limit must be positive");
  DoublingStats local;
  DoublingStats& st = stats != nullptr ? *stats : local;
  st = DoublingStats{};
  const int n1 = A.rows(), n2 = A.cols(), n3 = B.cols();
  MaskedMatrix C(n1, n3);
  if (n2 == 0) return C;
  const int t = static_cast<int>(std::min<int64_t>(K, n2));
  st.t = t;
  const int64_t u = std::max(A.MaxValue().value_or(0), B.MaxValue().value_or(0));
  const int L = static_cast<int>(std::bit_width(static_cast<uint64_t>(u)));
  st.levels = L + 1;
  const double rate = std::min(1.0, SamplingLogFactor(cfg, n1, n3) / t);
  MinPlusWitnessSource witnesses =
      MakeWitnessSource(cfg, solver, DeriveSeed(seed, "list"));

  // Pairs with more than t witnesses keep one in a sample at this rate.
  if (classes & kPopularPairs) {
    const std::vector<int> K1 = Rng(DeriveSeed(seed, "popular")).Sample(n2, rate);
    const MaskedMatrix AK = A.SelectCols(K1), BK = B.SelectRows(K1);
    st.popular_updates += RelaxFrom(A, B, K1, AK, BK, MinPlusBrute(AK, BK), C);
  }

  // At scale L every entry truncates to 0, so the witnesses of the scaled
  // product are all k where both entries exist.
  if (classes & kUnpopularPairs) {
    const MaskedMatrix AL = A.FloorDivided(int64_t{1} << L);
    const MaskedMatrix BL = B.FloorDivided(int64_t{1} << L);
    const MaskedMatrix P = solver(AL, BL);
    ++st.solver_calls;
    st.unpopular_updates += RelaxFromWitnesses(A, B, witnesses(AL, BL, P, t), C);
  }

  // The remaining pairs: R over a sample is within 2^(l+1) of A*B at the
  // scale l where the pair's near-witnesses first exceed t.
  if (!(classes & kOrdinaryPairs)) return C;
  const std::vector<int> K2 = Rng(DeriveSeed(seed, "ordinary")).Sample(n2, rate);
  st.sample_size = static_cast<int64_t>(K2.size());
  if (K2.empty()) return C;
  const MaskedMatrix U = A.SelectCols(K2), V = B.SelectRows(K2);
  const MaskedMatrix R = MinPlusBrute(U, V);
  const WitnessLists S = MinPlusWitnessesBrute(U, V);
  const int r = static_cast<int>(K2.size());

  TriangleKnobs tk = knobs;
  tk.K = K;
  for (int l = 0; l <= L; ++l) {
    const int64_t base = int64_t{1} << l;
    for (int z = 0; z <= 3; ++z) {
      // ⌊(U+V)/2^l⌋ = ⌊U/2^l⌋ + ⌊V/2^l⌋ + carry, so each sampled column
      // splits in two by its carry.
      RankDecomposition d;
      d.r = 2 * r;
      d.U = IntMatrix(n1, d.r);
      d.V = IntMatrix(d.r, n3);
      d.S = MaskedMatrix(n1, n3);
      MaskedMatrix Rl(n1, n3);
      for (int s = 0; s < r; ++s)
        for (int c = 0; c <= 1; ++c) {
          for (int i = 0; i < n1; ++i)
            d.U(i, 2 * s + c) =
                (U.has(i, s) ? FloorDiv(U.at(i, s), base) : 0) + c - z;
          for (int j = 0; j < n3; ++j)
            d.V(2 * s + c, j) = V.has(s, j) ? FloorDiv(V.at(s, j), base) : 0;
        }
      for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n3; ++j) {
          if (!R.has(i, j)) continue;
          const int s = S[i][j].front();
          const int c = FloorMod(U.at(i, s), base) + FloorMod(V.at(s, j), base) >=
                                base
                            ? 1
                            : 0;
          Rl.set(i, j, FloorDiv(R.at(i, j), base) - z);
          d.S.set(i, j, 2 * s + c);
        }
      for (int x = 0; x <= 1; ++x)
        for (int y = 0; y <= 1; ++y) {
          if (l == 0 && (x == 1 || y == 1)) continue;
          const TriangleInstance inst{ScaleClass(A, l, x), ScaleClass(B, l, y),
                                      Rl};
          if (inst.A.Empty() || inst.B.Empty() || inst.C.Empty()) continue;
          ++st.reductions;
          const ReductionOutput out = ReduceLowRankToLowDoubling(inst, d, tk);
          st.triples += static_cast<int64_t>(out.triples.size());
          for (const auto& [name, v] : out.counters) st.counters[name] += v;
          for (const Triple& tr : out.triples) {
            const int i = tr[0], k = tr[1], j = tr[2];
            const int64_t v = A.at(i, k) + B.at(k, j);
            if (!C.has(i, j) || v < C.at(i, j)) {
              C.set(i, j, v);
              ++st.ordinary_updates;
            }
          }
          for (const ReducedInstance& ri : out.instances) {
            ++st.instances;
            if (ri.tags.heuristic_exceeded) ++st.heuristic_exceeded;
            const TriangleInstance& x_inst = ri.adjustment.adjusted;
            const MaskedMatrix P = solver(x_inst.A, x_inst.B);
            ++st.solver_calls;
            st.ordinary_updates += RelaxFromWitnesses(
                A, B, witnesses(x_inst.A, x_inst.B, P, t), C);
          }
        }
    }
  }
  return C;
}

}  // namespace minplus
