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

#include "minplus/reductions/small_universe.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "minplus/core/checked.h"
#include "minplus/core/random.h"
#include "minplus/rank/decomposition.h"

namespace minplus {

namespace {

struct Context {
  int n2_small;
  int t;
  const MinPlusSolver& small;
  const LowRankTriangleSolver& triangle;
  const SamplingConfig& cfg;
  MinPlusWitnessSource witnesses;
  SmallUniverseStats& stats;
};

int64_t MaxEntry(const MaskedMatrix& A, const MaskedMatrix& B) {
  return std::max(A.MaxValue().value_or(0), B.MaxValue().value_or(0));
}

// Entries of A with residue mod q in [x·h, x·h + h), shifted down by x·h.
// With both operands in the low half, residues add without a carry.
MaskedMatrix ResidueClass(const MaskedMatrix& A, int64_t q, int64_t h, int x) {
  MaskedMatrix out(A.rows(), A.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) {
      if (!A.has(i, j)) continue;
      const int64_t r = FloorMod(A.at(i, j), q);
      if ((r >= h) == (x == 1)) out.set(i, j, A.at(i, j) - x * h);
    }
  return out;
}

// Lowers C with A[i,k] + B[k,j] for listed positions k of a column subset.
void RelaxSampled(const MaskedMatrix& A, const MaskedMatrix& B,
                  const std::vector<int>& cols, const WitnessLists& lists,
                  MaskedMatrix& C) {
  for (int i = 0; i < C.rows(); ++i)
    for (int j = 0; j < C.cols(); ++j)
      for (int s : lists[i][j]) {
        const int k = cols[s];
        if (A.has(i, k) && B.has(k, j)) C.RelaxMin(i, j, A.at(i, k) + B.at(k, j));
      }
}

// Upper bounds on A*B that are exact wherever A*B ∈ approx + {0,1,2}.
// Operands have residues mod q below ⌈q/2⌉.
MaskedMatrix Core(Context& ctx, const MaskedMatrix& A, const MaskedMatrix& B,
                  const MaskedMatrix& approx, int64_t q, uint64_t seed) {
  const int n1 = A.rows(), n2 = A.cols(), n3 = B.cols();
  MaskedMatrix C(n1, n3);
  if (n2 == 0) return C;
  const MaskedMatrix A1 = A.FloorDivided(q), B1 = B.FloorDivided(q);
  const double log_factor = SamplingLogFactor(ctx.cfg, n1, n3);
  const double n2_ratio = static_cast<double>(ctx.n2_small) / n2;

  // A pair with few pseudo-witnesses sees a witness alone in the sample
  // with probability at least rate/2.
  const double rate = n2_ratio / (2.0 * ctx.t);
  const int64_t reps = static_cast<int64_t>(std::ceil(log_factor / rate));
  Rng rng(DeriveSeed(seed, "unpopular"));
  for (int64_t rep = 0; rep < reps; ++rep) {
    const std::vector<int> K = rng.Sample(n2, rate);
    if (K.empty()) continue;
    ++ctx.stats.unpopular_samples;
    const MaskedMatrix AK = A1.SelectCols(K), BK = B1.SelectRows(K);
    const MaskedMatrix P = ctx.small(AK, BK);
    ++ctx.stats.small_calls;
    if (ctx.cfg.sampled_witnesses) {
      RelaxSampled(A, B, K, ctx.witnesses(AK, BK, P, 1), C);
      continue;
    }
    for (int i = 0; i < n1; ++i)
      for (int j = 0; j < n3; ++j) {
        if (!P.has(i, j)) continue;
        for (size_t s = 0; s < K.size(); ++s)
          if (AK.has(i, s) && BK.has(s, j) &&
              AK.at(i, s) + BK.at(s, j) == P.at(i, j)) {
            C.RelaxMin(i, j, A.at(i, K[s]) + B.at(K[s], j));
            break;
          }
      }
  }

  // A pair with many pseudo-witnesses has one in this sample, so the
  // sampled truncated product is exact there.
  Rng popular_rng(DeriveSeed(seed, "popular"));
  const std::vector<int> K =
      popular_rng.Sample(n2, std::min(1.0, log_factor * n2_ratio / ctx.t));
  if (K.empty()) return C;
  const MaskedMatrix AK = A1.SelectCols(K), BK = B1.SelectRows(K);
  const MaskedMatrix R1 = ctx.small(AK, BK);
  ++ctx.stats.small_calls;
  const WitnessLists S1 = ctx.witnesses(AK, BK, R1, 1);
  const int r1 = static_cast<int>(K.size());

  // Every column of the truncated factor is replaced by q copies carrying
  // the residues, so that q·(U1 + V1) + ℓ reaches any value with the right
  // quotient.
  RankDecomposition d;
  d.r = static_cast<int>(CheckedMul(r1, q));
  d.U = IntMatrix(n1, d.r);
  d.V = IntMatrix(d.r, n3);
  for (int s = 0; s < r1; ++s)
    for (int64_t l = 0; l < q; ++l) {
      const int col = static_cast<int>(s * q + l);
      for (int i = 0; i < n1; ++i)
        d.U(i, col) = q * (AK.has(i, s) ? AK.at(i, s) : 0) + l;
      for (int j = 0; j < n3; ++j)
        d.V(col, j) = q * (BK.has(s, j) ? BK.at(s, j) : 0);
    }
  ctx.stats.max_rank = std::max<int64_t>(ctx.stats.max_rank, d.r);
  for (int z = 0; z <= 2; ++z) {
    MaskedMatrix R(n1, n3);
    d.S = MaskedMatrix(n1, n3);
    for (int i = 0; i < n1; ++i)
      for (int j = 0; j < n3; ++j) {
        if (!approx.has(i, j) || !R1.has(i, j) || S1[i][j].empty()) continue;
        const int64_t v = approx.at(i, j) + z;
        if (FloorDiv(v, q) != R1.at(i, j)) continue;
        R.set(i, j, v);
        d.S.set(i, j, S1[i][j].front() * q + FloorMod(v, q));
      }
    if (R.Empty()) continue;
    LowRankInstance lr{TriangleInstance{A, B, R}, Role::kC, d};
    const TriangleWitnessSource source =
        ctx.cfg.sampled_witnesses
            ? SampledTriangleWitnessSource(
                  [&](const TriangleInstance& x) {
                    ++ctx.stats.triangle_calls;
                    return ctx.triangle(LowRankInstance{x, Role::kC, d});
                  },
                  DeriveSeed(seed, static_cast<uint64_t>(z)),
                  ctx.cfg.listing_failure)
            : ScanTriangleWitnessSource();
    const EdgeFlags flags = ctx.triangle(lr);
    ++ctx.stats.triangle_calls;
    RelaxFromWitnesses(A, B, source(lr.inst, flags.c, 1), C);
  }
  return C;
}

MaskedMatrix Solve(Context& ctx, const MaskedMatrix& A, const MaskedMatrix& B,
                   int depth, uint64_t seed) {
  ctx.stats.depth = std::max(ctx.stats.depth, depth);
  const int64_t u = MaxEntry(A, B);
  if (u <= ctx.n2_small) {
    ++ctx.stats.small_calls;
    return ctx.small(A, B);
  }
  // Halving both operands loses at most 2 after doubling back.
  MaskedMatrix approx = Solve(ctx, A.FloorDivided(2), B.FloorDivided(2),
                              depth + 1, DeriveSeed(seed, "half"));
  const int64_t q = CeilDiv(u, ctx.n2_small);
  const int64_t h = CeilDiv(q, 2);
  MaskedMatrix C(A.rows(), B.cols());
  for (int x = 0; x <= 1; ++x)
    for (int y = 0; y <= 1; ++y) {
      const int64_t shift = (x + y) * h;
      MaskedMatrix shifted(A.rows(), B.cols());
      for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < B.cols(); ++j)
          if (approx.has(i, j)) shifted.set(i, j, 2 * approx.at(i, j) - shift);
      const MaskedMatrix part =
          Core(ctx, ResidueClass(A, q, h, x), ResidueClass(B, q, h, y),
               shifted, q, DeriveSeed(seed, static_cast<uint64_t>(2 * x + y)));
      for (int i = 0; i < part.rows(); ++i)
        for (int j = 0; j < part.cols(); ++j)
          if (part.has(i, j)) C.RelaxMin(i, j, part.at(i, j) + shift);
    }
  return C;
}

}  // namespace

MaskedMatrix SmallUniverseReduction(const MaskedMatrix& A,
                                    const MaskedMatrix& B, int n2_small, int t,
                                    const MinPlusSolver& small_solver,
                                    const LowRankTriangleSolver& triangle_solver,
                                    uint64_t seed, const SamplingConfig& cfg,
                                    SmallUniverseStats* stats) {
  CheckProductShapes(A, B);
  if (A.MinValue().value_or(0) < 0 || B.MinValue().value_or(0) < 0)
    throw std::domain_error("entries must be non-negative");
  if (n2_small < 1 || n2_small > std::max(1, A.cols()))
    throw std::domain_error("n2_small must lie in [1, n2]");
  if (t < 1) throw std::domain_error("t must be positive");
  SmallUniverseStats local;
  Context ctx{n2_small, t, small_solver, triangle_solver, cfg,
              MakeWitnessSource(cfg, small_solver, DeriveSeed(seed, "list")),
              stats != nullptr ? *stats : local};
  ctx.stats = SmallUniverseStats{};
  return Solve(ctx, A, B, 1, seed);
}

}  // namespace minplus
