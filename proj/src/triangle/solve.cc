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

#include "minplus/triangle/solve.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "minplus/addcomb/integer_set.h"
#include "minplus/core/checked.h"
#include "minplus/core/poly_matrix.h"
#include "minplus/core/random.h"

namespace minplus {

namespace {

constexpr int64_t kMaxModulus = int64_t{1} << 21;

int64_t SmallestInjectiveModulus(const IntegerSet& Z) {
  const int64_t span = Z.elements().back() - Z.elements().front() + 1;
  std::unordered_set<int64_t> seen;
  for (int64_t m = std::max<int64_t>(1, Z.size()); m <= kMaxModulus; ++m) {
    if (m >= span) return m;
    seen.clear();
    bool ok = true;
    for (int64_t z : Z)
      if (!seen.insert(FloorMod(z, m)).second) {
        ok = false;
        break;
      }
    if (ok) return m;
  }
  throw std::domain_error("entries too spread for the polynomial encoding");
}

PolyMatrix Encode(const MaskedMatrix& M, int64_t m) {
  PolyMatrix p(M.rows(), M.cols(), static_cast<int>(m - 1));
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j)
      if (M.has(i, j)) p.coef(i, j, static_cast<int>(FloorMod(M.at(i, j), m))) = 1;
  return p;
}

// (i,j) is flagged iff some k has A[i,k] + B[k,j] = C[i,j]. Residues are
// injective on (vals A + vals B) ∪ vals C, so a match mod m is exact.
FlagMatrix ThirdFlags(const TriangleInstance& x) {
  FlagMatrix flags(x.n1(), x.n3());
  if (x.A.Empty() || x.B.Empty() || x.C.Empty()) return flags;
  IntegerSet Z = Sumset(IntegerSet::FromUnsorted(x.A.DistinctValues()),
                        IntegerSet::FromUnsorted(x.B.DistinctValues()))
                     .Union(IntegerSet::FromUnsorted(x.C.DistinctValues()));
  const int64_t m = SmallestInjectiveModulus(Z);
  PolyMatrix prod = Multiply(Encode(x.A, m), Encode(x.B, m));
  for (int i = 0; i < x.n1(); ++i)
    for (int j = 0; j < x.n3(); ++j) {
      if (!x.C.has(i, j)) continue;
      const int64_t e = FloorMod(x.C.at(i, j), m);
      if (prod.coef(i, j, static_cast<int>(e)) != 0 ||
          (e + m <= prod.degree() && prod.coef(i, j, static_cast<int>(e + m)) != 0)) {
        flags.set(i, j);
      }
    }
  return flags;
}

WitnessLists TransposeLists(const WitnessLists& w, int rows, int cols) {
  WitnessLists out(cols, std::vector<std::vector<int>>(rows));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out[j][i] = w[i][j];
  return out;
}

}  // namespace

WitnessLists ListThirdEdgeWitnesses(const TriangleInstance& inst, int t,
                                    const TriangleSolver& solver,
                                    uint64_t seed, double delta,
                                    int64_t* calls) {
  const int n1 = inst.n1(), n2 = inst.n2(), n3 = inst.n3();
  const int64_t reps =
      ListingRepetitions(static_cast<int64_t>(n1) * n3, t, delta);
  WitnessLists found(n1, std::vector<std::vector<int>>(n3));
  if (n2 == 0) return found;
  int64_t local_calls = 0;
  if (calls == nullptr) calls = &local_calls;
  auto restrict_to = [&](const std::vector<bool>& keep) {
    TriangleInstance x = inst;
    for (int k = 0; k < n2; ++k) {
      if (keep[k]) continue;
      for (int i = 0; i < n1; ++i) x.A.clear(i, k);
      for (int j = 0; j < n3; ++j) x.B.clear(k, j);
    }
    ++*calls;
    return solver(x).c;
  };
  // Edges still short of t witnesses; the rest need no more samples.
  const FlagMatrix all = restrict_to(std::vector<bool>(n2, true));
  int64_t open = all.Count();
  Rng rng(seed);
  const int bits = std::max(1, static_cast<int>(std::bit_width(
                                   static_cast<unsigned>(n2 - 1))));
  const int levels = static_cast<int>(std::bit_width(static_cast<unsigned>(n2)));
  for (int level = 0; level < levels && open > 0; ++level) {
    const double rate = std::ldexp(1.0, -level);
    // The full sample is the same every time.
    const int64_t level_reps = level == 0 ? 1 : reps;
    for (int64_t rep = 0; rep < level_reps && open > 0; ++rep) {
      std::vector<bool> keep(n2, false);
      for (int k = 0; k < n2; ++k) keep[k] = rng.Bernoulli(rate);
      FlagMatrix base = restrict_to(keep);
      if (base.Count() == 0) continue;
      std::vector<FlagMatrix> bit_flags;
      for (int b = 0; b < bits; ++b) {
        std::vector<bool> sub = keep;
        for (int k = 0; k < n2; ++k) sub[k] = sub[k] && ((k >> b) & 1);
        bit_flags.push_back(restrict_to(sub));
      }
      for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n3; ++j) {
          if (!base.get(i, j)) continue;
          int k = 0;
          for (int b = 0; b < bits; ++b)
            if (bit_flags[b].get(i, j)) k |= 1 << b;
          // Several witnesses in the sample decode to garbage; the direct
          // check rejects it.
          auto& list = found[i][j];
          if (k < n2 && keep[k] && inst.IsExact(i, k, j) &&
              static_cast<int>(list.size()) < t &&
              std::find(list.begin(), list.end(), k) == list.end()) {
            list.push_back(k);
            if (static_cast<int>(list.size()) == t) --open;
          }
        }
    }
  }
  for (auto& row : found)
    for (auto& list : row) std::sort(list.begin(), list.end());
  return found;
}

EdgeFlags SolveUniformLowDoubling(const TriangleInstance& inst) {
  inst.Validate();
  EdgeFlags f;
  f.c = ThirdFlags(inst);
  f.a = ThirdFlags(Orient(inst, {OrientOp::kRotate}));
  f.b = ThirdFlags(Orient(inst, {OrientOp::kTranspose, OrientOp::kRotate}))
            .Transposed();
  return f;
}

EdgeFlags SolveLowRank(const LowRankInstance& lr, const TriangleKnobs& knobs,
                       std::map<std::string, int64_t>* counters) {
  const Orientation o = ToCRole(lr.role);
  LowRankInstance x = Orient(lr, o);
  ReductionOutput out = ReduceLowRankToLowDoubling(x.inst, x.d, knobs);
  EdgeFlags flags = EdgeFlags::For(x.inst);
  for (const ReducedInstance& ri : out.instances) {
    flags.OrWith(SolveUniformLowDoubling(ri.adjustment.adjusted));
  }
  for (const Triple& t : out.triples)
    if (x.inst.IsExact(t[0], t[1], t[2])) flags.Mark(t[0], t[1], t[2]);
  if (counters) *counters = out.counters;
  return Unorient(flags, o);
}

int64_t ListingRepetitions(int64_t edges, int t, double delta) {
  if (t < 1 || delta <= 0 || delta >= 1) {
    throw std::domain_error("listing needs t >= 1 and 0 < delta < 1");
  }
  const double n = static_cast<double>(std::max<int64_t>(1, edges)) * t;
  return static_cast<int64_t>(
      std::ceil(2 * std::numbers::e * t * std::log(n / delta)));
}

TriangleWitnesses ListWitnessesExactTriangle(const TriangleInstance& inst,
                                             int t,
                                             const TriangleSolver& solver,
                                             uint64_t seed, double delta) {
  inst.Validate();
  TriangleWitnesses out;
  out.c = ListThirdEdgeWitnesses(inst, t, solver, DeriveSeed(seed, "c"), delta,
                                 &out.solver_calls);
  // After rotating, the middle index is j and the third matrix is A.
  out.a = ListThirdEdgeWitnesses(Orient(inst, {OrientOp::kRotate}), t, solver,
                                 DeriveSeed(seed, "a"), delta,
                                 &out.solver_calls);
  // After transposing and rotating, the middle index is i and the third
  // matrix is Bᵀ.
  out.b = TransposeLists(
      ListThirdEdgeWitnesses(
          Orient(inst, {OrientOp::kTranspose, OrientOp::kRotate}), t, solver,
          DeriveSeed(seed, "b"), delta, &out.solver_calls),
      inst.n3(), inst.n2());
  return out;
}

}  // namespace minplus
