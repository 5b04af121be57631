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

#include "minplus/triangle/pipeline.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "minplus/addcomb/covering.h"
#include "minplus/addcomb/integer_set.h"
#include "minplus/addcomb/popular_sums.h"
#include "minplus/core/brute.h"
#include "minplus/core/checked.h"
#include "minplus/rank/regularize.h"
#include "minplus/triangle/constraints.h"
#include "minplus/triangle/orientation.h"

namespace minplus {

namespace {

using ValueRows = std::unordered_map<int64_t, std::vector<int>>;

void ListAll(const TriangleInstance& inst, ReductionOutput* out) {
  for (const Triple& t : ExactTrianglesBrute(inst)) out->triples.push_back(t);
}

void CheckDecomposition(const TriangleInstance& inst,
                        const RankDecomposition& dc) {
  inst.Validate();
  if (!VerifyDecomposition(inst.C, dc)) {
    throw std::invalid_argument("decomposition does not represent C");
  }
}

void CheckDepth(int depth, const TriangleKnobs& knobs, const char* where) {
  if (depth > knobs.max_depth) {
    throw std::runtime_error(std::string(where) + ": recursion depth " +
                             std::to_string(depth) + " exceeds the limit " +
                             std::to_string(knobs.max_depth));
  }
}

void Emit(ReductionOutput* out, PotentialAdjustment adj, InstanceTags tags) {
  out->instances.push_back(ReducedInstance{std::move(adj), std::move(tags)});
  ++out->counters["instances"];
}

MaskedMatrix Filter(const MaskedMatrix& M,
                    const std::function<bool(int, int, int64_t)>& keep) {
  MaskedMatrix out(M.rows(), M.cols());
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j)
      if (M.has(i, j) && keep(i, j, M.at(i, j))) out.set(i, j, M.at(i, j));
  return out;
}

int64_t MaxRowDistinct(const MaskedMatrix& M) {
  int64_t best = 0;
  for (int i = 0; i < M.rows(); ++i) {
    best = std::max<int64_t>(best, M.RowValues(i).size());
  }
  return best;
}

IntegerSet Values(const MaskedMatrix& M) {
  return IntegerSet::FromUnsorted(M.DistinctValues());
}

// --- low rank to slice-uniform --------------------------------------------

// C's decomposition is row-regular here; the regularity only affects cost.
ReductionOutput SliceUniformMain(const TriangleInstance& inst,
                                 const RankDecomposition& dc,
                                 const TriangleKnobs& knobs) {
  ReductionOutput out;
  const int n1 = inst.n1(), n2 = inst.n2(), n3 = inst.n3();
  const int64_t r = dc.r;
  const int64_t t = knobs.t;
  MaskedMatrix work = inst.A;
  for (int l = 0; l < r; ++l) {
    std::vector<std::vector<int>> js(n1);
    bool any = false;
    for (int i = 0; i < n1; ++i)
      for (int j = 0; j < n3; ++j)
        if (dc.S.has(i, j) && dc.S.at(i, j) == l) {
          js[i].push_back(j);
          any = true;
        }
    if (!any) continue;

    // A_l[i,k] = A[i,k] - U[i,l]; a triangle through (i,j) with S[i,j] = l
    // needs A_l[i,k] = V[l,j] - B[k,j].
    std::vector<ValueRows> by_value(n2);
    for (int i = 0; i < n1; ++i)
      for (int k = 0; k < n2; ++k)
        if (work.has(i, k)) {
          by_value[k][CheckedSub(work.at(i, k), dc.U(i, l))].push_back(i);
        }
    auto light = [&](size_t count) {
      return static_cast<int64_t>(count) * r * t <= n1;
    };
    for (int k = 0; k < n2; ++k)
      for (int j = 0; j < n3; ++j) {
        if (!inst.B.has(k, j)) continue;
        auto it = by_value[k].find(CheckedSub(dc.V(l, j), inst.B.at(k, j)));
        if (it == by_value[k].end() || !light(it->second.size())) continue;
        for (int i : it->second)
          if (dc.S.has(i, j) && dc.S.at(i, j) == l && inst.IsExact(i, k, j))
            out.triples.push_back({i, k, j});
      }

    std::vector<std::pair<int, int>> heavy;
    for (int k = 0; k < n2; ++k)
      for (const auto& [value, rows] : by_value[k])
        if (!light(rows.size()))
          for (int i : rows)
            if (!js[i].empty()) heavy.emplace_back(i, k);
    if (heavy.empty()) continue;

    if (static_cast<int64_t>(heavy.size()) * t <=
        static_cast<int64_t>(n1) * n2) {
      ++out.counters["brute_heavy"];
      for (auto [i, k] : heavy)
        for (int j : js[i])
          if (inst.IsExact(i, k, j)) out.triples.push_back({i, k, j});
      continue;
    }

    // Split each column's heavy values into groups of r; every group is an
    // instance handling all j, after which its entries leave A.
    std::vector<int64_t> u(n1);
    for (int i = 0; i < n1; ++i) u[i] = CheckedNeg(dc.U(i, l));
    std::vector<MaskedMatrix> groups;
    std::vector<std::vector<int64_t>> col_values(n2);
    for (auto [i, k] : heavy) col_values[k].push_back(CheckedAdd(work.at(i, k), u[i]));
    for (auto& vals : col_values) {
      std::sort(vals.begin(), vals.end());
      vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    }
    for (auto [i, k] : heavy) {
      int64_t value = CheckedAdd(work.at(i, k), u[i]);
      size_t g = (std::lower_bound(col_values[k].begin(), col_values[k].end(),
                                   value) -
                  col_values[k].begin()) /
                 static_cast<size_t>(r);
      while (groups.size() <= g) groups.emplace_back(n1, n2);
      groups[g].set(i, k, value);
    }
    for (auto [i, k] : heavy) work.clear(i, k);
    for (MaskedMatrix& A : groups) {
      if (A.Empty()) continue;
      std::vector<bool> used(n1, false);
      for (int i = 0; i < n1; ++i)
        for (int k = 0; k < n2; ++k)
          if (A.has(i, k)) used[i] = true;
      MaskedMatrix C(n1, n3);
      for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n3; ++j)
          if (used[i] && inst.C.has(i, j))
            C.set(i, j, CheckedAdd(inst.C.at(i, j), u[i]));
      InstanceTags tags;
      tags.slice_uniform = r;
      Emit(&out,
           PotentialAdjustment{u, std::vector<int64_t>(n2, 0),
                               std::vector<int64_t>(n3, 0),
                               TriangleInstance{std::move(A), inst.B, std::move(C)}},
           std::move(tags));
    }
  }
  return out;
}

ReductionOutput SliceUniformRec(const TriangleInstance& inst,
                                const RankDecomposition& dc,
                                const TriangleKnobs& knobs, int depth) {
  CheckDecomposition(inst, dc);
  ReductionOutput out;
  out.counters["max_depth"] = depth;
  if (dc.r == 0 || inst.C.Empty() || inst.A.Empty() || inst.B.Empty()) {
    return out;
  }
  CheckDepth(depth, knobs, "slice-uniform reduction");
  RegularizedDecomposition reg =
      RegularizeDecomposition(inst.C, dc, knobs.regularity_factor);
  if (!reg.row_part.Empty()) {
    out.Append(SliceUniformMain(TriangleInstance{inst.A, inst.B, reg.row_part},
                                reg.row_decomposition, knobs));
  }
  if (!reg.col_part.Empty()) {
    const Orientation o = {OrientOp::kTranspose};
    TriangleInstance flipped =
        Orient(TriangleInstance{inst.A, inst.B, reg.col_part}, o);
    out.Append(Unorient(
        SliceUniformMain(flipped, TransposeDecomposition(reg.col_decomposition),
                         knobs),
        o));
  }
  if (!reg.small_part.Empty()) {
    if (reg.small_decomposition.r >= dc.r) {
      // Only possible with an overridden factor. Regularity affects cost
      // alone, so handle the rest without it.
      ++out.counters["irregular_fallbacks"];
      out.Append(SliceUniformMain(
          TriangleInstance{inst.A, inst.B, reg.small_part},
          reg.small_decomposition, knobs));
      return out;
    }
    ++out.counters["rank_recursions"];
    out.Append(SliceUniformRec(
        TriangleInstance{inst.A, inst.B, reg.small_part},
        reg.small_decomposition, knobs, depth + 1));
  }
  return out;
}

// --- slice-uniform to uniform ---------------------------------------------

std::vector<IntegerSet> Chunks(const IntegerSet& s, int64_t size) {
  std::vector<IntegerSet> out;
  std::vector<int64_t> cur;
  for (int64_t x : s) {
    cur.push_back(x);
    if (static_cast<int64_t>(cur.size()) == size) {
      out.push_back(IntegerSet::FromUnsorted(std::move(cur)));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(IntegerSet::FromUnsorted(std::move(cur)));
  return out;
}

bool SumsMeet(const IntegerSet& X, const IntegerSet& Y, const IntegerSet& Z) {
  for (int64_t x : X)
    for (int64_t y : Y)
      if (Z.contains(CheckedAdd(x, y))) return true;
  return false;
}

// Positions of each value in each row of M.
std::vector<ValueRows> RowPositions(const MaskedMatrix& M) {
  std::vector<ValueRows> pos(M.rows());
  for (int i = 0; i < M.rows(); ++i)
    for (int k = 0; k < M.cols(); ++k)
      if (M.has(i, k)) pos[i][M.at(i, k)].push_back(k);
  return pos;
}

// Triangles (i,k,j) of (A, B, C) with A[i,k] = x, B[k,j] = z - x.
void ListThroughValue(const TriangleInstance& src, const MaskedMatrix& A,
                      const MaskedMatrix& B, const std::vector<ValueRows>& pos,
                      int i, int j, int64_t x, ReductionOutput* out) {
  auto it = pos[i].find(x);
  if (it == pos[i].end()) return;
  for (int k : it->second)
    if (B.has(k, j) && A.has(i, k) && src.IsExact(i, k, j))
      out->triples.push_back({i, k, j});
}

struct SliceContext {
  const TriangleInstance& src;
  int64_t d;
  int64_t chunk;
  const TriangleKnobs& knobs;
};

// Exceptional pairs: a row remainder X_i* (or column remainder Y_j*) that
// has few popular sums.
void ListExceptional(const SliceContext& ctx, const MaskedMatrix& A,
                     const MaskedMatrix& B, const std::vector<IntegerSet>& X,
                     const std::vector<IntegerSet>& Y,
                     const PopularSumDecomposition& dec, int64_t dd,
                     ReductionOutput* out) {
  const TriangleInstance& src = ctx.src;
  auto pos = RowPositions(A);
  for (int i = 0; i < src.n1(); ++i)
    for (int j = 0; j < src.n3(); ++j) {
      if (!src.C.has(i, j)) continue;
      const int64_t z = src.C.at(i, j);
      for (int side = 0; side < 2; ++side) {
        const IntegerSet& xs = side == 0 ? dec.x.rest[i] : X[i];
        const IntegerSet& ys = side == 0 ? Y[j] : dec.y.rest[j];
        if (xs.empty() || ys.empty()) continue;
        std::vector<int64_t> reps;
        for (int64_t x : xs)
          if (ys.contains(CheckedSub(z, x))) reps.push_back(x);
        if (static_cast<int64_t>(reps.size()) * ctx.knobs.p >= 2 * dd) {
          ++out->counters["popular_scans"];
          for (int k = 0; k < src.n2(); ++k)
            if (A.has(i, k) && B.has(k, j) && src.IsExact(i, k, j))
              out->triples.push_back({i, k, j});
        } else {
          for (int64_t x : reps) ListThroughValue(src, A, B, pos, i, j, x, out);
        }
      }
    }
}

void ProcessClassPair(const SliceContext& ctx, const MaskedMatrix& A,
                      const MaskedMatrix& B, int64_t dd, ReductionOutput* out) {
  const TriangleInstance& src = ctx.src;
  const int n1 = src.n1(), n2 = src.n2(), n3 = src.n3();
  std::vector<IntegerSet> X(n1), Y(n3);
  for (int i = 0; i < n1; ++i) X[i] = IntegerSet::FromUnsorted(A.RowValues(i));
  for (int j = 0; j < n3; ++j) Y[j] = IntegerSet::FromUnsorted(B.ColValues(j));
  PopularSumDecomposition dec =
      PopularSumDecompose(X, Y, static_cast<int>(dd), ctx.knobs.p);
  ListExceptional(ctx, A, B, X, Y, dec, dd, out);

  const auto& xs = dec.x;
  const auto& ys = dec.y;
  for (size_t g = 0; g < xs.patterns.size(); ++g)
    for (size_t h = 0; h < ys.patterns.size(); ++h) {
      const IntegerSet& S = xs.patterns[g];
      const IntegerSet& T = ys.patterns[h];
      MaskedMatrix Ag = Filter(A, [&](int i, int, int64_t x) {
        return xs.parts[g][i].contains(x);
      });
      MaskedMatrix Bh = Filter(B, [&](int, int j, int64_t y) {
        return ys.parts[h][j].contains(y);
      });
      if (Ag.Empty() || Bh.Empty()) continue;
      std::vector<int64_t> u(n1, 0), w(n3, 0);
      for (int i = 0; i < n1; ++i)
        if (xs.shifts[g][i]) u[i] = CheckedNeg(*xs.shifts[g][i]);
      for (int j = 0; j < n3; ++j)
        if (ys.shifts[h][j]) w[j] = CheckedNeg(*ys.shifts[h][j]);
      for (int i = 0; i < n1; ++i)
        for (int k = 0; k < n2; ++k)
          if (Ag.has(i, k)) Ag.set(i, k, CheckedAdd(Ag.at(i, k), u[i]));
      for (int k = 0; k < n2; ++k)
        for (int j = 0; j < n3; ++j)
          if (Bh.has(k, j)) Bh.set(k, j, CheckedAdd(Bh.at(k, j), w[j]));
      const IntegerSet ST = Sumset(S, T);
      MaskedMatrix Cgh(n1, n3);
      for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n3; ++j) {
          if (!src.C.has(i, j) || !xs.shifts[g][i] || !ys.shifts[h][j]) continue;
          int64_t z = CheckedAdd(CheckedAdd(src.C.at(i, j), u[i]), w[j]);
          if (ST.contains(z)) Cgh.set(i, j, z);
        }
      if (Cgh.Empty()) continue;

      const IntegerSet P = PopularSumsAtLeast(S, T, dd, ctx.knobs.q);
      TriangleInstance shifted{Ag, Bh, Cgh};
      auto pos = RowPositions(Ag);
      for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n3; ++j) {
          if (!Cgh.has(i, j) || P.contains(Cgh.at(i, j))) continue;
          for (int64_t a : S)
            if (T.contains(CheckedSub(Cgh.at(i, j), a)))
              ListThroughValue(shifted, Ag, Bh, pos, i, j, a, out);
        }

      // Popular sums: chunk S, T and P so that each instance has at most
      // 3 * chunk distinct entries.
      for (const IntegerSet& sc : Chunks(S, ctx.chunk)) {
        MaskedMatrix As = Filter(Ag, [&](int, int, int64_t x) { return sc.contains(x); });
        if (As.Empty()) continue;
        for (const IntegerSet& tc : Chunks(T, ctx.chunk)) {
          MaskedMatrix Bs = Filter(Bh, [&](int, int, int64_t y) { return tc.contains(y); });
          if (Bs.Empty()) continue;
          for (const IntegerSet& pc : Chunks(P, ctx.chunk)) {
            if (!SumsMeet(sc, tc, pc)) continue;
            MaskedMatrix Cs = Filter(Cgh, [&](int, int, int64_t z) { return pc.contains(z); });
            if (Cs.Empty()) continue;
            TriangleInstance emitted{As, Bs, std::move(Cs)};
            InstanceTags tags;
            tags.uniform = SummedEntryCount(emitted);
            Emit(out,
                 PotentialAdjustment{u, std::vector<int64_t>(n2, 0), w,
                                     std::move(emitted)},
                 std::move(tags));
          }
        }
      }
    }
}

ReductionOutput SliceToUniformOriented(const TriangleInstance& inst, int64_t d,
                                       const TriangleKnobs& knobs) {
  ReductionOutput out;
  const int n1 = inst.n1(), n2 = inst.n2(), n3 = inst.n3();
  // Dyadic frequency classes: an A entry whose value occurs c times in its
  // row has class floor(log2 c); B likewise within its column.
  MaskedMatrix a_class(n1, n2), b_class(n2, n3);
  int top_a = -1, top_b = -1;
  for (int i = 0; i < n1; ++i) {
    std::map<int64_t, uint64_t> count;
    for (int k = 0; k < n2; ++k)
      if (inst.A.has(i, k)) ++count[inst.A.at(i, k)];
    for (int k = 0; k < n2; ++k)
      if (inst.A.has(i, k)) {
        int c = std::bit_width(count[inst.A.at(i, k)]) - 1;
        a_class.set(i, k, int64_t{c});
        top_a = std::max(top_a, c);
      }
  }
  for (int j = 0; j < n3; ++j) {
    std::map<int64_t, uint64_t> count;
    for (int k = 0; k < n2; ++k)
      if (inst.B.has(k, j)) ++count[inst.B.at(k, j)];
    for (int k = 0; k < n2; ++k)
      if (inst.B.has(k, j)) {
        int c = std::bit_width(count[inst.B.at(k, j)]) - 1;
        b_class.set(k, j, int64_t{c});
        top_b = std::max(top_b, c);
      }
  }
  SliceContext ctx{inst, d, std::max<int64_t>(1, d / 3), knobs};
  for (int ca = 0; ca <= top_a; ++ca) {
    MaskedMatrix A = Filter(inst.A, [&](int i, int k, int64_t) {
      return a_class.at(i, k) == ca;
    });
    if (A.Empty()) continue;
    const int64_t dA = MaxRowDistinct(A);
    auto pos = RowPositions(A);
    for (int cb = 0; cb <= top_b; ++cb) {
      MaskedMatrix B = Filter(inst.B, [&](int k, int j, int64_t) {
        return b_class.at(k, j) == cb;
      });
      if (B.Empty()) continue;
      const int64_t dB = MaxRowDistinct(B.Transposed());
      if (dB >= dA * knobs.t) {
        // B's values are rare in their columns: try every row value of A.
        ++out.counters["brute_classes"];
        auto col_pos = RowPositions(B.Transposed());
        for (int i = 0; i < n1; ++i)
          for (int j = 0; j < n3; ++j) {
            if (!inst.C.has(i, j)) continue;
            for (const auto& [x, ks] : pos[i]) {
              auto it = col_pos[j].find(CheckedSub(inst.C.at(i, j), x));
              if (it == col_pos[j].end()) continue;
              for (int k : it->second)
                if (A.has(i, k) && inst.IsExact(i, k, j))
                  out.triples.push_back({i, k, j});
            }
          }
        continue;
      }
      ProcessClassPair(ctx, A, B, std::max(dA, dB), &out);
    }
  }
  return out;
}

// --- uniform to uniform-regular -------------------------------------------

// Collects heavy entries of one matrix into a decomposition of the original
// values. Selectors are compacted to the ones actually used.
class HeavyBuilder {
 public:
  explicit HeavyBuilder(const MaskedMatrix& original)
      : original_(original), part_(original.rows(), original.cols()),
        sel_(original.rows(), original.cols()) {}

  // M = M' + a[row] + b[col]. Adds the heavy entries of M' (flagged 1 for
  // row-heavy, 2 for column-heavy) as two blocks.
  void AddBlocks(const MaskedMatrix& Mp, const MaskedMatrix& kind,
                 const std::vector<int64_t>& a, const std::vector<int64_t>& b) {
    const int n = Mp.rows(), m = Mp.cols();
    for (int which = 1; which <= 2; ++which) {
      // values per line (rows for row-heavy, columns for column-heavy)
      const int lines = which == 1 ? n : m;
      std::vector<std::vector<int64_t>> vals(lines);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
          if (kind.has(i, j) && kind.at(i, j) == which)
            vals[which == 1 ? i : j].push_back(Mp.at(i, j));
      size_t width = 0;
      for (auto& v : vals) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        width = std::max(width, v.size());
      }
      const int base = static_cast<int>(ucols_.size());
      for (size_t l = 0; l < width; ++l) {
        std::vector<int64_t> ucol(n, 0), vrow(m, 0);
        for (int i = 0; i < n; ++i) {
          ucol[i] = a[i];
          if (which == 1 && l < vals[i].size()) ucol[i] = CheckedAdd(vals[i][l], a[i]);
        }
        for (int j = 0; j < m; ++j) {
          vrow[j] = b[j];
          if (which == 2 && l < vals[j].size()) vrow[j] = CheckedAdd(vals[j][l], b[j]);
        }
        ucols_.push_back(std::move(ucol));
        vrows_.push_back(std::move(vrow));
      }
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
          if (!kind.has(i, j) || kind.at(i, j) != which || part_.has(i, j)) continue;
          const auto& line = vals[which == 1 ? i : j];
          int64_t l = std::lower_bound(line.begin(), line.end(), Mp.at(i, j)) -
                      line.begin();
          part_.set(i, j, original_.at(i, j));
          sel_.set(i, j, base + l);
        }
    }
  }

  const MaskedMatrix& part() const { return part_; }

  RankDecomposition Build() const {
    const int n = original_.rows(), m = original_.cols();
    std::vector<int> remap(ucols_.size(), -1);
    int r = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j)
        if (sel_.has(i, j) && remap[sel_.at(i, j)] < 0) remap[sel_.at(i, j)] = 0;
    for (auto& x : remap)
      if (x == 0) x = r++;
    RankDecomposition d{r, IntMatrix(n, r), IntMatrix(r, m), MaskedMatrix(n, m)};
    for (size_t l = 0; l < ucols_.size(); ++l) {
      if (remap[l] < 0) continue;
      for (int i = 0; i < n; ++i) d.U(i, remap[l]) = ucols_[l][i];
      for (int j = 0; j < m; ++j) d.V(remap[l], j) = vrows_[l][j];
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j)
        if (sel_.has(i, j)) d.S.set(i, j, int64_t{remap[sel_.at(i, j)]});
    return d;
  }

 private:
  const MaskedMatrix& original_;
  MaskedMatrix part_;
  MaskedMatrix sel_;
  std::vector<std::vector<int64_t>> ucols_;
  std::vector<std::vector<int64_t>> vrows_;
};

// 1 = row-heavy, 2 = column-heavy, 0 = light.
MaskedMatrix HeavyKinds(const MaskedMatrix& M, int64_t D, int64_t q) {
  const int n = M.rows(), m = M.cols();
  MaskedMatrix kind(n, m);
  std::vector<std::map<int64_t, int64_t>> rc(n), cc(m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      if (M.has(i, j)) {
        ++rc[i][M.at(i, j)];
        ++cc[j][M.at(i, j)];
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      if (!M.has(i, j)) continue;
      int64_t x = M.at(i, j);
      int64_t k = 0;
      if (rc[i][x] * D > q * m) {
        k = 1;
      } else if (cc[j][x] * D > q * n) {
        k = 2;
      }
      kind.set(i, j, k);
    }
  return kind;
}

// Greedy split of the light entries into classes in which every value
// occurs at most floor(len/D) times per line.
std::vector<MaskedMatrix> RegularClasses(const MaskedMatrix& M,
                                         const MaskedMatrix& kind, int64_t D) {
  const int n = M.rows(), m = M.cols();
  const int64_t row_cap = m / D, col_cap = n / D;
  std::vector<MaskedMatrix> classes;
  std::map<std::tuple<int, int64_t, size_t>, int64_t> rc, cc;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      if (!M.has(i, j) || kind.at(i, j) != 0) continue;
      const int64_t x = M.at(i, j);
      size_t c = 0;
      while (rc[{i, x, c}] >= row_cap || cc[{j, x, c}] >= col_cap) ++c;
      ++rc[{i, x, c}];
      ++cc[{j, x, c}];
      while (classes.size() <= c) classes.emplace_back(n, m);
      classes[c].set(i, j, x);
    }
  return classes;
}

ReductionOutput UniformRegularRec(const TriangleInstance& inst,
                                  const RankDecomposition& dc,
                                  const TriangleKnobs& knobs, int depth);

// Recursion on an instance with a decomposition of one of A, B or C.
ReductionOutput RecurseOnRole(const TriangleInstance& inst, Role role,
                              const RankDecomposition& d,
                              const TriangleKnobs& knobs, int depth) {
  const Orientation o = ToCRole(role);
  LowRankInstance lr = Orient(LowRankInstance{inst, role, d}, o);
  return Unorient(UniformRegularRec(lr.inst, lr.d, knobs, depth), o);
}

ReductionOutput UniformRegularRec(const TriangleInstance& inst,
                                  const RankDecomposition& dc,
                                  const TriangleKnobs& knobs, int depth) {
  CheckDecomposition(inst, dc);
  ReductionOutput out;
  out.counters["max_depth"] = depth;
  if (dc.r == 0 || inst.A.Empty() || inst.B.Empty() || inst.C.Empty()) {
    return out;
  }
  CheckDepth(depth, knobs, "uniform-regular reduction");
  const int n1 = inst.n1(), n2 = inst.n2(), n3 = inst.n3();
  if (knobs.brute_rank_fallback && dc.r > std::min({n1, n2, n3})) {
    ++out.counters["brute_rank"];
    ListAll(inst, &out);
    return out;
  }

  std::vector<ReducedInstance> uniform;
  {
    ReductionOutput s1 = SliceUniformRec(inst, dc, knobs, 0);
    out.triples.insert(out.triples.end(), s1.triples.begin(), s1.triples.end());
    for (ReducedInstance& ri : s1.instances) {
      ReductionOutput s2 = ReduceSliceUniformToUniform(
          ri.adjustment.adjusted, *ri.tags.slice_uniform, knobs);
      out.triples.insert(out.triples.end(), s2.triples.begin(), s2.triples.end());
      for (ReducedInstance& inner : s2.instances) {
        uniform.push_back(ReducedInstance{
            Compose(ri.adjustment, inner.adjustment), inner.tags});
      }
    }
  }

  // Heavy entries go to three recursive calls of smaller rank; the
  // threshold doubles until they do.
  for (int64_t q = knobs.q_regular;; q *= 2) {
    HeavyBuilder hA(inst.A), hB(inst.B), hC(inst.C);
    ReductionOutput level;
    bool any_heavy = false;
    for (const ReducedInstance& ri : uniform) {
      const PotentialAdjustment& pa = ri.adjustment;
      const TriangleInstance& x = pa.adjusted;
      const int64_t D = *ri.tags.uniform;
      if (D > std::min({n1, n2, n3})) {
        ++level.counters["brute_uniform"];
        ListAll(x, &level);
        continue;
      }
      MaskedMatrix kA = HeavyKinds(x.A, D, q);
      MaskedMatrix kB = HeavyKinds(x.B, D, q);
      MaskedMatrix kC = HeavyKinds(x.C, D, q);
      std::vector<int64_t> nu(n1), nv(n2), nw(n3);
      for (int i = 0; i < n1; ++i) nu[i] = CheckedNeg(pa.u[i]);
      for (int k = 0; k < n2; ++k) nv[k] = CheckedNeg(pa.v[k]);
      for (int j = 0; j < n3; ++j) nw[j] = CheckedNeg(pa.w[j]);
      hA.AddBlocks(x.A, kA, nu, nv);
      hB.AddBlocks(x.B, kB, pa.v, nw);
      hC.AddBlocks(x.C, kC, nu, nw);
      for (const MaskedMatrix* kind : {&kA, &kB, &kC})
        for (int64_t k : kind->DistinctValues())
          if (k != 0) any_heavy = true;

      auto ca = RegularClasses(x.A, kA, D);
      auto cb = RegularClasses(x.B, kB, D);
      auto cc = RegularClasses(x.C, kC, D);
      for (const MaskedMatrix& a : ca) {
        IntegerSet va = Values(a);
        for (const MaskedMatrix& b : cb) {
          IntegerSet vb = Values(b);
          for (const MaskedMatrix& c : cc) {
            if (!SumsMeet(va, vb, Values(c))) continue;
            InstanceTags tags;
            tags.uniform = D;
            tags.regular = D;
            Emit(&level,
                 PotentialAdjustment{pa.u, pa.v, pa.w,
                                     TriangleInstance{a, b, c}},
                 std::move(tags));
          }
        }
      }
    }
    RankDecomposition dA = hA.Build(), dB = hB.Build(), dC = hC.Build();
    if (any_heavy && std::max({dA.r, dB.r, dC.r}) >= dc.r) {
      ++out.counters["q_doublings"];
      continue;
    }
    out.Append(std::move(level));
    if (dA.r > 0) {
      ++out.counters["heavy_recursions"];
      out.Append(RecurseOnRole(TriangleInstance{hA.part(), inst.B, inst.C},
                               Role::kA, dA, knobs, depth + 1));
    }
    if (dB.r > 0) {
      ++out.counters["heavy_recursions"];
      out.Append(RecurseOnRole(TriangleInstance{inst.A, hB.part(), inst.C},
                               Role::kB, dB, knobs, depth + 1));
    }
    if (dC.r > 0) {
      ++out.counters["heavy_recursions"];
      out.Append(RecurseOnRole(TriangleInstance{inst.A, inst.B, hC.part()},
                               Role::kC, dC, knobs, depth + 1));
    }
    return out;
  }
}

}  // namespace

ReductionOutput ReduceLowRankToSliceUniform(const TriangleInstance& inst,
                                            const RankDecomposition& dc,
                                            const TriangleKnobs& knobs) {
  ReductionOutput out = SliceUniformRec(inst, dc, knobs, 0);
  out.Normalize();
  return out;
}

ReductionOutput ReduceSliceUniformToUniform(const TriangleInstance& inst,
                                            int64_t d,
                                            const TriangleKnobs& knobs) {
  inst.Validate();
  if (d < 1) throw std::domain_error("slice uniformity must be at least 1");
  ReductionOutput out;
  if (inst.A.Empty() || inst.B.Empty() || inst.C.Empty()) return out;
  const int64_t count = SummedEntryCount(inst);
  if (count <= std::max<int64_t>(d, 3)) {
    InstanceTags tags;
    tags.uniform = count;
    Emit(&out, IdentityAdjustment(inst), std::move(tags));
    return out;
  }
  for (const Orientation& o : AllOrientations()) {
    TriangleInstance x = Orient(inst, o);
    if (MaxRowDistinct(x.A) > d) continue;
    out = Unorient(SliceToUniformOriented(x, d, knobs), o);
    out.Normalize();
    return out;
  }
  throw std::domain_error("instance is not " + std::to_string(d) +
                          "-slice-uniform in any orientation");
}

ReductionOutput ReduceLowRankToUniformRegular(const TriangleInstance& inst,
                                              const RankDecomposition& dc,
                                              const TriangleKnobs& knobs) {
  ReductionOutput out = UniformRegularRec(inst, dc, knobs, 0);
  out.Normalize();
  return out;
}

ReductionOutput ReduceUniformRegularToLowDoubling(const TriangleInstance& inst,
                                                  int64_t D,
                                                  const TriangleKnobs& knobs) {
  inst.Validate();
  if (D < 1) throw std::domain_error("D must be at least 1");
  const IntegerSet X = JointEntrySet(inst);
  if (X.size() > D) {
    throw std::domain_error("instance has " + std::to_string(X.size()) +
                            " distinct entries, more than D=" +
                            std::to_string(D));
  }
  if (!IsRegular(inst, D)) {
    throw std::domain_error("instance is not 1/" + std::to_string(D) +
                            "-regular");
  }
  ReductionOutput out;
  if (inst.A.Empty() || inst.B.Empty() || inst.C.Empty()) return out;
  BsgCover cover = BsgCoverGreedy(X, X, X, knobs.L);

  std::vector<std::pair<int64_t, int64_t>> rest = cover.remainder;
  for (int i = 0; i < inst.n1(); ++i)
    for (int k = 0; k < inst.n2(); ++k)
      for (int j = 0; j < inst.n3(); ++j)
        if (inst.IsExact(i, k, j) &&
            std::binary_search(rest.begin(), rest.end(),
                               std::make_pair(inst.A.at(i, k), inst.B.at(k, j))))
          out.triples.push_back({i, k, j});

  const int64_t L2 = static_cast<int64_t>(knobs.L) * knobs.L;
  for (const auto& [Xl, Yl] : cover.rectangles) {
    const IntegerSet Zl = Sumset(Xl, Yl);
    TriangleInstance part{
        Filter(inst.A, [&](int, int, int64_t x) { return Xl.contains(x); }),
        Filter(inst.B, [&](int, int, int64_t y) { return Yl.contains(y); }),
        Filter(inst.C, [&](int, int, int64_t z) { return Zl.contains(z); })};
    if (part.A.Empty() || part.B.Empty() || part.C.Empty()) continue;
    if (std::min(Xl.size(), Yl.size()) * L2 <= D) {
      ++out.counters["brute_sparse"];
      ListAll(part, &out);
      continue;
    }
    InstanceTags tags;
    tags.uniform = SummedEntryCount(part);
    tags.regular = D;
    tags.doubling = DoublingConstant(JointEntrySet(part));
    tags.doubling_limit = knobs.K;
    tags.heuristic_exceeded = !tags.doubling->AtMost(knobs.K);
    Emit(&out, IdentityAdjustment(part), std::move(tags));
  }
  out.Normalize();
  return out;
}

ReductionOutput ReduceLowRankToLowDoubling(const TriangleInstance& inst,
                                           const RankDecomposition& dc,
                                           const TriangleKnobs& knobs) {
  ReductionOutput regular = ReduceLowRankToUniformRegular(inst, dc, knobs);
  ReductionOutput out;
  out.triples = std::move(regular.triples);
  out.counters = regular.counters;
  out.counters["instances"] = 0;
  for (const ReducedInstance& ri : regular.instances) {
    ReductionOutput inner = ReduceUniformRegularToLowDoubling(
        ri.adjustment.adjusted, *ri.tags.regular, knobs);
    out.triples.insert(out.triples.end(), inner.triples.begin(),
                       inner.triples.end());
    for (const auto& [name, value] : inner.counters)
      if (name != "instances") out.counters[name] += value;
    for (ReducedInstance& x : inner.instances) {
      Emit(&out, Compose(ri.adjustment, x.adjustment), std::move(x.tags));
    }
  }
  out.Normalize();
  return out;
}

}  // namespace minplus
