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


// Acceptance checks. Each criterion prints one PASS/FAIL line; the exit
// status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "minplus/addcomb/covering.h"
#include "minplus/addcomb/integer_set.h"
#include "minplus/addcomb/popular_sums.h"
#include "minplus/addcomb/sum_order_hash.h"
#include "minplus/cli/corpus.h"
#include "minplus/cli/run_config.h"
#include "minplus/core/brute.h"
#include "minplus/core/masked_matrix.h"
#include "minplus/core/random.h"
#include "minplus/core/solvers.h"
#include "minplus/core/triangle.h"
#include "minplus/intermediate/bounded_difference.h"
#include "minplus/intermediate/graph.h"
#include "minplus/intermediate/products.h"
#include "minplus/rank/cover.h"
#include "minplus/rank/decomposition.h"
#include "minplus/rank/regularize.h"
#include "minplus/reductions/doubling.h"
#include "minplus/reductions/hash_compression.h"
#include "minplus/reductions/small_universe.h"
#include "minplus/reductions/witnesses.h"
#include "minplus/triangle/constraints.h"
#include "minplus/triangle/orientation.h"
#include "minplus/triangle/pipeline.h"
#include "minplus/triangle/reduction.h"
#include "minplus/triangle/solve.h"

namespace minplus {
namespace {

// Pinned corpus sizes and tolerances.
constexpr int kProductInstances = 1000;
constexpr int kMaxOuterDim = 12;  // n1, n3
constexpr int kMaxInnerDim = 8;   // n2
constexpr int64_t kMaxUniverse = 64;
constexpr int kMinHashRuns = 100;  // hash compression must actually run
constexpr int64_t kProductHashBudget = int64_t{1} << 14;
constexpr double kSuiteSeconds = 120.0;

constexpr int kTriangleInstances = 1000;
constexpr int kReductionInstances = 500;
constexpr int kRegularizeInstances = 500;
constexpr int kMaxRegularizeDim = 64;
constexpr int kMaxRegularizeRank = 16;
constexpr int kCoverInstances = 500;
constexpr int kMaxCoverItems = 4096;
constexpr int kMaxCoverConflicts = 32;
constexpr int kCoverRepeats = 3;
constexpr int kGreedyInstances = 500;
constexpr int kMaxGreedySet = 256;
constexpr int kPopularInstances = 200;
constexpr int kMaxPopularSets = 8;
constexpr int kMaxPopularD = 6;
constexpr int64_t kMaxPopularP = 3;
constexpr int kListingRuns = 200;
constexpr double kListingRecovery = 0.99;
constexpr int kMaxFold = 3;  // n, m in the sumset inequality
constexpr int kMaxRandomSet = 12;
constexpr int kRandomInequalitySets = 3000;
constexpr int64_t kHashRange = 12;
constexpr int kMaxHashSet = 5;
constexpr double kHashSeconds = 60.0;
constexpr int kGadgetInstances = 200;

constexpr uint64_t kSeed = 20260418;

using Clock = std::chrono::steady_clock;

double Since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Counts checks and keeps the first failure for the report line.
class Tally {
 public:
  void Check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (first_.empty()) first_ = what;
  }
  bool ok() const { return failures_ == 0; }
  int64_t checks() const { return checks_; }
  int64_t failures() const { return failures_; }
  const std::string& first() const { return first_; }

 private:
  int64_t checks_ = 0;
  int64_t failures_ = 0;
  std::string first_;
};

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome Finish(const Tally& t, const std::string& summary) {
  std::string detail = summary + ", " + std::to_string(t.checks()) +
                       " checks, " + std::to_string(t.failures()) +
                       " failures";
  if (!t.ok()) detail += "; first: " + t.first();
  return {t.ok(), detail};
}

std::string Tag(const char* what, int rep) {
  return std::string(what) + " #" + std::to_string(rep);
}

// ---------------------------------------------------------------- helpers

MaskedMatrix RandomMatrix(Rng& rng, int n, int m, int64_t lo, int64_t hi,
                          double p_bot) {
  MaskedMatrix M(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      if (!rng.Bernoulli(p_bot)) M.set(i, j, rng.Between(lo, hi));
  return M;
}

MaskedMatrix RandomOver(Rng& rng, int n, int m,
                        const std::vector<int64_t>& values, double p_bot) {
  MaskedMatrix M(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      if (!rng.Bernoulli(p_bot))
        M.set(i, j, values[rng.Below(static_cast<int64_t>(values.size()))]);
  return M;
}

// Fully present rows whose neighbours differ by at most c.
MaskedMatrix RandomRowBd(Rng& rng, int n, int m, int64_t c, int64_t u) {
  MaskedMatrix M(n, m);
  for (int i = 0; i < n; ++i) {
    int64_t v = rng.Between(0, u);
    for (int k = 0; k < m; ++k) {
      if (k > 0) v = std::clamp<int64_t>(v + rng.Between(-c, c), 0, u);
      M.set(i, k, v);
    }
  }
  return M;
}

IntegerSet RandomSet(Rng& rng, int size, int64_t lo, int64_t hi) {
  std::vector<int64_t> xs;
  for (int t = 0; t < size; ++t) xs.push_back(rng.Between(lo, hi));
  return IntegerSet::FromUnsorted(std::move(xs));
}

int64_t MaxEntry(const MaskedMatrix& A, const MaskedMatrix& B) {
  return std::max<int64_t>(
      {0, A.MaxValue().value_or(0), B.MaxValue().value_or(0)});
}

MaskedMatrix SmallUniverseSolve(const MaskedMatrix& a, const MaskedMatrix& b) {
  return MinPlusSmallUniverse(a, b, MaxEntry(a, b));
}

IntegerSet EntrySet(const MaskedMatrix& A, const MaskedMatrix& B) {
  std::vector<int64_t> xs = A.DistinctValues();
  for (int64_t x : B.DistinctValues()) xs.push_back(x);
  return IntegerSet::FromUnsorted(std::move(xs));
}

// Distances of a gadget, shifted back by its offset; ⊥ above the cutoff.
MaskedMatrix ShiftedDistances(const Gadget& g) {
  const MaskedMatrix D = Distances(g.graph, g.sources, g.targets);
  MaskedMatrix C(D.rows(), D.cols());
  for (int i = 0; i < D.rows(); ++i)
    for (int j = 0; j < D.cols(); ++j)
      if (D.has(i, j) && D.at(i, j) <= g.cutoff)
        C.set(i, j, D.at(i, j) - g.offset);
  return C;
}

// ------------------------------------------------------------ criterion 1

Outcome ProductEquivalence() {
  Tally t;
  int hash_runs = 0, directed_runs = 0, node_runs = 0;
  for (int rep = 0; rep < kProductInstances; ++rep) {
    Rng rng(DeriveSeed(kSeed, "product") + static_cast<uint64_t>(rep));
    const int n1 = static_cast<int>(rng.Between(1, kMaxOuterDim));
    const int n2 = static_cast<int>(rng.Between(1, kMaxInnerDim));
    const int n3 = static_cast<int>(rng.Between(1, kMaxOuterDim));
    const int64_t u = rng.Between(1, kMaxUniverse);
    const double p_bot = std::vector<double>{0.0, 0.1, 0.3}[rng.Below(3)];
    MaskedMatrix A, B;
    if (rep % 4 == 3) {
      // Few distinct entries, so the hash search settles quickly.
      const int size = static_cast<int>(rng.Between(1, 6));
      const IntegerSet X = RandomSet(rng, size, 0, u);
      A = RandomOver(rng, n1, n2, X.elements(), p_bot);
      B = RandomOver(rng, n2, n3, X.elements(), p_bot);
    } else {
      A = RandomMatrix(rng, n1, n2, 0, u, p_bot);
      B = RandomMatrix(rng, n2, n3, 0, u, p_bot);
    }
    const MaskedMatrix want = MinPlusBrute(A, B);
    const uint64_t seed = DeriveSeed(kSeed, static_cast<uint64_t>(rep));
    auto expect = [&](const MaskedMatrix& got, const char* what) {
      t.Check(got == want, Tag(what, rep));
    };

    expect(MinPlusSmallUniverse(A, B, u), "small universe");
    expect(MinPlusViaExactTriangle(A, B, SolveUniformLowDoubling),
           "via exact triangle");

    const int n2_small = static_cast<int>(rng.Between(1, n2));
    const int tt = static_cast<int>(rng.Between(1, 3));
    const MinPlusSolver small = [n2_small](const MaskedMatrix& a,
                                           const MaskedMatrix& b) {
      return MinPlusSmallUniverse(a, b, n2_small);
    };
    const LowRankTriangleSolver tri = [](const LowRankInstance& lr) {
      return SolveLowRank(lr);
    };
    expect(SmallUniverseReduction(A, B, n2_small, tt, small, tri, seed),
           "small-universe reduction");

    const int64_t K = rng.Between(2, 6);
    expect(DoublingReduction(A, B, K, MinPlusBrute, seed), "doubling reduction");

    try {
      const MaskedMatrix got = HashUniverseCompression(
          A, B, SearchHashSource(kProductHashBudget), SmallUniverseSolve, seed);
      ++hash_runs;
      expect(got, "hash compression");
    } catch (const HashUnavailable&) {
    }

    const MinProductInstance mp = ReduceMinPlusToMinProduct(A, B);
    expect(MinProductBrute(mp.A, mp.B), "min product");
    const MinMaxEncoding mm = EncodeMinProductAsMinMax(mp.A, mp.B);
    expect(DecodeMinMax(mm, MinMaxBrute(mp.A, mm.B)), "min-max");
    const MinEqInstance me = ReduceMinPlusToMinEquality(A, B);
    expect(MinEqBrute(me.A, me.B), "min equality");
    const MinWitnessInstance mw = ReduceMinPlusToMinWitness(A, B);
    expect(DecodeMinWitness(mw, MinWitnessBrute(mw.A, mw.B)), "min witness");

    const int64_t L = int64_t{1} << rng.Below(3);
    expect(RankSubstitutionBdReduction(A, B, L, MinPlusBrute,
                                       /*require_regular=*/false),
           "rank substitution");

    // The monotone transform needs a fully present row-bounded-difference A.
    const int64_t c = rng.Between(1, 3);
    const MaskedMatrix Abd = RandomRowBd(rng, n1, n2, c, u);
    const MonotoneBdInstance bd = MonotoneBdTransform(Abd, B, c);
    t.Check(ReconstructProduct(bd, MinPlusBrute(bd.A, bd.B)) ==
                MinPlusBrute(Abd, B),
            Tag("monotone bd", rep));

    expect(DecodeGadget(MinPlusToApspGraph(A, B,
                                           ApspVariant::kUndirectedThreeLayer)),
           "undirected gadget");
    const int n = std::max(n1, n3);
    if (n2 <= n && MaxEntry(A, B) <= n) {
      ++directed_runs;
      expect(DecodeGadget(
                 MinPlusToApspGraph(A, B, ApspVariant::kDirectedLayered)),
             "directed gadget");
    }
    if (EntrySet(A, B).size() <= n2) {
      ++node_runs;
      expect(DecodeGadget(NodeWeightedGadget(A, B)), "node-weighted gadget");
    }
  }
  t.Check(hash_runs >= kMinHashRuns,
          "hash compression ran only " + std::to_string(hash_runs) + " times");
  std::ostringstream s;
  s << kProductInstances << " instances (hash " << hash_runs << ", directed "
    << directed_runs << ", node-weighted " << node_runs << ")";
  return Finish(t, s.str());
}

// ------------------------------------------------------------ criterion 2

const std::vector<std::string> kModes = {"uniform",     "all-exact", "planted",
                                         "lowrank",     "progression",
                                         "geometric",   "bd"};

CorpusRecord RandomRecord(const char* salt, int rep, int max_dim) {
  Rng rng(DeriveSeed(kSeed, salt) + static_cast<uint64_t>(rep));
  CorpusShape s;
  s.mode = kModes[rep % kModes.size()];
  s.n1 = static_cast<int>(rng.Between(1, max_dim));
  s.n2 = static_cast<int>(rng.Between(1, max_dim));
  s.n3 = static_cast<int>(rng.Between(1, max_dim));
  s.u = rng.Between(1, 24);
  s.p_bot = std::vector<double>{0.0, 0.1, 0.3}[rng.Below(3)];
  s.rank = static_cast<int>(rng.Between(1, 4));
  s.planted = static_cast<int>(rng.Between(0, 6));
  s.size = static_cast<int>(rng.Between(1, 5));
  s.c = rng.Between(1, 3);
  return GenerateRecord(s, DeriveSeed(kSeed, salt), rep);
}

Outcome TriangleEquivalence() {
  Tally t;
  std::map<std::string, int> modes;
  int64_t brute_rank = 0, recursions = 0;
  for (int rep = 0; rep < kTriangleInstances; ++rep) {
    const CorpusRecord r = RandomRecord("triangle", rep, 10);
    ++modes[r.mode];
    const EdgeFlags want = ExactTriangleBrute(r.inst);
    // Half the runs go through the reductions even when listing is cheaper.
    TriangleKnobs knobs;
    knobs.brute_rank_fallback = rep % 2 == 0;
    std::map<std::string, int64_t> counters;
    t.Check(SolveLowRank(LowRankInstance{r.inst, Role::kC, DecompositionOfC(r)},
                         knobs, &counters) == want,
            Tag("low rank", rep) + " " + r.mode);
    brute_rank += counters["brute_rank"];
    recursions += counters["rank_recursions"] + counters["heavy_recursions"];
    t.Check(SolveUniformLowDoubling(r.inst) == want,
            Tag("uniform low doubling", rep) + " " + r.mode);
    for (const Triple& p : r.planted)
      t.Check(want.c.get(p[0], p[2]), Tag("planted triple", rep));
  }
  std::ostringstream s;
  s << kTriangleInstances << " instances (";
  for (const auto& [mode, n] : modes) s << mode << " " << n << " ";
  s.seekp(-1, std::ios_base::cur);
  s << "), " << recursions << " recursions, " << brute_rank
    << " rank fallbacks";
  return Finish(t, s.str());
}

// ------------------------------------------------------------ criterion 3

struct StepCheck {
  Tally* t;
  int64_t outputs = 0;
  int64_t emitted = 0;
  int64_t heuristic = 0;

  // Soundness, adjustments and tags of one reduction output.
  void Run(const TriangleInstance& src, const ReductionOutput& out,
           bool cover_path, const std::string& what) {
    ++outputs;
    t->Check(VerifyReductionOutput(src, out), what + ": output");
    for (const ReducedInstance& ri : out.instances) {
      ++emitted;
      t->Check(VerifyPotentialAdjustment(src, ri.adjustment),
               what + ": adjustment");
      t->Check(TagsHold(ri.adjustment.adjusted, ri.tags), what + ": tags");
      if (ri.tags.heuristic_exceeded) {
        ++heuristic;
        t->Check(cover_path, what + ": heuristic flag off the cover path");
      }
      if (ri.tags.doubling) {
        // Recount the doubling of the joint entry set directly.
        const IntegerSet X = JointEntrySet(ri.adjustment.adjusted);
        const int64_t xx = Sumset(X, X).size();
        t->Check(xx * ri.tags.doubling->den == ri.tags.doubling->num * X.size(),
                 what + ": doubling recount");
      }
    }
  }
};

Outcome ReductionSoundness() {
  Tally t;
  StepCheck check{&t};
  constexpr int kChained = 2;  // emitted instances fed to the next step
  for (int rep = 0; rep < kReductionInstances; ++rep) {
    const CorpusRecord r = RandomRecord("reduction", rep, 10);
    const TriangleInstance& src = r.inst;
    const RankDecomposition dc = DecompositionOfC(r);
    TriangleKnobs knobs;
    knobs.t = static_cast<int>(2 + rep % 2);
    const std::string id = Tag("record", rep) + " " + r.mode;

    const ReductionOutput slice = ReduceLowRankToSliceUniform(src, dc, knobs);
    check.Run(src, slice, false, id + " slice-uniform");
    for (size_t x = 0; x < slice.instances.size() && x < kChained; ++x) {
      const ReducedInstance& ri = slice.instances[x];
      const TriangleInstance& in = ri.adjustment.adjusted;
      check.Run(in,
                ReduceSliceUniformToUniform(in, *ri.tags.slice_uniform, knobs),
                false, id + " uniform (chained)");
    }
    check.Run(src,
              ReduceSliceUniformToUniform(
                  src, std::max<int64_t>(1, SliceUniformity(src)), knobs),
              false, id + " uniform");

    const ReductionOutput regular =
        ReduceLowRankToUniformRegular(src, dc, knobs);
    check.Run(src, regular, false, id + " uniform-regular");
    for (size_t x = 0; x < regular.instances.size() && x < kChained; ++x) {
      const ReducedInstance& ri = regular.instances[x];
      const TriangleInstance& in = ri.adjustment.adjusted;
      check.Run(in,
                ReduceUniformRegularToLowDoubling(in, *ri.tags.regular, knobs),
                true, id + " low-doubling");
    }
    check.Run(src, ReduceLowRankToLowDoubling(src, dc, knobs), true,
              id + " low-rank to low-doubling");
  }
  std::ostringstream s;
  s << kReductionInstances << " instances, " << check.outputs << " outputs, "
    << check.emitted << " emitted (" << check.heuristic << " heuristic)";
  return Finish(t, s.str());
}

// ------------------------------------------------------------ criterion 4

RankDecomposition RandomDecomposition(Rng& rng, int n, int m, int r,
                                      double p_bot) {
  RankDecomposition d;
  d.r = r;
  d.U = IntMatrix(n, r);
  d.V = IntMatrix(r, m);
  d.S = MaskedMatrix(n, m);
  const int64_t range = rng.Between(1, 100);
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < r; ++l) d.U(i, l) = rng.Between(0, range);
  for (int l = 0; l < r; ++l)
    for (int j = 0; j < m; ++j) d.V(l, j) = rng.Between(0, range);
  // Skewed selectors make irregular rows and columns likely.
  const int hot = static_cast<int>(rng.Below(r));
  const double skew = rng.Uniform01();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      if (!rng.Bernoulli(p_bot))
        d.S.set(i, j, rng.Bernoulli(skew) ? hot : rng.Below(r));
  return d;
}

// Selector counts per row (and per column) against R·m/r (and R·n/r).
bool RowsRegular(const RankDecomposition& d, int64_t R) {
  if (d.r == 0) return true;
  for (int i = 0; i < d.S.rows(); ++i) {
    std::vector<int64_t> count(d.r, 0);
    for (int j = 0; j < d.S.cols(); ++j)
      if (d.S.has(i, j)) ++count[d.S.at(i, j)];
    for (int64_t c : count)
      if (c * d.r > R * d.S.cols()) return false;
  }
  return true;
}

bool ColsRegular(const RankDecomposition& d, int64_t R) {
  RankDecomposition t = d;
  t.S = d.S.Transposed();
  return RowsRegular(t, R);
}

// Every present entry is realized by its selector.
bool Realizes(const MaskedMatrix& A, const RankDecomposition& d) {
  if (d.S.rows() != A.rows() || d.S.cols() != A.cols()) return false;
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) {
      if (A.has(i, j) != d.S.has(i, j)) return false;
      if (!A.has(i, j)) continue;
      const int64_t l = d.S.at(i, j);
      if (l < 0 || l >= d.r || d.U(i, l) + d.V(l, j) != A.at(i, j))
        return false;
    }
  return true;
}

Outcome RegularDecomposition() {
  Tally t;
  int64_t nonempty_small = 0;
  for (int rep = 0; rep < kRegularizeInstances; ++rep) {
    Rng rng(DeriveSeed(kSeed, "regularize") + static_cast<uint64_t>(rep));
    const int n = static_cast<int>(rng.Between(1, kMaxRegularizeDim));
    const int m = static_cast<int>(rng.Between(1, kMaxRegularizeDim));
    const int r = static_cast<int>(rng.Between(1, kMaxRegularizeRank));
    const RankDecomposition d = RandomDecomposition(rng, n, m, r, 0.2);
    const MaskedMatrix A = Evaluate(d);
    const RegularizedDecomposition reg = RegularizeDecomposition(A, d);
    const std::string id = Tag("instance", rep);

    // Partition: every present entry of A lands in exactly one part, intact.
    bool partition = true;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) {
        int hits = 0;
        for (const MaskedMatrix* p :
             {&reg.row_part, &reg.col_part, &reg.small_part}) {
          if (p->rows() != n || p->cols() != m) {
            partition = false;
            continue;
          }
          if (!p->has(i, j)) continue;
          ++hits;
          partition &= A.has(i, j) && p->at(i, j) == A.at(i, j);
        }
        partition &= hits == (A.has(i, j) ? 1 : 0);
      }
    t.Check(partition, id + ": partition");
    t.Check(Realizes(reg.row_part, reg.row_decomposition), id + ": row part");
    t.Check(Realizes(reg.col_part, reg.col_decomposition), id + ": col part");
    t.Check(Realizes(reg.small_part, reg.small_decomposition),
            id + ": small part");
    t.Check(RowsRegular(reg.row_decomposition, reg.R), id + ": row regularity");
    t.Check(ColsRegular(reg.col_decomposition, reg.R), id + ": col regularity");
    t.Check(reg.small_decomposition.r <= (r + 1) / 2, id + ": small rank");
    nonempty_small += !reg.small_part.Empty();
  }

  // The same structure under a small factor, where the split is non-trivial.
  // Halving needs the default factor, so only the other properties apply.
  for (int rep = 0; rep < kRegularizeInstances; ++rep) {
    Rng rng(DeriveSeed(kSeed, "regularize-small-R") + static_cast<uint64_t>(rep));
    const int n = static_cast<int>(rng.Between(1, kMaxRegularizeDim));
    const int m = static_cast<int>(rng.Between(1, kMaxRegularizeDim));
    const int r = static_cast<int>(rng.Between(1, kMaxRegularizeRank));
    const RankDecomposition d = RandomDecomposition(rng, n, m, r, 0.2);
    const MaskedMatrix A = Evaluate(d);
    const int64_t R = rng.Between(1, 4);
    const RegularizedDecomposition reg = RegularizeDecomposition(A, d, R);
    const std::string id = Tag("small-R instance", rep);
    t.Check(IsPartitionOf(A, {reg.row_part, reg.col_part, reg.small_part}),
            id + ": partition");
    t.Check(Realizes(reg.row_part, reg.row_decomposition) &&
                Realizes(reg.col_part, reg.col_decomposition) &&
                Realizes(reg.small_part, reg.small_decomposition),
            id + ": validity");
    t.Check(RowsRegular(reg.row_decomposition, R) &&
                ColsRegular(reg.col_decomposition, R),
            id + ": regularity");
    nonempty_small += !reg.small_part.Empty();
  }
  return Finish(t, std::to_string(2 * kRegularizeInstances) +
                       " instances (" + std::to_string(nonempty_small) +
                       " with a small part)");
}

// ------------------------------------------------------------ criterion 5

CoverInstance RandomCover(Rng& rng, int n, int r, int s) {
  CoverInstance inst;
  inst.r = r;
  for (int i = 0; i < n; ++i) {
    const int x = static_cast<int>(rng.Below(r));
    std::set<int> c;
    const int size = static_cast<int>(rng.Between(0, s));
    while (static_cast<int>(c.size()) < size) {
      const int y = static_cast<int>(rng.Below(r));
      if (y != x) c.insert(y);
    }
    inst.items.push_back(x);
    inst.conflicts.emplace_back(c.begin(), c.end());
  }
  return inst;
}

std::string Serialize(const CoverResult& res) {
  std::ostringstream s;
  for (const auto& set : res.sets) {
    for (int x : set) s << x << ',';
    s << ';';
  }
  s << '|';
  for (int a : res.assignment) s << a << ',';
  return s.str();
}

Outcome ConflictFreeCovering() {
  Tally t;
  int64_t largest = 0;
  for (int rep = 0; rep < kCoverInstances; ++rep) {
    Rng rng(DeriveSeed(kSeed, "cover") + static_cast<uint64_t>(rep));
    // Log-uniform item counts, with the extremes pinned in.
    const int n = rep % 50 == 0
                      ? kMaxCoverItems
                      : static_cast<int>(std::exp(rng.Uniform01() *
                                                  std::log(kMaxCoverItems)));
    const int s = rep % 50 == 1 ? kMaxCoverConflicts
                                : static_cast<int>(rng.Between(0, kMaxCoverConflicts));
    const int r = static_cast<int>(rng.Between(s + 1, 4 * s + 64));
    const CoverInstance inst = RandomCover(rng, std::max(1, n), r, s);
    const std::string id = Tag("instance", rep);

    const CoverResult res = ConflictFreeCover(inst);
    const std::string bytes = Serialize(res);
    for (int again = 1; again < kCoverRepeats; ++again)
      t.Check(Serialize(ConflictFreeCover(inst)) == bytes, id + ": determinism");

    bool covered = res.assignment.size() == inst.items.size();
    for (size_t i = 0; covered && i < inst.items.size(); ++i) {
      const int a = res.assignment[i];
      if (a < 0 || a >= static_cast<int>(res.sets.size())) {
        covered = false;
        break;
      }
      const auto& set = res.sets[a];
      covered &= std::binary_search(set.begin(), set.end(), inst.items[i]);
      for (int c : inst.conflicts[i])
        covered &= !std::binary_search(set.begin(), set.end(), c);
    }
    t.Check(covered, id + ": coverage");

    int64_t max_conflicts = 0;
    for (const auto& c : inst.conflicts)
      max_conflicts = std::max<int64_t>(max_conflicts, c.size());
    const int64_t bound =
        static_cast<int64_t>(std::ceil(16.0 * static_cast<double>(max_conflicts) *
                                       std::log(static_cast<double>(
                                           inst.items.size())))) +
        1;
    t.Check(static_cast<int64_t>(res.sets.size()) <= bound, id + ": size bound");
    largest = std::max<int64_t>(largest, res.sets.size());
  }
  return Finish(t, std::to_string(kCoverInstances) + " instances x " +
                       std::to_string(kCoverRepeats) + " runs (largest cover " +
                       std::to_string(largest) + " sets)");
}

// ------------------------------------------------------------ criterion 6

Outcome GreedyCovering() {
  Tally t;
  for (int rep = 0; rep < kGreedyInstances; ++rep) {
    Rng rng(DeriveSeed(kSeed, "greedy") + static_cast<uint64_t>(rep));
    const int64_t range = rng.Between(1, 2000);
    IntegerSet X, Y;
    if (rep % 3 == 0) {
      // Structured pairs: X inside a few shifts of a progression Y.
      const int64_t step = rng.Between(1, 5);
      const int ny = static_cast<int>(rng.Between(1, kMaxGreedySet));
      std::vector<int64_t> ys, xs;
      for (int a = 0; a < ny; ++a) ys.push_back(a * step);
      Y = IntegerSet::FromUnsorted(ys);
      const int nx = static_cast<int>(rng.Between(1, kMaxGreedySet));
      for (int a = 0; a < nx; ++a)
        xs.push_back(ys[rng.Below(ny)] + rng.Between(0, 3) * step * ny);
      X = IntegerSet::FromUnsorted(xs);
    } else {
      X = RandomSet(rng, static_cast<int>(rng.Between(1, kMaxGreedySet)), 0,
                    range);
      Y = RandomSet(rng, static_cast<int>(rng.Between(1, kMaxGreedySet)), 0,
                    range);
    }
    const std::string id = Tag("pair", rep);
    const std::vector<int64_t> S = GreedyCover(X, Y);
    bool covered = true;
    for (int64_t x : X) {
      bool hit = false;
      for (int64_t s : S) hit |= Y.contains(x - s);
      covered &= hit;
    }
    t.Check(covered, id + ": coverage");
    const int64_t size = static_cast<int64_t>(S.size());
    if (X.size() == 1) {
      // ln 1 = 0, yet one shift is always needed.
      t.Check(size == 1, id + ": singleton uses one shift");
    } else {
      const double bound = static_cast<double>(Difference(Y, X).size()) /
                           static_cast<double>(Y.size()) *
                           std::log(static_cast<double>(X.size()));
      t.Check(size <= static_cast<int64_t>(std::ceil(bound)), id + ": size bound");
    }
  }
  return Finish(t, std::to_string(kGreedyInstances) + " pairs");
}

// ------------------------------------------------------------ criterion 7

void CheckPopularSide(Tally& t, const std::vector<IntegerSet>& mine,
                      const std::vector<IntegerSet>& other,
                      const PopularSumSide& s, int d, int64_t p,
                      const std::string& id) {
  t.Check(s.iterations <= p * p, id + ": iterations");
  bool shapes = s.rest.size() == mine.size() &&
                s.parts.size() == s.patterns.size() &&
                s.shifts.size() == s.patterns.size();
  for (size_t g = 0; shapes && g < s.patterns.size(); ++g)
    shapes &= s.parts[g].size() == mine.size() &&
              s.shifts[g].size() == mine.size();
  t.Check(shapes, id + ": shapes");
  if (!shapes) return;
  for (const IntegerSet& pattern : s.patterns)
    t.Check(pattern.size() <= d, id + ": pattern size");
  for (size_t i = 0; i < mine.size(); ++i) {
    IntegerSet rebuilt = s.rest[i];
    bool disjoint = true, shifted = true;
    for (size_t g = 0; g < s.patterns.size(); ++g) {
      const IntegerSet& part = s.parts[g][i];
      disjoint &= rebuilt.Intersect(part).empty();
      rebuilt = rebuilt.Union(part);
      if (part.empty()) continue;
      shifted &= s.shifts[g][i].has_value() &&
                 part.Minus(s.patterns[g].Shifted(*s.shifts[g][i])).empty();
    }
    t.Check(disjoint, id + ": disjoint parts");
    t.Check(shifted, id + ": part inside shifted pattern");
    t.Check(rebuilt == mine[i], id + ": parts rebuild the set");
  }
  // Pairs whose remainders still share a sum of multiplicity ≥ 2d/p.
  int64_t popular_pairs = 0;
  for (size_t i = 0; i < mine.size(); ++i)
    for (size_t j = 0; j < other.size(); ++j) {
      bool any = false;
      for (const auto& [z, c] : SumsetWithMultiplicities(s.rest[i], other[j]))
        any |= c * p >= 2 * d;
      popular_pairs += any;
    }
  t.Check(popular_pairs * p <= static_cast<int64_t>(mine.size() * other.size()),
          id + ": popular pairs");
}

Outcome PopularSumDecompositionCheck() {
  Tally t;
  int64_t with_patterns = 0;
  for (int rep = 0; rep < kPopularInstances; ++rep) {
    Rng rng(DeriveSeed(kSeed, "popular") + static_cast<uint64_t>(rep));
    const int n = static_cast<int>(rng.Between(1, kMaxPopularSets));
    const int m = static_cast<int>(rng.Between(1, kMaxPopularSets));
    const int d = static_cast<int>(rng.Between(1, kMaxPopularD));
    // Multiplicities reach 2d/p mostly at the largest p.
    const int64_t p = rep % 3 == 0 ? rng.Between(1, kMaxPopularP) : kMaxPopularP;
    // Dense sets in a narrow window make popular sums common; the wide
    // window keeps some instances without any.
    const bool dense = rep % 4 != 0;
    const int64_t hi = dense ? rng.Between(d - 1, d + 1) : rng.Between(d, 4 * d);
    auto draw = [&] {
      const int size = static_cast<int>(
          dense ? rng.Between((d + 1) / 2, d) : rng.Between(0, d));
      return RandomSet(rng, size, 0, hi).Shifted(rng.Between(-3, 3));
    };
    std::vector<IntegerSet> X, Y;
    for (int i = 0; i < n; ++i) X.push_back(draw());
    for (int j = 0; j < m; ++j) Y.push_back(draw());
    const PopularSumDecomposition dec = PopularSumDecompose(X, Y, d, p);
    const std::string id = Tag("instance", rep);
    CheckPopularSide(t, X, Y, dec.x, d, p, id + " X");
    CheckPopularSide(t, Y, X, dec.y, d, p, id + " Y");
    with_patterns += !dec.x.patterns.empty() || !dec.y.patterns.empty();
  }
  return Finish(t, std::to_string(kPopularInstances) + " instances (" +
                       std::to_string(with_patterns) + " with patterns)");
}

// ------------------------------------------------------------ criterion 8

std::vector<int> Sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Compares listed witnesses with the full census: validity (no strays, no
// repeats, at most t) and completeness.
struct ListingCompare {
  bool valid = true;
  bool complete = true;

  void Add(const WitnessLists& got, const WitnessLists& all, int t) {
    if (got.size() != all.size()) {
      valid = complete = false;
      return;
    }
    for (size_t a = 0; a < all.size(); ++a) {
      if (got[a].size() != all[a].size()) {
        valid = complete = false;
        return;
      }
      for (size_t b = 0; b < all[a].size(); ++b) {
        const std::vector<int> g = Sorted(got[a][b]);
        const std::vector<int> w = Sorted(all[a][b]);
        valid &= static_cast<int>(g.size()) <= t &&
                 std::adjacent_find(g.begin(), g.end()) == g.end() &&
                 std::includes(w.begin(), w.end(), g.begin(), g.end());
        complete &= g == w;
      }
    }
  }
};

int MaxListSize(const WitnessLists& w) {
  size_t best = 0;
  for (const auto& row : w)
    for (const auto& list : row) best = std::max(best, list.size());
  return static_cast<int>(best);
}

Outcome WitnessListing() {
  Tally t;
  int complete_minplus = 0, complete_triangle = 0;
  for (int rep = 0; rep < kListingRuns; ++rep) {
    Rng rng(DeriveSeed(kSeed, "listing") + static_cast<uint64_t>(rep));
    const int n1 = static_cast<int>(rng.Between(1, 8));
    const int n2 = static_cast<int>(rng.Between(1, 8));
    const int n3 = static_cast<int>(rng.Between(1, 8));
    const int64_t u = rng.Between(0, 4);  // small values, many ties
    const MaskedMatrix A = RandomMatrix(rng, n1, n2, 0, u, 0.2);
    const MaskedMatrix B = RandomMatrix(rng, n2, n3, 0, u, 0.2);
    const uint64_t seed = DeriveSeed(kSeed, static_cast<uint64_t>(rep));

    const WitnessLists all = MinPlusWitnessesBrute(A, B);
    const int tm = std::max(1, MaxListSize(all));
    const MinPlusListing l = ListWitnessesMinPlus(A, B, tm, MinPlusBrute, seed);
    ListingCompare mp;
    mp.Add(l.lists, all, tm);
    t.Check(mp.valid, Tag("min-plus run", rep) + ": invalid witness");
    complete_minplus += mp.complete;

    TriangleInstance inst;
    inst.A = A;
    inst.B = B;
    inst.C = RandomMatrix(rng, n1, n3, 0, 2 * u, 0.2);
    WitnessLists wa(n1, std::vector<std::vector<int>>(n2));
    WitnessLists wb(n2, std::vector<std::vector<int>>(n3));
    WitnessLists wc(n1, std::vector<std::vector<int>>(n3));
    for (const Triple& x : ExactTrianglesBrute(inst)) {
      wa[x[0]][x[1]].push_back(x[2]);
      wb[x[1]][x[2]].push_back(x[0]);
      wc[x[0]][x[2]].push_back(x[1]);
    }
    const int tt =
        std::max({1, MaxListSize(wa), MaxListSize(wb), MaxListSize(wc)});
    const TriangleWitnesses w =
        ListWitnessesExactTriangle(inst, tt, ExactTriangleBrute, seed);
    ListingCompare tc;
    tc.Add(w.a, wa, tt);
    tc.Add(w.b, wb, tt);
    tc.Add(w.c, wc, tt);
    t.Check(tc.valid, Tag("triangle run", rep) + ": invalid witness");
    complete_triangle += tc.complete;
  }
  const int need = static_cast<int>(std::ceil(kListingRecovery * kListingRuns));
  t.Check(complete_minplus >= need, "min-plus recovery below threshold");
  t.Check(complete_triangle >= need, "triangle recovery below threshold");
  std::ostringstream s;
  s << kListingRuns << " runs per variant, complete min-plus "
    << complete_minplus << ", triangle " << complete_triangle << " (need "
    << need << ")";
  return Finish(t, s.str());
}

// ------------------------------------------------------------ criterion 9

using Wide = __int128;

Wide Power(Wide b, int e) {
  Wide r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::vector<IntegerSet> AllSubsets(int64_t hi) {
  std::vector<IntegerSet> out;
  for (int64_t mask = 1; mask < (int64_t{1} << (hi + 1)); ++mask) {
    std::vector<int64_t> xs;
    for (int64_t x = 0; x <= hi; ++x)
      if (mask >> x & 1) xs.push_back(x);
    out.push_back(IntegerSet::FromUnsorted(xs));
  }
  return out;
}

// |nY - mY| ≤ K^{n+m}|X| with K = |X+Y|/|X|, for all n, m ≤ kMaxFold.
void CheckPlunnecke(Tally& t, const IntegerSet& X, const IntegerSet& Y,
                    const std::string& id) {
  const Wide xs = X.size(), sum = Sumset(X, Y).size();
  for (int n = 0; n <= kMaxFold; ++n)
    for (int m = 0; m <= kMaxFold; ++m) {
      const Wide lhs = IteratedSumset(Y, n, m).size();
      // lhs ≤ sum^{n+m} / xs^{n+m-1}
      bool ok = n + m == 0 ? lhs <= xs
                           : lhs * Power(xs, n + m - 1) <= Power(sum, n + m);
      t.Check(ok, id + ": Plunnecke-Ruzsa n=" + std::to_string(n) +
                      " m=" + std::to_string(m));
    }
}

void CheckRuzsaTriangle(Tally& t, const IntegerSet& X, const IntegerSet& Y,
                        const IntegerSet& Z, const std::string& id) {
  const Wide lhs = Wide(Sumset(X, Y).size()) * Z.size();
  const Wide rhs = Wide(Sumset(X, Z).size()) * Sumset(Y, Z).size();
  t.Check(lhs <= rhs, id + ": Ruzsa triangle");
}

// |Z+Z| ≤ K^8|Z| for Z = X+Y when both doublings are at most K.
void CheckSumsetDoubling(Tally& t, const IntegerSet& X, const IntegerSet& Y,
                         const std::string& id) {
  const Wide kx = Sumset(X, X).size(), ky = Sumset(Y, Y).size();
  // K = max(kx/|X|, ky/|Y|) as a fraction num/den.
  Wide num = kx, den = X.size();
  if (ky * X.size() > kx * Y.size()) {
    num = ky;
    den = Y.size();
  }
  const IntegerSet Z = Sumset(X, Y);
  const Wide zz = Sumset(Z, Z).size();
  t.Check(zz * Power(den, 8) <= Power(num, 8) * Z.size(),
          id + ": sumset doubling");
}

Outcome AdditiveInequalities() {
  Tally t;
  const std::vector<IntegerSet> small = AllSubsets(5);
  for (size_t a = 0; a < small.size(); ++a)
    for (size_t b = 0; b < small.size(); ++b) {
      const std::string id = "subsets " + small[a].DebugString() + " " +
                             small[b].DebugString();
      CheckPlunnecke(t, small[a], small[b], id);
      CheckSumsetDoubling(t, small[a], small[b], id);
    }
  const std::vector<IntegerSet> tiny = AllSubsets(4);
  for (const IntegerSet& X : tiny)
    for (const IntegerSet& Y : tiny)
      for (const IntegerSet& Z : tiny) CheckRuzsaTriangle(t, X, Y, Z, "subsets");

  Rng rng(DeriveSeed(kSeed, "inequalities"));
  for (int rep = 0; rep < kRandomInequalitySets; ++rep) {
    auto draw = [&] {
      const int size = static_cast<int>(rng.Between(1, kMaxRandomSet));
      if (rng.Bernoulli(0.3)) {
        // Progression-like sets with small doubling.
        const int64_t a = rng.Between(-20, 20), b = rng.Between(1, 7);
        std::vector<int64_t> xs;
        for (int i = 0; i < size; ++i) xs.push_back(a + b * rng.Between(0, size));
        return IntegerSet::FromUnsorted(xs);
      }
      return RandomSet(rng, size, -rng.Between(0, 100), rng.Between(0, 100));
    };
    const IntegerSet X = draw(), Y = draw(), Z = draw();
    const std::string id = Tag("random", rep);
    CheckPlunnecke(t, X, Y, id);
    CheckRuzsaTriangle(t, X, Y, Z, id);
    CheckSumsetDoubling(t, X, Y, id);
  }
  return Finish(t, std::to_string(small.size()) + "^2 exhaustive pairs, " +
                       std::to_string(tiny.size()) + "^3 triples, " +
                       std::to_string(kRandomInequalitySets) + " random triples");
}

// ----------------------------------------------------------- criterion 10

bool SumOrderPreserving(const std::vector<int64_t>& y,
                        const std::vector<int64_t>& h) {
  const size_t m = y.size();
  for (size_t a = 0; a < m; ++a)
    for (size_t b = a; b < m; ++b)
      for (size_t c = 0; c < m; ++c)
        for (size_t d = c; d < m; ++d)
          if (y[a] + y[b] < y[c] + y[d] && h[a] + h[b] >= h[c] + h[d])
            return false;
  return true;
}

// Whether some h: y -> {0..top} preserves sum order. Such an h is strictly
// increasing (x < y gives 2h(x) < 2h(y)), so increasing maps suffice.
bool HashExists(const std::vector<int64_t>& y, int64_t top) {
  std::vector<int64_t> h;
  std::function<bool(int64_t)> extend = [&](int64_t lo) {
    if (h.size() == y.size()) return SumOrderPreserving(y, h);
    for (int64_t v = lo; v <= top; ++v) {
      h.push_back(v);
      if (extend(v + 1)) return true;
      h.pop_back();
    }
    return false;
  };
  return extend(0);
}

// Largest |Y| over Y ⊆ X admitting a hash into {0..|X|}.
int LargestHashable(const std::vector<int64_t>& X) {
  const int n = static_cast<int>(X.size());
  int best = 0;
  for (int mask = 1; mask < (1 << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size <= best) continue;
    std::vector<int64_t> y;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) y.push_back(X[i]);
    if (HashExists(y, n)) best = size;
  }
  return best;
}

Outcome SumOrderHashing() {
  Tally t;
  const auto start = Clock::now();
  int sets = 0, found = 0, partial = 0;
  for (int64_t mask = 0; mask < (int64_t{1} << (kHashRange + 1)); ++mask) {
    std::vector<int64_t> xs;
    for (int64_t x = 0; x <= kHashRange; ++x)
      if (mask >> x & 1) xs.push_back(x);
    if (static_cast<int>(xs.size()) > kMaxHashSet) continue;
    ++sets;
    const IntegerSet X = IntegerSet::FromUnsorted(xs);
    const std::string id = "X=" + X.DebugString();
    const int best = LargestHashable(xs);
    const HashSearchResult r = SumOrderHashSearch(X);
    if (best == 0) {
      t.Check(r.status == HashSearchStatus::kNone, id + ": expected none");
      continue;
    }
    t.Check(r.status == HashSearchStatus::kFound, id + ": expected a hash");
    if (r.status != HashSearchStatus::kFound) continue;
    ++found;
    partial += best < static_cast<int>(xs.size());
    const std::vector<int64_t>& y = r.hash.domain.elements();
    t.Check(static_cast<int>(y.size()) == best, id + ": domain not maximal");
    t.Check(std::includes(xs.begin(), xs.end(), y.begin(), y.end()),
            id + ": domain outside X");
    bool in_range = r.hash.values.size() == y.size();
    for (int64_t v : r.hash.values)
      in_range &= v >= 0 && v <= static_cast<int64_t>(xs.size());
    t.Check(in_range, id + ": values outside {0..|X|}");
    t.Check(in_range && SumOrderPreserving(y, r.hash.values),
            id + ": oracle rejects the hash");
    t.Check(VerifySumOrderPreserving(r.hash), id + ": verifier rejects the hash");
  }
  const double secs = Since(start);
  t.Check(secs < kHashSeconds, "enumeration took " + std::to_string(secs) + " s");
  std::ostringstream s;
  s << sets << " sets, " << found << " hashes (" << partial
    << " on a proper subset), " << secs << " s";
  return Finish(t, s.str());
}

// ----------------------------------------------------------- criterion 11

Outcome Gadgets() {
  Tally t;
  int node = 0, directed = 0, undirected = 0;
  for (int rep = 0; rep < kGadgetInstances; ++rep) {
    Rng rng(DeriveSeed(kSeed, "gadget") + static_cast<uint64_t>(rep));
    const std::string id = Tag("instance", rep);
    const double p_bot = std::vector<double>{0.0, 0.2}[rng.Below(2)];

    // Node-weighted: the n × √n × n shape with |X| ≤ √n.
    {
      const int s = static_cast<int>(rng.Between(1, 4));
      const int n = s * s;
      const int64_t u = rng.Between(0, 30);
      const IntegerSet X =
          RandomSet(rng, static_cast<int>(rng.Between(1, s)), -u, u);
      const MaskedMatrix A = RandomOver(rng, n, s, X.elements(), p_bot);
      const MaskedMatrix B = RandomOver(rng, s, n, X.elements(), p_bot);
      const Gadget g = NodeWeightedGadget(A, B);
      int64_t umax = 0;
      for (int64_t x : EntrySet(A, B)) umax = std::max(umax, std::abs(x));
      t.Check(g.offset == 40 * std::max<int64_t>(1, umax),
              id + ": node-weighted offset");
      t.Check(ShiftedDistances(g) == MinPlusBrute(A, B),
              id + ": node-weighted distances");
      t.Check(g.graph.n <= 4 * n, id + ": node-weighted vertices");
      ++node;
    }

    const int n1 = static_cast<int>(rng.Between(1, 10));
    const int n3 = static_cast<int>(rng.Between(1, 10));
    const int n = std::max(n1, n3);
    const int n2 = static_cast<int>(rng.Between(1, n));
    const int64_t u = rng.Between(0, n);
    const MaskedMatrix A = RandomMatrix(rng, n1, n2, 0, u, p_bot);
    const MaskedMatrix B = RandomMatrix(rng, n2, n3, 0, u, p_bot);
    const MaskedMatrix want = MinPlusBrute(A, B);

    const Gadget gd = MinPlusToApspGraph(A, B, ApspVariant::kDirectedLayered);
    t.Check(gd.offset == 0, id + ": directed offset");
    t.Check(ShiftedDistances(gd) == want, id + ": directed distances");
    // I, J, and n2 paths of 2p + 1 vertices with p = 2⌈n/n2⌉.
    const int64_t p = 2 * ((n + n2 - 1) / n2);
    t.Check(gd.graph.n <= n1 + n3 + n2 * (2 * p + 1),
            id + ": directed vertices");
    t.Check(gd.graph.n <= 11 * n, id + ": directed vertices linear");
    ++directed;

    const Gadget gu =
        MinPlusToApspGraph(A, B, ApspVariant::kUndirectedThreeLayer);
    t.Check(gu.offset == 2 * (MaxEntry(A, B) + 1), id + ": undirected offset");
    t.Check(ShiftedDistances(gu) == want, id + ": undirected distances");
    t.Check(gu.graph.n <= n1 + n2 + n3, id + ": undirected vertices");
    ++undirected;
  }
  std::ostringstream s;
  s << node << " node-weighted, " << directed << " directed, " << undirected
    << " undirected";
  return Finish(t, s.str());
}

// ------------------------------------------------------------------ main

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace minplus

int main() {
  using namespace minplus;
  const auto suite_start = Clock::now();
  const std::vector<Criterion> criteria = {
      {1, "product oracle equivalence", ProductEquivalence},
      {2, "triangle oracle equivalence", TriangleEquivalence},
      {3, "reduction soundness", ReductionSoundness},
      {4, "regular rank decomposition", RegularDecomposition},
      {5, "conflict-free covering", ConflictFreeCovering},
      {6, "greedy covering", GreedyCovering},
      {7, "popular sum decomposition", PopularSumDecompositionCheck},
      {8, "witness listing", WitnessListing},
      {9, "additive inequalities", AdditiveInequalities},
      {10, "sum-order-preserving hashing", SumOrderHashing},
      {11, "gadgets", Gadgets},
  };
  std::vector<Outcome> outcomes;
  std::vector<double> seconds;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    outcomes.push_back(o);
    seconds.push_back(Since(start));
  }
  // The product criterion also bounds the whole suite.
  const double total = Since(suite_start);
  if (total >= kSuiteSeconds) {
    outcomes[0].pass = false;
    outcomes[0].detail += "; suite took " + std::to_string(total) + " s";
  }
  bool all = true;
  for (size_t i = 0; i < criteria.size(); ++i) {
    std::printf("%s criterion %d (%s): %s [%.1f s]\n",
                outcomes[i].pass ? "PASS" : "FAIL", criteria[i].id,
                criteria[i].name, outcomes[i].detail.c_str(), seconds[i]);
    all &= outcomes[i].pass;
  }
  std::printf("total %.1f s\n", total);
  return all ? 0 : 1;
}
