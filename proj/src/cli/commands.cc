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

#include "minplus/cli/commands.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "minplus/core/brute.h"
#include "minplus/core/random.h"
#include "minplus/core/solvers.h"
#include "minplus/intermediate/bounded_difference.h"
#include "minplus/intermediate/graph.h"
#include "minplus/intermediate/products.h"
#include "minplus/reductions/doubling.h"
#include "minplus/reductions/hash_compression.h"
#include "minplus/reductions/small_universe.h"
#include "minplus/triangle/constraints.h"
#include "minplus/triangle/pipeline.h"
#include "minplus/triangle/solve.h"

namespace minplus {
namespace {

using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// fn(t) for t in [0, n) on up to `workers` threads. The first exception is
// rethrown after all threads finish.
template <typename Fn>
void ParallelFor(int n, int workers, Fn fn) {
  workers = std::max(1, std::min(workers, n));
  if (workers == 1) {
    for (int t = 0; t < n; ++t) fn(t);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex mu;
  std::vector<std::thread> threads;
  for (int w = 0; w < workers; ++w)
    threads.emplace_back([&] {
      for (int t; (t = next++) < n;) {
        try {
          fn(t);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!error) error = std::current_exception();
          next = n;
        }
      }
    });
  for (auto& th : threads) th.join();
  if (error) std::rethrow_exception(error);
}

int64_t MaxEntry(const MaskedMatrix& A, const MaskedMatrix& B) {
  return std::max({int64_t{0}, A.MaxValue().value_or(0), B.MaxValue().value_or(0)});
}

MinPlusSolver SmallUniverseSolver() {
  return [](const MaskedMatrix& a, const MaskedMatrix& b) {
    return MinPlusSmallUniverse(a, b, MaxEntry(a, b));
  };
}

int64_t RowDifferenceBound(const MaskedMatrix& A) {
  int64_t c = 1;
  for (int i = 0; i < A.rows(); ++i)
    for (int k = 0; k + 1 < A.cols(); ++k)
      if (A.has(i, k) && A.has(i, k + 1))
        c = std::max(c, std::abs(A.at(i, k) - A.at(i, k + 1)));
  return c;
}

uint64_t RecordSeed(const RunConfig& cfg, const CorpusRecord& r,
                    const std::string& algorithm) {
  if (!IsRandomized(algorithm)) return 0;
  return DeriveSeed(cfg.RequireSeed(algorithm), r.id);
}

// Domain and shape errors get the record id in front.
template <typename Fn>
auto WithRecord(const CorpusRecord& r, Fn fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const HashUnavailable&) {
    throw;
  } catch (const ShapeError& e) {
    throw ShapeError("record " + r.id + ": " + e.what());
  } catch (const std::domain_error& e) {
    throw std::domain_error("record " + r.id + ": " + e.what());
  }
}

bool HasHeuristicTag(const ReductionOutput& out) {
  for (const ReducedInstance& ri : out.instances)
    if (ri.tags.heuristic_exceeded) return true;
  return false;
}

}  // namespace

const std::vector<std::string>& TriangleAlgorithms() {
  static const std::vector<std::string> names = {"brute", "low-rank",
                                                 "low-doubling"};
  return names;
}

const std::vector<std::string>& ProductAlgorithms() {
  static const std::vector<std::string> names = {
      "product-brute",        "product-small-universe",
      "product-via-triangle", "small-universe-reduction",
      "doubling-reduction",   "hash-compression",
      "min-product",          "min-equality",
      "min-witness",          "monotone-bd",
      "rank-substitution",    "node-weighted-gadget",
      "apsp-directed",        "apsp-undirected"};
  return names;
}

const std::vector<std::string>& ReductionNames() {
  static const std::vector<std::string> names = {
      "identity",        "slice-uniform", "uniform",
      "uniform-regular", "low-doubling",  "low-rank-to-low-doubling"};
  return names;
}

bool IsRandomized(const std::string& algorithm) {
  return algorithm == "small-universe-reduction" ||
         algorithm == "doubling-reduction" || algorithm == "hash-compression";
}

EdgeFlags RunTriangleAlgorithm(const std::string& name, const CorpusRecord& r,
                               const RunConfig& cfg, Json* stats) {
  if (name == "brute") return ExactTriangleBrute(r.inst);
  if (name == "low-doubling") return SolveUniformLowDoubling(r.inst);
  if (name == "low-rank") {
    std::map<std::string, int64_t> counters;
    EdgeFlags f = SolveLowRank(LowRankInstance{r.inst, Role::kC, DecompositionOfC(r)},
                               cfg.knobs, &counters);
    if (stats) *stats = Json(counters);
    return f;
  }
  throw UsageError("unknown triangle algorithm " + name);
}

MaskedMatrix RunProductAlgorithm(const std::string& name, const MaskedMatrix& A,
                                 const MaskedMatrix& B, const RunConfig& cfg,
                                 uint64_t seed, Json* stats) {
  Json local;
  Json& st = stats ? *stats : local;
  st = Json::object();
  if (name == "product-brute") return MinPlusBrute(A, B);
  if (name == "product-small-universe")
    return MinPlusSmallUniverse(A, B, MaxEntry(A, B));
  if (name == "product-via-triangle") {
    ScalingStats s;
    MaskedMatrix C = MinPlusViaExactTriangle(A, B, SolveUniformLowDoubling, &s);
    st = {{"depth", s.depth}, {"triangle_calls", s.triangle_calls}};
    return C;
  }
  if (name == "small-universe-reduction") {
    const int n2_small =
        cfg.n2_small > 0 ? std::min(cfg.n2_small, std::max(1, A.cols()))
                         : std::max(1, A.cols() / 2);
    const TriangleKnobs knobs = cfg.knobs;
    const MinPlusSolver small = [n2_small](const MaskedMatrix& a,
                                           const MaskedMatrix& b) {
      return MinPlusSmallUniverse(a, b, n2_small);
    };
    const LowRankTriangleSolver tri = [knobs](const LowRankInstance& lr) {
      return SolveLowRank(lr, knobs);
    };
    SmallUniverseStats s;
    MaskedMatrix C = SmallUniverseReduction(A, B, n2_small, cfg.knobs.t, small,
                                            tri, seed, cfg.sampling, &s);
    st = {{"n2_small", n2_small},         {"depth", s.depth},
          {"small_calls", s.small_calls}, {"triangle_calls", s.triangle_calls},
          {"unpopular_samples", s.unpopular_samples}, {"max_rank", s.max_rank}};
    return C;
  }
  if (name == "doubling-reduction") {
    DoublingStats s;
    MaskedMatrix C = DoublingReduction(A, B, cfg.knobs.K, MinPlusBrute, seed,
                                       cfg.sampling, cfg.knobs, &s);
    st = {{"levels", s.levels},
          {"t", s.t},
          {"popular_updates", s.popular_updates},
          {"unpopular_updates", s.unpopular_updates},
          {"ordinary_updates", s.ordinary_updates},
          {"sample_size", s.sample_size},
          {"instances", s.instances},
          {"triples", s.triples},
          {"heuristic_exceeded", s.heuristic_exceeded},
          {"solver_calls", s.solver_calls}};
    return C;
  }
  if (name == "hash-compression") {
    HashCompressionStats s;
    MaskedMatrix C = HashUniverseCompression(A, B, SearchHashSource(),
                                             SmallUniverseSolver(), seed,
                                             cfg.sampling, &s);
    st = {{"entry_values", s.entry_values}, {"domain_size", s.domain_size},
          {"shifts", s.shifts},             {"universe", s.universe},
          {"small_calls", s.small_calls}};
    return C;
  }
  if (name == "min-product") {
    const MinProductInstance inst = ReduceMinPlusToMinProduct(A, B);
    st = {{"inner", inst.A.cols()}};
    return MinProductBrute(inst.A, inst.B);
  }
  if (name == "min-equality") {
    const MinEqInstance inst = ReduceMinPlusToMinEquality(A, B);
    st = {{"inner", inst.A.cols()}, {"differences", inst.differences.size()}};
    return MinEqBrute(inst.A, inst.B);
  }
  if (name == "min-witness") {
    const MinWitnessInstance inst = ReduceMinPlusToMinWitness(A, B);
    st = {{"inner", inst.A.cols()}};
    return DecodeMinWitness(inst, MinWitnessBrute(inst.A, inst.B));
  }
  if (name == "monotone-bd") {
    const MonotoneBdInstance t = MonotoneBdTransform(A, B, RowDifferenceBound(A));
    st = {{"c", t.c}, {"universe", t.universe}};
    return ReconstructProduct(t, MinPlusBrute(t.A, t.B));
  }
  if (name == "rank-substitution") {
    RankSubstitutionStats s;
    MaskedMatrix C = RankSubstitutionBdReduction(A, B, cfg.knobs.L, MinPlusBrute,
                                                 /*require_regular=*/false, &s);
    st = {{"values", s.values},       {"sums", s.sums},
          {"bad_pairs", s.bad_pairs}, {"bad_bound_holds", s.bad_bound_holds},
          {"inner", s.inner},         {"bad_updates", s.bad_updates}};
    return C;
  }
  if (name == "node-weighted-gadget" || name == "apsp-directed" ||
      name == "apsp-undirected") {
    const Gadget g =
        name == "node-weighted-gadget"
            ? NodeWeightedGadget(A, B)
            : MinPlusToApspGraph(A, B,
                                 name == "apsp-directed"
                                     ? ApspVariant::kDirectedLayered
                                     : ApspVariant::kUndirectedThreeLayer);
    st = {{"vertices", g.graph.n},
          {"vertex_bound", g.vertex_bound},
          {"edges", g.graph.edges.size()},
          {"offset", g.offset}};
    return DecodeGadget(g);
  }
  throw UsageError("unknown product algorithm " + name);
}

ReductionOutput RunReduction(const std::string& name, const CorpusRecord& r,
                             const TriangleKnobs& knobs) {
  if (name == "identity") {
    ReductionOutput out;
    out.instances.push_back({IdentityAdjustment(r.inst), InstanceTags{}});
    return out;
  }
  if (name == "slice-uniform")
    return ReduceLowRankToSliceUniform(r.inst, DecompositionOfC(r), knobs);
  if (name == "uniform")
    return ReduceSliceUniformToUniform(
        r.inst, std::max<int64_t>(1, SliceUniformity(r.inst)), knobs);
  if (name == "uniform-regular")
    return ReduceLowRankToUniformRegular(r.inst, DecompositionOfC(r), knobs);
  if (name == "low-doubling")
    return ReduceUniformRegularToLowDoubling(
        r.inst, std::max<int64_t>(1, SummedEntryCount(r.inst)), knobs);
  if (name == "low-rank-to-low-doubling")
    return ReduceLowRankToLowDoubling(r.inst, DecompositionOfC(r), knobs);
  throw UsageError("unknown reduction " + name);
}

std::vector<Json> SolveCorpus(const std::vector<CorpusRecord>& corpus,
                              const std::string& algorithm,
                              const RunConfig& cfg) {
  const auto& tri = TriangleAlgorithms();
  const auto& prod = ProductAlgorithms();
  const bool triangle = std::count(tri.begin(), tri.end(), algorithm) > 0;
  if (!triangle && std::count(prod.begin(), prod.end(), algorithm) == 0)
    throw UsageError("unknown algorithm " + algorithm);
  if (IsRandomized(algorithm)) cfg.RequireSeed(algorithm);
  std::vector<Json> lines(corpus.size());
  ParallelFor(static_cast<int>(corpus.size()), cfg.workers, [&](int t) {
    const CorpusRecord& r = corpus[t];
    Json line = {{"id", r.id}, {"algorithm", algorithm}};
    Json stats;
    const auto start = Clock::now();
    WithRecord(r, [&] {
      if (triangle) {
        line["flags"] = ToJson(RunTriangleAlgorithm(algorithm, r, cfg, &stats));
      } else {
        try {
          line["product"] = ToJson(RunProductAlgorithm(
              algorithm, r.inst.A, r.inst.B, cfg, RecordSeed(cfg, r, algorithm),
              &stats));
        } catch (const HashUnavailable& e) {
          line["skipped"] = e.what();
        }
      }
      return 0;
    });
    if (!stats.is_null() && !stats.empty()) line["stats"] = stats;
    if (cfg.timings) line["time_ms"] = MillisSince(start);
    lines[t] = std::move(line);
  });
  return lines;
}

std::vector<Json> ReduceCorpus(const std::vector<CorpusRecord>& corpus,
                               const std::string& reduction,
                               const RunConfig& cfg) {
  const auto& names = ReductionNames();
  if (std::count(names.begin(), names.end(), reduction) == 0)
    throw UsageError("unknown reduction " + reduction);
  std::vector<Json> lines(corpus.size());
  ParallelFor(static_cast<int>(corpus.size()), cfg.workers, [&](int t) {
    const CorpusRecord& r = corpus[t];
    const auto start = Clock::now();
    ReductionOutput out =
        WithRecord(r, [&] { return RunReduction(reduction, r, cfg.knobs); });
    out.Normalize();
    Json line = {{"id", r.id},
                 {"reduction", reduction},
                 {"instances", out.instances.size()},
                 {"triples", out.triples.size()},
                 {"output", ToJson(out)}};
    if (cfg.timings) line["time_ms"] = MillisSince(start);
    lines[t] = std::move(line);
  });
  return lines;
}

Json VerifyReportLine(const CorpusRecord& r, const Json& report) {
  Json checks = Json::object();
  if (!report.is_object()) throw ParseError("report: expected an object");
  if (report.contains("flags")) {
    const EdgeFlags f = FromJson<EdgeFlags>(report["flags"], "$.flags");
    checks["flags_match_brute"] = f == ExactTriangleBrute(r.inst);
    if (!r.planted.empty()) {
      bool planted = true;
      for (const Triple& p : r.planted)
        planted = planted && r.inst.IsExact(p[0], p[1], p[2]) &&
                  f.a.get(p[0], p[1]) && f.b.get(p[1], p[2]) &&
                  f.c.get(p[0], p[2]);
      checks["planted_flagged"] = planted;
    }
  } else if (report.contains("product")) {
    const MaskedMatrix C = FromJson<MaskedMatrix>(report["product"], "$.product");
    checks["product_matches_brute"] = C == MinPlusBrute(r.inst.A, r.inst.B);
  } else if (report.contains("output")) {
    const ReductionOutput out = FromJson<ReductionOutput>(report["output"], "$.output");
    checks["covers_every_triangle"] = VerifyReductionOutput(r.inst, out);
    bool potentials = true, tags = true;
    for (const ReducedInstance& ri : out.instances) {
      potentials = potentials && VerifyPotentialAdjustment(r.inst, ri.adjustment);
      tags = tags && TagsHold(ri.adjustment.adjusted, ri.tags);
    }
    checks["potentials_valid"] = potentials;
    checks["tags_recount"] = tags;
    const std::string reduction = report.value("reduction", std::string());
    checks["heuristic_flag_only_on_cover_path"] =
        !HasHeuristicTag(out) || reduction == "low-doubling" ||
        reduction == "low-rank-to-low-doubling";
    if (report.contains("instances"))
      checks["instance_count"] =
          report["instances"] == Json(out.instances.size());
  } else if (report.contains("skipped")) {
    // Nothing was claimed.
  } else {
    throw ParseError("report: no flags, product or output");
  }
  bool ok = true;
  for (const auto& [name, value] : checks.items()) ok = ok && value.get<bool>();
  return Json{{"id", r.id}, {"ok", ok}, {"checks", checks}};
}

std::vector<BenchPoint> BenchCorpus(const std::vector<CorpusRecord>& corpus,
                                    const std::string& reduction,
                                    const RunConfig& cfg) {
  std::vector<BenchPoint> points;
  for (int t : cfg.ts) {
    RunConfig c = cfg;
    c.knobs.t = t;
    c.timings = false;
    const auto start = Clock::now();
    const std::vector<Json> lines = ReduceCorpus(corpus, reduction, c);
    BenchPoint p;
    p.t = t;
    p.time_ms = MillisSince(start);
    p.records = static_cast<int64_t>(lines.size());
    for (const Json& line : lines) {
      const Json& out = line["output"];
      p.instances += static_cast<int64_t>(out["instances"].size());
      p.triples += static_cast<int64_t>(out["triples"].size());
      if (out["counters"].contains("max_depth"))
        p.max_depth = std::max(p.max_depth, out["counters"]["max_depth"].get<int64_t>());
    }
    points.push_back(p);
  }
  return points;
}

Json ToJson(const BenchPoint& p, bool timings) {
  Json j = {{"t", p.t},
            {"records", p.records},
            {"instances", p.instances},
            {"triples", p.triples},
            {"max_depth", p.max_depth}};
  if (timings) j["time_ms"] = p.time_ms;
  return j;
}

std::string BenchCsv(const std::vector<BenchPoint>& points, bool timings) {
  std::ostringstream out;
  out << "t,records,instances,triples,max_depth" << (timings ? ",time_ms" : "")
      << "\n";
  for (const BenchPoint& p : points) {
    out << p.t << "," << p.records << "," << p.instances << "," << p.triples
        << "," << p.max_depth;
    if (timings) out << "," << std::fixed << std::setprecision(3) << p.time_ms;
    out << "\n";
  }
  return out.str();
}

}  // namespace minplus
