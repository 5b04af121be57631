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

#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "minplus/addcomb/integer_set.h"
#include "minplus/cli/app.h"
#include "minplus/cli/commands.h"
#include "minplus/cli/corpus.h"
#include "minplus/cli/run_config.h"
#include "minplus/core/brute.h"
#include "minplus/io/json.h"
#include "minplus/triangle/constraints.h"
#include "minplus/triangle/pipeline.h"
#include "test_util.h"

namespace minplus {
namespace {

using testing::kBot;
using testing::RandomMatrix;

template <typename T>
T RoundTrip(const T& x) {
  return FromJson<T>(Json::parse(ToJson(x).dump()));
}

std::string ErrorOf(const Json& j) {
  try {
    FromJson<TriangleInstance>(j);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

// ---- JSON ----

TEST(JsonTest, MatrixFormatUsesNullForBottom) {
  const MaskedMatrix M = MaskedMatrix::FromRows({{1, kBot}, {-3, 4}});
  EXPECT_EQ(ToJson(M).dump(),
            R"({"cols":2,"entries":[[1,null],[-3,4]],"rows":2})");
  EXPECT_EQ(RoundTrip(M), M);
  EXPECT_EQ(RoundTrip(MaskedMatrix(0, 3)), MaskedMatrix(0, 3));
}

TEST(JsonTest, RoundTripsEveryType) {
  Rng rng(3);
  const TriangleInstance inst{RandomMatrix(rng, 3, 4, -5, 5, 0.2),
                              RandomMatrix(rng, 4, 2, -5, 5, 0.2),
                              RandomMatrix(rng, 3, 2, -5, 5, 0.2)};
  EXPECT_EQ(RoundTrip(inst), inst);
  const EdgeFlags f = ExactTriangleBrute(inst);
  EXPECT_EQ(RoundTrip(f), f);
  const RankDecomposition d = testing::RandomDecomposition(rng, 3, 5, 2, 0, 9, 0.2);
  EXPECT_EQ(RoundTrip(d), d);
  const IntegerSet X = {-4, 0, 7};
  EXPECT_EQ(RoundTrip(X), X);
  EXPECT_EQ(ToJson(X).dump(), "[-4,0,7]");
  const SumOrderHash h{IntegerSet{0, 3, 6}, {0, 1, 2}};
  const SumOrderHash h2 = RoundTrip(h);
  EXPECT_EQ(h2.domain, h.domain);
  EXPECT_EQ(h2.values, h.values);

  WeightedGraph g;
  g.n = 3;
  g.directed = false;
  g.edges = {{0, 1, 5}, {1, 2, 0}};
  g.node_weights = {1, 2, 3};
  EXPECT_EQ(ToJson(g).dump(),
            R"({"directed":false,"edges":[[0,1,5],[1,2,0]],"n":3,"node_weights":[1,2,3]})");
  const WeightedGraph g2 = RoundTrip(g);
  EXPECT_EQ(g2.n, 3);
  EXPECT_FALSE(g2.directed);
  EXPECT_EQ(g2.edges, g.edges);
  EXPECT_EQ(g2.node_weights, g.node_weights);

  SamplingConfig sc;
  sc.constant = 2.5;
  sc.sampled_witnesses = true;
  const SamplingConfig sc2 = RoundTrip(sc);
  EXPECT_EQ(sc2.constant, 2.5);
  EXPECT_TRUE(sc2.sampled_witnesses);
  EXPECT_EQ(sc2.failure_probability, sc.failure_probability);

  TriangleKnobs k;
  k.t = 3;
  k.brute_rank_fallback = false;
  const TriangleKnobs k2 = RoundTrip(k);
  EXPECT_EQ(k2.t, 3);
  EXPECT_FALSE(k2.brute_rank_fallback);
  EXPECT_EQ(k2.q, k.q);
}

TEST(JsonTest, ReductionOutputRoundTripKeepsTagsAndMasks) {
  testing::LowRankCase c = [] {
    Rng rng(11);
    return testing::RandomLowRankCase(rng, 10, 10, 10, 4, 12, 10);
  }();
  TriangleKnobs knobs;
  knobs.t = 3;
  ReductionOutput out = ReduceLowRankToLowDoubling(c.inst, c.dc, knobs);
  out.Normalize();
  ASSERT_FALSE(out.instances.empty());
  const Json j = ToJson(out);
  const ReductionOutput back = FromJson<ReductionOutput>(Json::parse(j.dump()));
  ASSERT_EQ(back.instances.size(), out.instances.size());
  EXPECT_EQ(back.triples, out.triples);
  EXPECT_EQ(back.counters, out.counters);
  for (size_t t = 0; t < out.instances.size(); ++t) {
    const auto& a = out.instances[t];
    const auto& b = back.instances[t];
    EXPECT_EQ(b.adjustment.adjusted, a.adjustment.adjusted);
    EXPECT_EQ(b.adjustment.u, a.adjustment.u);
    EXPECT_EQ(b.tags.Strings(), a.tags.Strings());
    EXPECT_EQ(b.tags.doubling_limit, a.tags.doubling_limit);
    EXPECT_TRUE(TagsHold(b.adjustment.adjusted, b.tags));
  }
  EXPECT_TRUE(VerifyReductionOutput(c.inst, back));

  Json bad = j;
  bad["instances"][0]["kept"]["A"] = std::string(
      bad["instances"][0]["kept"]["A"].get<std::string>().size(), '0');
  if (!back.instances[0].adjustment.adjusted.A.Empty()) {
    EXPECT_THROW(FromJson<ReductionOutput>(bad), ParseError);
  }
}

TEST(JsonTest, TagStringsParse) {
  const InstanceTags t = FromJson<InstanceTags>(Json::parse(
      R"(["slice-uniform:d=4","uniform:D=6","regular:rho=1/6","doubling:K=7/4","heuristic-exceeded:K>1"])"));
  EXPECT_EQ(t.slice_uniform, 4);
  EXPECT_EQ(t.uniform, 6);
  EXPECT_EQ(t.regular, 6);
  ASSERT_TRUE(t.doubling);
  EXPECT_EQ(t.doubling->num, 7);
  EXPECT_EQ(t.doubling->den, 4);
  EXPECT_TRUE(t.heuristic_exceeded);
  EXPECT_EQ(t.doubling_limit, 1);
  EXPECT_THROW(FromJson<InstanceTags>(Json::parse(R"(["fancy:x=1"])")), ParseError);
  EXPECT_THROW(FromJson<InstanceTags>(Json::parse(R"(["uniform:D=6x"])")), ParseError);
}

TEST(JsonTest, ErrorsNameThePath) {
  Json j = ToJson(TriangleInstance{MaskedMatrix::Filled(2, 2, 1),
                                   MaskedMatrix::Filled(2, 2, 1),
                                   MaskedMatrix::Filled(2, 2, 1)});
  Json bad = j;
  bad["B"]["entries"][1][0] = "x";
  EXPECT_NE(ErrorOf(bad).find("$.B.entries[1][0]"), std::string::npos) << ErrorOf(bad);
  bad = j;
  bad["C"]["entries"][1] = Json::array({1});
  EXPECT_NE(ErrorOf(bad).find("$.C.entries[1]"), std::string::npos) << ErrorOf(bad);
  bad = j;
  bad["A"]["cols"] = 3;
  EXPECT_NE(ErrorOf(bad).find("$.A.entries[0]"), std::string::npos) << ErrorOf(bad);
  bad = j;
  bad.erase("C");
  EXPECT_NE(ErrorOf(bad).find("missing key \"C\""), std::string::npos);
  bad = j;
  bad["B"] = ToJson(MaskedMatrix::Filled(3, 2, 1));
  EXPECT_FALSE(ErrorOf(bad).empty());
  EXPECT_THROW(FromJson<IntegerSet>(Json::parse("[3,1]")), ParseError);
  EXPECT_THROW(FromJson<WeightedGraph>(Json::parse(
                   R"({"n":2,"directed":true,"edges":[[0,0,1]]})")),
               ParseError);
  EXPECT_THROW(FromJson<SamplingConfig>(Json::parse(R"({"constnt":1})")), ParseError);
  EXPECT_THROW(FromJson<TriangleKnobs>(Json::parse(R"({"t":0})")), ParseError);
  Rng rng(1);
  RankDecomposition d = testing::RandomDecomposition(rng, 2, 2, 2, 0, 3);
  Json dj = ToJson(d);
  dj["S"]["entries"][0][0] = 5;
  EXPECT_THROW(FromJson<RankDecomposition>(dj), ParseError);
}

// ---- run config ----

TEST(RunConfigTest, KnobsAndConfig) {
  RunConfig cfg;
  ApplyKnob(cfg, "n=6");
  ApplyKnob(cfg, "t=3");
  ApplyKnob(cfg, "ts=1,2,5");
  ApplyKnob(cfg, "sampled_witnesses=true");
  EXPECT_EQ(cfg.shape.n1, 6);
  EXPECT_EQ(cfg.shape.n3, 6);
  EXPECT_EQ(cfg.knobs.t, 3);
  EXPECT_EQ(cfg.ts, (std::vector<int>{1, 2, 5}));
  EXPECT_TRUE(cfg.sampling.sampled_witnesses);
  EXPECT_THROW(ApplyKnob(cfg, "t=0"), UsageError);
  EXPECT_THROW(ApplyKnob(cfg, "bogus=1"), UsageError);
  EXPECT_THROW(ApplyKnob(cfg, "n=two"), UsageError);
  EXPECT_THROW(ApplyKnob(cfg, "mode=weird"), UsageError);
  EXPECT_THROW(cfg.RequireSeed("gen"), UsageError);

  ApplyConfig(cfg, Json::parse(
                       R"({"seed":9,"run":{"mode":"planted","count":2,"ts":[2,4]},"knobs":{"K":5}})"));
  EXPECT_EQ(cfg.RequireSeed("gen"), 9u);
  EXPECT_EQ(cfg.shape.mode, "planted");
  EXPECT_EQ(cfg.ts, (std::vector<int>{2, 4}));
  EXPECT_EQ(cfg.knobs.K, 5);
  EXPECT_THROW(ApplyConfig(cfg, Json::parse(R"({"sed":1})")), UsageError);

  RunConfig again;
  ApplyConfig(again, ToJson(cfg));
  EXPECT_EQ(ToJson(again), ToJson(cfg));
}

// ---- corpus generation ----

RunConfig Config(uint64_t seed, const std::vector<std::string>& knobs) {
  RunConfig cfg;
  cfg.seed = seed;
  for (const auto& k : knobs) ApplyKnob(cfg, k);
  return cfg;
}

std::string Dump(const std::vector<CorpusRecord>& corpus) {
  std::string out;
  for (const auto& r : corpus) out += ToJson(r).dump() + "\n";
  return out;
}

TEST(CorpusTest, SameSeedSameBytes) {
  const RunConfig cfg = Config(1, {"n=4", "count=5"});
  EXPECT_EQ(Dump(GenerateCorpus(cfg)), Dump(GenerateCorpus(cfg)));
  EXPECT_NE(Dump(GenerateCorpus(cfg)), Dump(GenerateCorpus(Config(2, {"n=4", "count=5"}))));
  for (const CorpusRecord& r : GenerateCorpus(cfg)) {
    const CorpusRecord back = FromJson<CorpusRecord>(ToJson(r));
    EXPECT_EQ(back.inst, r.inst);
    EXPECT_EQ(back.id, r.id);
  }
}

TEST(CorpusTest, PlantedTrianglesAreFound) {
  const RunConfig cfg = Config(4, {"mode=planted", "n=7", "count=40", "planted=5", "p_bot=0.2"});
  for (const CorpusRecord& r : GenerateCorpus(cfg)) {
    ASSERT_EQ(r.planted.size(), 5u);
    const std::vector<Triple> found = ExactTrianglesBrute(r.inst);
    EXPECT_GE(found.size(), r.planted.size());
    const std::set<Triple> all(found.begin(), found.end());
    for (const Triple& t : r.planted) EXPECT_TRUE(all.count(t)) << r.id;
  }
}

TEST(CorpusTest, ProgressionsHaveSmallDoubling) {
  const RunConfig cfg = Config(5, {"mode=progression", "n=5", "count=30", "size=5"});
  for (const CorpusRecord& r : GenerateCorpus(cfg)) {
    IntegerSet X = IntegerSet::FromUnsorted(r.inst.A.DistinctValues());
    X = X.Union(IntegerSet::FromUnsorted(r.inst.B.DistinctValues()));
    EXPECT_LT(DoublingConstant(X).value(), 2.0) << r.id;
  }
}

TEST(CorpusTest, LowRankRecordsCarryTheirDecomposition) {
  const RunConfig cfg = Config(6, {"mode=lowrank", "n=6", "count=10", "rank=3"});
  for (const CorpusRecord& r : GenerateCorpus(cfg)) {
    ASSERT_TRUE(r.dc.has_value());
    EXPECT_EQ(Evaluate(*r.dc), r.inst.C);
    EXPECT_EQ(r.dc->r, 3);
  }
}

TEST(CorpusTest, BoundedDifferenceRows) {
  const RunConfig cfg = Config(7, {"mode=bd", "n=6", "count=10", "c=3"});
  for (const CorpusRecord& r : GenerateCorpus(cfg))
    for (int i = 0; i < r.inst.n1(); ++i)
      for (int k = 0; k + 1 < r.inst.n2(); ++k)
        EXPECT_LE(std::abs(r.inst.A.at(i, k) - r.inst.A.at(i, k + 1)), 3);
}

// ---- commands ----

TEST(CommandsTest, BruteAndLowRankGiveTheSameFlags) {
  const RunConfig cfg = Config(8, {"mode=lowrank", "n=7", "count=20", "rank=3", "planted=6"});
  const auto corpus = GenerateCorpus(cfg);
  const auto brute = SolveCorpus(corpus, "brute", cfg);
  const auto low_rank = SolveCorpus(corpus, "low-rank", cfg);
  for (size_t t = 0; t < corpus.size(); ++t)
    EXPECT_EQ(brute[t]["flags"], low_rank[t]["flags"]) << corpus[t].id;
}

TEST(CommandsTest, IdentityReductionVerifies) {
  const RunConfig cfg = Config(9, {"n=5", "count=5"});
  const auto corpus = GenerateCorpus(cfg);
  const auto lines = ReduceCorpus(corpus, "identity", cfg);
  for (size_t t = 0; t < corpus.size(); ++t) {
    const Json v = VerifyReportLine(corpus[t], lines[t]);
    EXPECT_TRUE(v["ok"].get<bool>()) << v.dump();
  }
}

TEST(CommandsTest, VerifyCatchesTamperedReports) {
  const RunConfig cfg = Config(10, {"mode=all-exact", "n=5", "count=3"});
  const auto corpus = GenerateCorpus(cfg);
  Json product = SolveCorpus(corpus, "product-brute", cfg)[0];
  product["product"]["entries"][0][0] = 1000;
  EXPECT_FALSE(VerifyReportLine(corpus[0], product)["ok"].get<bool>());
  Json reduced = ReduceCorpus(corpus, "identity", cfg)[0];
  reduced["output"]["instances"] = Json::array();
  EXPECT_FALSE(VerifyReportLine(corpus[0], reduced)["ok"].get<bool>());
}

TEST(CommandsTest, WorkerCountDoesNotChangeReports) {
  RunConfig cfg = Config(11, {"n=6", "count=12", "u=10"});
  const auto corpus = GenerateCorpus(cfg);
  const auto one = SolveCorpus(corpus, "small-universe-reduction", cfg);
  cfg.workers = 4;
  EXPECT_EQ(SolveCorpus(corpus, "small-universe-reduction", cfg), one);
}

TEST(CommandsTest, ProductAlgorithmsMatchBrute) {
  const RunConfig cfg = Config(12, {"n1=6", "n2=4", "n3=6", "u=6", "count=8", "p_bot=0.1"});
  const auto corpus = GenerateCorpus(cfg);
  for (const std::string& name : ProductAlgorithms()) {
    if (name == "monotone-bd" || name == "node-weighted-gadget") continue;
    for (const auto& line : SolveCorpus(corpus, name, cfg)) {
      const CorpusRecord* r = nullptr;
      for (const auto& c : corpus)
        if (c.id == line["id"]) r = &c;
      ASSERT_NE(r, nullptr);
      EXPECT_TRUE(VerifyReportLine(*r, line)["ok"].get<bool>()) << name << " " << r->id;
    }
  }
}

TEST(CommandsTest, BenchCurveIsRecounted) {
  RunConfig cfg = Config(13, {"mode=lowrank", "n=8", "count=10", "rank=3", "ts=1,2,3,4"});
  const auto corpus = GenerateCorpus(cfg);
  const auto points = BenchCorpus(corpus, "slice-uniform", cfg);
  ASSERT_EQ(points.size(), 4u);
  for (size_t t = 0; t < points.size(); ++t) {
    RunConfig c = cfg;
    c.knobs.t = points[t].t;
    int64_t instances = 0;
    for (const auto& r : corpus)
      instances += static_cast<int64_t>(RunReduction("slice-uniform", r, c.knobs).instances.size());
    EXPECT_EQ(points[t].instances, instances);
    if (t > 0) {
      EXPECT_GE(points[t].instances, points[t - 1].instances);
    }
  }
  EXPECT_NE(BenchCsv(points, false).find("t,records,instances"), std::string::npos);
}

// ---- the command line ----

int RunArgs(const std::vector<std::string>& args, std::string* out = nullptr,
        std::string* err = nullptr) {
  std::vector<const char*> argv = {"minplus_cli"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o, e;
  const int code = RunCli(static_cast<int>(argv.size()), argv.data(), o, e);
  if (out) *out = o.str();
  if (err) *err = e.str();
  return code;
}

std::string TempPath(const std::string& name) {
  return ::testing::TempDir() + "/minplus_io_test_" + name;
}

TEST(CliTest, ExitCodes) {
  std::string out, err;
  EXPECT_EQ(RunArgs({}, &out, &err), kExitUsage);
  EXPECT_EQ(RunArgs({"gen"}, &out, &err), kExitUsage);  // no seed
  EXPECT_NE(err.find("--seed"), std::string::npos);
  EXPECT_EQ(RunArgs({"gen", "--seed", "1", "--knob", "t=0"}, &out, &err), kExitUsage);
  EXPECT_EQ(RunArgs({"solve", "--in", TempPath("missing"), "--algorithm", "brute"},
                &out, &err),
            kExitUsage);
  EXPECT_EQ(RunArgs({"--help"}, &out, &err), kExitOk);

  const std::string corpus = TempPath("corpus.jsonl");
  const std::string report = TempPath("report.jsonl");
  ASSERT_EQ(RunArgs({"gen", "--seed", "3", "--knob", "count=4", "--knob", "n=4",
                 "--out", corpus}),
            kExitOk);
  ASSERT_EQ(RunArgs({"solve", "--in", corpus, "--algorithm", "low-rank", "--out", report}),
            kExitOk);
  EXPECT_EQ(RunArgs({"verify", "--in", corpus, "--report", report}, &out), kExitOk);
  EXPECT_NE(out.find(R"("failed":0)"), std::string::npos);
  EXPECT_EQ(RunArgs({"solve", "--in", corpus, "--algorithm", "nope"}, &out, &err),
            kExitUsage);

  // Flip one flag: verification fails with status 1.
  std::ifstream in(report);
  std::string first;
  std::getline(in, first);
  Json line = Json::parse(first);
  auto& cell = line["flags"]["C"]["entries"][0][0];
  cell = 1 - cell.get<int>();
  std::ofstream(report) << line.dump() << "\n";
  EXPECT_EQ(RunArgs({"verify", "--in", corpus, "--report", report}, &out), kExitVerificationFailed);

  // Parse errors name the file and the record.
  std::ofstream(corpus) << R"({"id":"x","instance":{"A":1}})" << "\n";
  EXPECT_EQ(RunArgs({"solve", "--in", corpus, "--algorithm", "brute"}, &out, &err), kExitUsage);
  EXPECT_NE(err.find("record 0"), std::string::npos) << err;
  EXPECT_NE(err.find("$.instance.A"), std::string::npos) << err;
}

TEST(CliTest, GenIsByteDeterministic) {
  std::string a, b;
  ASSERT_EQ(RunArgs({"gen", "--seed", "1", "--knob", "n=4"}, &a), kExitOk);
  ASSERT_EQ(RunArgs({"gen", "--seed", "1", "--knob", "n=4", "--workers", "3"}, &b), kExitOk);
  EXPECT_EQ(a, b);
  EXPECT_FALSE(a.empty());
}

}  // namespace
}  // namespace minplus
