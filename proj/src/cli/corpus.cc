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

#include "minplus/cli/corpus.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <utility>

#include "minplus/core/brute.h"
#include "minplus/core/random.h"

namespace minplus {
namespace {

MaskedMatrix Uniform(Rng& rng, int n, int m, int64_t lo, int64_t hi,
                     double p_bot) {
  MaskedMatrix M(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      if (!rng.Bernoulli(p_bot)) M.set(i, j, rng.Between(lo, hi));
  return M;
}

MaskedMatrix Over(Rng& rng, int n, int m, const IntegerSet& X, double p_bot) {
  MaskedMatrix M(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      if (!rng.Bernoulli(p_bot)) M.set(i, j, X[rng.Below(X.size())]);
  return M;
}

// Half of the present entries lifted by 1, so about half stop being exact.
MaskedMatrix Perturbed(Rng& rng, MaskedMatrix C) {
  for (int i = 0; i < C.rows(); ++i)
    for (int j = 0; j < C.cols(); ++j)
      if (C.has(i, j) && rng.Bernoulli(0.5)) C.set(i, j, C.at(i, j) + 1);
  return C;
}

int Dim(Rng& rng, const CorpusShape& s, int n) {
  if (!s.min_dim || *s.min_dim >= n) return n;
  return static_cast<int>(rng.Between(*s.min_dim, n));
}

// C entries over X + X: the sum through a random k where there is one.
MaskedMatrix SumsOver(Rng& rng, const MaskedMatrix& A, const MaskedMatrix& B,
                      const IntegerSet& X, double p_bot) {
  const IntegerSet S = Sumset(X, X);
  MaskedMatrix C(A.rows(), B.cols());
  for (int i = 0; i < C.rows(); ++i)
    for (int j = 0; j < C.cols(); ++j) {
      if (rng.Bernoulli(p_bot)) continue;
      const int k = static_cast<int>(rng.Below(std::max(A.cols(), 1)));
      if (A.cols() > 0 && A.has(i, k) && B.has(k, j) && rng.Bernoulli(0.5)) {
        C.set(i, j, A.at(i, k) + B.at(k, j));
      } else {
        C.set(i, j, S[rng.Below(S.size())]);
      }
    }
  return C;
}

}  // namespace

CorpusRecord GenerateRecord(const CorpusShape& s, uint64_t seed, int index) {
  CorpusRecord r;
  r.mode = s.mode;
  r.seed = DeriveSeed(seed, static_cast<uint64_t>(index));
  r.id = s.mode + "-" + std::to_string(index);
  Rng rng(r.seed);
  const int n1 = Dim(rng, s, s.n1), n2 = Dim(rng, s, s.n2), n3 = Dim(rng, s, s.n3);
  TriangleInstance& inst = r.inst;
  if (s.mode == "uniform" || s.mode == "all-exact") {
    inst.A = Uniform(rng, n1, n2, 0, s.u, s.p_bot);
    inst.B = Uniform(rng, n2, n3, 0, s.u, s.p_bot);
    inst.C = MinPlusBrute(inst.A, inst.B);
    if (s.mode == "uniform") inst.C = Perturbed(rng, std::move(inst.C));
  } else if (s.mode == "planted") {
    inst.A = Uniform(rng, n1, n2, 0, s.u, s.p_bot);
    inst.B = Uniform(rng, n2, n3, 0, s.u, s.p_bot);
    inst.C = Uniform(rng, n1, n3, 0, 2 * s.u, s.p_bot);
    // Distinct C cells, and A, B entries are only ever filled, so every
    // planted triple stays exact.
    std::set<std::pair<int, int>> used;
    const int plants = std::min(s.planted, n1 * n3);
    while (static_cast<int>(r.planted.size()) < plants) {
      const int i = static_cast<int>(rng.Below(n1));
      const int j = static_cast<int>(rng.Below(n3));
      if (!used.insert({i, j}).second) continue;
      const int k = static_cast<int>(rng.Below(n2));
      if (!inst.A.has(i, k)) inst.A.set(i, k, rng.Between(0, s.u));
      if (!inst.B.has(k, j)) inst.B.set(k, j, rng.Between(0, s.u));
      inst.C.set(i, j, inst.A.at(i, k) + inst.B.at(k, j));
      r.planted.push_back({i, k, j});
    }
    std::sort(r.planted.begin(), r.planted.end());
  } else if (s.mode == "lowrank") {
    RankDecomposition d;
    d.r = s.rank;
    d.U = IntMatrix(n1, d.r);
    d.V = IntMatrix(d.r, n3);
    d.S = MaskedMatrix(n1, n3);
    for (int i = 0; i < n1; ++i)
      for (int l = 0; l < d.r; ++l) d.U(i, l) = rng.Between(0, s.u);
    for (int l = 0; l < d.r; ++l)
      for (int j = 0; j < n3; ++j) d.V(l, j) = rng.Between(0, s.u);
    for (int i = 0; i < n1; ++i)
      for (int j = 0; j < n3; ++j)
        if (!rng.Bernoulli(s.p_bot)) d.S.set(i, j, rng.Below(d.r));
    inst.C = Evaluate(d);
    inst.A = Uniform(rng, n1, n2, 0, s.u, s.p_bot);
    inst.B = Uniform(rng, n2, n3, 0, s.u, s.p_bot);
    // Plant through A; editing C would break its rank.
    for (int t = 0; t < s.planted; ++t) {
      const int i = static_cast<int>(rng.Below(n1));
      const int k = static_cast<int>(rng.Below(n2));
      const int j = static_cast<int>(rng.Below(n3));
      if (inst.C.has(i, j) && inst.B.has(k, j))
        inst.A.set(i, k, inst.C.at(i, j) - inst.B.at(k, j));
    }
    r.dc = std::move(d);
  } else if (s.mode == "progression" || s.mode == "geometric") {
    std::vector<int64_t> xs;
    const int64_t a = rng.Between(0, s.u);
    const int64_t b = rng.Between(1, std::max<int64_t>(1, s.u / s.size));
    for (int t = 0; t < s.size; ++t)
      xs.push_back(s.mode == "progression" ? a + b * t
                                           : a + (int64_t{1} << std::min(t, 40)));
    const IntegerSet X = IntegerSet::FromUnsorted(std::move(xs));
    inst.A = Over(rng, n1, n2, X, s.p_bot);
    inst.B = Over(rng, n2, n3, X, s.p_bot);
    inst.C = SumsOver(rng, inst.A, inst.B, X, s.p_bot);
  } else if (s.mode == "bd") {
    inst.A = MaskedMatrix(n1, n2);
    for (int i = 0; i < n1; ++i) {
      int64_t v = rng.Between(0, s.u);
      for (int k = 0; k < n2; ++k) {
        if (k > 0) v += rng.Between(-s.c, s.c);
        inst.A.set(i, k, v);
      }
    }
    inst.B = Uniform(rng, n2, n3, 0, s.u, s.p_bot);
    inst.C = Perturbed(rng, MinPlusBrute(inst.A, inst.B));
  } else {
    throw UsageError("unknown corpus mode " + s.mode);
  }
  return r;
}

std::vector<CorpusRecord> GenerateCorpus(const RunConfig& cfg) {
  const uint64_t seed = cfg.RequireSeed("gen");
  std::vector<CorpusRecord> out;
  for (int t = 0; t < cfg.shape.count; ++t)
    out.push_back(GenerateRecord(cfg.shape, seed, t));
  return out;
}

Json ToJson(const CorpusRecord& r) {
  Json j = {{"id", r.id}, {"mode", r.mode}, {"seed", r.seed},
            {"instance", ToJson(r.inst)}};
  if (r.dc) j["decomposition"] = ToJson(*r.dc);
  if (!r.planted.empty()) {
    Json planted = Json::array();
    for (const Triple& t : r.planted) planted.push_back(Json{t[0], t[1], t[2]});
    j["planted"] = std::move(planted);
  }
  return j;
}

template <>
CorpusRecord FromJson(const Json& j, const std::string& path) {
  if (!j.is_object()) throw ParseError(path + ": expected an object");
  for (const auto& [key, value] : j.items())
    if (key != "id" && key != "mode" && key != "seed" && key != "instance" &&
        key != "decomposition" && key != "planted")
      throw ParseError(path + ": unknown key \"" + key + "\"");
  CorpusRecord r;
  if (!j.contains("id") || !j["id"].is_string())
    throw ParseError(path + ".id: expected a string");
  r.id = j["id"].get<std::string>();
  if (j.contains("mode") && j["mode"].is_string()) r.mode = j["mode"].get<std::string>();
  if (j.contains("seed") && j["seed"].is_number_unsigned()) r.seed = j["seed"].get<uint64_t>();
  if (!j.contains("instance")) throw ParseError(path + ": missing key \"instance\"");
  r.inst = FromJson<TriangleInstance>(j["instance"], path + ".instance");
  if (j.contains("decomposition")) {
    r.dc = FromJson<RankDecomposition>(j["decomposition"], path + ".decomposition");
    if (r.dc->S.rows() != r.inst.n1() || r.dc->S.cols() != r.inst.n3() ||
        Evaluate(*r.dc) != r.inst.C)
      throw ParseError(path + ".decomposition: does not represent C");
  }
  if (j.contains("planted")) {
    const Json& p = j["planted"];
    if (!p.is_array()) throw ParseError(path + ".planted: expected an array");
    for (size_t t = 0; t < p.size(); ++t) {
      const std::string tp = path + ".planted[" + std::to_string(t) + "]";
      if (!p[t].is_array() || p[t].size() != 3)
        throw ParseError(tp + ": expected [i, k, j]");
      Triple tr;
      for (int c = 0; c < 3; ++c) {
        if (!p[t][c].is_number_integer()) throw ParseError(tp + ": expected integers");
        tr[c] = p[t][c].get<int>();
      }
      if (tr[0] < 0 || tr[0] >= r.inst.n1() || tr[1] < 0 ||
          tr[1] >= r.inst.n2() || tr[2] < 0 || tr[2] >= r.inst.n3())
        throw ParseError(tp + ": index out of range");
      r.planted.push_back(tr);
    }
  }
  return r;
}

std::vector<Json> ReadJsonLines(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw ParseError(file + ": cannot open");
  std::vector<Json> out;
  std::string line;
  for (int no = 1; std::getline(in, line); ++no) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(Json::parse(line));
    } catch (const Json::parse_error& e) {
      throw ParseError(file + ":" + std::to_string(no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<CorpusRecord> ReadCorpus(const std::string& file) {
  const std::vector<Json> lines = ReadJsonLines(file);
  std::vector<CorpusRecord> out;
  for (size_t t = 0; t < lines.size(); ++t) {
    try {
      out.push_back(FromJson<CorpusRecord>(lines[t]));
    } catch (const ParseError& e) {
      throw ParseError(file + ": record " + std::to_string(t) + ": " + e.what());
    }
  }
  return out;
}

RankDecomposition DecompositionOfC(const CorpusRecord& r) {
  return r.dc ? *r.dc : TrivialDecomposition(r.inst.C, TrivialMode::kSize);
}

}  // namespace minplus
