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

#include "minplus/io/json.h"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>

namespace minplus {
namespace {

[[noreturn]] void Fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

std::string Key(const std::string& path, const std::string& key) {
  return path + "." + key;
}

std::string At(const std::string& path, size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const Json& Field(const Json& j, const std::string& path,
                  const std::string& key) {
  if (!j.is_object()) Fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) Fail(path, "missing key \"" + key + "\"");
  return *it;
}

void OnlyKeys(const Json& j, const std::string& path,
              const std::set<std::string>& keys) {
  if (!j.is_object()) Fail(path, "expected an object");
  for (const auto& [key, value] : j.items())
    if (!keys.count(key)) Fail(path, "unknown key \"" + key + "\"");
}

int64_t Int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) Fail(path, "expected an integer");
  return j.get<int64_t>();
}

int Dim(const Json& j, const std::string& path) {
  const int64_t v = Int(j, path);
  if (v < 0 || v > (int64_t{1} << 30)) Fail(path, "dimension out of range");
  return static_cast<int>(v);
}

double Number(const Json& j, const std::string& path) {
  if (!j.is_number()) Fail(path, "expected a number");
  return j.get<double>();
}

bool Bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) Fail(path, "expected true or false");
  return j.get<bool>();
}

const Json& Array(const Json& j, const std::string& path, size_t size) {
  if (!j.is_array()) Fail(path, "expected an array");
  if (j.size() != size)
    Fail(path, "expected " + std::to_string(size) + " elements, got " +
                   std::to_string(j.size()));
  return j;
}

std::vector<int64_t> IntVector(const Json& j, const std::string& path) {
  if (!j.is_array()) Fail(path, "expected an array");
  std::vector<int64_t> out;
  for (size_t t = 0; t < j.size(); ++t) out.push_back(Int(j[t], At(path, t)));
  return out;
}

// Reads {"rows","cols","entries"} and hands every cell to `cell`.
template <typename Cell>
std::pair<int, int> ReadGrid(const Json& j, const std::string& path,
                             Cell cell) {
  OnlyKeys(j, path, {"rows", "cols", "entries"});
  const int rows = Dim(Field(j, path, "rows"), Key(path, "rows"));
  const int cols = Dim(Field(j, path, "cols"), Key(path, "cols"));
  const std::string ep = Key(path, "entries");
  const Json& e = Array(Field(j, path, "entries"), ep, rows);
  for (int i = 0; i < rows; ++i) {
    const std::string rp = At(ep, i);
    const Json& row = Array(e[i], rp, cols);
    for (int k = 0; k < cols; ++k) cell(i, k, row[k], At(rp, k));
  }
  return {rows, cols};
}

template <typename Get>
Json Grid(int rows, int cols, Get get) {
  Json entries = Json::array();
  for (int i = 0; i < rows; ++i) {
    Json row = Json::array();
    for (int k = 0; k < cols; ++k) row.push_back(get(i, k));
    entries.push_back(std::move(row));
  }
  return Json{{"rows", rows}, {"cols", cols}, {"entries", std::move(entries)}};
}

int64_t TagValue(const std::string& s, size_t from, const std::string& path) {
  try {
    size_t used = 0;
    const int64_t v = std::stoll(s.substr(from), &used);
    if (from + used != s.size()) Fail(path, "trailing text in tag " + s);
    return v;
  } catch (const std::logic_error&) {
    Fail(path, "bad number in tag " + s);
  }
}

bool StartsWith(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

}  // namespace

Json ToJson(const MaskedMatrix& M) {
  return Grid(M.rows(), M.cols(), [&](int i, int k) {
    return M.has(i, k) ? Json(M.at(i, k)) : Json(nullptr);
  });
}

Json ToJson(const IntMatrix& M) {
  return Grid(M.rows(), M.cols(), [&](int i, int k) { return Json(M(i, k)); });
}

Json ToJson(const FlagMatrix& M) {
  return Grid(M.rows(), M.cols(),
              [&](int i, int k) { return Json(M.get(i, k) ? 1 : 0); });
}

Json ToJson(const TriangleInstance& inst) {
  return Json{{"A", ToJson(inst.A)}, {"B", ToJson(inst.B)}, {"C", ToJson(inst.C)}};
}

Json ToJson(const EdgeFlags& f) {
  return Json{{"A", ToJson(f.a)}, {"B", ToJson(f.b)}, {"C", ToJson(f.c)}};
}

Json ToJson(const RankDecomposition& d) {
  return Json{{"r", d.r}, {"U", ToJson(d.U)}, {"V", ToJson(d.V)}, {"S", ToJson(d.S)}};
}

Json ToJson(const IntegerSet& X) { return Json(X.elements()); }

Json ToJson(const SumOrderHash& h) {
  return Json{{"domain", ToJson(h.domain)}, {"values", h.values}};
}

Json ToJson(const WeightedGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back(Json{e[0], e[1], e[2]});
  return Json{{"n", g.n},
              {"directed", g.directed},
              {"edges", std::move(edges)},
              {"node_weights", g.node_weights}};
}

Json ToJson(const InstanceTags& tags) {
  std::vector<std::string> strings = tags.Strings();
  // The limit is only spelled out when exceeded; keep it for the recount.
  if (tags.doubling_limit && !tags.heuristic_exceeded)
    strings.push_back("doubling-limit:K<=" + std::to_string(*tags.doubling_limit));
  return Json(strings);
}

std::string PresenceBits(const MaskedMatrix& M) {
  std::string bits;
  bits.reserve(static_cast<size_t>(M.rows()) * M.cols());
  for (int i = 0; i < M.rows(); ++i)
    for (int k = 0; k < M.cols(); ++k) bits.push_back(M.has(i, k) ? '1' : '0');
  return bits;
}

Json ToJson(const ReductionOutput& out) {
  Json instances = Json::array();
  for (const ReducedInstance& r : out.instances) {
    const PotentialAdjustment& adj = r.adjustment;
    instances.push_back(Json{
        {"u", adj.u},
        {"v", adj.v},
        {"w", adj.w},
        {"instance", ToJson(adj.adjusted)},
        {"kept",
         Json{{"A", PresenceBits(adj.adjusted.A)},
              {"B", PresenceBits(adj.adjusted.B)},
              {"C", PresenceBits(adj.adjusted.C)}}},
        {"tags", ToJson(r.tags)}});
  }
  Json triples = Json::array();
  for (const Triple& t : out.triples) triples.push_back(Json{t[0], t[1], t[2]});
  return Json{{"instances", std::move(instances)},
              {"triples", std::move(triples)},
              {"counters", Json(out.counters)}};
}

Json ToJson(const SamplingConfig& cfg) {
  return Json{{"constant", cfg.constant},
              {"failure_probability", cfg.failure_probability},
              {"sampled_witnesses", cfg.sampled_witnesses},
              {"listing_failure", cfg.listing_failure}};
}

Json ToJson(const TriangleKnobs& k) {
  return Json{{"t", k.t},
              {"p", k.p},
              {"q", k.q},
              {"q_regular", k.q_regular},
              {"L", k.L},
              {"K", k.K},
              {"regularity_factor", k.regularity_factor},
              {"max_depth", k.max_depth},
              {"brute_rank_fallback", k.brute_rank_fallback}};
}

template <>
MaskedMatrix FromJson(const Json& j, const std::string& path) {
  std::vector<Entry> cells;
  const auto [n, m] = ReadGrid(
      j, path, [&](int, int, const Json& v, const std::string& p) {
        if (v.is_null()) {
          cells.push_back(std::nullopt);
        } else {
          if (!v.is_number_integer()) Fail(p, "expected an integer or null");
          cells.push_back(v.get<int64_t>());
        }
      });
  MaskedMatrix M(n, m);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < m; ++k) M.set(i, k, cells[static_cast<size_t>(i) * m + k]);
  return M;
}

template <>
IntMatrix FromJson(const Json& j, const std::string& path) {
  std::vector<int64_t> cells;
  const auto [n, m] = ReadGrid(
      j, path, [&](int, int, const Json& v, const std::string& p) {
        cells.push_back(Int(v, p));
      });
  IntMatrix M(n, m);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < m; ++k) M(i, k) = cells[static_cast<size_t>(i) * m + k];
  return M;
}

template <>
FlagMatrix FromJson(const Json& j, const std::string& path) {
  std::vector<bool> cells;
  const auto [n, m] = ReadGrid(
      j, path, [&](int, int, const Json& v, const std::string& p) {
        const int64_t b = Int(v, p);
        if (b != 0 && b != 1) Fail(p, "expected 0 or 1");
        cells.push_back(b == 1);
      });
  FlagMatrix M(n, m);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < m; ++k) M.set(i, k, cells[static_cast<size_t>(i) * m + k]);
  return M;
}

template <>
TriangleInstance FromJson(const Json& j, const std::string& path) {
  OnlyKeys(j, path, {"A", "B", "C"});
  TriangleInstance inst{
      FromJson<MaskedMatrix>(Field(j, path, "A"), Key(path, "A")),
      FromJson<MaskedMatrix>(Field(j, path, "B"), Key(path, "B")),
      FromJson<MaskedMatrix>(Field(j, path, "C"), Key(path, "C"))};
  try {
    inst.Validate();
  } catch (const ShapeError& e) {
    Fail(path, e.what());
  }
  return inst;
}

template <>
EdgeFlags FromJson(const Json& j, const std::string& path) {
  OnlyKeys(j, path, {"A", "B", "C"});
  return EdgeFlags{FromJson<FlagMatrix>(Field(j, path, "A"), Key(path, "A")),
                   FromJson<FlagMatrix>(Field(j, path, "B"), Key(path, "B")),
                   FromJson<FlagMatrix>(Field(j, path, "C"), Key(path, "C"))};
}

template <>
RankDecomposition FromJson(const Json& j, const std::string& path) {
  OnlyKeys(j, path, {"r", "U", "V", "S"});
  RankDecomposition d;
  d.r = Dim(Field(j, path, "r"), Key(path, "r"));
  d.U = FromJson<IntMatrix>(Field(j, path, "U"), Key(path, "U"));
  d.V = FromJson<IntMatrix>(Field(j, path, "V"), Key(path, "V"));
  d.S = FromJson<MaskedMatrix>(Field(j, path, "S"), Key(path, "S"));
  if (d.U.cols() != d.r || d.V.rows() != d.r || d.S.rows() != d.U.rows() ||
      d.S.cols() != d.V.cols())
    Fail(path, "U, V and S do not match r and each other");
  for (int i = 0; i < d.S.rows(); ++i)
    for (int k = 0; k < d.S.cols(); ++k)
      if (d.S.has(i, k) && (d.S.at(i, k) < 0 || d.S.at(i, k) >= d.r))
        Fail(Key(path, "S") + ".entries[" + std::to_string(i) + "][" +
                 std::to_string(k) + "]",
             "selector outside [0, r)");
  return d;
}

template <>
IntegerSet FromJson(const Json& j, const std::string& path) {
  std::vector<int64_t> xs = IntVector(j, path);
  for (size_t t = 1; t < xs.size(); ++t)
    if (xs[t - 1] >= xs[t]) Fail(At(path, t), "set must be strictly increasing");
  return IntegerSet::FromUnsorted(std::move(xs));
}

template <>
SumOrderHash FromJson(const Json& j, const std::string& path) {
  OnlyKeys(j, path, {"domain", "values"});
  SumOrderHash h;
  h.domain = FromJson<IntegerSet>(Field(j, path, "domain"), Key(path, "domain"));
  h.values = IntVector(Field(j, path, "values"), Key(path, "values"));
  if (static_cast<int64_t>(h.values.size()) != h.domain.size())
    Fail(path, "domain and values differ in length");
  return h;
}

template <>
WeightedGraph FromJson(const Json& j, const std::string& path) {
  OnlyKeys(j, path, {"n", "directed", "edges", "node_weights"});
  WeightedGraph g;
  g.n = Dim(Field(j, path, "n"), Key(path, "n"));
  g.directed = Bool(Field(j, path, "directed"), Key(path, "directed"));
  const std::string ep = Key(path, "edges");
  const Json& edges = Field(j, path, "edges");
  if (!edges.is_array()) Fail(ep, "expected an array");
  for (size_t t = 0; t < edges.size(); ++t) {
    const std::string p = At(ep, t);
    const Json& e = Array(edges[t], p, 3);
    g.edges.push_back({Int(e[0], At(p, 0)), Int(e[1], At(p, 1)), Int(e[2], At(p, 2))});
  }
  if (j.contains("node_weights"))
    g.node_weights = IntVector(j["node_weights"], Key(path, "node_weights"));
  try {
    g.Validate();
  } catch (const std::invalid_argument& e) {
    Fail(path, e.what());
  }
  return g;
}

template <>
InstanceTags FromJson(const Json& j, const std::string& path) {
  if (!j.is_array()) Fail(path, "expected an array of tags");
  InstanceTags tags;
  for (size_t t = 0; t < j.size(); ++t) {
    const std::string p = At(path, t);
    if (!j[t].is_string()) Fail(p, "expected a tag string");
    const std::string s = j[t].get<std::string>();
    if (StartsWith(s, "slice-uniform:d=")) {
      tags.slice_uniform = TagValue(s, 16, p);
    } else if (StartsWith(s, "uniform:D=")) {
      tags.uniform = TagValue(s, 10, p);
    } else if (StartsWith(s, "regular:rho=1/")) {
      tags.regular = TagValue(s, 14, p);
    } else if (StartsWith(s, "doubling:K=")) {
      const size_t slash = s.find('/', 11);
      if (slash == std::string::npos) Fail(p, "doubling tag needs num/den");
      Ratio r;
      r.num = TagValue(s.substr(0, slash), 11, p);
      r.den = TagValue(s, slash + 1, p);
      if (r.den <= 0) Fail(p, "doubling denominator must be positive");
      tags.doubling = r;
    } else if (StartsWith(s, "doubling-limit:K<=")) {
      tags.doubling_limit = TagValue(s, 18, p);
    } else if (StartsWith(s, "heuristic-exceeded:K>")) {
      tags.heuristic_exceeded = true;
      tags.doubling_limit = TagValue(s, 21, p);
    } else {
      Fail(p, "unknown tag " + s);
    }
  }
  return tags;
}

template <>
ReductionOutput FromJson(const Json& j, const std::string& path) {
  OnlyKeys(j, path, {"instances", "triples", "counters"});
  ReductionOutput out;
  const std::string ip = Key(path, "instances");
  const Json& instances = Field(j, path, "instances");
  if (!instances.is_array()) Fail(ip, "expected an array");
  for (size_t t = 0; t < instances.size(); ++t) {
    const std::string p = At(ip, t);
    const Json& e = instances[t];
    OnlyKeys(e, p, {"u", "v", "w", "instance", "kept", "tags"});
    ReducedInstance r;
    r.adjustment.u = IntVector(Field(e, p, "u"), Key(p, "u"));
    r.adjustment.v = IntVector(Field(e, p, "v"), Key(p, "v"));
    r.adjustment.w = IntVector(Field(e, p, "w"), Key(p, "w"));
    r.adjustment.adjusted =
        FromJson<TriangleInstance>(Field(e, p, "instance"), Key(p, "instance"));
    const TriangleInstance& adj = r.adjustment.adjusted;
    if (static_cast<int>(r.adjustment.u.size()) != adj.n1() ||
        static_cast<int>(r.adjustment.v.size()) != adj.n2() ||
        static_cast<int>(r.adjustment.w.size()) != adj.n3())
      Fail(p, "potential lengths do not match the instance");
    if (e.contains("kept")) {
      const std::string kp = Key(p, "kept");
      const Json& kept = e["kept"];
      OnlyKeys(kept, kp, {"A", "B", "C"});
      const std::pair<const char*, const MaskedMatrix*> mats[] = {
          {"A", &adj.A}, {"B", &adj.B}, {"C", &adj.C}};
      for (const auto& [name, M] : mats) {
        const Json& bits = Field(kept, kp, name);
        if (!bits.is_string() || bits.get<std::string>() != PresenceBits(*M))
          Fail(Key(kp, name), "mask disagrees with the instance");
      }
    }
    r.tags = FromJson<InstanceTags>(Field(e, p, "tags"), Key(p, "tags"));
    out.instances.push_back(std::move(r));
  }
  const std::string tp = Key(path, "triples");
  const Json& triples = Field(j, path, "triples");
  if (!triples.is_array()) Fail(tp, "expected an array");
  for (size_t t = 0; t < triples.size(); ++t) {
    const std::string p = At(tp, t);
    const Json& e = Array(triples[t], p, 3);
    out.triples.push_back({Dim(e[0], At(p, 0)), Dim(e[1], At(p, 1)),
                           Dim(e[2], At(p, 2))});
  }
  if (j.contains("counters")) {
    const std::string cp = Key(path, "counters");
    if (!j["counters"].is_object()) Fail(cp, "expected an object");
    for (const auto& [name, value] : j["counters"].items())
      out.counters[name] = Int(value, Key(cp, name));
  }
  return out;
}

template <>
SamplingConfig FromJson(const Json& j, const std::string& path) {
  OnlyKeys(j, path, {"constant", "failure_probability", "sampled_witnesses",
                     "listing_failure"});
  SamplingConfig cfg;
  if (j.contains("constant"))
    cfg.constant = Number(j["constant"], Key(path, "constant"));
  if (j.contains("failure_probability"))
    cfg.failure_probability =
        Number(j["failure_probability"], Key(path, "failure_probability"));
  if (j.contains("sampled_witnesses"))
    cfg.sampled_witnesses =
        Bool(j["sampled_witnesses"], Key(path, "sampled_witnesses"));
  if (j.contains("listing_failure"))
    cfg.listing_failure = Number(j["listing_failure"], Key(path, "listing_failure"));
  if (!(cfg.constant > 0)) Fail(Key(path, "constant"), "must be positive");
  for (double delta : {cfg.failure_probability, cfg.listing_failure})
    if (!(delta > 0 && delta < 1)) Fail(path, "probabilities must lie in (0, 1)");
  return cfg;
}

template <>
TriangleKnobs FromJson(const Json& j, const std::string& path) {
  OnlyKeys(j, path, {"t", "p", "q", "q_regular", "L", "K", "regularity_factor",
                     "max_depth", "brute_rank_fallback"});
  TriangleKnobs k;
  auto positive = [&](const char* key, auto& field) {
    if (!j.contains(key)) return;
    const int64_t v = Int(j[key], Key(path, key));
    if (v < 1) Fail(Key(path, key), "must be at least 1");
    field = static_cast<std::remove_reference_t<decltype(field)>>(v);
  };
  positive("t", k.t);
  positive("p", k.p);
  positive("q", k.q);
  positive("q_regular", k.q_regular);
  positive("L", k.L);
  positive("K", k.K);
  positive("max_depth", k.max_depth);
  if (j.contains("regularity_factor")) {
    k.regularity_factor =
        Int(j["regularity_factor"], Key(path, "regularity_factor"));
    if (k.regularity_factor < 0)
      Fail(Key(path, "regularity_factor"), "must be non-negative");
  }
  if (j.contains("brute_rank_fallback"))
    k.brute_rank_fallback =
        Bool(j["brute_rank_fallback"], Key(path, "brute_rank_fallback"));
  return k;
}

Json ReadJsonFile(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw ParseError(file + ": cannot open");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(file + ": " + e.what());
  }
}

void WriteJsonFile(const std::string& file, const Json& j) {
  std::ofstream out(file);
  if (!out) throw std::runtime_error(file + ": cannot write");
  out << j.dump() << "\n";
  if (!out) throw std::runtime_error(file + ": write failed");
}

}  // namespace minplus
