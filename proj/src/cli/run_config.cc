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

#include "minplus/cli/run_config.h"

#include <charconv>
#include <set>
#include <sstream>

namespace minplus {
namespace {

int64_t ParseInt(const std::string& key, const std::string& text) {
  int64_t v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end)
    throw UsageError("knob " + key + ": expected an integer, got \"" + text + "\"");
  return v;
}

int64_t AtLeast(const std::string& key, const std::string& text, int64_t lo) {
  const int64_t v = ParseInt(key, text);
  if (v < lo)
    throw UsageError("knob " + key + " must be at least " + std::to_string(lo));
  return v;
}

int PositiveInt(const std::string& key, const std::string& text) {
  const int64_t v = AtLeast(key, text, 1);
  if (v > (int64_t{1} << 30)) throw UsageError("knob " + key + " is too large");
  return static_cast<int>(v);
}

double ParseDouble(const std::string& key, const std::string& text) {
  std::istringstream in(text);
  double v = 0;
  if (!(in >> v) || !in.eof())
    throw UsageError("knob " + key + ": expected a number, got \"" + text + "\"");
  return v;
}

bool ParseBool(const std::string& key, const std::string& text) {
  if (text == "1" || text == "true") return true;
  if (text == "0" || text == "false") return false;
  throw UsageError("knob " + key + ": expected true or false");
}

const std::set<std::string> kModes = {"uniform", "all-exact", "planted",
                                      "lowrank", "progression", "geometric",
                                      "bd"};

}  // namespace

uint64_t RunConfig::RequireSeed(const std::string& why) const {
  if (!seed) throw UsageError("--seed is required for " + why);
  return *seed;
}

void ApplyKnob(RunConfig& cfg, const std::string& assignment) {
  const size_t eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0)
    throw UsageError("knob \"" + assignment + "\" is not key=value");
  const std::string key = assignment.substr(0, eq);
  const std::string val = assignment.substr(eq + 1);
  CorpusShape& s = cfg.shape;
  TriangleKnobs& k = cfg.knobs;
  SamplingConfig& sc = cfg.sampling;
  if (key == "mode") {
    if (!kModes.count(val)) throw UsageError("unknown corpus mode " + val);
    s.mode = val;
  } else if (key == "count") {
    s.count = PositiveInt(key, val);
  } else if (key == "n1") {
    s.n1 = PositiveInt(key, val);
  } else if (key == "n2") {
    s.n2 = PositiveInt(key, val);
  } else if (key == "n3") {
    s.n3 = PositiveInt(key, val);
  } else if (key == "n") {
    s.n1 = s.n2 = s.n3 = PositiveInt(key, val);
  } else if (key == "min_dim") {
    s.min_dim = PositiveInt(key, val);
  } else if (key == "u") {
    s.u = AtLeast(key, val, 1);
  } else if (key == "p_bot") {
    s.p_bot = ParseDouble(key, val);
    if (!(s.p_bot >= 0 && s.p_bot < 1)) throw UsageError("p_bot must lie in [0, 1)");
  } else if (key == "rank") {
    s.rank = PositiveInt(key, val);
  } else if (key == "planted") {
    s.planted = PositiveInt(key, val);
  } else if (key == "size") {
    s.size = PositiveInt(key, val);
  } else if (key == "c") {
    s.c = AtLeast(key, val, 1);
  } else if (key == "t") {
    k.t = PositiveInt(key, val);
  } else if (key == "p") {
    k.p = AtLeast(key, val, 1);
  } else if (key == "q") {
    k.q = AtLeast(key, val, 1);
  } else if (key == "q_regular") {
    k.q_regular = AtLeast(key, val, 1);
  } else if (key == "L") {
    k.L = PositiveInt(key, val);
  } else if (key == "K") {
    k.K = AtLeast(key, val, 1);
  } else if (key == "regularity_factor") {
    k.regularity_factor = AtLeast(key, val, 1);
  } else if (key == "max_depth") {
    k.max_depth = PositiveInt(key, val);
  } else if (key == "brute_rank_fallback") {
    k.brute_rank_fallback = ParseBool(key, val);
  } else if (key == "constant") {
    sc.constant = ParseDouble(key, val);
    if (!(sc.constant > 0)) throw UsageError("constant must be positive");
  } else if (key == "failure_probability" || key == "listing_failure") {
    const double d = ParseDouble(key, val);
    if (!(d > 0 && d < 1)) throw UsageError(key + " must lie in (0, 1)");
    (key == "failure_probability" ? sc.failure_probability : sc.listing_failure) = d;
  } else if (key == "sampled_witnesses") {
    sc.sampled_witnesses = ParseBool(key, val);
  } else if (key == "n2_small") {
    cfg.n2_small = PositiveInt(key, val);
  } else if (key == "ts") {
    cfg.ts.clear();
    std::istringstream in(val);
    std::string part;
    while (std::getline(in, part, ',')) cfg.ts.push_back(PositiveInt(key, part));
    if (cfg.ts.empty()) throw UsageError("ts needs at least one value");
  } else {
    throw UsageError("unknown knob " + key);
  }
}

void ApplyConfig(RunConfig& cfg, const Json& j) {
  if (!j.is_object()) throw UsageError("config: expected an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "seed") {
      if (!value.is_number_unsigned()) throw UsageError("config.seed: expected a non-negative integer");
      cfg.seed = value.get<uint64_t>();
    } else if (key == "run") {
      if (!value.is_object()) throw UsageError("config.run: expected an object");
      for (const auto& [k, v] : value.items()) {
        std::string text;
        if (v.is_string()) {
          text = v.get<std::string>();
        } else if (v.is_array()) {
          for (size_t t = 0; t < v.size(); ++t)
            text += (t ? "," : "") + v[t].dump();
        } else {
          text = v.dump();
        }
        ApplyKnob(cfg, k + "=" + text);
      }
    } else if (key == "sampling") {
      try {
        cfg.sampling = FromJson<SamplingConfig>(value, "config.sampling");
      } catch (const ParseError& e) {
        throw UsageError(e.what());
      }
    } else if (key == "knobs") {
      try {
        cfg.knobs = FromJson<TriangleKnobs>(value, "config.knobs");
      } catch (const ParseError& e) {
        throw UsageError(e.what());
      }
    } else {
      throw UsageError("config: unknown key \"" + key + "\"");
    }
  }
}

Json ToJson(const RunConfig& cfg) {
  const CorpusShape& s = cfg.shape;
  Json run = {{"mode", s.mode}, {"count", s.count}, {"n1", s.n1},
              {"n2", s.n2},     {"n3", s.n3},       {"u", s.u},
              {"p_bot", s.p_bot}, {"rank", s.rank}, {"planted", s.planted},
              {"size", s.size}, {"c", s.c},         {"ts", cfg.ts}};
  if (s.min_dim) run["min_dim"] = *s.min_dim;
  if (cfg.n2_small > 0) run["n2_small"] = cfg.n2_small;
  Json j = {{"run", run},
            {"sampling", ToJson(cfg.sampling)},
            {"knobs", ToJson(cfg.knobs)}};
  if (cfg.seed) j["seed"] = *cfg.seed;
  return j;
}

}  // namespace minplus
