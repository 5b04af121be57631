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

#ifndef MINPLUS_CLI_RUN_CONFIG_H_
#define MINPLUS_CLI_RUN_CONFIG_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "minplus/io/json.h"
#include "minplus/reductions/config.h"
#include "minplus/triangle/pipeline.h"

namespace minplus {

// Bad flags, knobs or config values; the CLI exits with status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CorpusShape {
  std::string mode = "uniform";
  int count = 1;
  int n1 = 4, n2 = 4, n3 = 4;
  std::optional<int> min_dim;  // dims drawn from [min_dim, n*] when set
  int64_t u = 8;
  double p_bot = 0.0;
  int rank = 2;     // lowrank mode
  int planted = 3;  // planted and lowrank modes
  int size = 4;     // |X| for progression and geometric modes
  int64_t c = 2;    // bd mode
};

struct RunConfig {
  std::optional<uint64_t> seed;
  CorpusShape shape;
  SamplingConfig sampling;
  TriangleKnobs knobs;
  int n2_small = 0;             // 0: half the inner dimension
  std::vector<int> ts = {1, 2, 3, 4};  // bench sweep
  int workers = 1;
  bool timings = false;

  // Throws UsageError when no seed was given.
  uint64_t RequireSeed(const std::string& why) const;
};

// "key=value"; unknown keys and out-of-range values throw UsageError.
void ApplyKnob(RunConfig& cfg, const std::string& assignment);
// {"seed", "run": {key: value}, "sampling": {...}, "knobs": {...}}.
void ApplyConfig(RunConfig& cfg, const Json& j);
Json ToJson(const RunConfig& cfg);

}  // namespace minplus

#endif  // MINPLUS_CLI_RUN_CONFIG_H_
