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

#ifndef MINPLUS_CLI_CORPUS_H_
#define MINPLUS_CLI_CORPUS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minplus/cli/run_config.h"
#include "minplus/core/triangle.h"
#include "minplus/io/json.h"
#include "minplus/rank/decomposition.h"

namespace minplus {

// One corpus item. `dc`, when present, decomposes inst.C. `planted` lists
// triples made exact by construction.
struct CorpusRecord {
  std::string id;
  std::string mode;
  uint64_t seed = 0;
  TriangleInstance inst;
  std::optional<RankDecomposition> dc;
  std::vector<Triple> planted;
};

// Item t is drawn from DeriveSeed(seed, t), so the corpus does not depend
// on the worker count.
CorpusRecord GenerateRecord(const CorpusShape& shape, uint64_t seed, int index);
std::vector<CorpusRecord> GenerateCorpus(const RunConfig& cfg);

Json ToJson(const CorpusRecord& r);
template <> CorpusRecord FromJson(const Json& j, const std::string& path);

// Line-delimited JSON. Errors name the file and line.
std::vector<CorpusRecord> ReadCorpus(const std::string& file);
std::vector<Json> ReadJsonLines(const std::string& file);

// The record's decomposition of C, or the trivial one.
RankDecomposition DecompositionOfC(const CorpusRecord& r);

}  // namespace minplus

#endif  // MINPLUS_CLI_CORPUS_H_
