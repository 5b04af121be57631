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

#ifndef MINPLUS_CLI_COMMANDS_H_
#define MINPLUS_CLI_COMMANDS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "minplus/cli/corpus.h"
#include "minplus/cli/run_config.h"
#include "minplus/core/masked_matrix.h"
#include "minplus/core/triangle.h"
#include "minplus/io/json.h"

namespace minplus {

// Algorithm names accepted by `solve`. Triangle algorithms report edge
// flags of (A, B, C); product algorithms report A*B and ignore C.
const std::vector<std::string>& TriangleAlgorithms();
const std::vector<std::string>& ProductAlgorithms();
// Reduction names accepted by `reduce` and `bench`.
const std::vector<std::string>& ReductionNames();
bool IsRandomized(const std::string& algorithm);

EdgeFlags RunTriangleAlgorithm(const std::string& name,
                               const CorpusRecord& r, const RunConfig& cfg,
                               Json* stats = nullptr);
// Throws HashUnavailable for "hash-compression" when no hash is found.
MaskedMatrix RunProductAlgorithm(const std::string& name,
                                 const MaskedMatrix& A, const MaskedMatrix& B,
                                 const RunConfig& cfg, uint64_t seed,
                                 Json* stats = nullptr);
ReductionOutput RunReduction(const std::string& name, const CorpusRecord& r,
                             const TriangleKnobs& knobs);

// One report line per record, in corpus order whatever the worker count.
std::vector<Json> SolveCorpus(const std::vector<CorpusRecord>& corpus,
                              const std::string& algorithm,
                              const RunConfig& cfg);
std::vector<Json> ReduceCorpus(const std::vector<CorpusRecord>& corpus,
                               const std::string& reduction,
                               const RunConfig& cfg);

// Re-derives every checked property from the record and the raw report
// line. Returns {"id", "ok", "checks": {name: bool}}.
Json VerifyReportLine(const CorpusRecord& r, const Json& report);

struct BenchPoint {
  int t = 0;
  int64_t records = 0;
  int64_t instances = 0;  // recounted from the outputs
  int64_t triples = 0;
  int64_t max_depth = 0;
  double time_ms = 0;
};

// The reduction run once per knob t in cfg.ts.
std::vector<BenchPoint> BenchCorpus(const std::vector<CorpusRecord>& corpus,
                                    const std::string& reduction,
                                    const RunConfig& cfg);
Json ToJson(const BenchPoint& p, bool timings);
std::string BenchCsv(const std::vector<BenchPoint>& points, bool timings);

}  // namespace minplus

#endif  // MINPLUS_CLI_COMMANDS_H_
