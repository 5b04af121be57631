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

#ifndef MINPLUS_IO_JSON_H_
#define MINPLUS_IO_JSON_H_

#include "json.hpp"

#include <stdexcept>
#include <string>

#include "minplus/addcomb/integer_set.h"
#include "minplus/addcomb/sum_order_hash.h"
#include "minplus/core/masked_matrix.h"
#include "minplus/core/triangle.h"
#include "minplus/intermediate/graph.h"
#include "minplus/rank/decomposition.h"
#include "minplus/reductions/config.h"
#include "minplus/triangle/pipeline.h"
#include "minplus/triangle/reduction.h"

namespace minplus {

using Json = nlohmann::json;

// Malformed input. The message starts with the JSON path of the offending
// value, e.g. "$.A.entries[2][0]: expected an integer or null".
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json ToJson(const MaskedMatrix& M);  // {"rows","cols","entries"}, ⊥ = null
Json ToJson(const IntMatrix& M);
Json ToJson(const FlagMatrix& M);    // entries 0/1
Json ToJson(const TriangleInstance& inst);  // {"A","B","C"}
Json ToJson(const EdgeFlags& f);            // {"A","B","C"}
Json ToJson(const RankDecomposition& d);    // {"r","U","V","S"}
Json ToJson(const IntegerSet& X);           // sorted array
Json ToJson(const SumOrderHash& h);         // {"domain","values"}
Json ToJson(const WeightedGraph& g);
Json ToJson(const InstanceTags& tags);      // array of tag strings
Json ToJson(const ReductionOutput& out);
Json ToJson(const SamplingConfig& cfg);
Json ToJson(const TriangleKnobs& knobs);

// FromJson<T>(j, path) with `path` naming j in error messages.
template <typename T>
T FromJson(const Json& j, const std::string& path = "$");

template <> MaskedMatrix FromJson(const Json& j, const std::string& path);
template <> IntMatrix FromJson(const Json& j, const std::string& path);
template <> FlagMatrix FromJson(const Json& j, const std::string& path);
template <> TriangleInstance FromJson(const Json& j, const std::string& path);
template <> EdgeFlags FromJson(const Json& j, const std::string& path);
template <> RankDecomposition FromJson(const Json& j, const std::string& path);
template <> IntegerSet FromJson(const Json& j, const std::string& path);
template <> SumOrderHash FromJson(const Json& j, const std::string& path);
template <> WeightedGraph FromJson(const Json& j, const std::string& path);
template <> InstanceTags FromJson(const Json& j, const std::string& path);
template <> ReductionOutput FromJson(const Json& j, const std::string& path);
// Missing keys keep their defaults; unknown keys are errors.
template <> SamplingConfig FromJson(const Json& j, const std::string& path);
template <> TriangleKnobs FromJson(const Json& j, const std::string& path);

// Bit string over row-major positions: '1' where the entry is present.
std::string PresenceBits(const MaskedMatrix& M);

// File helpers; errors carry the file name.
Json ReadJsonFile(const std::string& file);
void WriteJsonFile(const std::string& file, const Json& j);

}  // namespace minplus

#endif  // MINPLUS_IO_JSON_H_
