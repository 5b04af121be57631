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

#ifndef MINPLUS_TRIANGLE_REDUCTION_H_
#define MINPLUS_TRIANGLE_REDUCTION_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minplus/addcomb/integer_set.h"
#include "minplus/core/triangle.h"

namespace minplus {

// adjusted.A[i,k] = A[i,k] + u[i] + v[k], adjusted.B[k,j] = B[k,j] - v[k]
// + w[j], adjusted.C[i,j] = C[i,j] + u[i] + w[j] on surviving entries; any
// entry may be deleted (⊥ in adjusted).
struct PotentialAdjustment {
  std::vector<int64_t> u, v, w;
  TriangleInstance adjusted;
};

PotentialAdjustment IdentityAdjustment(const TriangleInstance& inst);
// `inner` adjusts outer.adjusted; the result adjusts outer's source.
PotentialAdjustment Compose(const PotentialAdjustment& outer,
                            const PotentialAdjustment& inner);
bool VerifyPotentialAdjustment(const TriangleInstance& src,
                               const PotentialAdjustment& adj);

// Constraint claims attached to an emitted instance. `uniform` bounds the
// summed per-matrix distinct-entry counts, which also bounds the joint
// count and does not change under rotation or transposition.
struct InstanceTags {
  std::optional<int64_t> slice_uniform;  // d
  std::optional<int64_t> uniform;        // D
  std::optional<int64_t> regular;        // no entry above a 1/D fraction
  std::optional<Ratio> doubling;         // of the joint entry set
  std::optional<int64_t> doubling_limit;
  bool heuristic_exceeded = false;

  std::vector<std::string> Strings() const;
};

struct ReducedInstance {
  PotentialAdjustment adjustment;
  InstanceTags tags;
};

// Every exact triangle of the source is listed in `triples` or is an exact
// triangle of some emitted instance.
struct ReductionOutput {
  std::vector<ReducedInstance> instances;
  std::vector<Triple> triples;
  std::map<std::string, int64_t> counters;

  void Append(ReductionOutput&& other);
  void Normalize();  // sorts and dedups triples
};

bool VerifyReductionOutput(const TriangleInstance& src,
                           const ReductionOutput& out);

}  // namespace minplus

#endif  // MINPLUS_TRIANGLE_REDUCTION_H_
