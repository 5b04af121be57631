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

#include "minplus/triangle/reduction.h"

#include <algorithm>
#include <set>

#include "minplus/core/brute.h"
#include "minplus/core/checked.h"

namespace minplus {

PotentialAdjustment IdentityAdjustment(const TriangleInstance& inst) {
  return PotentialAdjustment{std::vector<int64_t>(inst.n1(), 0),
                             std::vector<int64_t>(inst.n2(), 0),
                             std::vector<int64_t>(inst.n3(), 0), inst};
}

namespace {

std::vector<int64_t> AddVectors(const std::vector<int64_t>& x,
                                const std::vector<int64_t>& y) {
  if (x.size() != y.size()) throw ShapeError("potential lengths differ");
  std::vector<int64_t> out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = CheckedAdd(x[i], y[i]);
  return out;
}

// Surviving entries of `adj` equal src + row[i] + col[j].
bool MatrixAdjusted(const MaskedMatrix& src, const MaskedMatrix& adj,
                    const std::vector<int64_t>& row,
                    const std::vector<int64_t>& col) {
  if (src.rows() != adj.rows() || src.cols() != adj.cols()) return false;
  if (static_cast<int>(row.size()) != src.rows() ||
      static_cast<int>(col.size()) != src.cols()) {
    return false;
  }
  for (int i = 0; i < src.rows(); ++i) {
    for (int j = 0; j < src.cols(); ++j) {
      if (!adj.has(i, j)) continue;
      if (!src.has(i, j)) return false;
      if (CheckedAdd(CheckedAdd(src.at(i, j), row[i]), col[j]) != adj.at(i, j)) {
        return false;
      }
    }
  }
  return true;
}

std::vector<int64_t> Negate(const std::vector<int64_t>& x) {
  std::vector<int64_t> out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = CheckedNeg(x[i]);
  return out;
}

}  // namespace

PotentialAdjustment Compose(const PotentialAdjustment& outer,
                            const PotentialAdjustment& inner) {
  return PotentialAdjustment{AddVectors(outer.u, inner.u),
                             AddVectors(outer.v, inner.v),
                             AddVectors(outer.w, inner.w), inner.adjusted};
}

bool VerifyPotentialAdjustment(const TriangleInstance& src,
                               const PotentialAdjustment& adj) {
  return MatrixAdjusted(src.A, adj.adjusted.A, adj.u, adj.v) &&
         MatrixAdjusted(src.B, adj.adjusted.B, Negate(adj.v), adj.w) &&
         MatrixAdjusted(src.C, adj.adjusted.C, adj.u, adj.w);
}

std::vector<std::string> InstanceTags::Strings() const {
  std::vector<std::string> out;
  if (slice_uniform) out.push_back("slice-uniform:d=" + std::to_string(*slice_uniform));
  if (uniform) out.push_back("uniform:D=" + std::to_string(*uniform));
  if (regular) out.push_back("regular:rho=1/" + std::to_string(*regular));
  if (doubling) out.push_back("doubling:K=" + doubling->ToString());
  if (heuristic_exceeded) {
    out.push_back("heuristic-exceeded:K>" +
                  std::to_string(doubling_limit.value_or(0)));
  }
  return out;
}

void ReductionOutput::Append(ReductionOutput&& other) {
  for (auto& inst : other.instances) instances.push_back(std::move(inst));
  triples.insert(triples.end(), other.triples.begin(), other.triples.end());
  for (const auto& [name, value] : other.counters) {
    if (name == "max_depth") {
      counters[name] = std::max(counters[name], value);
    } else {
      counters[name] += value;
    }
  }
}

void ReductionOutput::Normalize() {
  std::sort(triples.begin(), triples.end());
  triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
}

bool VerifyReductionOutput(const TriangleInstance& src,
                           const ReductionOutput& out) {
  std::set<Triple> covered;
  for (const Triple& t : out.triples) {
    if (t[0] < 0 || t[0] >= src.n1() || t[1] < 0 || t[1] >= src.n2() ||
        t[2] < 0 || t[2] >= src.n3() || !src.IsExact(t[0], t[1], t[2])) {
      return false;
    }
    covered.insert(t);
  }
  for (const ReducedInstance& ri : out.instances) {
    if (!VerifyPotentialAdjustment(src, ri.adjustment)) return false;
    for (const Triple& t : ExactTrianglesBrute(ri.adjustment.adjusted)) {
      covered.insert(t);
    }
  }
  for (const Triple& t : ExactTrianglesBrute(src)) {
    if (!covered.count(t)) return false;
  }
  return true;
}

}  // namespace minplus
