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

#include "minplus/reductions/hash_compression.h"

#include <algorithm>

#include "minplus/addcomb/covering.h"
#include "minplus/core/random.h"

namespace minplus {

namespace {

IntegerSet EntryValues(const MaskedMatrix& A, const MaskedMatrix& B) {
  std::vector<int64_t> xs = A.DistinctValues();
  const std::vector<int64_t> ys = B.DistinctValues();
  xs.insert(xs.end(), ys.begin(), ys.end());
  return IntegerSet::FromUnsorted(std::move(xs));
}

MaskedMatrix Compress(const MaskedMatrix& M, const SumOrderHash& h,
                      int64_t shift) {
  MaskedMatrix out(M.rows(), M.cols());
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j)
      if (M.has(i, j) && h.domain.contains(M.at(i, j) - shift))
        out.set(i, j, h(M.at(i, j) - shift));
  return out;
}

}  // namespace

HashSource SearchHashSource(int64_t budget) {
  return [budget](const IntegerSet& X) -> std::optional<SumOrderHash> {
    HashSearchResult r = SumOrderHashSearch(X, budget);
    if (r.status != HashSearchStatus::kFound) return std::nullopt;
    return r.hash;
  };
}

std::vector<CompressedPair> CompressByHash(const MaskedMatrix& A,
                                           const MaskedMatrix& B,
                                           const SumOrderHash& h,
                                           const std::vector<int64_t>& shifts) {
  std::vector<CompressedPair> out;
  for (int64_t s : shifts)
    for (int64_t t : shifts)
      out.push_back({s, t, Compress(A, h, s), Compress(B, h, t)});
  return out;
}

MaskedMatrix HashUniverseCompression(const MaskedMatrix& A,
                                     const MaskedMatrix& B,
                                     const HashSource& source,
                                     const MinPlusSolver& small_solver,
                                     uint64_t seed, const SamplingConfig& cfg,
                                     HashCompressionStats* stats) {
  CheckProductShapes(A, B);
  HashCompressionStats local;
  HashCompressionStats& st = stats != nullptr ? *stats : local;
  st = HashCompressionStats{};
  MaskedMatrix C(A.rows(), B.cols());
  const IntegerSet X = EntryValues(A, B);
  st.entry_values = X.size();
  if (X.empty()) return C;
  const std::optional<SumOrderHash> h = source(X);
  if (!h) throw HashUnavailable("no sum-order-preserving hash for the entries");
  if (!VerifySumOrderPreserving(*h))
    throw HashUnavailable("hash source returned a hash that breaks sum order");
  st.domain_size = h->domain.size();
  st.universe = *std::max_element(h->values.begin(), h->values.end());
  const std::vector<int64_t> shifts = GreedyCover(X, h->domain);
  st.shifts = static_cast<int64_t>(shifts.size());
  MinPlusWitnessSource witnesses =
      MakeWitnessSource(cfg, small_solver, DeriveSeed(seed, "list"));
  for (const CompressedPair& p : CompressByHash(A, B, *h, shifts)) {
    const MaskedMatrix P = small_solver(p.A, p.B);
    ++st.small_calls;
    RelaxFromWitnesses(A, B, witnesses(p.A, p.B, P, 1), C);
  }
  return C;
}

}  // namespace minplus
