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

#ifndef MINPLUS_INTERMEDIATE_GRAPH_H_
#define MINPLUS_INTERMEDIATE_GRAPH_H_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "minplus/core/masked_matrix.h"

namespace minplus {

struct WeightedGraph {
  int n = 0;
  bool directed = true;
  std::vector<std::array<int64_t, 3>> edges;  // (a, b, weight)
  std::vector<int64_t> node_weights;          // empty or one per vertex

  // Throws std::invalid_argument on out-of-range endpoints, self-loops,
  // negative weights, or a node-weight list of the wrong length.
  void Validate() const;
};

// Distances from source; a path costs its edge weights plus the weights of
// every vertex on it, both ends included. Node weights are charged to the
// edge entering each vertex, and the source's own weight is added up front.
std::vector<std::optional<int64_t>> Dijkstra(const WeightedGraph& g,
                                             int source);

// The I–J block of the distance matrix, |from| × |to|.
MaskedMatrix Distances(const WeightedGraph& g, const std::vector<int>& from,
                       const std::vector<int>& to);

// Undirected node-weighted layers I, K1 = [n2] × X, K2 = [n2] × X, J:
// i ~ (k, A[i,k]), (k, B[k,j]) ~ j, and (k, x) ~ (k, x') across K1–K2. I and
// J weigh 10u and (k, x) weighs 10u + x, with u = max(1, max |x|). An I–J
// path with three edges costs A[i,k] + B[k,j] + 40u; every longer one costs
// more than 42u.
struct Gadget {
  WeightedGraph graph;
  std::vector<int> sources;  // I
  std::vector<int> targets;  // J
  int64_t offset = 0;        // added to every product entry
  int64_t cutoff = 0;        // distances above it decode to ⊥
  int64_t vertex_bound = 0;  // the construction's size bound
};

Gadget NodeWeightedGadget(const MaskedMatrix& A, const MaskedMatrix& B);

enum class ApspVariant { kDirectedLayered, kUndirectedThreeLayer };

// kDirectedLayered: entries in {0..u} are split as q·hi + lo with
// q = max(1, ⌊n2·u/n⌋); i reaches (k, −hi) with weight lo, (k, hi) reaches
// j with weight lo, and each (k, −p), ..., (k, p) is a directed path of
// weight-q edges. Distances are the product exactly.
// kUndirectedThreeLayer: entries in {0..u−1} with u = max + 1; edges
// i–k weigh A + u and k–j weigh B + u, so two-edge paths cost the product
// plus 2u and any longer path at least 4u.
Gadget MinPlusToApspGraph(const MaskedMatrix& A, const MaskedMatrix& B,
                          ApspVariant variant);

// Reads the product back from gadget distances.
MaskedMatrix DecodeGadget(const Gadget& g);

}  // namespace minplus

#endif  // MINPLUS_INTERMEDIATE_GRAPH_H_
