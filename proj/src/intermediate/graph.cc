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

#include "minplus/intermediate/graph.h"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <utility>

#include "minplus/addcomb/integer_set.h"
#include "minplus/core/brute.h"
#include "minplus/core/checked.h"

namespace minplus {

void WeightedGraph::Validate() const {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (!node_weights.empty() && static_cast<int>(node_weights.size()) != n)
    throw std::invalid_argument("node weights must cover every vertex");
  for (int64_t w : node_weights)
    if (w < 0) throw std::invalid_argument("node weights must be non-negative");
  for (const auto& [a, b, w] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("self-loop");
    if (w < 0) throw std::invalid_argument("edge weights must be non-negative");
  }
}

std::vector<std::optional<int64_t>> Dijkstra(const WeightedGraph& g,
                                             int source) {
  g.Validate();
  if (source < 0 || source >= g.n)
    throw std::invalid_argument("source out of range");
  auto weight = [&](int v) {
    return g.node_weights.empty() ? int64_t{0} : g.node_weights[v];
  };
  std::vector<std::vector<std::pair<int, int64_t>>> adj(g.n);
  for (const auto& [a, b, w] : g.edges) {
    adj[a].push_back({static_cast<int>(b), w + weight(static_cast<int>(b))});
    if (!g.directed)
      adj[b].push_back({static_cast<int>(a), w + weight(static_cast<int>(a))});
  }
  std::vector<std::optional<int64_t>> dist(g.n);
  using Item = std::pair<int64_t, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = weight(source);
  heap.push({*dist[source], source});
  while (!heap.empty()) {
    const auto [d, v] = heap.top();
    heap.pop();
    if (d != *dist[v]) continue;
    for (const auto& [w, cost] : adj[v]) {
      const int64_t nd = CheckedAdd(d, cost);
      if (!dist[w] || nd < *dist[w]) {
        dist[w] = nd;
        heap.push({nd, w});
      }
    }
  }
  return dist;
}

MaskedMatrix Distances(const WeightedGraph& g, const std::vector<int>& from,
                       const std::vector<int>& to) {
  MaskedMatrix out(static_cast<int>(from.size()), static_cast<int>(to.size()));
  for (size_t a = 0; a < from.size(); ++a) {
    const auto dist = Dijkstra(g, from[a]);
    for (size_t b = 0; b < to.size(); ++b)
      if (dist[to[b]])
        out.set(static_cast<int>(a), static_cast<int>(b), *dist[to[b]]);
  }
  return out;
}

namespace {

std::vector<int> Range(int lo, int count) {
  std::vector<int> out(count);
  for (int t = 0; t < count; ++t) out[t] = lo + t;
  return out;
}

Gadget DirectedLayered(const MaskedMatrix& A, const MaskedMatrix& B) {
  const int n1 = A.rows(), n2 = A.cols(), n3 = B.cols();
  const int64_t n = std::max({n1, n3, 1});
  const int64_t u =
      std::max(A.MaxValue().value_or(0), B.MaxValue().value_or(0));
  if (std::min(A.MinValue().value_or(0), B.MinValue().value_or(0)) < 0)
    throw std::domain_error("entries must be non-negative");
  if (n2 > n || u > n)
    throw std::domain_error("the layered gadget needs n2 ≤ n and u ≤ n");
  const int64_t m2 = std::max(n2, 1);
  const int64_t q = std::max<int64_t>(1, m2 * u / n);
  // Every high part must fit on the path.
  const int64_t p = std::max(2 * CeilDiv(n, m2), u / q + 1);
  Gadget g;
  const int64_t span = 2 * p + 1;
  const int k_base = n1;
  const int j_base = static_cast<int>(n1 + n2 * span);
  g.graph.n = j_base + n3;
  g.graph.directed = true;
  auto node = [&](int k, int64_t level) {
    return static_cast<int64_t>(k_base) + k * span + (level + p);
  };
  for (int i = 0; i < n1; ++i)
    for (int k = 0; k < n2; ++k)
      if (A.has(i, k))
        g.graph.edges.push_back(
            {i, node(k, -(A.at(i, k) / q)), A.at(i, k) % q});
  for (int k = 0; k < n2; ++k)
    for (int j = 0; j < n3; ++j)
      if (B.has(k, j))
        g.graph.edges.push_back(
            {node(k, B.at(k, j) / q), j_base + j, B.at(k, j) % q});
  for (int k = 0; k < n2; ++k)
    for (int64_t level = -p; level < p; ++level)
      g.graph.edges.push_back({node(k, level), node(k, level + 1), q});
  g.sources = Range(0, n1);
  g.targets = Range(j_base, n3);
  g.offset = 0;
  g.cutoff = std::numeric_limits<int64_t>::max();
  g.vertex_bound = 2 * n + n2 * (4 * CeilDiv(n, m2) + 3);
  return g;
}

Gadget UndirectedThreeLayer(const MaskedMatrix& A, const MaskedMatrix& B) {
  const int n1 = A.rows(), n2 = A.cols(), n3 = B.cols();
  if (std::min(A.MinValue().value_or(0), B.MinValue().value_or(0)) < 0)
    throw std::domain_error("entries must be non-negative");
  const int64_t u =
      std::max(A.MaxValue().value_or(0), B.MaxValue().value_or(0)) + 1;
  Gadget g;
  g.graph.n = n1 + n2 + n3;
  g.graph.directed = false;
  for (int i = 0; i < n1; ++i)
    for (int k = 0; k < n2; ++k)
      if (A.has(i, k)) g.graph.edges.push_back({i, n1 + k, A.at(i, k) + u});
  for (int k = 0; k < n2; ++k)
    for (int j = 0; j < n3; ++j)
      if (B.has(k, j))
        g.graph.edges.push_back({n1 + k, n1 + n2 + j, B.at(k, j) + u});
  g.sources = Range(0, n1);
  g.targets = Range(n1 + n2, n3);
  g.offset = 2 * u;
  g.cutoff = 4 * u - 1;
  g.vertex_bound = n1 + n2 + n3;
  return g;
}

}  // namespace

Gadget NodeWeightedGadget(const MaskedMatrix& A, const MaskedMatrix& B) {
  CheckProductShapes(A, B);
  const int n1 = A.rows(), n2 = A.cols(), n3 = B.cols();
  std::vector<int64_t> xs = A.DistinctValues();
  for (int64_t y : B.DistinctValues()) xs.push_back(y);
  const IntegerSet X = IntegerSet::FromUnsorted(std::move(xs));
  const int nx = static_cast<int>(X.size());
  if (nx > std::max(n2, 1))
    throw std::domain_error("the node-weighted gadget needs |X| ≤ n2");
  int64_t u = 1;
  for (int64_t x : X) u = std::max(u, std::abs(x));
  Gadget g;
  const int k1 = n1, k2 = n1 + n2 * nx, jb = n1 + 2 * n2 * nx;
  g.graph.n = jb + n3;
  g.graph.directed = false;
  g.graph.node_weights.assign(g.graph.n, 10 * u);
  for (int k = 0; k < n2; ++k)
    for (int t = 0; t < nx; ++t) {
      g.graph.node_weights[k1 + k * nx + t] = 10 * u + X[t];
      g.graph.node_weights[k2 + k * nx + t] = 10 * u + X[t];
      for (int s = 0; s < nx; ++s)
        g.graph.edges.push_back({k1 + k * nx + t, k2 + k * nx + s, 0});
    }
  for (int i = 0; i < n1; ++i)
    for (int k = 0; k < n2; ++k)
      if (A.has(i, k))
        g.graph.edges.push_back(
            {i, k1 + k * nx + X.IndexOf(A.at(i, k)), int64_t{0}});
  for (int k = 0; k < n2; ++k)
    for (int j = 0; j < n3; ++j)
      if (B.has(k, j))
        g.graph.edges.push_back(
            {k2 + k * nx + X.IndexOf(B.at(k, j)), int64_t{jb + j}, 0});
  g.sources = Range(0, n1);
  g.targets = Range(jb, n3);
  g.offset = 40 * u;
  g.cutoff = 42 * u;
  g.vertex_bound = 4 * std::max({n1, n3, n2 * nx});
  return g;
}

Gadget MinPlusToApspGraph(const MaskedMatrix& A, const MaskedMatrix& B,
                          ApspVariant variant) {
  CheckProductShapes(A, B);
  return variant == ApspVariant::kDirectedLayered ? DirectedLayered(A, B)
                                                  : UndirectedThreeLayer(A, B);
}

MaskedMatrix DecodeGadget(const Gadget& g) {
  MaskedMatrix D = Distances(g.graph, g.sources, g.targets);
  MaskedMatrix out(D.rows(), D.cols());
  for (int i = 0; i < D.rows(); ++i)
    for (int j = 0; j < D.cols(); ++j)
      if (D.has(i, j) && D.at(i, j) <= g.cutoff)
        out.set(i, j, D.at(i, j) - g.offset);
  return out;
}

}  // namespace minplus
