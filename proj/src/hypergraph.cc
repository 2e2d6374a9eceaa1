// Copyright 2026 The hyperee Authors
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

#include "hyperee/hypergraph.h"

#include <algorithm>
#include <deque>
#include <string>
#include <utility>
#include <vector>

namespace hyperee {
namespace {

Edge Canonical(std::vector<Vertex> edge) {
  std::sort(edge.begin(), edge.end());
  edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
  return edge;
}

void ForEachSubset(std::size_t n, std::size_t k, Edge& current, Vertex start,
                   std::vector<Edge>& out) {
  if (current.size() == k) {
    out.push_back(current);
    return;
  }
  for (Vertex v = start; v + (k - current.size()) <= n; ++v) {
    current.push_back(v);
    ForEachSubset(n, k, current, v + 1, out);
    current.pop_back();
  }
}

std::vector<std::vector<Vertex>> AsLists(const std::vector<Edge>& edges) {
  return {edges.begin(), edges.end()};
}

}  // namespace

std::string EdgeToString(std::span<const Vertex> edge) {
  std::string out = "{";
  for (std::size_t i = 0; i < edge.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(edge[i]);
  }
  return out + "}";
}

Hypergraph Hypergraph::Create(std::size_t n, std::vector<std::vector<Vertex>> edges) {
  std::vector<Edge> canonical;
  canonical.reserve(edges.size());
  for (auto& raw : edges) {
    const std::size_t listed = raw.size();
    Edge e = Canonical(std::move(raw));
    if (e.size() != listed) {
      throw HypergraphError(ErrorCode::kInvalidArgument,
                            "edge " + EdgeToString(e) + " lists a vertex twice");
    }
    if (e.size() < 2) {
      throw HypergraphError(ErrorCode::kEdgeTooSmall,
                            "edge " + EdgeToString(e) + " has fewer than 2 vertices");
    }
    if (e.back() >= n) {
      throw HypergraphError(ErrorCode::kVertexOutOfRange,
                            "edge " + EdgeToString(e) + " uses vertex " +
                                std::to_string(e.back()) + " but n = " + std::to_string(n));
    }
    canonical.push_back(std::move(e));
  }
  std::sort(canonical.begin(), canonical.end());
  auto dup = std::adjacent_find(canonical.begin(), canonical.end());
  if (dup != canonical.end()) {
    throw HypergraphError(ErrorCode::kDuplicateEdge,
                          "duplicate edge " + EdgeToString(*dup));
  }
  return Hypergraph(n, std::move(canonical));
}

std::optional<std::size_t> Hypergraph::IndexOf(std::vector<Vertex> edge) const {
  Edge e = Canonical(std::move(edge));
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

Uniformity GetUniformity(const Hypergraph& h) {
  if (h.size() == 0) return {Uniformity::Kind::kVacuous, 0};
  const std::size_t k = h.edge(0).size();
  for (const Edge& e : h.edges()) {
    if (e.size() != k) return {Uniformity::Kind::kNonUniform, 0};
  }
  return {Uniformity::Kind::kUniform, k};
}

void RequireUniform(const Hypergraph& h, std::size_t k) {
  if (!GetUniformity(h).IsUniform(k)) {
    throw HypergraphError(ErrorCode::kNotUniform,
                          "hypergraph is not " + std::to_string(k) + "-uniform");
  }
}

std::vector<std::size_t> Degrees(const Hypergraph& h) {
  std::vector<std::size_t> d(h.order(), 0);
  for (const Edge& e : h.edges()) {
    for (Vertex v : e) ++d[v];
  }
  return d;
}

bool IsRegular(const Hypergraph& h, std::size_t r) {
  const auto d = Degrees(h);
  return std::all_of(d.begin(), d.end(), [r](std::size_t x) { return x == r; });
}

Hypergraph ComplementUniform(const Hypergraph& h, std::size_t k) {
  if (k < 2 || k > h.order()) {
    throw HypergraphError(ErrorCode::kInvalidArgument,
                          "complement needs 2 <= k <= n, got k = " + std::to_string(k));
  }
  RequireUniform(h, k);
  std::vector<Edge> all;
  Edge scratch;
  ForEachSubset(h.order(), k, scratch, 0, all);
  std::vector<std::vector<Vertex>> kept;
  for (Edge& e : all) {
    if (!std::binary_search(h.edges().begin(), h.edges().end(), e)) kept.push_back(std::move(e));
  }
  return Hypergraph::Create(h.order(), std::move(kept));
}

Hypergraph Shrink(const Hypergraph& h, Vertex v, std::size_t edge_index) {
  if (edge_index >= h.size()) {
    throw HypergraphError(ErrorCode::kInvalidArgument,
                          "edge index " + std::to_string(edge_index) + " out of range");
  }
  const Edge& target = h.edge(edge_index);
  if (!std::binary_search(target.begin(), target.end(), v)) {
    throw HypergraphError(ErrorCode::kInvalidArgument, "vertex " + std::to_string(v) +
                                                           " is not in edge " +
                                                           EdgeToString(target));
  }
  if (target.size() < 3) {
    throw HypergraphError(ErrorCode::kEdgeTooSmall,
                          "shrinking " + EdgeToString(target) + " would leave a single vertex");
  }
  auto edges = AsLists(h.edges());
  auto& e = edges[edge_index];
  e.erase(std::find(e.begin(), e.end(), v));
  return Hypergraph::Create(h.order(), std::move(edges));
}

Hypergraph EdgeSwap(const Hypergraph& h, const std::vector<std::vector<Vertex>>& base_sets,
                    Vertex from_v, Vertex to_v) {
  if (from_v >= h.order() || to_v >= h.order()) {
    throw HypergraphError(ErrorCode::kVertexOutOfRange, "swap endpoint out of range");
  }
  std::vector<Edge> removed;
  std::vector<std::vector<Vertex>> inserted;
  for (const auto& raw : base_sets) {
    Edge base = Canonical(raw);
    if (std::binary_search(base.begin(), base.end(), from_v) ||
        std::binary_search(base.begin(), base.end(), to_v)) {
      throw HypergraphError(ErrorCode::kInvalidArgument,
                            "base set " + EdgeToString(base) + " meets the swap endpoints");
    }
    Edge with_from = base;
    with_from.push_back(from_v);
    with_from = Canonical(std::move(with_from));
    if (!h.Contains(with_from)) {
      throw HypergraphError(ErrorCode::kInvalidArgument,
                            "edge " + EdgeToString(with_from) + " is not present");
    }
    removed.push_back(std::move(with_from));
    base.push_back(to_v);
    inserted.push_back(std::move(base));
  }
  std::vector<std::vector<Vertex>> edges;
  for (const Edge& e : h.edges()) {
    if (std::find(removed.begin(), removed.end(), e) == removed.end()) edges.push_back(e);
  }
  edges.insert(edges.end(), inserted.begin(), inserted.end());
  return Hypergraph::Create(h.order(), std::move(edges));
}

Vertex CoalescedLabel(const Hypergraph& h1, Vertex u, Vertex w, Vertex x) {
  if (x == w) return u;
  return h1.order() + (x < w ? x : x - 1);
}

Hypergraph Coalesce(const Hypergraph& h1, Vertex u, const Hypergraph& h2, Vertex w) {
  if (u >= h1.order() || w >= h2.order()) {
    throw HypergraphError(ErrorCode::kVertexOutOfRange, "coalescence vertex out of range");
  }
  auto edges = AsLists(h1.edges());
  for (const Edge& e : h2.edges()) {
    std::vector<Vertex> relabeled;
    for (Vertex x : e) relabeled.push_back(CoalescedLabel(h1, u, w, x));
    edges.push_back(std::move(relabeled));
  }
  return Hypergraph::Create(h1.order() + h2.order() - 1, std::move(edges));
}

Hypergraph AddEdge(const Hypergraph& h, std::vector<Vertex> edge) {
  auto edges = AsLists(h.edges());
  edges.push_back(std::move(edge));
  return Hypergraph::Create(h.order(), std::move(edges));
}

Hypergraph RemoveEdge(const Hypergraph& h, std::vector<Vertex> edge) {
  auto index = h.IndexOf(edge);
  if (!index) {
    throw HypergraphError(ErrorCode::kInvalidArgument,
                          "edge " + EdgeToString(Canonical(std::move(edge))) + " is not present");
  }
  auto edges = AsLists(h.edges());
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(*index));
  return Hypergraph::Create(h.order(), std::move(edges));
}

std::vector<std::vector<std::size_t>> DistanceMatrix(const Hypergraph& h) {
  const std::size_t n = h.order();
  std::vector<std::vector<Vertex>> neighbors(n);
  for (const Edge& e : h.edges()) {
    for (Vertex a : e) {
      for (Vertex b : e) {
        if (a != b) neighbors[a].push_back(b);
      }
    }
  }
  std::vector<std::vector<std::size_t>> dist(n, std::vector<std::size_t>(n, kUnreachable));
  for (Vertex source = 0; source < n; ++source) {
    auto& row = dist[source];
    row[source] = 0;
    std::deque<Vertex> queue{source};
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : neighbors[x]) {
        if (row[y] == kUnreachable) {
          row[y] = row[x] + 1;
          queue.push_back(y);
        }
      }
    }
  }
  return dist;
}

bool IsConnected(const Hypergraph& h) {
  if (h.order() == 0) return true;
  const auto dist = DistanceMatrix(h);
  return std::none_of(dist[0].begin(), dist[0].end(),
                      [](std::size_t d) { return d == kUnreachable; });
}

std::size_t Diameter(const Hypergraph& h) {
  std::size_t best = 0;
  for (const auto& row : DistanceMatrix(h)) {
    for (std::size_t d : row) {
      if (d == kUnreachable) {
        throw HypergraphError(ErrorCode::kDisconnected, "diameter of a disconnected hypergraph");
      }
      best = std::max(best, d);
    }
  }
  return best;
}

Edge FamilyLabeling::CycleEdge(std::size_t i) const {
  const std::size_t m = cycle_vertices.size();
  Edge e{v(i), v(i % m + 1)};
  for (std::size_t j = 1;; ++j) {
    auto it = auxiliary.find({i, j});
    if (it == auxiliary.end()) break;
    e.push_back(it->second);
  }
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace hyperee
