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

#ifndef HYPEREE_HYPERGRAPH_H_
#define HYPEREE_HYPERGRAPH_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperee {

using Vertex = std::size_t;

// A hyperedge, stored as a strictly increasing list of vertex indices.
using Edge = std::vector<Vertex>;

// Every failure raised by the library carries one of these codes so callers
// (and the CLI's exit-status mapping) can distinguish input errors from
// internal ones without parsing messages.
enum class ErrorCode {
  kEdgeTooSmall,
  kVertexOutOfRange,
  kDuplicateEdge,
  kNotUniform,
  kInvalidArgument,
  kDisconnected,
  kParse,
  kOverflow,
  kNoConvergence,
  kInconsistent,
};

class HypergraphError : public std::runtime_error {
 public:
  HypergraphError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Renders an edge as "{0,1,2}".
std::string EdgeToString(std::span<const Vertex> edge);

// A finite simple hypergraph on vertices 0..n-1.
//
// Invariants (checked by Create): every edge has at least two vertices, all
// indices are below n, and no two edges are equal as sets. Edges are kept in
// lexicographic order, so two Hypergraph values compare equal exactly when
// they have the same vertex count and the same edge sets.
class Hypergraph {
 public:
  // The empty hypergraph on zero vertices.
  Hypergraph() = default;

  // Validates and canonicalizes `edges`. Vertex lists need not be sorted but
  // must not repeat a vertex.
  static Hypergraph Create(std::size_t n, std::vector<std::vector<Vertex>> edges);

  static Hypergraph Edgeless(std::size_t n) { return Create(n, {}); }

  std::size_t order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_.at(index); }

  // Position of `edge` (any vertex order) in edges(), if present.
  std::optional<std::size_t> IndexOf(std::vector<Vertex> edge) const;
  bool Contains(std::vector<Vertex> edge) const { return IndexOf(std::move(edge)).has_value(); }

  bool operator==(const Hypergraph&) const = default;

 private:
  Hypergraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {}

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

// Result of asking whether every edge has the same size.
struct Uniformity {
  enum class Kind { kUniform, kNonUniform, kVacuous };
  Kind kind = Kind::kVacuous;
  std::size_t k = 0;  // meaningful only for kUniform

  bool IsUniform(std::size_t want) const {
    return kind == Kind::kVacuous || (kind == Kind::kUniform && k == want);
  }
};

Uniformity GetUniformity(const Hypergraph& h);

// Throws kNotUniform unless h is k-uniform or edgeless.
void RequireUniform(const Hypergraph& h, std::size_t k);

// d(v) = number of edges containing v.
std::vector<std::size_t> Degrees(const Hypergraph& h);
bool IsRegular(const Hypergraph& h, std::size_t r);

// All k-subsets of the vertex set that are not edges of h.
Hypergraph ComplementUniform(const Hypergraph& h, std::size_t k);

// Removes v from the edge at `edge_index`.
Hypergraph Shrink(const Hypergraph& h, Vertex v, std::size_t edge_index);

// For every e in `base_sets` (disjoint from {from_v, to_v}), replaces the edge
// e + {from_v} by e + {to_v}.
Hypergraph EdgeSwap(const Hypergraph& h, const std::vector<std::vector<Vertex>>& base_sets,
                    Vertex from_v, Vertex to_v);

// Identifies vertex u of h1 with vertex w of h2. h1 keeps its labels; the
// remaining vertices of h2 are appended in increasing order, skipping w.
Hypergraph Coalesce(const Hypergraph& h1, Vertex u, const Hypergraph& h2, Vertex w);

// Label that vertex x of h2 receives in Coalesce(h1, u, h2, w).
Vertex CoalescedLabel(const Hypergraph& h1, Vertex u, Vertex w, Vertex x);

Hypergraph AddEdge(const Hypergraph& h, std::vector<Vertex> edge);
Hypergraph RemoveEdge(const Hypergraph& h, std::vector<Vertex> edge);

// Hop distances over the "shares an edge" relation. Unreachable pairs hold
// kUnreachable.
inline constexpr std::size_t kUnreachable = static_cast<std::size_t>(-1);
std::vector<std::vector<std::size_t>> DistanceMatrix(const Hypergraph& h);
bool IsConnected(const Hypergraph& h);

// Largest distance; throws kDisconnected when some pair is unreachable.
std::size_t Diameter(const Hypergraph& h);

// Role-based names for the vertices of a generated cycle family.
//
// cycle_vertices holds v_1..v_m, auxiliary maps (i, j) (both 1-based) to the
// j-th extra vertex of cycle edge e_i, and pendant_edges maps a vertex to the
// pendant edges hanging from it.
struct FamilyLabeling {
  std::vector<Vertex> cycle_vertices;
  std::map<std::pair<std::size_t, std::size_t>, Vertex> auxiliary;
  std::map<Vertex, std::vector<Edge>> pendant_edges;

  Vertex v(std::size_t i) const { return cycle_vertices.at(i - 1); }
  Vertex u(std::size_t i, std::size_t j) const { return auxiliary.at({i, j}); }

  // The cycle edge e_i = {v_i, v_{i+1}} plus its auxiliary vertices, sorted.
  Edge CycleEdge(std::size_t i) const;
};

}  // namespace hyperee

#endif  // HYPEREE_HYPERGRAPH_H_
