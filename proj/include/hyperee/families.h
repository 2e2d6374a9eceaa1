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

#ifndef HYPEREE_FAMILIES_H_
#define HYPEREE_FAMILIES_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hyperee/hypergraph.h"

namespace hyperee {

// Vertex numbering used by every cycle-based generator: v_1..v_m take
// 0..m-1, then the auxiliary vertices u_{ij} follow in (i, j) order, then the
// vertices of pendant edges in attachment order.

Hypergraph CompleteUniform(std::size_t n, std::size_t k);
Hypergraph Edgeless(std::size_t n);

struct LabeledHypergraph {
  Hypergraph graph;
  FamilyLabeling labeling;
};

// The k-uniform cycle C_{m,k} on m(k-1) vertices. m = 2 needs k >= 3.
LabeledHypergraph Cycle(std::size_t m, std::size_t k);

// C_{m,k} with pendants[i] pendant edges hung from v_{i+1}. Each pendant edge
// is {v} plus k-1 fresh vertices.
LabeledHypergraph UnicyclicCm(std::size_t k, const std::vector<std::size_t>& pendants);

// The extremal shape C_2(n/(k-1) - 2, 0); n must be a multiple of k-1 with
// n/(k-1) >= 2.
LabeledHypergraph XN(std::size_t n, std::size_t k);

// s edges sharing only vertex 0.
Hypergraph Hyperstar(std::size_t k, std::size_t s);

// Three edges chained through two cut vertices:
//   e_1 = {u_0, u_{1,1..k-2}, u_1}, e_2 = {u_1, u_{2,*}, u_2}, e_3 = {u_2, u_{3,*}, u_3}.
// joints[i] is u_i (vertex i); interior(i, j) is u_{i,j}.
struct PathP3 {
  Hypergraph graph;
  std::size_t k = 0;
  Vertex joint(std::size_t i) const { return i; }
  Vertex interior(std::size_t i, std::size_t j) const { return 4 + (i - 1) * (k - 2) + (j - 1); }
  Edge edge(std::size_t i) const;
};
PathP3 MakePathP3(std::size_t k);

// C_{2,k} with one pendant edge hung from the auxiliary vertex u_{11}.
LabeledHypergraph GStarStar(std::size_t k);

// The Fano plane on points 0..6.
Hypergraph FanoPlane();

// Every k-subset is an edge independently with probability p.
Hypergraph RandomUniform(std::size_t n, std::size_t k, double p, std::mt19937_64& rng);

struct BibdCertificate {
  std::size_t n = 0;
  std::size_t b = 0;
  std::size_t k = 0;
  std::size_t beta = 0;
  std::size_t r = 0;

  bool operator==(const BibdCertificate&) const = default;
};

// Returns a certificate when every pair of distinct vertices lies in the
// same number beta >= 1 of edges. Requires n > k >= 2 and a k-uniform (or
// edgeless) h. Throws kInconsistent if the replication number does not match
// the vertex degrees.
std::optional<BibdCertificate> ValidateBibd(const Hypergraph& h, std::size_t k);

// Declarative family description, also the CLI grammar:
//   complete:n,k  edgeless:n  cycle:m,k  cm:k:n1,n2,...  xn:n,k
//   star:k,s  p3:k  gss:k  fano
enum class FamilyKind {
  kComplete,
  kEdgeless,
  kCycle,
  kUnicyclicCm,
  kXN,
  kHyperstar,
  kPathP3,
  kGStarStar,
  kFano,
  kExplicit,
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::kExplicit;
  std::size_t k = 0;
  // complete: {n}; edgeless: {n}; cycle: {m}; cm: pendant counts; xn: {n};
  // star: {s}; p3, gss, fano: empty.
  std::vector<std::size_t> params;
  std::optional<Hypergraph> explicit_graph;
};

// Throws kParse with the 1-based character position of the problem.
FamilySpec ParseFamily(std::string_view text);
std::string ToString(const FamilySpec& spec);
Hypergraph Build(const FamilySpec& spec);

// One member of the generated unicyclic catalog.
struct CatalogEntry {
  std::string label;
  Hypergraph graph;
  std::size_t cycle_length = 0;
  // Pendant edges per cycle vertex, indexed like the labeling: v_1..v_m first
  // and then the auxiliary vertices.
  std::vector<std::size_t> pendants;
  // Set for depth-2 variants: the pendant-edge position (in attachment order)
  // whose outer vertex carries one more edge.
  std::optional<std::size_t> deep_parent;
};

// Generated sub-catalog of k-uniform unicyclic hypergraphs on n_over*(k-1)
// vertices, in a fixed order:
//   * every cycle length m (m >= 3 when k = 2) with the n_over - m pendant
//     edges distributed over all cycle vertices in every way, which includes
//     every C_m(n_1..n_m);
//   * every such shape with n_over - m - 1 pendant edges plus one edge hung
//     from an outer vertex of one of the pendant edges.
// Isomorphic shapes can repeat. The catalog is a proper subset of all
// unicyclic hypergraphs of this order.
std::vector<CatalogEntry> UnicyclicCatalog(std::size_t n_over, std::size_t k);

// Label used for C_m(n_1, ..., n_m) members of the catalog, e.g. "C2(4,0)".
std::string CmLabel(const std::vector<std::size_t>& pendants);

}  // namespace hyperee

#endif  // HYPEREE_FAMILIES_H_
