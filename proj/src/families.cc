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

#include "hyperee/families.h"

#include <algorithm>
#include <charconv>
#include <string>
#include <utility>
#include <vector>

#include "hyperee/spectral.h"

namespace hyperee {
namespace {

HypergraphError BadParameter(const std::string& what) {
  return HypergraphError(ErrorCode::kInvalidArgument, what);
}

void Subsets(std::size_t n, std::size_t k, std::vector<Vertex>& current, Vertex start,
             std::vector<std::vector<Vertex>>& out) {
  if (current.size() == k) {
    out.push_back(current);
    return;
  }
  for (Vertex v = start; v + (k - current.size()) <= n; ++v) {
    current.push_back(v);
    Subsets(n, k, current, v + 1, out);
    current.pop_back();
  }
}

// Cycle skeleton: edges and labeling, vertex count m(k-1).
struct Skeleton {
  std::size_t n = 0;
  std::vector<std::vector<Vertex>> edges;
  FamilyLabeling labeling;
};

Skeleton CycleSkeleton(std::size_t m, std::size_t k) {
  if (m < 2 || k < 2) throw BadParameter("cycle needs m >= 2 and k >= 2");
  Skeleton s;
  for (std::size_t i = 0; i < m; ++i) s.labeling.cycle_vertices.push_back(i);
  s.n = m;
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j + 2 <= k; ++j) s.labeling.auxiliary[{i, j}] = s.n++;
  }
  for (std::size_t i = 1; i <= m; ++i) {
    const Edge e = s.labeling.CycleEdge(i);
    s.edges.emplace_back(e.begin(), e.end());
  }
  return s;
}

// Hangs a fresh pendant edge {at} + (k-1 new vertices) and returns it.
Edge AttachPendant(Skeleton& s, Vertex at, std::size_t k) {
  Edge e{at};
  for (std::size_t j = 0; j + 1 < k; ++j) e.push_back(s.n++);
  s.edges.emplace_back(e.begin(), e.end());
  s.labeling.pendant_edges[at].push_back(e);
  return e;
}

LabeledHypergraph Finish(Skeleton s) {
  return {Hypergraph::Create(s.n, std::move(s.edges)), std::move(s.labeling)};
}

// All multisets of size `count` over 0..slots-1, as occupancy vectors, in
// lexicographic order of the sorted multiset.
void Distributions(std::size_t slots, std::size_t count, std::size_t start,
                   std::vector<std::size_t>& occupancy, std::vector<std::vector<std::size_t>>& out) {
  if (count == 0) {
    out.push_back(occupancy);
    return;
  }
  for (std::size_t slot = start; slot < slots; ++slot) {
    ++occupancy[slot];
    Distributions(slots, count - 1, slot, occupancy, out);
    --occupancy[slot];
  }
}

std::string JoinCounts(const std::vector<std::size_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(values[i]);
  }
  return out;
}

CatalogEntry BuildCatalogShape(std::size_t m, std::size_t k, std::vector<std::size_t> pendants,
                               std::optional<std::size_t> deep_parent) {
  Skeleton s = CycleSkeleton(m, k);
  std::vector<Edge> attached;
  for (Vertex at = 0; at < pendants.size(); ++at) {
    for (std::size_t c = 0; c < pendants[at]; ++c) attached.push_back(AttachPendant(s, at, k));
  }
  if (deep_parent) AttachPendant(s, attached.at(*deep_parent)[1], k);

  CatalogEntry entry;
  entry.cycle_length = m;
  entry.deep_parent = deep_parent;
  entry.label = CmLabel({pendants.begin(), pendants.begin() + static_cast<std::ptrdiff_t>(m)});
  std::string aux;
  for (const auto& [ij, vertex] : s.labeling.auxiliary) {
    if (pendants[vertex] == 0) continue;
    if (!aux.empty()) aux += ",";
    aux += std::to_string(ij.first) + "." + std::to_string(ij.second) + ":" +
           std::to_string(pendants[vertex]);
  }
  if (!aux.empty()) entry.label += "+u{" + aux + "}";
  if (deep_parent) entry.label += "+deep@" + std::to_string(*deep_parent);
  entry.pendants = std::move(pendants);
  entry.graph = Hypergraph::Create(s.n, std::move(s.edges));
  return entry;
}

std::size_t ReadNumber(std::string_view text, std::size_t& pos) {
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
  if (ec != std::errc()) {
    throw HypergraphError(ErrorCode::kParse,
                          "expected a number at position " + std::to_string(pos + 1) + " in '" +
                              std::string(text) + "'");
  }
  pos = static_cast<std::size_t>(end - text.data());
  return value;
}

std::vector<std::size_t> ReadList(std::string_view text, std::size_t& pos) {
  std::vector<std::size_t> out{ReadNumber(text, pos)};
  while (pos < text.size() && text[pos] == ',') {
    ++pos;
    out.push_back(ReadNumber(text, pos));
  }
  return out;
}

void Expect(std::string_view text, std::size_t& pos, char c) {
  if (pos >= text.size() || text[pos] != c) {
    throw HypergraphError(ErrorCode::kParse, std::string("expected '") + c + "' at position " +
                                                 std::to_string(pos + 1) + " in '" +
                                                 std::string(text) + "'");
  }
  ++pos;
}

std::vector<std::size_t> ExactList(std::string_view text, std::size_t& pos, std::size_t count) {
  const std::size_t start = pos;
  auto values = ReadList(text, pos);
  if (values.size() != count) {
    throw HypergraphError(ErrorCode::kParse, "expected " + std::to_string(count) +
                                                 " numbers at position " +
                                                 std::to_string(start + 1) + " in '" +
                                                 std::string(text) + "'");
  }
  return values;
}

}  // namespace

Hypergraph CompleteUniform(std::size_t n, std::size_t k) {
  if (k < 2 || k > n) throw BadParameter("complete hypergraph needs 2 <= k <= n");
  std::vector<std::vector<Vertex>> edges;
  std::vector<Vertex> scratch;
  Subsets(n, k, scratch, 0, edges);
  return Hypergraph::Create(n, std::move(edges));
}

Hypergraph Edgeless(std::size_t n) { return Hypergraph::Edgeless(n); }

LabeledHypergraph Cycle(std::size_t m, std::size_t k) { return Finish(CycleSkeleton(m, k)); }

LabeledHypergraph UnicyclicCm(std::size_t k, const std::vector<std::size_t>& pendants) {
  Skeleton s = CycleSkeleton(pendants.size(), k);
  for (std::size_t i = 0; i < pendants.size(); ++i) {
    for (std::size_t c = 0; c < pendants[i]; ++c) AttachPendant(s, s.labeling.cycle_vertices[i], k);
  }
  return Finish(std::move(s));
}

LabeledHypergraph XN(std::size_t n, std::size_t k) {
  if (k < 3 || n % (k - 1) != 0 || n / (k - 1) < 2) {
    throw BadParameter("X_n needs k >= 3 and n a multiple of k-1 with n/(k-1) >= 2");
  }
  return UnicyclicCm(k, {n / (k - 1) - 2, 0});
}

Hypergraph Hyperstar(std::size_t k, std::size_t s) {
  if (k < 2 || s < 1) throw BadParameter("hyperstar needs k >= 2 and s >= 1");
  std::vector<std::vector<Vertex>> edges;
  Vertex next = 1;
  for (std::size_t i = 0; i < s; ++i) {
    std::vector<Vertex> e{0};
    for (std::size_t j = 0; j + 1 < k; ++j) e.push_back(next++);
    edges.push_back(std::move(e));
  }
  return Hypergraph::Create(next, std::move(edges));
}

Edge PathP3::edge(std::size_t i) const {
  Edge e{joint(i - 1), joint(i)};
  for (std::size_t j = 1; j + 2 <= k; ++j) e.push_back(interior(i, j));
  std::sort(e.begin(), e.end());
  return e;
}

PathP3 MakePathP3(std::size_t k) {
  if (k < 3) throw BadParameter("P_3^k needs k >= 3");
  PathP3 p;
  p.k = k;
  std::vector<std::vector<Vertex>> edges;
  for (std::size_t i = 1; i <= 3; ++i) {
    const Edge e = p.edge(i);
    edges.emplace_back(e.begin(), e.end());
  }
  p.graph = Hypergraph::Create(3 * (k - 1) + 1, std::move(edges));
  return p;
}

LabeledHypergraph GStarStar(std::size_t k) {
  if (k < 3) throw BadParameter("G** needs k >= 3");
  Skeleton s = CycleSkeleton(2, k);
  AttachPendant(s, s.labeling.u(1, 1), k);
  return Finish(std::move(s));
}

Hypergraph FanoPlane() {
  return Hypergraph::Create(
      7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

Hypergraph RandomUniform(std::size_t n, std::size_t k, double p, std::mt19937_64& rng) {
  std::vector<std::vector<Vertex>> all;
  std::vector<Vertex> scratch;
  Subsets(n, k, scratch, 0, all);
  std::bernoulli_distribution keep(p);
  std::vector<std::vector<Vertex>> edges;
  for (auto& e : all) {
    if (keep(rng)) edges.push_back(std::move(e));
  }
  return Hypergraph::Create(n, std::move(edges));
}

std::optional<BibdCertificate> ValidateBibd(const Hypergraph& h, std::size_t k) {
  const std::size_t n = h.order();
  if (k < 2 || n <= k) throw BadParameter("a block design needs n > k >= 2");
  RequireUniform(h, k);
  if (h.size() == 0) return std::nullopt;
  // Pair coverage counted straight from the edge list.
  std::vector<std::size_t> covered(n * n, 0);
  for (const Edge& e : h.edges()) {
    for (std::size_t x = 0; x < e.size(); ++x) {
      for (std::size_t y = x + 1; y < e.size(); ++y) ++covered[e[x] * n + e[y]];
    }
  }
  const std::size_t beta = covered[1];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (covered[i * n + j] != beta) return std::nullopt;
    }
  }
  if (beta == 0) return std::nullopt;
  BibdCertificate cert;
  cert.n = n;
  cert.b = h.size();
  cert.k = k;
  cert.beta = beta;
  cert.r = cert.beta * (n - 1) / (k - 1);
  const bool integral = (cert.beta * (n - 1)) % (k - 1) == 0;
  if (!integral || cert.b * k != n * cert.r || !IsRegular(h, cert.r)) {
    throw HypergraphError(ErrorCode::kInconsistent,
                          "pair-balanced design with inconsistent replication number");
  }
  return cert;
}

FamilySpec ParseFamily(std::string_view text) {
  const std::size_t colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  std::size_t pos = colon == std::string_view::npos ? text.size() : colon + 1;
  FamilySpec spec;
  auto take = [&](std::size_t count) { return ExactList(text, pos, count); };

  if (name == "fano") {
    spec.kind = FamilyKind::kFano;
    spec.k = 3;
  } else if (colon == std::string_view::npos) {
    throw HypergraphError(ErrorCode::kParse, "unknown family '" + std::string(text) +
                                                 "'; expected name:parameters");
  } else if (name == "complete") {
    auto v = take(2);
    spec = {FamilyKind::kComplete, v[1], {v[0]}, std::nullopt};
  } else if (name == "edgeless") {
    auto v = take(1);
    spec = {FamilyKind::kEdgeless, 0, {v[0]}, std::nullopt};
  } else if (name == "cycle") {
    auto v = take(2);
    spec = {FamilyKind::kCycle, v[1], {v[0]}, std::nullopt};
  } else if (name == "cm") {
    const std::size_t k = ReadNumber(text, pos);
    Expect(text, pos, ':');
    spec = {FamilyKind::kUnicyclicCm, k, ReadList(text, pos), std::nullopt};
  } else if (name == "xn") {
    auto v = take(2);
    spec = {FamilyKind::kXN, v[1], {v[0]}, std::nullopt};
  } else if (name == "star") {
    auto v = take(2);
    spec = {FamilyKind::kHyperstar, v[0], {v[1]}, std::nullopt};
  } else if (name == "p3") {
    spec = {FamilyKind::kPathP3, take(1)[0], {}, std::nullopt};
  } else if (name == "gss") {
    spec = {FamilyKind::kGStarStar, take(1)[0], {}, std::nullopt};
  } else {
    throw HypergraphError(ErrorCode::kParse, "unknown family '" + std::string(name) +
                                                 "' at position 1");
  }
  if (pos != text.size()) {
    throw HypergraphError(ErrorCode::kParse, "unexpected text at position " +
                                                 std::to_string(pos + 1) + " in '" +
                                                 std::string(text) + "'");
  }
  return spec;
}

std::string ToString(const FamilySpec& spec) {
  const auto& p = spec.params;
  const std::string k = std::to_string(spec.k);
  switch (spec.kind) {
    case FamilyKind::kComplete:
      return "complete:" + std::to_string(p.at(0)) + "," + k;
    case FamilyKind::kEdgeless:
      return "edgeless:" + std::to_string(p.at(0));
    case FamilyKind::kCycle:
      return "cycle:" + std::to_string(p.at(0)) + "," + k;
    case FamilyKind::kUnicyclicCm:
      return "cm:" + k + ":" + JoinCounts(p);
    case FamilyKind::kXN:
      return "xn:" + std::to_string(p.at(0)) + "," + k;
    case FamilyKind::kHyperstar:
      return "star:" + k + "," + std::to_string(p.at(0));
    case FamilyKind::kPathP3:
      return "p3:" + k;
    case FamilyKind::kGStarStar:
      return "gss:" + k;
    case FamilyKind::kFano:
      return "fano";
    case FamilyKind::kExplicit:
      return "explicit";
  }
  return "unknown";
}

Hypergraph Build(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::kComplete:
      return CompleteUniform(p.at(0), spec.k);
    case FamilyKind::kEdgeless:
      return Edgeless(p.at(0));
    case FamilyKind::kCycle:
      return Cycle(p.at(0), spec.k).graph;
    case FamilyKind::kUnicyclicCm:
      return UnicyclicCm(spec.k, p).graph;
    case FamilyKind::kXN:
      return XN(p.at(0), spec.k).graph;
    case FamilyKind::kHyperstar:
      return Hyperstar(spec.k, p.at(0));
    case FamilyKind::kPathP3:
      return MakePathP3(spec.k).graph;
    case FamilyKind::kGStarStar:
      return GStarStar(spec.k).graph;
    case FamilyKind::kFano:
      return FanoPlane();
    case FamilyKind::kExplicit:
      if (!spec.explicit_graph) throw BadParameter("explicit family without a hypergraph");
      return *spec.explicit_graph;
  }
  throw BadParameter("unknown family kind");
}

std::string CmLabel(const std::vector<std::size_t>& pendants) {
  return "C" + std::to_string(pendants.size()) + "(" + JoinCounts(pendants) + ")";
}

std::vector<CatalogEntry> UnicyclicCatalog(std::size_t n_over, std::size_t k) {
  if (k < 2 || n_over < 2 || (k == 2 && n_over < 3)) {
    throw BadParameter("unicyclic catalog needs n/(k-1) >= 2 (>= 3 for graphs)");
  }
  std::vector<CatalogEntry> out;
  for (std::size_t m = (k == 2 ? 3 : 2); m <= n_over; ++m) {
    const std::size_t slots = m * (k - 1);
    const std::size_t free_edges = n_over - m;
    std::vector<std::size_t> occupancy(slots, 0);
    std::vector<std::vector<std::size_t>> shapes;
    Distributions(slots, free_edges, 0, occupancy, shapes);
    for (auto& pendants : shapes) out.push_back(BuildCatalogShape(m, k, pendants, std::nullopt));

    if (free_edges >= 2) {
      std::vector<std::vector<std::size_t>> bases;
      Distributions(slots, free_edges - 1, 0, occupancy, bases);
      for (auto& pendants : bases) {
        for (std::size_t parent = 0; parent + 1 < free_edges; ++parent) {
          out.push_back(BuildCatalogShape(m, k, pendants, parent));
        }
      }
    }
  }
  return out;
}

}  // namespace hyperee
