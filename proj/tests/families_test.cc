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
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "hyperee/spectral.h"
#include "test_support.h"

namespace hyperee {
namespace {

double Ee(const Hypergraph& h) { return EstradaIndex(ComputeSpectrum(h)); }

bool HasLabel(const std::vector<CatalogEntry>& catalog, const std::string& label) {
  return std::any_of(catalog.begin(), catalog.end(),
                     [&](const CatalogEntry& e) { return e.label == label; });
}

TEST(CompleteTest, Examples) {
  const Hypergraph k43 = CompleteUniform(4, 3);
  EXPECT_EQ(k43.size(), 4u);
  EXPECT_TRUE(IsRegular(k43, 3));
  EXPECT_EQ(CompleteUniform(3, 3).size(), 1u);
  EXPECT_EQ(Edgeless(5).size(), 0u);
  EXPECT_THROW(CompleteUniform(2, 3), HypergraphError);
  EXPECT_THROW(CompleteUniform(3, 1), HypergraphError);
}

TEST(CycleTest, Examples) {
  EXPECT_EQ(Cycle(2, 3).graph, Hypergraph::Create(4, {{0, 1, 2}, {0, 1, 3}}));
  const LabeledHypergraph c3 = Cycle(3, 3);
  EXPECT_EQ(c3.graph.order(), 6u);
  EXPECT_EQ(Degrees(c3.graph), (std::vector<std::size_t>{2, 2, 2, 1, 1, 1}));
  EXPECT_EQ(c3.labeling.CycleEdge(3), (Edge{0, 2, 5}));
  try {
    Cycle(2, 2);
    FAIL();
  } catch (const HypergraphError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDuplicateEdge);
  }
}

TEST(UnicyclicTest, Examples) {
  EXPECT_EQ(UnicyclicCm(3, {1, 0}).graph.order(), 6u);
  EXPECT_EQ(XN(6, 3).graph, UnicyclicCm(3, {1, 0}).graph);
  EXPECT_EQ(XN(12, 3).graph, UnicyclicCm(3, {4, 0}).graph);
  const LabeledHypergraph fig = UnicyclicCm(3, {2, 1, 0});
  EXPECT_EQ(fig.graph.order(), 12u);
  EXPECT_EQ(fig.labeling.pendant_edges.at(fig.labeling.v(1)).size(), 2u);
  EXPECT_EQ(fig.labeling.pendant_edges.at(fig.labeling.v(2)).size(), 1u);
  EXPECT_FALSE(fig.labeling.pendant_edges.count(fig.labeling.v(3)));
  EXPECT_THROW(XN(7, 3), HypergraphError);
  EXPECT_THROW(UnicyclicCm(3, {1}), HypergraphError);
}

TEST(UnicyclicTest, CountsAndConnectivity) {
  for (std::size_t k = 2; k <= 4; ++k) {
    for (const std::vector<std::size_t>& p : std::vector<std::vector<std::size_t>>{
             {0, 0, 0}, {2, 0, 1}, {1, 1, 1, 1}, {0, 3, 0, 0, 2}, {3, 0}, {1, 2}}) {
      if (k == 2 && p.size() == 2) continue;
      const Hypergraph h = UnicyclicCm(k, p).graph;
      const std::size_t edges = p.size() + std::accumulate(p.begin(), p.end(), std::size_t{0});
      EXPECT_EQ(h.order(), (k - 1) * edges);
      EXPECT_EQ(h.size(), edges);
      EXPECT_TRUE(IsConnected(h));
      EXPECT_TRUE(GetUniformity(h).IsUniform(k));
    }
  }
}

TEST(StarTest, Examples) {
  EXPECT_EQ(Hyperstar(3, 1), CompleteUniform(3, 3));
  const Hypergraph s = Hyperstar(3, 2);
  EXPECT_EQ(s.order(), 5u);
  EXPECT_EQ(Degrees(s)[0], 2u);
  EXPECT_EQ(Hyperstar(2, 3), Hypergraph::Create(4, {{0, 1}, {0, 2}, {0, 3}}));
}

TEST(PathTest, Examples) {
  const PathP3 p = MakePathP3(3);
  EXPECT_EQ(p.graph.order(), 7u);
  const auto d = Degrees(p.graph);
  for (Vertex v = 0; v < 7; ++v) EXPECT_EQ(d[v], (v == p.joint(1) || v == p.joint(2)) ? 2u : 1u);
  EXPECT_EQ(WalkDominance(p.graph, p.joint(3), p.interior(2, 1), 8), Dominance::kStrict);
  EXPECT_THROW(MakePathP3(2), HypergraphError);
}

TEST(GStarStarTest, Examples) {
  const LabeledHypergraph g = GStarStar(3);
  EXPECT_EQ(g.graph.order(), 6u);
  EXPECT_EQ(g.graph.size(), 3u);
  EXPECT_EQ(Degrees(g.graph)[g.labeling.u(1, 1)], 2u);
  EXPECT_LT(Ee(Cycle(3, 3).graph), Ee(g.graph));
  EXPECT_LT(Ee(g.graph), Ee(UnicyclicCm(3, {1, 0}).graph));
}

TEST(BibdTest, Examples) {
  EXPECT_EQ(ValidateBibd(FanoPlane(), 3), (BibdCertificate{7, 7, 3, 1, 3}));
  EXPECT_EQ(ValidateBibd(CompleteUniform(5, 3), 3), (BibdCertificate{5, 10, 3, 3, 6}));
  EXPECT_FALSE(ValidateBibd(Cycle(2, 3).graph, 3).has_value());
  EXPECT_FALSE(ValidateBibd(Edgeless(5), 3).has_value());
  EXPECT_THROW(ValidateBibd(CompleteUniform(3, 3), 3), HypergraphError);
}

TEST(BibdTest, MatchesAdjacencyPattern) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const std::size_t k = 2 + rng() % 2;
    const std::size_t n = k + 1 + rng() % 3;
    const Hypergraph h = RandomUniform(n, k, 0.6, rng);
    const SymmetricMatrix a = Adjacency(h);
    bool pattern = a(0, 1) >= 1.0;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) pattern = pattern && (x == y || a(x, y) == a(0, 1));
    }
    const auto cert = ValidateBibd(h, k);
    EXPECT_EQ(cert.has_value(), pattern);
    if (cert) EXPECT_TRUE(IsRegular(h, cert->beta * (n - 1) / (k - 1)));
  }
}

TEST(FamilyGrammarTest, ParsesEveryFamily) {
  EXPECT_EQ(Build(ParseFamily("cm:3:4,0")), XN(12, 3).graph);
  EXPECT_EQ(Build(ParseFamily("complete:4,3")), CompleteUniform(4, 3));
  EXPECT_EQ(Build(ParseFamily("edgeless:5")), Edgeless(5));
  EXPECT_EQ(Build(ParseFamily("cycle:3,3")), Cycle(3, 3).graph);
  EXPECT_EQ(Build(ParseFamily("xn:12,3")), XN(12, 3).graph);
  EXPECT_EQ(Build(ParseFamily("star:3,2")), Hyperstar(3, 2));
  EXPECT_EQ(Build(ParseFamily("p3:3")), MakePathP3(3).graph);
  EXPECT_EQ(Build(ParseFamily("gss:3")), GStarStar(3).graph);
  EXPECT_EQ(Build(ParseFamily("fano")), FanoPlane());
  for (const char* text : {"cm:3:4,0", "complete:4,3", "edgeless:5", "cycle:3,3", "xn:12,3",
                           "star:3,2", "p3:3", "gss:3", "fano"}) {
    EXPECT_EQ(ToString(ParseFamily(text)), text);
  }
}

TEST(FamilyGrammarTest, ErrorsReportPosition) {
  for (const char* text : {"cm:3:4,x", "cycle:3", "bogus:1", "complete:4,3,1", "cm:3:", ""}) {
    try {
      ParseFamily(text);
      ADD_FAILURE() << text;
    } catch (const HypergraphError& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParse) << text;
    }
  }
  try {
    ParseFamily("cm:3:4,x");
  } catch (const HypergraphError& e) {
    EXPECT_NE(std::string(e.what()).find("position 8"), std::string::npos) << e.what();
  }
  EXPECT_THROW(Build(ParseFamily("cycle:2,2")), HypergraphError);
}

TEST(CatalogTest, SmallOrders) {
  const auto two = UnicyclicCatalog(2, 3);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0].graph, Cycle(2, 3).graph);

  const auto three = UnicyclicCatalog(3, 3);
  EXPECT_TRUE(HasLabel(three, "C2(1,0)"));
  EXPECT_TRUE(HasLabel(three, "C3(0,0,0)"));
  const double gss = Ee(GStarStar(3).graph);
  EXPECT_TRUE(std::any_of(three.begin(), three.end(), [&](const CatalogEntry& e) {
    return std::abs(Ee(e.graph) - gss) < 1e-9;
  }));

  const auto four = UnicyclicCatalog(4, 3);
  for (const char* label : {"C2(2,0)", "C2(1,1)", "C4(0,0,0,0)", "C3(1,0,0)"}) {
    EXPECT_TRUE(HasLabel(four, label)) << label;
  }
  EXPECT_TRUE(std::any_of(four.begin(), four.end(), [](const CatalogEntry& e) {
    return e.deep_parent.has_value();
  }));
}

TEST(CatalogTest, EveryEntryIsUnicyclicOfTheRightOrder) {
  for (std::size_t k = 2; k <= 4; ++k) {
    for (std::size_t over = 3; over <= 6; ++over) {
      for (const auto& e : UnicyclicCatalog(over, k)) {
        EXPECT_EQ(e.graph.order(), over * (k - 1)) << e.label;
        EXPECT_EQ(e.graph.size(), over) << e.label;
        EXPECT_TRUE(IsConnected(e.graph)) << e.label;
      }
      if (k >= 3 && over >= 4) {
        const auto catalog = UnicyclicCatalog(over, k);
        EXPECT_TRUE(HasLabel(catalog, CmLabel({over - 2, 0})));
        EXPECT_TRUE(HasLabel(catalog, CmLabel({over - 3, 1})));
      }
    }
  }
}

TEST(FamilyPropertyTest, GeneratorsAreConnected) {
  for (const auto& f : testing::Fixtures()) {
    if (f.label.rfind("edgeless", 0) == 0 || f.label.find("disjoint") != std::string::npos ||
        f.label.find("isolated") != std::string::npos) {
      continue;
    }
    EXPECT_TRUE(IsConnected(f.graph)) << f.label;
  }
}

}  // namespace
}  // namespace hyperee
