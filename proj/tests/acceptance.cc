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
// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hyperee/families.h"
#include "hyperee/spectral.h"
#include "hyperee/theorems.h"
#include "test_support.h"

namespace hyperee {
namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void Fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::vector<testing::Fixture> UniformFixtures() {
  std::vector<testing::Fixture> out;
  for (auto& f : testing::Fixtures()) {
    if (GetUniformity(f.graph).IsUniform(f.k) && f.k <= f.graph.order()) out.push_back(f);
  }
  return out;
}

Outcome EigensolverSoundness() {
  Outcome o;
  std::mt19937_64 rng(0);
  std::vector<SymmetricMatrix> cases;
  for (int i = 0; i < 200; ++i) {
    cases.push_back(testing::RandomIntegerMatrix(1 + rng() % 20, 3, rng));
  }
  for (const auto& f : testing::Fixtures()) cases.push_back(Adjacency(f.graph));
  double worst = 0.0;
  for (const auto& m : cases) {
    const Eigendecomposition d = Eigendecompose(m);
    const double fro = m.FrobeniusNorm();
    const double scale = std::max(1.0, fro);
    const double residual = ReconstructionResidual(m, d);
    worst = std::max(worst, residual / scale);
    if (residual > 1e-10 * scale) o.Fail("residual " + std::to_string(residual));
    const double trace = SpectralMoment(d.spectrum, 1);
    if (std::abs(trace - m.Trace()) > 1e-8 * std::max(1.0, std::abs(m.Trace()))) o.Fail("trace identity");
    const double sq = SpectralMoment(d.spectrum, 2);
    if (std::abs(sq - fro * fro) > 1e-8 * std::max(1.0, fro * fro)) o.Fail("Frobenius identity");
    const auto oracle = testing::EigenSpectrum(m);
    for (std::size_t i = 0; i < oracle.size(); ++i) {
      if (std::abs(oracle[i] - d.spectrum.eigenvalues[i]) > 1e-9 * scale) o.Fail("disagrees with Eigen");
    }
  }
  if (o.ok) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%zu matrices, worst relative residual %.2e", cases.size(), worst);
    o.detail = buf;
  }
  return o;
}

Outcome WalkOracle() {
  Outcome o;
  std::size_t graphs = 0, checks = 0;
  for (const auto& f : testing::Fixtures()) {
    if (f.graph.order() > 8) continue;
    ++graphs;
    for (std::size_t s = 0; s <= 4; ++s) {
      for (Vertex u = 0; u < f.graph.order(); ++u) {
        for (Vertex v = 0; v < f.graph.order(); ++v) {
          ++checks;
          if (WalkCount(f.graph, u, v, s) != static_cast<WideInt>(testing::DfsWalkCount(f.graph, u, v, s))) {
            o.Fail(f.label + " differs at s=" + std::to_string(s));
          }
        }
      }
    }
  }
  if (o.ok) o.detail = std::to_string(graphs) + " hypergraphs, " + std::to_string(checks) + " counts";
  return o;
}

Outcome BoundSuite() {
  Outcome o;
  BoundSweepResult result = RunRandomBoundSweep(1000, 0);
  for (const auto& f : UniformFixtures()) SweepOne(f.graph, f.k, f.label, result);
  if (!result.failures.empty()) o.Fail(result.failures.front());
  if (result.edgeless_instances == 0) o.Fail("no edgeless instance exercised the equality cases");
  if (o.ok) {
    o.detail = std::to_string(result.instances) + " hypergraphs (" +
               std::to_string(result.edgeless_instances) + " edgeless), " +
               std::to_string(result.reports) + " reports";
  }
  return o;
}

Outcome TwoEigenvalue() {
  Outcome o;
  const Hypergraph all = CompleteUniform(5, 3);
  std::size_t designs = 0;
  for (unsigned mask = 0; mask < (1u << 10); ++mask) {
    std::vector<std::vector<Vertex>> edges;
    for (std::size_t i = 0; i < 10; ++i) {
      if (mask & (1u << i)) edges.push_back(all.edge(i));
    }
    try {
      const auto r = ClassifyTwoEigenvalue(Hypergraph::Create(5, edges), 3);
      if (r.two_distinct != r.bibd.has_value() || r.bibd.has_value() != r.beta_from_matrix.has_value() ||
          !r.consistent) {
        o.Fail("characterizations disagree on subset " + std::to_string(mask));
      }
      designs += r.bibd ? 1 : 0;
    } catch (const HypergraphError& e) {
      o.Fail("subset " + std::to_string(mask) + ": " + e.what());
    }
  }
  auto certify = [&](const std::string& label, const Hypergraph& h, std::size_t k,
                     std::size_t want_beta) {
    const auto r = ClassifyTwoEigenvalue(h, k);
    if (!r.beta() || *r.beta() != want_beta) return o.Fail(label + " has no certificate with beta " + std::to_string(want_beta));
    const std::size_t n = h.order();
    if (r.bibd->r * (k - 1) != want_beta * (n - 1) || !IsRegular(h, r.bibd->r)) {
      o.Fail(label + " degree differs from beta(n-1)/(k-1)");
    }
  };
  certify("fano", FanoPlane(), 3, 1);
  std::size_t complete = 0;
  for (std::size_t n = 3; n <= 6; ++n) {
    for (std::size_t k = 2; k < n; ++k) {
      // Each pair lies in C(n-2, k-2) of the k-subsets.
      std::size_t beta = 1;
      for (std::size_t i = 1; i <= k - 2; ++i) beta = beta * (n - 2 - (k - 2) + i) / i;
      certify("complete:" + std::to_string(n) + "," + std::to_string(k), CompleteUniform(n, k), k, beta);
      ++complete;
    }
  }
  if (o.ok) {
    o.detail = "1024 subsets on 5 points (" + std::to_string(designs) + " designs), fano, " +
               std::to_string(complete) + " complete hypergraphs";
  }
  return o;
}

Outcome Orderings() {
  Outcome o;
  std::string counts;
  for (std::size_t k : {3, 4}) {
    std::size_t total = 0;
    for (const auto& r : VerifyOrderingLemmas(k, 16)) {
      total += r.instances.size();
      for (const auto& i : r.instances) {
        if (!i.strict_holds) o.Fail(r.lemma_id + ": " + i.left + " vs " + i.right);
      }
      counts += (counts.empty() ? "" : ", ") + r.lemma_id + "@k" + std::to_string(k) + "=" +
                std::to_string(r.instances.size());
    }
    if (total == 0) o.Fail("no instances for k=" + std::to_string(k));
  }
  if (o.ok) o.detail = counts;
  return o;
}

Outcome Extremal() {
  Outcome o;
  std::string summary;
  for (auto [k, over] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 3}, {3, 4}, {3, 5}, {3, 6}, {4, 3}, {4, 4}}) {
    const ExtremalReport r = VerifyExtremal(over, k);
    const std::string tag = "k=" + std::to_string(k) + " n/(k-1)=" + std::to_string(over);
    if (!r.passed) o.Fail(tag + ": " + (r.failures.empty() ? "failed" : r.failures.front()));
    if (r.scope_note.empty()) o.Fail(tag + ": missing scope statement");
    summary += (summary.empty() ? "" : "; ") + tag + " max " + r.ranking[0].label + " second " +
               r.ranking[1].label;
  }
  if (o.ok) o.detail = summary;
  return o;
}

Outcome NordhausGaddum() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& f : UniformFixtures()) {
    if (!CheckNordhausGaddum(f.graph, f.k).holds) o.Fail(f.label);
    ++checked;
  }
  std::mt19937_64 rng(0);
  for (int i = 0; i < 200; ++i) {
    const std::size_t k = 2 + rng() % 3;
    const std::size_t n = k + rng() % (13 - k);
    std::uniform_real_distribution<double> p(0.0, 1.0);
    const Hypergraph h = RandomUniform(n, k, p(rng), rng);
    if (!CheckNordhausGaddum(h, k).holds) o.Fail("random instance " + std::to_string(i));
    ++checked;
  }
  const BoundReport c = CheckNordhausGaddum(Cycle(2, 3).graph, 3);
  if (std::abs(c.lhs - 53.72) > 0.005 || std::abs(c.rhs - 12.603) > 0.005) {
    o.Fail("two-cycle pair gives " + std::to_string(c.lhs) + " vs " + std::to_string(c.rhs));
  }
  if (o.ok) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%zu instances; two-cycle lhs %.4g rhs %.5g", checked, c.lhs, c.rhs);
    o.detail = buf;
  }
  return o;
}

Outcome Pinned() {
  Outcome o;
  // Each pinned value is first recomputed by an independent oracle.
  const Hypergraph edge = CompleteUniform(3, 3);
  const Hypergraph k43 = CompleteUniform(4, 3);
  const Hypergraph c23 = Cycle(2, 3).graph;
  const double ee_edge = EstradaIndex(ComputeSpectrum(edge));
  const double ee_k43 = EstradaIndex(ComputeSpectrum(k43));
  if (std::abs(testing::SeriesEstrada(edge, 45) - ee_edge) > 1e-9) o.Fail("series oracle, single edge");
  if (std::abs(testing::SeriesEstrada(k43, 45) - ee_k43) > 1e-9 * ee_k43) o.Fail("series oracle, K_4^3");
  if (std::abs(ee_edge - 8.124815) > 1e-5) o.Fail("EE(single edge) = " + std::to_string(ee_edge));
  if (std::abs(ee_k43 - 403.8348) > 1e-3) o.Fail("EE(K_4^3) = " + std::to_string(ee_k43));

  const Spectrum s = ComputeSpectrum(c23);
  const std::vector<double> want = {1 + std::sqrt(5.0), 0.0, 1 - std::sqrt(5.0), -2.0};
  const auto poly = testing::CharacteristicPolynomial(c23);
  const auto eigen = testing::EigenSpectrum(Adjacency(c23));
  for (std::size_t i = 0; i < 4; ++i) {
    if (std::abs(testing::EvaluatePolynomial(poly, want[i])) > 1e-9) o.Fail("characteristic polynomial root");
    if (std::abs(eigen[i] - want[i]) > 1e-9) o.Fail("Eigen oracle spectrum");
    if (std::abs(s.eigenvalues[i] - want[i]) > 1e-9) o.Fail("two-cycle spectrum entry " + std::to_string(i));
  }
  const double m2 = SpectralMoment(s, 2);
  if (TracePower(c23, 2) != 16 || std::abs(m2 - 16.0) > 1e-8 * 16.0) o.Fail("second moment");
  if (o.ok) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "EE(edge) %.7f, EE(K_4^3) %.4f, sum of squares %.10g", ee_edge,
                  ee_k43, m2);
    o.detail = buf;
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace hyperee

int main() {
  using namespace hyperee;
  const std::vector<Criterion> criteria = {
      {1, "eigensolver soundness", 10, EigensolverSoundness},
      {2, "walk counts match exhaustive enumeration", 30, WalkOracle},
      {3, "bound suite holds, equality only when edgeless", 120, BoundSuite},
      {4, "two-eigenvalue characterization", 60, TwoEigenvalue},
      {5, "ordering instances strict", 120, Orderings},
      {6, "extremal ranking", 300, Extremal},
      {7, "complement-sum lower bound", 30, NordhausGaddum},
      {8, "pinned numeric values", 10, Pinned},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.Fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_seconds) o.Fail("took longer than " + std::to_string(c.limit_seconds) + " s");
    std::printf("criterion %d: %s - %s [%.2fs] %s\n", c.id, o.ok ? "PASS" : "FAIL", c.name, seconds,
                o.detail.c_str());
    failures += o.ok ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
