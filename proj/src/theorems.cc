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

#include "hyperee/theorems.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hyperee/hypergraph_io.h"

namespace hyperee {
namespace {

double SafeExp(double x) {
  return x > kMaxExponent ? std::numeric_limits<double>::infinity() : std::exp(x);
}

double Binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0.0;
  double out = 1.0;
  for (std::size_t i = 1; i <= r; ++i) out = out * static_cast<double>(n - r + i) / i;
  return std::round(out);
}

double Ee(const Hypergraph& h) { return EstradaIndex(ComputeSpectrum(h)); }

bool RelativelyEqual(double x, double y) {
  return std::abs(x - y) <= kBoundTolerance * std::max({1.0, std::abs(x), std::abs(y)});
}

// sqrt((k-1) m (m(k-2) + 2)): the square root of the largest possible second
// spectral moment of a k-uniform hypergraph with m edges.
double Moment2Root(std::size_t k, std::size_t m) {
  const double km1 = static_cast<double>(k - 1);
  const double md = static_cast<double>(m);
  return std::sqrt(km1 * md * (md * static_cast<double>(k - 2) + 2.0));
}

double SumCore(std::size_t theta, std::size_t t) {
  const double th = static_cast<double>(theta);
  const double td = static_cast<double>(t);
  return th + std::sqrt(th * (td * th + td - 1.0));
}

double SumLargest(const Spectrum& s, std::size_t t) {
  return std::accumulate(s.eigenvalues.begin(), s.eigenvalues.begin() + static_cast<std::ptrdiff_t>(t),
                         0.0);
}

void RequireT(std::size_t n, std::size_t t) {
  if (t < 2 || t > n) {
    throw HypergraphError(ErrorCode::kInvalidArgument,
                          "t must lie in [2, n]; got t = " + std::to_string(t) +
                              ", n = " + std::to_string(n));
  }
}

BoundInputs UniformInputs(const Hypergraph& h, std::size_t k) {
  return {h.order(), h.size(), k, std::nullopt};
}

// Everything the edge/energy bounds share, computed once per hypergraph.
struct Evaluated {
  Spectrum spectrum;
  double ee = 0.0;
  double energy = 0.0;
};

Evaluated Evaluate(const Hypergraph& h) {
  Evaluated out;
  out.spectrum = ComputeSpectrum(h);
  out.ee = EstradaIndex(out.spectrum);
  out.energy = Energy(out.spectrum);
  return out;
}

BoundReport SumTLargestMatrix(const SymmetricMatrix& m, const Spectrum& s, std::size_t t,
                              SumBoundVariant variant) {
  const std::size_t n = m.order();
  RequireT(n, t);
  const std::size_t theta = NegativeCount(s);
  const double a = m.MinEntry();
  const double b = m.MaxEntry();
  const double nd = static_cast<double>(n);
  const double core = SumCore(theta, t);
  const double as_written = nd * (b - a) * core / (2.0 * theta + 1.0) + std::max(0.0, a * nd);
  const double plus_one = nd * (b - a) * core / (2.0 * (theta + 1.0)) + std::max(0.0, a * nd);
  const bool classic = variant == SumBoundVariant::kThetaPlusOne;
  const double rhs = classic ? plus_one : as_written;
  const double lhs = SumLargest(s, t);

  BoundReport r = MakeBoundReport(
      classic ? bound_id::kSumTLargestMatrixThetaPlusOne : bound_id::kSumTLargestMatrix,
      BoundDirection::kUpper, lhs, rhs, {n, std::nullopt, std::nullopt, t});
  r.details = {{"theta", static_cast<double>(theta)},
               {"a", a},
               {"b", b},
               {"tau_lhs", nd > 0 ? lhs / nd : 0.0},
               {"tau_rhs", nd > 0 ? rhs / nd : 0.0},
               {"rhs_as_written", as_written},
               {"rhs_theta_plus_one", plus_one}};
  r.note = classic ? "denominator 2(theta+1); never looser than 2theta+1"
                   : "denominator 2theta+1; the 2(theta+1) form is the tighter of the two";
  return r;
}

BoundReport SumTLargestUniform(const Hypergraph& h, std::size_t k, const Spectrum& s,
                               std::size_t t) {
  const std::size_t n = h.order();
  RequireT(n, t);
  const std::size_t theta = NegativeCount(s);
  const double pair_bound = Binomial(n - 2, k - 2);
  const double rhs =
      static_cast<double>(n) * pair_bound * SumCore(theta, t) / (2.0 * theta + 1.0);
  BoundInputs in = UniformInputs(h, k);
  in.t = t;
  BoundReport r = MakeBoundReport(bound_id::kSumTLargestUniform, BoundDirection::kUpper,
                                  SumLargest(s, t), rhs, in);
  r.details = {{"theta", static_cast<double>(theta)}, {"pair_bound", pair_bound}};
  return r;
}

std::vector<BoundReport> Moment2(const Hypergraph& h, std::size_t k, const Spectrum& s) {
  const double sum_sq = SpectralMoment(s, 2);
  const double m = static_cast<double>(h.size());
  const double kd = static_cast<double>(k);
  const double lower = kd * (kd - 1.0) * m;
  const double upper = (kd - 1.0) * m * (m * (kd - 2.0) + 2.0);
  return {MakeBoundReport(bound_id::kMoment2Lower, BoundDirection::kLower, sum_sq, lower,
                          UniformInputs(h, k)),
          MakeBoundReport(bound_id::kMoment2Upper, BoundDirection::kUpper, sum_sq, upper,
                          UniformInputs(h, k))};
}

BoundReport EeLowerSpectral(const Hypergraph& h, const Evaluated& ev) {
  const double l1 = ev.spectrum.lambda1();
  const double rhs = SafeExp(l1) + static_cast<double>(h.order()) - 1.0 - l1;
  BoundReport r = MakeBoundReport(bound_id::kEeLowerSpectral, BoundDirection::kLower, ev.ee, rhs,
                                  {h.order(), h.size(), std::nullopt, std::nullopt});
  r.details = {{"lambda1", l1}};
  return r;
}

BoundReport EeLowerEdges(const Hypergraph& h, std::size_t k, const Evaluated& ev) {
  const double n = static_cast<double>(h.order());
  const double kd = static_cast<double>(k);
  const double m = static_cast<double>(h.size());
  const double rhs = std::sqrt(n * n + 4.0 * kd * (kd - 1.0) * m / 2.0);
  return MakeBoundReport(bound_id::kEeLowerEdges, BoundDirection::kLower, ev.ee, rhs,
                         UniformInputs(h, k));
}

BoundReport EeUpperEdges(const Hypergraph& h, std::size_t k, const Evaluated& ev) {
  const double q = Moment2Root(k, h.size());
  const double rhs = static_cast<double>(h.order()) - 1.0 + SafeExp(q);
  BoundReport r = MakeBoundReport(bound_id::kEeUpperEdges, BoundDirection::kUpper, ev.ee, rhs,
                                  UniformInputs(h, k));
  r.details = {{"moment2_root", q}};
  return r;
}

std::vector<BoundReport> EeUpperEnergy(const Hypergraph& h, std::size_t k, const Evaluated& ev) {
  const double n = static_cast<double>(h.order());
  const double q = Moment2Root(k, h.size());
  BoundReport with_q = MakeBoundReport(bound_id::kEeUpperEnergy, BoundDirection::kUpper, ev.ee,
                                       n + ev.energy - 1.0 - q + SafeExp(q), UniformInputs(h, k));
  with_q.details = {{"energy", ev.energy}, {"moment2_root", q}};
  BoundReport exp_energy =
      MakeBoundReport(bound_id::kEeUpperEnergyExp, BoundDirection::kUpper, ev.ee,
                      n - 1.0 + SafeExp(ev.energy), UniformInputs(h, k));
  exp_energy.details = {{"energy", ev.energy}};
  return {with_q, exp_energy};
}

BoundReport NordhausGaddum(const Hypergraph& h, std::size_t k, const Evaluated& ev) {
  const Spectrum complement = ComputeSpectrum(ComplementUniform(h, k));
  const bool overflow = complement.lambda1() > kMaxExponent;
  const double ee_complement =
      overflow ? std::numeric_limits<double>::infinity() : EstradaIndex(complement);
  const double n = static_cast<double>(h.order());
  const double rhs = 2.0 * SafeExp((n - 1.0) / 2.0) + 2.0 * (n - 1.0) * std::exp(-0.5);
  BoundReport r = MakeBoundReport(bound_id::kEeNordhausGaddum, BoundDirection::kLower,
                                  ev.ee + ee_complement, rhs, UniformInputs(h, k));
  r.details = {{"ee", ev.ee},
               {"ee_complement", ee_complement},
               {"lambda1", ev.spectrum.lambda1()},
               {"lambda1_complement", complement.lambda1()}};
  r.note = overflow ? "complement Estrada index exceeds double range"
                     : "equality status reported only";
  return r;
}

std::optional<BoundReport> EeMonotone(const Hypergraph& h, std::size_t k, const Evaluated& ev) {
  if (k < 2 || k > h.order()) return std::nullopt;
  const Hypergraph absent = ComplementUniform(h, k);
  if (absent.size() == 0) return std::nullopt;
  double smallest = std::numeric_limits<double>::infinity();
  for (const Edge& e : absent.edges()) smallest = std::min(smallest, Ee(AddEdge(h, e)));
  BoundReport r = MakeBoundReport(bound_id::kEeMonotoneAddEdge, BoundDirection::kUpper, ev.ee,
                                  smallest, UniformInputs(h, k), /*strict=*/true);
  r.details = {{"candidates", static_cast<double>(absent.size())}};
  return r;
}

std::optional<std::size_t> BetaFromMatrix(const Hypergraph& h) {
  const SymmetricMatrix a = Adjacency(h);
  const std::size_t n = a.order();
  if (n < 2 || a(0, 1) < 1.0) return std::nullopt;
  const double beta = a(0, 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j) != (i == j ? 0.0 : beta)) return std::nullopt;
    }
  }
  return static_cast<std::size_t>(beta);
}

OrderingInstance Compare(std::string left, double ee_left, std::string right, double ee_right) {
  OrderingInstance out;
  out.left = std::move(left);
  out.right = std::move(right);
  out.ee_left = ee_left;
  out.ee_right = ee_right;
  out.gap = ee_right - ee_left;
  out.strict_holds = ee_left < ee_right;
  return out;
}

OrderingInstance Compare(std::string left, const Hypergraph& l, std::string right,
                         const Hypergraph& r) {
  return Compare(std::move(left), Ee(l), std::move(right), Ee(r));
}

// Marks an instance as failed when a second construction route disagrees.
void CrossCheck(OrderingInstance& instance, double expected_right) {
  if (!RelativelyEqual(instance.ee_right, expected_right)) {
    instance.strict_holds = false;
    instance.right += " [construction mismatch]";
  }
}

// Compositions of `total` into `parts` non-negative parts, lexicographic.
void Compositions(std::size_t total, std::size_t parts, std::vector<std::size_t>& current,
                  std::vector<std::vector<std::size_t>>& out) {
  if (current.size() + 1 == parts) {
    current.push_back(total);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (std::size_t first = 0; first <= total; ++first) {
    current.push_back(first);
    Compositions(total - first, parts, current, out);
    current.pop_back();
  }
}

OrderingReport PendantShift(std::size_t k, std::size_t max_over) {
  OrderingReport report{ordering_id::kC2PendantShift,
                        "EE(C2(n1,n2)) < EE(C2(n1+1,n2-1)) for n1 >= n2 >= 1",
                        {}};
  for (std::size_t n2 = 1; 2 + 2 * n2 <= max_over; ++n2) {
    for (std::size_t n1 = n2; 2 + n1 + n2 <= max_over; ++n1) {
      const LabeledHypergraph left = UnicyclicCm(k, {n1, n2});
      // Move one pendant edge from v2 to v1.
      const Edge moved = left.labeling.pendant_edges.at(left.labeling.v(2)).front();
      const std::vector<Vertex> base(moved.begin() + 1, moved.end());
      const Hypergraph swapped =
          EdgeSwap(left.graph, {base}, left.labeling.v(2), left.labeling.v(1));
      OrderingInstance instance = Compare(CmLabel({n1, n2}), left.graph,
                                          CmLabel({n1 + 1, n2 - 1}), swapped);
      CrossCheck(instance, Ee(UnicyclicCm(k, {n1 + 1, n2 - 1}).graph));
      report.instances.push_back(std::move(instance));
    }
  }
  return report;
}

OrderingReport Consolidation(std::size_t k, std::size_t max_over) {
  OrderingReport report{
      ordering_id::kC3Consolidation,
      "EE(C3(n1,n2,n3)) < EE(C3(n1+n2,n3,0)) < EE(C3(n1+n2+n3,0,0)) for n1 >= n2 >= n3 >= 1",
      {}};
  for (std::size_t n3 = 1; 3 + 3 * n3 <= max_over; ++n3) {
    for (std::size_t n2 = n3; 3 + 2 * n2 + n3 <= max_over; ++n2) {
      for (std::size_t n1 = n2; 3 + n1 + n2 + n3 <= max_over; ++n1) {
        const std::vector<std::size_t> a{n1, n2, n3};
        const std::vector<std::size_t> b{n1 + n2, n3, 0};
        const std::vector<std::size_t> c{n1 + n2 + n3, 0, 0};
        const double ee_a = Ee(UnicyclicCm(k, a).graph);
        const double ee_b = Ee(UnicyclicCm(k, b).graph);
        const double ee_c = Ee(UnicyclicCm(k, c).graph);
        report.instances.push_back(Compare(CmLabel(a), ee_a, CmLabel(b), ee_b));
        report.instances.push_back(Compare(CmLabel(b), ee_b, CmLabel(c), ee_c));
      }
    }
  }
  return report;
}

OrderingReport C3ToC2(std::size_t k, std::size_t max_over) {
  OrderingReport report{ordering_id::kC3ToC2,
                        "EE(C3(N-3,0,0)) < EE(C2(N-3,1)) with N = n/(k-1)", {}};
  for (std::size_t over = 3; over <= max_over; ++over) {
    const std::vector<std::size_t> left{over - 3, 0, 0};
    const std::vector<std::size_t> right{over - 3, 1};
    report.instances.push_back(Compare(CmLabel(left), UnicyclicCm(k, left).graph,
                                       CmLabel(right), UnicyclicCm(k, right).graph));
  }
  return report;
}

OrderingReport CycleShortening(std::size_t k, std::size_t max_over) {
  OrderingReport report{
      ordering_id::kCycleShortening,
      "for m >= 4 with n3 maximal: shrink v1 out of e_m, then re-extend e_m - v1 by v3; "
      "EE strictly increases",
      {}};
  for (std::size_t m = 4; m <= max_over; ++m) {
    std::vector<std::size_t> scratch;
    // Every total up to the budget, not only the largest.
    for (std::size_t total = 0; m + total <= max_over; ++total) {
      std::vector<std::vector<std::size_t>> shapes;
      Compositions(total, m, scratch, shapes);
      for (const auto& pendants : shapes) {
        if (pendants[2] != *std::max_element(pendants.begin(), pendants.end())) continue;
        const LabeledHypergraph g1 = UnicyclicCm(k, pendants);
        const FamilyLabeling& lab = g1.labeling;
        const Edge em = lab.CycleEdge(m);
        const Vertex v1 = lab.v(1);
        const Vertex v3 = lab.v(3);
        std::vector<Vertex> e0;
        std::copy_if(em.begin(), em.end(), std::back_inserter(e0),
                     [v1](Vertex x) { return x != v1; });

        const Hypergraph g2 = Shrink(g1.graph, v1, *g1.graph.IndexOf(em));
        std::vector<Vertex> extended = e0;
        extended.push_back(v3);
        const Hypergraph via_shrink = AddEdge(RemoveEdge(g2, e0), extended);
        const Hypergraph via_swap = EdgeSwap(g1.graph, {e0}, v1, v3);

        OrderingInstance instance =
            Compare(CmLabel(pendants), g1.graph, "shortened " + CmLabel(pendants), via_shrink);
        if (!(via_shrink == via_swap)) {
          instance.strict_holds = false;
          instance.right += " [shrink and swap routes differ]";
        }
        report.instances.push_back(std::move(instance));
      }
    }
  }
  return report;
}

OrderingReport C3kBelowGss(std::size_t k, std::size_t budget) {
  OrderingReport report{ordering_id::kC3kBelowGss,
                        "EE(C_{3,k}) < EE(G**), directly and via the P3 edge move", {}};
  if (3 * (k - 1) <= budget) {
    report.instances.push_back(Compare("C3(0,0,0)", Cycle(3, k).graph, "G**", GStarStar(k).graph));
  }
  if (3 * (k - 1) + 1 <= budget) {
    // P3 - e1 + (e0 + u3) is C_{3,k} plus the isolated u0; moving the edge
    // from u3 to u_{2,1} gives G** plus u0.
    const PathP3 p = MakePathP3(k);
    const Edge e1 = p.edge(1);
    std::vector<Vertex> e0;
    std::copy_if(e1.begin(), e1.end(), std::back_inserter(e0),
                 [&](Vertex x) { return x != p.joint(0); });
    std::vector<Vertex> closed = e0;
    closed.push_back(p.joint(3));
    const Hypergraph base = AddEdge(RemoveEdge(p.graph, e1), closed);
    const Hypergraph moved = EdgeSwap(base, {e0}, p.joint(3), p.interior(2, 1));
    OrderingInstance instance =
        Compare("P3-e1+(e0+u3)", base, "P3-e1+(e0+u21)", moved);
    CrossCheck(instance, Ee(GStarStar(k).graph) + 1.0);
    if (!RelativelyEqual(instance.ee_left, Ee(Cycle(3, k).graph) + 1.0)) {
      instance.strict_holds = false;
      instance.left += " [construction mismatch]";
    }
    report.instances.push_back(std::move(instance));
  }
  return report;
}

std::vector<std::pair<std::string, Hypergraph>> MonotoneFixtures(std::size_t k,
                                                                 std::size_t budget) {
  std::vector<std::pair<std::string, Hypergraph>> out;
  const std::size_t max_over = budget / (k - 1);
  if (k + 1 <= budget) out.emplace_back("edgeless:" + std::to_string(k + 1), Edgeless(k + 1));
  for (std::size_t m = 2; m <= max_over; ++m) {
    out.emplace_back("cycle:" + std::to_string(m) + "," + std::to_string(k), Cycle(m, k).graph);
  }
  for (std::size_t over = 3; over <= max_over; ++over) {
    out.emplace_back(CmLabel({over - 2, 0}), UnicyclicCm(k, {over - 2, 0}).graph);
    if (over >= 4) out.emplace_back(CmLabel({over - 3, 1}), UnicyclicCm(k, {over - 3, 1}).graph);
  }
  if (3 * (k - 1) <= budget) out.emplace_back("gss:" + std::to_string(k), GStarStar(k).graph);
  if (3 * (k - 1) + 1 <= budget) out.emplace_back("p3:" + std::to_string(k), MakePathP3(k).graph);
  for (std::size_t s = 1; 1 + s * (k - 1) <= budget; ++s) {
    out.emplace_back("star:" + std::to_string(k) + "," + std::to_string(s), Hyperstar(k, s));
  }
  if (k == 3 && budget >= 7) out.emplace_back("fano", FanoPlane());
  return out;
}

OrderingReport Monotone(std::size_t k, std::size_t budget) {
  OrderingReport report{ordering_id::kMonotoneAddEdge,
                        "EE(h) < EE(h + e) for every absent k-subset e", {}};
  for (const auto& [label, h] : MonotoneFixtures(k, budget)) {
    const double base = Ee(h);
    const Hypergraph absent = ComplementUniform(h, k);
    for (const Edge& e : absent.edges()) {
      report.instances.push_back(Compare(label, base, label + "+" + EdgeToString(e),
                                         Ee(AddEdge(h, e))));
    }
  }
  return report;
}

std::vector<std::size_t> SortedDegrees(const Hypergraph& h) {
  auto d = Degrees(h);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

BoundReport MakeBoundReport(std::string id, BoundDirection direction, double lhs, double rhs,
                            BoundInputs inputs, bool strict) {
  BoundReport r;
  r.bound_id = std::move(id);
  r.direction = direction;
  r.strict = strict;
  r.lhs = lhs;
  r.rhs = rhs;
  r.inputs = inputs;
  r.slack = direction == BoundDirection::kUpper ? rhs - lhs : lhs - rhs;
  double scale = 1.0;
  if (std::isfinite(lhs)) scale = std::max(scale, std::abs(lhs));
  if (std::isfinite(rhs)) scale = std::max(scale, std::abs(rhs));
  const double tol = kBoundTolerance * scale;
  r.equality = std::isfinite(r.slack) && std::abs(r.slack) <= tol;
  r.holds = strict ? r.slack > 0.0 : r.slack >= -tol;
  return r;
}

BoundReport CheckSumTLargestMatrix(const SymmetricMatrix& m, std::size_t t,
                                   SumBoundVariant variant) {
  return SumTLargestMatrix(m, ComputeSpectrum(m), t, variant);
}

BoundReport CheckSumTLargestUniform(const Hypergraph& h, std::size_t k, std::size_t t) {
  RequireUniform(h, k);
  return SumTLargestUniform(h, k, ComputeSpectrum(h), t);
}

std::vector<BoundReport> CheckMoment2Bounds(const Hypergraph& h, std::size_t k) {
  RequireUniform(h, k);
  return Moment2(h, k, ComputeSpectrum(h));
}

BoundReport CheckEeLowerSpectral(const Hypergraph& h) { return EeLowerSpectral(h, Evaluate(h)); }

BoundReport CheckEeLowerEdges(const Hypergraph& h, std::size_t k) {
  RequireUniform(h, k);
  return EeLowerEdges(h, k, Evaluate(h));
}

BoundReport CheckEeUpperEdges(const Hypergraph& h, std::size_t k) {
  RequireUniform(h, k);
  return EeUpperEdges(h, k, Evaluate(h));
}

std::vector<BoundReport> CheckEeUpperEnergy(const Hypergraph& h, std::size_t k) {
  RequireUniform(h, k);
  return EeUpperEnergy(h, k, Evaluate(h));
}

BoundReport CheckNordhausGaddum(const Hypergraph& h, std::size_t k) {
  RequireUniform(h, k);
  return NordhausGaddum(h, k, Evaluate(h));
}

std::optional<BoundReport> CheckEeMonotone(const Hypergraph& h, std::size_t k) {
  RequireUniform(h, k);
  return EeMonotone(h, k, Evaluate(h));
}

std::vector<BoundReport> CheckAllBounds(const Hypergraph& h, std::size_t k,
                                        const CheckOptions& options) {
  RequireUniform(h, k);
  const Evaluated ev = Evaluate(h);
  const SymmetricMatrix a = Adjacency(h);
  const std::size_t n = h.order();
  std::vector<BoundReport> out;

  std::vector<std::size_t> ts;
  if (options.t) {
    RequireT(n, *options.t);
    ts.push_back(*options.t);
  } else {
    for (std::size_t t = 2; t <= n; ++t) ts.push_back(t);
  }
  for (std::size_t t : ts) {
    for (SumBoundVariant variant : options.variants) {
      BoundReport r = SumTLargestMatrix(a, ev.spectrum, t, variant);
      r.inputs.m = h.size();
      r.inputs.k = k;
      out.push_back(std::move(r));
    }
    out.push_back(SumTLargestUniform(h, k, ev.spectrum, t));
  }
  for (auto& r : Moment2(h, k, ev.spectrum)) out.push_back(std::move(r));
  out.push_back(EeLowerSpectral(h, ev));
  out.push_back(EeLowerEdges(h, k, ev));
  out.push_back(EeUpperEdges(h, k, ev));
  for (auto& r : EeUpperEnergy(h, k, ev)) out.push_back(std::move(r));
  if (k >= 2 && k <= n) out.push_back(NordhausGaddum(h, k, ev));
  if (options.include_monotone) {
    if (auto r = EeMonotone(h, k, ev)) out.push_back(std::move(*r));
  }

  std::stable_sort(out.begin(), out.end(), [](const BoundReport& x, const BoundReport& y) {
    return std::tie(x.bound_id, x.inputs.t) < std::tie(y.bound_id, y.inputs.t);
  });
  return out;
}

TwoEigenvalueClassification ClassifyTwoEigenvalue(const Hypergraph& h, std::size_t k) {
  TwoEigenvalueClassification out;
  out.bibd = ValidateBibd(h, k);
  out.beta_from_matrix = BetaFromMatrix(h);
  const Spectrum s = ComputeSpectrum(h);
  out.distinct = DistinctEigenvalues(s);
  out.two_distinct = out.distinct.size() == 2;
  out.connected = IsConnected(h);

  const std::optional<std::size_t> design_beta =
      out.bibd ? std::optional<std::size_t>(out.bibd->beta) : std::nullopt;
  if (design_beta != out.beta_from_matrix) {
    throw HypergraphError(ErrorCode::kInconsistent,
                          "pair-count and adjacency characterizations disagree");
  }
  if (out.bibd) {
    const double n = static_cast<double>(h.order());
    const double beta = static_cast<double>(out.bibd->beta);
    const double tol = s.zero_tolerance;
    const bool spectrum_ok = out.two_distinct && out.distinct[0].multiplicity == 1 &&
                             std::abs(out.distinct[0].value - beta * (n - 1.0)) <= tol &&
                             out.distinct[1].multiplicity == h.order() - 1 &&
                             std::abs(out.distinct[1].value + beta) <= tol;
    if (!spectrum_ok) {
      throw HypergraphError(ErrorCode::kInconsistent,
                            "design spectrum is not (beta(n-1), -beta x (n-1))");
    }
    if (out.bibd->r * (k - 1) != out.bibd->beta * (h.order() - 1) ||
        !IsRegular(h, out.bibd->r)) {
      throw HypergraphError(ErrorCode::kInconsistent,
                            "design is not regular of degree beta(n-1)/(k-1)");
    }
  } else if (out.two_distinct) {
    if (out.connected) {
      throw HypergraphError(ErrorCode::kInconsistent,
                            "connected hypergraph with two eigenvalues is not a design");
    }
    out.consistent = false;
    out.reason =
        "disconnected: two distinct eigenvalues with a repeated largest eigenvalue, "
        "but pair multiplicities differ";
  }
  return out;
}

bool OrderingReport::AllStrict() const {
  return std::all_of(instances.begin(), instances.end(),
                     [](const OrderingInstance& i) { return i.strict_holds; });
}

std::vector<OrderingReport> VerifyOrderingLemmas(std::size_t k, std::size_t size_budget) {
  if (k < 3) throw HypergraphError(ErrorCode::kInvalidArgument, "orderings need k >= 3");
  const std::size_t max_over = size_budget / (k - 1);
  return {PendantShift(k, max_over),   Consolidation(k, max_over), C3ToC2(k, max_over),
          CycleShortening(k, max_over), C3kBelowGss(k, size_budget), Monotone(k, size_budget)};
}

ExtremalReport VerifyExtremal(std::size_t n_over, std::size_t k) {
  if (n_over < 3 || k < 3) {
    throw HypergraphError(ErrorCode::kInvalidArgument, "extremal check needs n/(k-1) >= 3, k >= 3");
  }
  ExtremalReport report;
  report.n_over = n_over;
  report.k = k;
  report.scope_note =
      "ranked over a generated sub-catalog (pendant edges on any cycle vertex, plus one "
      "depth-2 pendant edge); not every unicyclic hypergraph of this order is enumerated";

  const auto catalog = UnicyclicCatalog(n_over, k);
  report.catalog_size = catalog.size();
  std::vector<std::pair<double, std::size_t>> values;
  for (std::size_t i = 0; i < catalog.size(); ++i) values.emplace_back(Ee(catalog[i].graph), i);
  std::stable_sort(values.begin(), values.end(),
                   [](const auto& x, const auto& y) { return x.first > y.first; });

  std::vector<std::vector<std::size_t>> clusters;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i == 0 || !RelativelyEqual(values[i - 1].first, values[i].first)) {
      report.ranking.push_back({"", values[i].first, 0});
      clusters.emplace_back();
    }
    ++report.ranking.back().multiplicity;
    clusters.back().push_back(values[i].second);
  }
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    report.ranking[c].label = catalog[*std::min_element(clusters[c].begin(), clusters[c].end())].label;
  }

  const Hypergraph xn = UnicyclicCm(k, {n_over - 2, 0}).graph;
  report.expected_max_label = CmLabel({n_over - 2, 0});
  report.expected_max_ee = Ee(xn);
  report.max_diameter = Diameter(xn);
  const Hypergraph second = n_over == 3 ? GStarStar(k).graph : UnicyclicCm(k, {n_over - 3, 1}).graph;
  report.expected_second_label = n_over == 3 ? "G**" : CmLabel({n_over - 3, 1});
  report.expected_second_ee = Ee(second);
  report.second_diameter = Diameter(second);

  if (report.ranking.size() < 2) {
    report.failures.push_back("catalog has fewer than two distinct Estrada values");
    return report;
  }
  const double top = report.ranking[0].ee;
  report.separation = (top - report.ranking[1].ee) / top;

  const auto xn_degrees = SortedDegrees(xn);
  bool top_members_match = true;
  for (std::size_t index : clusters[0]) {
    if (SortedDegrees(catalog[index].graph) != xn_degrees) {
      top_members_match = false;
      report.failures.push_back("maximum also attained by " + catalog[index].label + ": " +
                                ToJson(catalog[index].graph));
    }
  }
  report.max_is_expected = RelativelyEqual(top, report.expected_max_ee) && top_members_match &&
                           report.separation > kBoundTolerance;
  if (!report.max_is_expected) {
    report.failures.push_back("maximum " + report.ranking[0].label + " is not " +
                              report.expected_max_label);
  }
  report.second_is_expected = RelativelyEqual(report.ranking[1].ee, report.expected_second_ee);
  if (!report.second_is_expected) {
    const auto& offender = catalog[clusters[1].front()];
    report.failures.push_back("second largest is " + offender.label + " (" +
                              ToJson(offender.graph) + "), expected " +
                              report.expected_second_label);
  }
  if (n_over >= 4) {
    report.diameters_ok = report.max_diameter == 2 && report.second_diameter == 3;
    if (!report.diameters_ok) {
      report.failures.push_back("diameters " + std::to_string(report.max_diameter) + " and " +
                                std::to_string(report.second_diameter) + ", expected 2 and 3");
    }
  }
  report.passed = report.max_is_expected && report.second_is_expected && report.diameters_ok;
  return report;
}

void SweepOne(const Hypergraph& h, std::size_t k, const std::string& label,
              BoundSweepResult& result) {
  CheckOptions options;
  options.include_monotone = false;
  const auto reports = CheckAllBounds(h, k, options);
  ++result.instances;
  result.reports += reports.size();
  const bool edgeless = h.size() == 0;
  if (edgeless) ++result.edgeless_instances;
  for (const BoundReport& r : reports) {
    if (!r.holds) {
      result.failures.push_back(label + ": " + r.bound_id + " fails, lhs " + std::to_string(r.lhs) +
                                " rhs " + std::to_string(r.rhs) + " in " + ToJson(h));
    }
    const bool equality_bound = r.bound_id == bound_id::kEeLowerEdges ||
                                r.bound_id == bound_id::kEeUpperEdges ||
                                r.bound_id == bound_id::kEeUpperEnergyExp;
    if (equality_bound && r.equality != edgeless) {
      result.failures.push_back(label + ": " + r.bound_id + " equality flag is " +
                                (r.equality ? "set" : "unset") + " on " +
                                (edgeless ? "an edgeless" : "a non-edgeless") + " input");
    }
  }
}

BoundSweepResult RunRandomBoundSweep(std::size_t instances, std::uint64_t seed,
                                     std::size_t n_max) {
  BoundSweepResult result;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_k(2, 4);
  std::uniform_real_distribution<double> pick_p(0.0, 1.0);
  for (std::size_t i = 0; i < instances; ++i) {
    const std::size_t k = pick_k(rng);
    std::uniform_int_distribution<std::size_t> pick_n(std::max<std::size_t>(k, 2), n_max);
    const std::size_t n = pick_n(rng);
    // Every twentieth instance is edgeless so the equality cases are exercised.
    const double p = i % 20 == 0 ? 0.0 : pick_p(rng);
    const Hypergraph h = RandomUniform(n, k, p, rng);
    SweepOne(h, k, "random #" + std::to_string(i), result);
  }
  return result;
}

}  // namespace hyperee
