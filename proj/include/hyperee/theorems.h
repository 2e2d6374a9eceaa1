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

#ifndef HYPEREE_THEOREMS_H_
#define HYPEREE_THEOREMS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperee/families.h"
#include "hyperee/hypergraph.h"
#include "hyperee/spectral.h"

namespace hyperee {

// Stable identifiers of every bound checker.
namespace bound_id {
inline constexpr char kSumTLargestMatrix[] = "sum-t-largest-matrix";
inline constexpr char kSumTLargestMatrixThetaPlusOne[] = "sum-t-largest-matrix-theta-plus-one";
inline constexpr char kSumTLargestUniform[] = "sum-t-largest-uniform";
inline constexpr char kMoment2Lower[] = "moment2-lower";
inline constexpr char kMoment2Upper[] = "moment2-upper";
inline constexpr char kEeLowerSpectral[] = "ee-lower-spectral";
inline constexpr char kEeLowerEdges[] = "ee-lower-edges";
inline constexpr char kEeUpperEdges[] = "ee-upper-edges";
inline constexpr char kEeUpperEnergy[] = "ee-upper-energy";
inline constexpr char kEeUpperEnergyExp[] = "ee-upper-energy-exp";
inline constexpr char kEeNordhausGaddum[] = "ee-nordhaus-gaddum";
inline constexpr char kEeMonotoneAddEdge[] = "ee-monotone-add-edge";
}  // namespace bound_id

// Relative tolerance for "holds" and "equality" decisions.
inline constexpr double kBoundTolerance = 1e-9;

enum class BoundDirection {
  kUpper,  // lhs <= rhs
  kLower,  // lhs >= rhs
};

struct BoundInputs {
  std::size_t n = 0;
  std::optional<std::size_t> m;
  std::optional<std::size_t> k;
  std::optional<std::size_t> t;
};

// One evaluated inequality. lhs is the invariant being bounded and rhs the
// bound expression; slack is positive when the inequality holds with room.
//
// holds <=> slack >= -tol with tol = 1e-9 * max(1, |lhs|, |rhs|) over the
// finite sides. Strict reports instead require slack > 0. An infinite rhs
// (exponential overflow) holds and never counts as equality.
struct BoundReport {
  std::string bound_id;
  BoundDirection direction = BoundDirection::kUpper;
  bool strict = false;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool holds = false;
  bool equality = false;
  BoundInputs inputs;
  // Named intermediate quantities (theta, extreme entries, tau forms, ...).
  std::vector<std::pair<std::string, double>> details;
  std::string note;
};

BoundReport MakeBoundReport(std::string id, BoundDirection direction, double lhs, double rhs,
                            BoundInputs inputs, bool strict = false);

// Denominator of the sum-of-t-largest bound: 2*theta + 1 (kAsWritten) or the
// classical 2*(theta + 1).
enum class SumBoundVariant { kAsWritten, kThetaPlusOne };

// sum_{i<=t} lambda_i(M) <= n(b-a)/D * (theta + sqrt(theta(t*theta + t - 1))) + max(0, a*n)
// with a, b the extreme entries of M and theta its negative eigenvalue count.
// Requires 2 <= t <= n.
BoundReport CheckSumTLargestMatrix(const SymmetricMatrix& m, std::size_t t,
                                   SumBoundVariant variant = SumBoundVariant::kAsWritten);

// The same bound for k-uniform h with b = C(n-2, k-2), a = 0.
BoundReport CheckSumTLargestUniform(const Hypergraph& h, std::size_t k, std::size_t t);

// k(k-1)m <= sum lambda_i^2 <= (k-1)m(m(k-2)+2); returns {lower, upper}.
std::vector<BoundReport> CheckMoment2Bounds(const Hypergraph& h, std::size_t k);

// EE >= e^{lambda_1} + (n-1) - lambda_1.
BoundReport CheckEeLowerSpectral(const Hypergraph& h);

// EE >= sqrt(n^2 + 4k(k-1)m/2).
BoundReport CheckEeLowerEdges(const Hypergraph& h, std::size_t k);

// EE <= n - 1 + e^{sqrt((k-1)m(m(k-2)+2))}.
BoundReport CheckEeUpperEdges(const Hypergraph& h, std::size_t k);

// {EE <= n + E - 1 - q + e^q with q = sqrt((k-1)m(m(k-2)+2)),  EE <= n - 1 + e^E}.
std::vector<BoundReport> CheckEeUpperEnergy(const Hypergraph& h, std::size_t k);

// EE(h) + EE(complement) >= 2e^{(n-1)/2} + 2(n-1)e^{-1/2}. Equality is
// reported, not asserted.
BoundReport CheckNordhausGaddum(const Hypergraph& h, std::size_t k);

// Strict report: lhs = EE(h), rhs = the smallest EE(h + e) over every absent
// k-subset e. Empty when h is already complete.
std::optional<BoundReport> CheckEeMonotone(const Hypergraph& h, std::size_t k);

struct CheckOptions {
  // Unset: every t in [2, n].
  std::optional<std::size_t> t;
  std::vector<SumBoundVariant> variants = {SumBoundVariant::kAsWritten,
                                           SumBoundVariant::kThetaPlusOne};
  bool include_monotone = true;
};

// Runs every applicable checker on k-uniform h, sorted by (bound_id, t).
std::vector<BoundReport> CheckAllBounds(const Hypergraph& h, std::size_t k,
                                        const CheckOptions& options = {});

// Three readings of "two distinct eigenvalues" for k-uniform h on n > k
// vertices: the spectrum, a block-design certificate, and A = beta(J - I).
struct TwoEigenvalueClassification {
  bool two_distinct = false;
  std::optional<BibdCertificate> bibd;
  std::optional<std::size_t> beta_from_matrix;
  std::vector<DistinctEigenvalue> distinct;
  bool connected = true;
  // False only for disconnected inputs whose spectrum has two values without
  // being a design (e.g. two disjoint copies of one edge).
  bool consistent = true;
  std::string reason;

  std::optional<std::size_t> beta() const {
    return two_distinct && bibd ? std::optional<std::size_t>(bibd->beta) : std::nullopt;
  }
};

// Throws kInconsistent when the design check and the matrix check disagree,
// when a design's spectrum differs from (beta(n-1), -beta x (n-1)), when a
// design is not regular of degree beta(n-1)/(k-1), or when a connected input
// has two eigenvalues without being a design.
TwoEigenvalueClassification ClassifyTwoEigenvalue(const Hypergraph& h, std::size_t k);

struct OrderingInstance {
  std::string left;
  std::string right;
  double ee_left = 0.0;
  double ee_right = 0.0;
  double gap = 0.0;  // ee_right - ee_left
  bool strict_holds = false;
};

struct OrderingReport {
  std::string lemma_id;
  std::string description;
  std::vector<OrderingInstance> instances;

  bool AllStrict() const;
};

// Ordering identifiers.
namespace ordering_id {
inline constexpr char kC2PendantShift[] = "c2-pendant-shift";
inline constexpr char kC3Consolidation[] = "c3-consolidation";
inline constexpr char kC3ToC2[] = "c3-to-c2";
inline constexpr char kCycleShortening[] = "cycle-shortening";
inline constexpr char kC3kBelowGss[] = "c3k-below-gss";
inline constexpr char kMonotoneAddEdge[] = "monotone-add-edge";
}  // namespace ordering_id

// Builds both sides of every strict Estrada-index ordering for all parameter
// choices whose hypergraphs have at most size_budget vertices. Requires k >= 3.
std::vector<OrderingReport> VerifyOrderingLemmas(std::size_t k, std::size_t size_budget);

struct RankedShape {
  std::string label;
  double ee = 0.0;
  std::size_t multiplicity = 0;  // catalog entries sharing this value
};

struct ExtremalReport {
  std::size_t n_over = 0;
  std::size_t k = 0;
  std::size_t catalog_size = 0;
  // Distinct EE values, largest first.
  std::vector<RankedShape> ranking;

  std::string expected_max_label;
  double expected_max_ee = 0.0;
  bool max_is_expected = false;
  std::size_t max_diameter = 0;

  std::string expected_second_label;
  double expected_second_ee = 0.0;
  bool second_is_expected = false;
  std::size_t second_diameter = 0;

  // Relative gap between the two largest distinct values.
  double separation = 0.0;
  // Diameters 2 and 3 are required only for n_over >= 4.
  bool diameters_ok = true;
  bool passed = false;
  std::string scope_note;
  std::vector<std::string> failures;
};

// Ranks UnicyclicCatalog(n_over, k) by EE and checks that the maximum is X_n
// and the runner-up is C_2(n_over-3, 1) (G** when n_over = 3). Requires
// n_over >= 3 and k >= 3.
ExtremalReport VerifyExtremal(std::size_t n_over, std::size_t k);

struct BoundSweepResult {
  std::size_t instances = 0;
  std::size_t reports = 0;
  std::vector<std::string> failures;
  // Equality flags on the edge/energy bounds that must fire only on edgeless
  // inputs; mismatches are listed in failures.
  std::size_t edgeless_instances = 0;
};

// Seeded sweep over random k-uniform hypergraphs, k in {2,3,4}, n <= n_max.
BoundSweepResult RunRandomBoundSweep(std::size_t instances, std::uint64_t seed,
                                     std::size_t n_max = 12);

// Checks one hypergraph the way the sweep does and appends failures.
void SweepOne(const Hypergraph& h, std::size_t k, const std::string& label,
              BoundSweepResult& result);

}  // namespace hyperee

#endif  // HYPEREE_THEOREMS_H_
