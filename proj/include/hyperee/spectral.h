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

#ifndef HYPEREE_SPECTRAL_H_
#define HYPEREE_SPECTRAL_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hyperee/hypergraph.h"

namespace hyperee {

// Dense real symmetric matrix. Set() writes both (i, j) and (j, i), so
// symmetry holds by construction.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t order) : n_(order), data_(order * order, 0.0) {}

  // Throws kInvalidArgument when `rows` is ragged or not symmetric.
  static SymmetricMatrix FromRows(const std::vector<std::vector<double>>& rows);

  std::size_t order() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  void Set(std::size_t i, std::size_t j, double value) {
    data_[i * n_ + j] = value;
    data_[j * n_ + i] = value;
  }

  // Smallest and largest entries over the whole matrix, diagonal included.
  // Both are 0 for the empty matrix.
  double MinEntry() const;
  double MaxEntry() const;
  double FrobeniusNorm() const;
  double Trace() const;

  const std::vector<double>& data() const { return data_; }

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

// a_ij = number of edges containing both i and j; zero diagonal.
SymmetricMatrix Adjacency(const Hypergraph& h);

// Eigenvalues in descending order plus the tolerance used to classify them.
struct Spectrum {
  std::vector<double> eigenvalues;
  double zero_tolerance = 1e-9;
  double frobenius_norm = 0.0;

  std::size_t order() const { return eigenvalues.size(); }
  double lambda1() const { return eigenvalues.empty() ? 0.0 : eigenvalues.front(); }
};

struct Eigendecomposition {
  Spectrum spectrum;
  // Column j of the row-major n x n matrix is the unit eigenvector for
  // spectrum.eigenvalues[j].
  std::vector<double> eigenvectors;
  std::size_t sweeps = 0;
};

inline constexpr double kJacobiConvergence = 1e-14;
inline constexpr std::size_t kJacobiMaxSweeps = 100;
inline constexpr double kZeroTolerance = 1e-9;

// Cyclic Jacobi rotations until the off-diagonal Frobenius norm is at most
// kJacobiConvergence * max(1, ||M||_F). Throws kNoConvergence past the sweep cap.
Eigendecomposition Eigendecompose(const SymmetricMatrix& m);
Spectrum ComputeSpectrum(const SymmetricMatrix& m);
Spectrum ComputeSpectrum(const Hypergraph& h);

// ||M - Q diag(lambda) Q^T||_F.
double ReconstructionResidual(const SymmetricMatrix& m, const Eigendecomposition& d);

double SpectralMoment(const Spectrum& s, std::size_t t);

// exp(lambda) above this is reported as an overflow instead of infinity.
inline constexpr double kMaxExponent = 700.0;
double EstradaIndex(const Spectrum& s);
double Energy(const Spectrum& s);

// Count of eigenvalues below -zero_tolerance.
std::size_t NegativeCount(const Spectrum& s);
std::size_t PositiveCount(const Spectrum& s);
std::size_t ZeroCount(const Spectrum& s);

struct DistinctEigenvalue {
  double value;
  std::size_t multiplicity;
};

// Clusters neighbouring eigenvalues whose gap is within zero_tolerance. Each
// cluster is represented by its mean.
std::vector<DistinctEigenvalue> DistinctEigenvalues(const Spectrum& s);

struct SpectralSummary {
  std::size_t order = 0;
  double lambda1 = 0.0;
  double estrada = 0.0;
  double energy = 0.0;
  std::size_t negative_count = 0;
  std::size_t distinct_count = 0;
  // (t, M_t) pairs.
  std::vector<std::pair<std::size_t, double>> moments;
};

SpectralSummary Summarize(const Spectrum& s, std::size_t max_moment = 8);

// Exact integer arithmetic for walk counting. Every operation that could wrap
// throws kOverflow instead.
using WideInt = __int128;
std::string WideToString(WideInt value);

class CountMatrix {
 public:
  CountMatrix() = default;
  explicit CountMatrix(std::size_t order) : n_(order), data_(order * order, 0) {}

  static CountMatrix Identity(std::size_t order);
  static CountMatrix Adjacency(const Hypergraph& h);

  std::size_t order() const { return n_; }
  WideInt operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  WideInt& at(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

  CountMatrix operator*(const CountMatrix& other) const;
  WideInt Trace() const;

  bool operator==(const CountMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<WideInt> data_;
};

CountMatrix MatrixPower(const CountMatrix& a, std::size_t s);

// Exact tr(A^t) for the adjacency matrix of h.
WideInt TracePower(const Hypergraph& h, std::size_t t);

// Number of (u, v)-walks of length s, i.e. (A^s)_{uv}, with each step along
// an edge pair counted once per edge containing it.
WideInt WalkCount(const Hypergraph& h, Vertex u, Vertex v, std::size_t s);

// Outcome of comparing two walk-count sequences x_s and y_s over s = 1..s_max.
//   kEqual:        x_s == y_s for every s
//   kStrict:       x_s <= y_s everywhere, with at least one strict inequality
//   kWeak:         the reverse of kStrict (x dominates y)
//   kIncomparable: both directions are violated somewhere
// kStrict is a finite certificate for the all-lengths relation, not a proof.
enum class Dominance { kStrict, kWeak, kIncomparable, kEqual };
std::string ToString(Dominance d);

// Compares closed-walk counts M_s(h; u) against M_s(h; v).
Dominance WalkDominance(const Hypergraph& h, Vertex u, Vertex v, std::size_t s_max);

// Compares M_s(h; w, u) against M_s(h; w, v).
Dominance WalkDominanceFrom(const Hypergraph& h, Vertex w, Vertex u, Vertex v,
                            std::size_t s_max);

}  // namespace hyperee

#endif  // HYPEREE_SPECTRAL_H_
