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

#include "hyperee/spectral.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace hyperee {
namespace {

double ClassificationTolerance(double frobenius) {
  return kZeroTolerance * std::max(1.0, frobenius);
}

double OffDiagonalNorm(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) sum += a[i * n + j] * a[i * n + j];
  }
  return std::sqrt(2.0 * sum);
}

// One Jacobi rotation zeroing a(p, q), applied to the working matrix and
// accumulated into the eigenvector matrix v.
void Rotate(std::vector<double>& a, std::vector<double>& v, std::size_t n, std::size_t p,
            std::size_t q) {
  const double apq = a[p * n + q];
  if (apq == 0.0) return;
  const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const double tau = s / (1.0 + c);

  a[p * n + p] -= t * apq;
  a[q * n + q] += t * apq;
  a[p * n + q] = 0.0;
  a[q * n + p] = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    if (r == p || r == q) continue;
    const double g = a[r * n + p];
    const double h = a[r * n + q];
    const double rp = g - s * (h + g * tau);
    const double rq = h + s * (g - h * tau);
    a[r * n + p] = a[p * n + r] = rp;
    a[r * n + q] = a[q * n + r] = rq;
  }
  for (std::size_t r = 0; r < n; ++r) {
    const double g = v[r * n + p];
    const double h = v[r * n + q];
    v[r * n + p] = g - s * (h + g * tau);
    v[r * n + q] = h + s * (g - h * tau);
  }
}

WideInt CheckedMul(WideInt a, WideInt b) {
  WideInt out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw HypergraphError(ErrorCode::kOverflow, "walk count overflows 128-bit integers");
  }
  return out;
}

WideInt CheckedAdd(WideInt a, WideInt b) {
  WideInt out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw HypergraphError(ErrorCode::kOverflow, "walk count overflows 128-bit integers");
  }
  return out;
}

void CheckVertex(const Hypergraph& h, Vertex v) {
  if (v >= h.order()) {
    throw HypergraphError(ErrorCode::kVertexOutOfRange,
                          "vertex " + std::to_string(v) + " out of range");
  }
}

Dominance Compare(const std::vector<WideInt>& x, const std::vector<WideInt>& y) {
  bool less = false;
  bool greater = false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    less = less || x[i] < y[i];
    greater = greater || x[i] > y[i];
  }
  if (less && greater) return Dominance::kIncomparable;
  if (less) return Dominance::kStrict;
  if (greater) return Dominance::kWeak;
  return Dominance::kEqual;
}

}  // namespace

SymmetricMatrix SymmetricMatrix::FromRows(const std::vector<std::vector<double>>& rows) {
  SymmetricMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw HypergraphError(ErrorCode::kInvalidArgument, "matrix rows must be square");
    }
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (rows[i][j] != rows[j][i]) {
        throw HypergraphError(ErrorCode::kInvalidArgument, "matrix is not symmetric");
      }
      m.data_[i * m.n_ + j] = rows[i][j];
    }
  }
  return m;
}

double SymmetricMatrix::MinEntry() const {
  return data_.empty() ? 0.0 : *std::min_element(data_.begin(), data_.end());
}

double SymmetricMatrix::MaxEntry() const {
  return data_.empty() ? 0.0 : *std::max_element(data_.begin(), data_.end());
}

double SymmetricMatrix::FrobeniusNorm() const {
  double sum = 0.0;
  for (double x : data_) sum += x * x;
  return std::sqrt(sum);
}

double SymmetricMatrix::Trace() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < n_; ++i) sum += (*this)(i, i);
  return sum;
}

SymmetricMatrix Adjacency(const Hypergraph& h) {
  SymmetricMatrix a(h.order());
  for (const Edge& e : h.edges()) {
    for (std::size_t x = 0; x < e.size(); ++x) {
      for (std::size_t y = x + 1; y < e.size(); ++y) a.Set(e[x], e[y], a(e[x], e[y]) + 1.0);
    }
  }
  return a;
}

Eigendecomposition Eigendecompose(const SymmetricMatrix& m) {
  const std::size_t n = m.order();
  for (double x : m.data()) {
    if (!std::isfinite(x)) {
      throw HypergraphError(ErrorCode::kInvalidArgument, "matrix has a non-finite entry");
    }
  }
  std::vector<double> a = m.data();
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  const double frobenius = m.FrobeniusNorm();
  const double target = kJacobiConvergence * std::max(1.0, frobenius);
  std::size_t sweeps = 0;
  while (OffDiagonalNorm(a, n) > target) {
    if (sweeps == kJacobiMaxSweeps) {
      throw HypergraphError(ErrorCode::kNoConvergence,
                            "Jacobi eigensolver did not converge in " +
                                std::to_string(kJacobiMaxSweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) Rotate(a, v, n, p, q);
    }
    ++sweeps;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a[x * n + x] > a[y * n + y];
  });

  Eigendecomposition out;
  out.sweeps = sweeps;
  out.spectrum.frobenius_norm = frobenius;
  out.spectrum.zero_tolerance = ClassificationTolerance(frobenius);
  out.eigenvectors.assign(n * n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = order[j];
    out.spectrum.eigenvalues.push_back(a[src * n + src]);
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors[r * n + j] = v[r * n + src];
  }
  return out;
}

Spectrum ComputeSpectrum(const SymmetricMatrix& m) { return Eigendecompose(m).spectrum; }

Spectrum ComputeSpectrum(const Hypergraph& h) { return ComputeSpectrum(Adjacency(h)); }

double ReconstructionResidual(const SymmetricMatrix& m, const Eigendecomposition& d) {
  const std::size_t n = m.order();
  const auto& q = d.eigenvectors;
  const auto& lambda = d.spectrum.eigenvalues;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double r = 0.0;
      for (std::size_t c = 0; c < n; ++c) r += q[i * n + c] * lambda[c] * q[j * n + c];
      const double diff = m(i, j) - r;
      sum += diff * diff;
    }
  }
  return std::sqrt(sum);
}

double SpectralMoment(const Spectrum& s, std::size_t t) {
  double sum = 0.0;
  for (double x : s.eigenvalues) sum += std::pow(x, static_cast<double>(t));
  return sum;
}

double EstradaIndex(const Spectrum& s) {
  if (s.lambda1() > kMaxExponent) {
    throw HypergraphError(ErrorCode::kOverflow,
                          "Estrada index overflows: lambda_1 = " + std::to_string(s.lambda1()));
  }
  // Ascending order keeps the small terms from being absorbed early.
  double sum = 0.0;
  for (auto it = s.eigenvalues.rbegin(); it != s.eigenvalues.rend(); ++it) sum += std::exp(*it);
  return sum;
}

double Energy(const Spectrum& s) {
  double sum = 0.0;
  for (double x : s.eigenvalues) sum += std::abs(x);
  return sum;
}

std::size_t NegativeCount(const Spectrum& s) {
  return static_cast<std::size_t>(std::count_if(s.eigenvalues.begin(), s.eigenvalues.end(),
                                                [&](double x) { return x < -s.zero_tolerance; }));
}

std::size_t PositiveCount(const Spectrum& s) {
  return static_cast<std::size_t>(std::count_if(s.eigenvalues.begin(), s.eigenvalues.end(),
                                                [&](double x) { return x > s.zero_tolerance; }));
}

std::size_t ZeroCount(const Spectrum& s) {
  return s.order() - NegativeCount(s) - PositiveCount(s);
}

std::vector<DistinctEigenvalue> DistinctEigenvalues(const Spectrum& s) {
  std::vector<DistinctEigenvalue> out;
  double cluster_sum = 0.0;
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
    const double x = s.eigenvalues[i];
    if (i == 0 || s.eigenvalues[i - 1] - x > s.zero_tolerance) {
      if (!out.empty()) out.back().value = cluster_sum / out.back().multiplicity;
      out.push_back({x, 0});
      cluster_sum = 0.0;
    }
    ++out.back().multiplicity;
    cluster_sum += x;
  }
  if (!out.empty()) out.back().value = cluster_sum / out.back().multiplicity;
  return out;
}

SpectralSummary Summarize(const Spectrum& s, std::size_t max_moment) {
  SpectralSummary out;
  out.order = s.order();
  out.lambda1 = s.lambda1();
  out.estrada = EstradaIndex(s);
  out.energy = Energy(s);
  out.negative_count = NegativeCount(s);
  out.distinct_count = DistinctEigenvalues(s).size();
  for (std::size_t t = 0; t <= max_moment; ++t) out.moments.emplace_back(t, SpectralMoment(s, t));
  return out;
}

std::string WideToString(WideInt value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  std::string digits;
  while (value != 0) {
    const int d = static_cast<int>(value % 10);
    digits.push_back(static_cast<char>('0' + (negative ? -d : d)));
    value /= 10;
  }
  if (negative) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

CountMatrix CountMatrix::Identity(std::size_t order) {
  CountMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) m.at(i, i) = 1;
  return m;
}

CountMatrix CountMatrix::Adjacency(const Hypergraph& h) {
  CountMatrix m(h.order());
  for (const Edge& e : h.edges()) {
    for (Vertex x : e) {
      for (Vertex y : e) {
        if (x != y) m.at(x, y) += 1;
      }
    }
  }
  return m;
}

CountMatrix CountMatrix::operator*(const CountMatrix& other) const {
  if (other.n_ != n_) throw HypergraphError(ErrorCode::kInvalidArgument, "order mismatch");
  CountMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t c = 0; c < n_; ++c) {
      const WideInt lhs = (*this)(i, c);
      if (lhs == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        out.at(i, j) = CheckedAdd(out(i, j), CheckedMul(lhs, other(c, j)));
      }
    }
  }
  return out;
}

WideInt CountMatrix::Trace() const {
  WideInt sum = 0;
  for (std::size_t i = 0; i < n_; ++i) sum = CheckedAdd(sum, (*this)(i, i));
  return sum;
}

CountMatrix MatrixPower(const CountMatrix& a, std::size_t s) {
  CountMatrix result = CountMatrix::Identity(a.order());
  CountMatrix base = a;
  while (s > 0) {
    if (s & 1U) result = result * base;
    s >>= 1U;
    if (s > 0) base = base * base;
  }
  return result;
}

WideInt TracePower(const Hypergraph& h, std::size_t t) {
  return MatrixPower(CountMatrix::Adjacency(h), t).Trace();
}

WideInt WalkCount(const Hypergraph& h, Vertex u, Vertex v, std::size_t s) {
  CheckVertex(h, u);
  CheckVertex(h, v);
  return MatrixPower(CountMatrix::Adjacency(h), s)(u, v);
}

std::string ToString(Dominance d) {
  switch (d) {
    case Dominance::kStrict:
      return "strict";
    case Dominance::kWeak:
      return "weak";
    case Dominance::kIncomparable:
      return "incomparable";
    case Dominance::kEqual:
      return "equal";
  }
  return "unknown";
}

Dominance WalkDominanceFrom(const Hypergraph& h, Vertex w, Vertex u, Vertex v,
                            std::size_t s_max) {
  CheckVertex(h, w);
  CheckVertex(h, u);
  CheckVertex(h, v);
  if (s_max == 0) throw HypergraphError(ErrorCode::kInvalidArgument, "s_max must be >= 1");
  const CountMatrix a = CountMatrix::Adjacency(h);
  CountMatrix power = CountMatrix::Identity(h.order());
  std::vector<WideInt> at_u;
  std::vector<WideInt> at_v;
  for (std::size_t s = 1; s <= s_max; ++s) {
    power = power * a;
    at_u.push_back(power(w, u));
    at_v.push_back(power(w, v));
  }
  return Compare(at_u, at_v);
}

Dominance WalkDominance(const Hypergraph& h, Vertex u, Vertex v, std::size_t s_max) {
  CheckVertex(h, u);
  CheckVertex(h, v);
  if (s_max == 0) throw HypergraphError(ErrorCode::kInvalidArgument, "s_max must be >= 1");
  const CountMatrix a = CountMatrix::Adjacency(h);
  CountMatrix power = CountMatrix::Identity(h.order());
  std::vector<WideInt> at_u;
  std::vector<WideInt> at_v;
  for (std::size_t s = 1; s <= s_max; ++s) {
    power = power * a;
    at_u.push_back(power(u, u));
    at_v.push_back(power(v, v));
  }
  return Compare(at_u, at_v);
}

}  // namespace hyperee
