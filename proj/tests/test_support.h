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
#ifndef HYPEREE_TESTS_TEST_SUPPORT_H_
#define HYPEREE_TESTS_TEST_SUPPORT_H_

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "hyperee/hypergraph.h"
#include "hyperee/spectral.h"

namespace hyperee::testing {

struct Fixture {
  std::string label;
  Hypergraph graph;
  std::size_t k;  // uniformity used for the bound checks
};

// Every generated family at small sizes, plus a few hand-written inputs.
std::vector<Fixture> Fixtures();

// Descending eigenvalues from Eigen's self-adjoint solver.
std::vector<double> EigenSpectrum(const SymmetricMatrix& m);

// Characteristic polynomial det(xI - A) of an integer matrix by
// Faddeev-LeVerrier in exact arithmetic; coefficient i multiplies x^(n-i).
std::vector<long long> CharacteristicPolynomial(const Hypergraph& h);
double EvaluatePolynomial(const std::vector<long long>& coefficients, double x);

// Walks of length s from u to v counted by depth-first enumeration over the
// edge list: each step picks an edge containing the current vertex and a
// different vertex of that edge.
unsigned long long DfsWalkCount(const Hypergraph& h, Vertex u, Vertex v, std::size_t s);

// tr(e^A) as the truncated series sum_{t<terms} tr(A^t)/t! over exact trace
// powers.
double SeriesEstrada(const Hypergraph& h, std::size_t terms);

// Random symmetric integer matrix with zero or arbitrary diagonal.
SymmetricMatrix RandomIntegerMatrix(std::size_t n, int max_entry, std::mt19937_64& rng);

}  // namespace hyperee::testing

#endif  // HYPEREE_TESTS_TEST_SUPPORT_H_
