// Copyright 2026 The circq Authors
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

/**
 * @file
 * Seeded random inputs for verification suites.
 */
#pragma once

#include <random>
#include <vector>

#include "circq/state_vector.hpp"

namespace circq::random {

/// Nonnegative weights summing to 1. `nonzeros` > 0 keeps only that many
/// entries.
std::vector<double> probability_vector(std::size_t n, std::mt19937_64 &rng,
                                       std::size_t nonzeros = 0);

/// Haar-like random unit vector (normalized complex Gaussian).
Amplitudes unit_vector(std::size_t n, std::mt19937_64 &rng);

StateVector state(int L, std::mt19937_64 &rng, const char *name = "sys");

/// Symmetric weights c_j = c_{N-j}, summing to 1.
std::vector<double> hermitian_weights(std::size_t n, std::mt19937_64 &rng);

/// Symmetric weights with c_0 in [0.55, 0.9]: every eigenvalue lies in
/// [2 c_0 - 1, 1].
std::vector<double> positive_definite_weights(std::size_t n,
                                              std::mt19937_64 &rng);

/// Random unitary on k qubits (QR of a complex Gaussian matrix).
GateMatrix unitary(int k, std::mt19937_64 &rng);

} // namespace circq::random
