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
 * Reversible register arithmetic: QFT, Fourier-basis (Draper) modular
 * adders and subtractors, and the all-qubit bit flip.
 *
 * All arithmetic is modulo 2^width; wraparound is plain register overflow.
 */
#pragma once

#include <span>
#include <vector>

#include "circq/circuit.hpp"
#include "circq/state_vector.hpp"

namespace circq {

/// Gate-level runs decomposed one- and two-qubit circuits (tallied);
/// permutation-level applies the same map as a basis permutation.
enum class Backend { gate, perm };

/// QFT on `reg`: |k> -> sum_y e^{2 pi i k y / 2^L} |y> / sqrt(2^L). With
/// `swaps` false the output bits are left in reversed order.
Circuit qft_circuit(const Register &reg, bool inverse, bool swaps = true);

void qft(StateVector &state, const Register &reg, bool inverse,
         GateTally *tally = nullptr);

/// Draper circuit for |j>|k> -> |j>|(k + sign*j) mod 2^L>.
Circuit fourier_adder_circuit(const Register &index, const Register &target,
                              int sign);
/// Same map with a classical addend: single-qubit phases replace the
/// index-controlled ones.
Circuit fourier_constant_adder_circuit(const Register &target, Index value,
                                       int sign);

/// |j>|k> -> |j>|(k - j) mod 2^L>
void controlled_subtract(StateVector &state, const Register &index,
                         const Register &target, Backend backend = Backend::perm,
                         GateTally *tally = nullptr);
/// |j>|k> -> |j>|(k + j) mod 2^L>
void controlled_add(StateVector &state, const Register &index,
                    const Register &target, Backend backend = Backend::perm,
                    GateTally *tally = nullptr);

void subtract_constant(StateVector &state, const Register &target,
                       Index value, Backend backend = Backend::perm,
                       GateTally *tally = nullptr);
void add_constant(StateVector &state, const Register &target, Index value,
                  Backend backend = Backend::perm, GateTally *tally = nullptr);

/// |k> -> |2^L - 1 - k> via X on every qubit.
void bitflip_all(StateVector &state, const Register &reg,
                 GateTally *tally = nullptr);

struct ScalingRow {
    int width = 0;
    GateTally tally;
};

struct ScalingTable {
    std::vector<ScalingRow> rows;
    /// Least-squares slope of log(total gates) against log(width).
    double exponent = 0.0;
};

/// Gate tallies of one gate-level controlled_subtract per width.
ScalingTable adder_gate_scaling(std::span<const int> widths);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

} // namespace circq
