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
 * Steady-state response of a cyclic (rotationally periodic) structure:
 * (K - n Omega I) q0 = f with a circulant stiffness matrix K, solved through
 * the circulant inversion pipeline.
 *
 * Sign handling: the pipeline realizes -A / scale in both cases.
 *  - all_negative: -A has nonnegative entries and is loaded directly.
 *  - positive_diagonal: |A| is loaded with the V_0 term negated.
 */
#pragma once

#include <optional>
#include <vector>

#include "circq/circulant.hpp"
#include "circq/hhl.hpp"

namespace circq {

struct CyclicSystemSpec {
    std::vector<double> stiffness_row; ///< first row of K, length N = 2^L
    int n = 0;                         ///< excitation order
    double Omega = 0.0;                ///< the shift is n * Omega
    cplx f_amp = 1.0;
};

enum class SignCase { all_negative, positive_diagonal };

struct AssembledSystem {
    CirculantSpec spec; ///< realized operator R with scale * R = -A
    double scale = 1.0;
    SignCase sign_case = SignCase::all_negative;
    std::vector<double> a_row; ///< first row of A = K - n Omega I
    /// |a_0| > 2 sum_{j >= 1} |a_j|
    bool weak_coupling = false;
};

AssembledSystem assemble_system(const CyclicSystemSpec &spec);

/// Dense A = K - n Omega I.
classical::DenseOperator dense_system(const AssembledSystem &sys);

/// Normalized state with amplitudes proportional to f_amp e^{2 pi i n j / N}.
StateVector travelling_wave_force(std::size_t N, int n, cplx f_amp = 1.0);

struct CyclicOptions {
    InversionBackend backend = InversionBackend::exact_diagonal;
    /// Extra phase bits above the plan's T.
    int extra_phase_bits = 0;
    std::optional<classical::DenseOperator> observable;
    std::optional<Amplitudes> reference;
};

struct CyclicSolution {
    StateVector q0;         ///< normalized solution direction
    Amplitudes q0_full;     ///< reconstructed unnormalized solution
    double magnitude = 0.0; ///< ||q0_full||
    AssembledSystem system;
    InversionPlan plan;
    InversionDiagnostics inversion;
    double kappa = 0.0;
    /// ||A q0_full - f|| / ||f||
    double residual = 0.0;
    /// |<f|q0>| for normalized f and q0
    double force_overlap = 0.0;
    std::optional<cplx> expectation; ///< <q0|M|q0>
    std::optional<cplx> overlap;     ///< <q0'|q0>
};

CyclicSolution solve_cyclic(const CyclicSystemSpec &spec, double epsilon,
                            const CyclicOptions &options = {});

} // namespace circq
