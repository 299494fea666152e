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
 * Circulant linear-system solver: phase estimation of e^{i pi C}, an
 * eigenvalue-conditioned ancilla rotation, uncomputation and post-selection
 * on the ancilla.
 *
 * Phases are half-scaled: eigenvalue Lambda in (0, 1] maps to phase
 * Lambda / 2, read back as lambda~ = 2 x / 2^T from phase register value x.
 */
#pragma once

#include "circq/circulant.hpp"
#include "circq/hamsim.hpp"
#include "circq/lcu.hpp"

namespace circq {

enum class InversionBackend { exact_diagonal, taylor };

struct InversionPlan {
    int T = 0;
    double kappa = 1.0;
    InversionBackend backend = InversionBackend::exact_diagonal;
    double epsilon = 1e-3;
    /// Invert -C instead of C (for specs realizing a negated operator).
    bool negate_operator = false;

    /// T = ceil(log2(kappa / epsilon)) + 2.
    static InversionPlan make(double kappa, double epsilon,
                              InversionBackend backend =
                                  InversionBackend::exact_diagonal);
};

/// Eigenvalues of the operator the plan inverts (C or -C), real parts.
/// Throws InputError unless every one lies in (0, 1].
std::vector<double> checked_spectrum(const CirculantSpec &spec,
                                     const InversionPlan &plan);

/// State on sys | ph after Hadamards, controlled powers and the inverse
/// QFT on the phase register.
StateVector phase_estimate(const CirculantSpec &spec, const StateVector &psi,
                           const InversionPlan &plan);

struct InversionDiagnostics {
    /// P(ancilla = 1) before the phase register is checked.
    double ancilla_probability = 0.0;
    /// Weight of phase-register values other than 0 given ancilla = 1.
    double uncompute_residual = 0.0;
    /// Phase values rotated with a clamped (full) flip, and their weight.
    std::size_t clamped_values = 0;
    double clamped_weight = 0.0;
    /// Weight on phase value 0, left unrotated.
    double zero_phase_weight = 0.0;
    double lower_bound = 0.0; ///< 1 / kappa^2
    OracleCalls calls;
};

struct InversionResult {
    /// output: C^{-1} psi direction; unnormalized: the amplitudes with the
    /// ancilla at 1 and phase register at 0, approximately
    /// C^{-1} psi / kappa.
    LcuResult lcu;
    InversionDiagnostics diagnostics;
};

InversionResult invert_circulant(const CirculantSpec &spec,
                                 const StateVector &psi,
                                 const InversionPlan &plan);

/// Same, followed by `iterations` amplitude-amplification rounds on the
/// success flags. exact_diagonal backend only; needs O_psi.
LcuResult invert_amplified(const CirculantSpec &spec,
                           const AmplitudeOracle &psi_oracle,
                           const InversionPlan &plan, int iterations);

} // namespace circq
