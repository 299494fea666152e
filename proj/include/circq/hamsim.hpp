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
 * Hamiltonian simulation of Hermitian circulants by truncated Taylor
 * segments.
 *
 * One segment prepares the unary Poisson weights, loads one O_c copy per
 * unary digit, shifts the system by every loaded index, attaches (-i)^k and
 * unloads. A dilution qubit scales the ancilla-zero block to exactly
 * U~/2 so that one oblivious amplification round applies.
 *
 * Two segment backends share the plan:
 *  - dense executes the full circuit on L + 1 + K + K L qubits;
 *  - factored executes the same oracle and weight circuits per Fourier mode
 *    and combines them mode by mode. It is used when the dense layout
 *    exceeds the qubit cap.
 */
#pragma once

#include <optional>
#include <vector>

#include "circq/circulant.hpp"
#include "circq/lcu.hpp"

namespace circq {

/// forward: e^{-iCt}; backward: e^{+iCt}.
enum class Direction { forward, backward };
enum class SegmentBackend { automatic, dense, factored };

struct HamSimPlan {
    double t = 0.0;
    double epsilon = 0.0;
    int r = 0;
    int K = 0;
    double ratio = 0.0;      ///< t / r
    double s = 1.0;          ///< sum_{k <= K} ratio^k / k!
    double tail_bound = 0.0; ///< 2 ln2^{K+1} / (K+1)!
    double deficit = 0.0;    ///< sum_{k > K} ratio^k / k!
    /// cos(theta/2) of the dilution rotation: s / 2.
    double dilution = 0.5;
    /// Normalization the amplification round sees: s / dilution.
    [[nodiscard]] double effective_s() const { return s / dilution; }
};

/// 2 ln2^{K+1} / (K+1)!
double taylor_tail_bound(int K);

/// r = ceil(t / ln 2), K minimal with taylor_tail_bound(K) <= epsilon / r.
/// `K_override` replaces the rule (K >= 1).
HamSimPlan plan_simulation(double t, double epsilon,
                           std::optional<int> K_override = std::nullopt);

/// Qubits of the dense segment layout.
int segment_qubits(const HamSimPlan &plan, int L);

struct SegmentOptions {
    SegmentBackend backend = SegmentBackend::automatic;
    Direction direction = Direction::forward;
    Backend arith = Backend::perm;
};

struct SegmentResult {
    StateVector output;         ///< renormalized
    double weight = 1.0;        ///< ancilla-zero weight after amplification
    double residual = 0.0;      ///< 1 - weight
    double measured_s = 0.0;    ///< ||U~ psi|| / ||<0|A|0,psi>||
    GateTally tally;
    /// Controlled-O_c calls of one segment circuit (K forward + K inverse).
    std::size_t controlled_oracle_calls = 0;
    /// Including the three A applications of the amplification round.
    std::size_t executed_controlled_oracle_calls = 0;
    SegmentBackend backend = SegmentBackend::dense;
};

/// The segment circuit A on sys | dil | u | idx0 ... idx{K-1}.
Pipeline segment_pipeline(const CirculantSpec &spec, const HamSimPlan &plan,
                          Direction direction = Direction::forward,
                          Backend arith = Backend::perm);

SegmentResult apply_segment(const CirculantSpec &spec, const StateVector &psi,
                            const HamSimPlan &plan,
                            const SegmentOptions &options = {});

/// Per-mode factor of one amplified segment (factored backend).
std::vector<cplx> segment_mode_factors(const CirculantSpec &spec,
                                       const HamSimPlan &plan,
                                       Direction direction);

/// Per-mode factor of r chained segments: segment_mode_factors^r.
std::vector<cplx> evolution_mode_factors(const CirculantSpec &spec,
                                         const HamSimPlan &plan,
                                         Direction direction);

/// F diag(sum_{k <= K} (-i ratio Lambda)^k / k!) F^dagger psi.
Amplitudes taylor_segment_oracle(const CirculantSpec &spec,
                                 const HamSimPlan &plan, Direction direction,
                                 std::span<const cplx> psi);

struct EvolutionDiagnostics {
    HamSimPlan plan;
    SegmentBackend backend = SegmentBackend::dense;
    std::vector<double> segment_error;    ///< phase-invariant, per segment
    std::vector<double> segment_residual; ///< 1 - ancilla-zero weight
    double measured_s = 0.0;
    /// 2 r K: controlled-O_c calls of the r segment circuits.
    std::size_t controlled_oracle_calls = 0;
    /// 6 r K: the same counted across the amplification rounds.
    std::size_t executed_controlled_oracle_calls = 0;
    GateTally tally;
    /// Phase-invariant distance to F e^{-i Lambda t} F^dagger psi.
    double distance = 0.0;
};

struct Evolution {
    StateVector output;
    EvolutionDiagnostics diagnostics;
};

/// Requires a Hermitian spec. Callers with ||C|| != 1 pass the normalized
/// spec and the scaled time.
Evolution simulate_evolution(const CirculantSpec &spec, const StateVector &psi,
                             double t, double epsilon,
                             const SegmentOptions &options = {},
                             std::optional<int> K_override = std::nullopt);

} // namespace circq
