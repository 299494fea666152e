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
 * Linear combination of unitaries.
 *
 * A Pipeline is a unitary A on a layout whose low qubits hold the system
 * and whose remaining registers are ancillas. Success means every flagged
 * register reads its flagged value. Everything else here (the select
 * sandwich, amplitude amplification, one-step oblivious amplification) is
 * built from pipelines.
 */
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circq/arith.hpp"
#include "circq/state_prep.hpp"
#include "circq/state_vector.hpp"

namespace circq {

using StateOp = std::function<void(StateVector &, GateTally *)>;

/// select(W) = sum_j |j><j| (x) [I_garbage] (x) W_j
struct UnitaryFamily {
    std::vector<std::string> index_registers;
    std::vector<std::string> garbage_registers;
    std::vector<std::string> system_registers;
    /// Number of index values with a defined W_j (0 means all of them).
    Index defined_count = 0;
    StateOp select;
    StateOp select_inverse;
};

/// W_j = V_j on `system`, realized by a controlled subtractor.
UnitaryFamily shift_family(std::string index, std::string system,
                           Backend backend = Backend::perm);

/// W_j = unitaries[j] on `system` (at most a few qubits). Index values
/// beyond unitaries.size() are undefined.
UnitaryFamily explicit_family(std::string index, std::string system,
                              std::vector<GateMatrix> unitaries);

/// Runs W_j on each branch. Throws InputError when a branch with nonzero
/// weight carries an index value that has no W_j.
void select_apply(StateVector &state, const UnitaryFamily &family,
                  GateTally *tally = nullptr);

/// Prepares the ancilla block from |0...0>. The index register holds j; any
/// further registers are garbage.
struct AncillaPreparation {
    std::vector<std::pair<std::string, int>> registers;
    std::function<void(StateVector &, bool inverse)> prepare;
    /// Calls of the amplitude oracle per prepare().
    int oracle_calls = 1;
};

/// O_alpha loading sqrt(alpha_j) into register `name`.
AncillaPreparation oracle_preparation(const AmplitudeOracle &oracle,
                                      std::string name = "idx");

struct OracleCalls {
    std::size_t oracle = 0;            ///< O_c and O_c^dagger
    std::size_t controlled_oracle = 0; ///< controlled-O_c and its inverse
    std::size_t psi_oracle = 0;        ///< O_psi and O_psi^dagger

    OracleCalls &operator+=(const OracleCalls &o) {
        oracle += o.oracle;
        controlled_oracle += o.controlled_oracle;
        psi_oracle += o.psi_oracle;
        return *this;
    }
};

struct Pipeline {
    RegisterLayout layout;
    /// Qubits [0, system_qubits) carry the input state.
    int system_qubits = 0;
    /// Success condition: every listed register reads its value.
    std::vector<std::pair<std::string, Index>> flags;
    StateOp forward;
    StateOp inverse;
    OracleCalls calls_per_forward;
};

struct LcuResult {
    /// Post-selected, renormalized state on the unflagged registers.
    StateVector output;
    /// The same block before renormalization.
    Amplitudes unnormalized;
    double success_probability = 0.0;
    GateTally tally;
    OracleCalls calls;
    /// Raw operator = scale * realized operator.
    double scale = 1.0;
};

/// Ancillas in `layout` (everything above the system) initialized to |0>,
/// system loaded from `psi`.
StateVector embed_input(const Pipeline &pipeline, const StateVector &psi);

/// Probability that every flag holds.
double flag_probability(const StateVector &state, const Pipeline &pipeline);

/// Post-select the flags and keep the remaining registers.
LcuResult postselect(const StateVector &state, const Pipeline &pipeline);

/// A |0>|psi>, then post-selection on the flags.
LcuResult run_pipeline(const Pipeline &pipeline, const StateVector &psi,
                       GateTally *tally = nullptr);

/// Layout: system registers of `psi_layout`, then the preparation's
/// registers. Flags: all preparation registers at 0.
Pipeline lcu_pipeline(const RegisterLayout &psi_layout,
                      const AncillaPreparation &prep,
                      const UnitaryFamily &family);

LcuResult lcu_sandwich(const StateVector &psi, const AncillaPreparation &prep,
                       const UnitaryFamily &family);
LcuResult lcu_sandwich(const StateVector &psi, const AmplitudeOracle &alpha,
                       const UnitaryFamily &family);

/// n rounds of Q = -U S_0 U^dagger S_good on U = A (I (x) O_psi). The
/// psi oracle acts on qubits [0, width) of the system.
LcuResult amplitude_amplify(const Pipeline &pipeline,
                            const AmplitudeOracle &psi_oracle,
                            int iterations);

/// sin^2((2n + 1) theta) with sin theta = sqrt(p0).
double amplified_probability(double p0, int iterations);

/// Smallest n maximizing sin^2((2n + 1) theta).
int optimal_iterations(double p0);

/// Reflection 2 P - I with P the projector onto the flags.
void reflect_flags(StateVector &state, const Pipeline &pipeline);

/// -A R A^dagger R A |0>|psi>. `s` is the normalization seen by the
/// ancilla block; InputError unless |s - 2| <= 1e-3.
LcuResult oaa_step(const Pipeline &pipeline, const StateVector &psi, double s);

} // namespace circq
