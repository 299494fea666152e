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
 * Amplitude-loading oracles.
 *
 * An AmplitudeOracle loads a normalized vector into an L-qubit register by
 * binary-tree rotations: the qubits are fixed from the most significant
 * down, each rotation conditioned on the already-fixed higher bits. Complex
 * inputs get a final layer of conditioned phases. Zero-mass subtrees emit no
 * gates.
 */
#pragma once

#include <span>

#include "circq/circuit.hpp"
#include "circq/state_vector.hpp"

namespace circq {

class AmplitudeOracle {
  public:
    /// General complex amplitudes (O_psi). Length 2^L, unit norm within
    /// 1e-10.
    static AmplitudeOracle build(Amplitudes amplitudes);
    /// O_c: loads sqrt(c_j). `probabilities` must be nonnegative and sum to
    /// 1 within 1e-10.
    static AmplitudeOracle from_probabilities(std::span<const double> probabilities);

    [[nodiscard]] int width() const { return width_; }
    [[nodiscard]] const Amplitudes &amplitudes() const { return amplitudes_; }

    /// Loading circuit placed on `reg`.
    [[nodiscard]] Circuit circuit(const Register &reg) const;

    void apply(StateVector &state, const Register &reg,
               bool inverse = false) const;
    /// |0><0| (x) I + |1><1| (x) O on `reg`, controlled by `control`.
    void apply_controlled(StateVector &state, int control, const Register &reg,
                          bool inverse = false) const;

  private:
    AmplitudeOracle() = default;

    int width_ = 0;
    Amplitudes amplitudes_;
    Circuit circuit_; ///< on qubits [0, width)
};

/// The R_ini circuit on `reg` (K qubits): |0^K> -> sum_k sqrt(w_k / s)
/// |1^k 0^{K-k}> with w_k = ratio^k / k! and s = sum_k w_k. Qubit 0 of the
/// register is the first unary digit; qubit k is rotated conditioned on
/// qubit k-1.
Circuit unary_weights_circuit(const Register &reg, double ratio);

/// Sum_{k=0}^{K} ratio^k / k!.
double unary_weight_normalization(double ratio, int K);

void prepare_unary_weights(StateVector &state, const Register &reg,
                           double ratio);

} // namespace circq
