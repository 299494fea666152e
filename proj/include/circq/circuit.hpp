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
 * Ordered gate lists with formal inverses, extra-control lifting and
 * gate-kind tallies.
 */
#pragma once

#include <string>
#include <vector>

#include "circq/state_vector.hpp"

namespace circq {

namespace gates {
GateMatrix hadamard();
GateMatrix pauli_x();
/// diag(1, e^{i theta})
GateMatrix phase(double theta);
/// Real rotation [[cos t/2, -sin t/2], [sin t/2, cos t/2]].
GateMatrix ry(double theta);
GateMatrix swap();
} // namespace gates

struct Gate {
    std::string name;
    std::vector<int> targets;
    std::vector<int> controls;
    /// Empty means every control must be 1.
    std::vector<bool> control_values;
    GateMatrix matrix;
};

class Circuit {
  public:
    Circuit &add(Gate gate);
    Circuit &h(int q);
    Circuit &x(int q);
    Circuit &phase(int q, double theta);
    Circuit &cphase(int control, int target, double theta);
    Circuit &ry(int q, double theta);
    Circuit &swap(int a, int b);
    Circuit &append(const Circuit &other);

    /// Reversed gate order with every matrix replaced by its adjoint.
    [[nodiscard]] Circuit inverse() const;
    /// Every gate gains `control` as an extra (value 1) control.
    [[nodiscard]] Circuit controlled(int control) const;
    /// Every qubit index shifted by `offset`.
    [[nodiscard]] Circuit shifted(int offset) const;

    void apply(StateVector &state, GateTally *tally = nullptr) const;
    /// Counts by kind. Throws InputError if a gate touches more than two
    /// qubits.
    [[nodiscard]] GateTally tally() const;

    [[nodiscard]] const std::vector<Gate> &gates() const { return gates_; }
    [[nodiscard]] std::size_t size() const { return gates_.size(); }
    [[nodiscard]] bool empty() const { return gates_.empty(); }

  private:
    std::vector<Gate> gates_;
};

} // namespace circq
