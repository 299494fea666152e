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

#include "circq/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace circq {

namespace gates {

GateMatrix hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    return GateMatrix(1, {s, s, s, -s});
}

GateMatrix pauli_x() { return GateMatrix(1, {0.0, 1.0, 1.0, 0.0}); }

GateMatrix phase(double theta) {
    return GateMatrix(1, {1.0, 0.0, 0.0, std::polar(1.0, theta)});
}

GateMatrix ry(double theta) {
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    return GateMatrix(1, {c, -s, s, c});
}

GateMatrix swap() {
    return GateMatrix(2, {1.0, 0.0, 0.0, 0.0, //
                          0.0, 0.0, 1.0, 0.0, //
                          0.0, 1.0, 0.0, 0.0, //
                          0.0, 0.0, 0.0, 1.0});
}

} // namespace gates

Circuit &Circuit::add(Gate gate) {
    require(gate.control_values.empty() ||
                gate.control_values.size() == gate.controls.size(),
            "control value count mismatch in gate '" + gate.name + "'");
    gates_.push_back(std::move(gate));
    return *this;
}

Circuit &Circuit::h(int q) { return add({"H", {q}, {}, {}, gates::hadamard()}); }

Circuit &Circuit::x(int q) { return add({"X", {q}, {}, {}, gates::pauli_x()}); }

Circuit &Circuit::phase(int q, double theta) {
    return add({"P", {q}, {}, {}, gates::phase(theta)});
}

Circuit &Circuit::cphase(int control, int target, double theta) {
    return add({"CP", {target}, {control}, {}, gates::phase(theta)});
}

Circuit &Circuit::ry(int q, double theta) {
    return add({"RY", {q}, {}, {}, gates::ry(theta)});
}

Circuit &Circuit::swap(int a, int b) {
    return add({"SWAP", {a, b}, {}, {}, gates::swap()});
}

Circuit &Circuit::append(const Circuit &other) {
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
}

Circuit Circuit::inverse() const {
    Circuit out;
    out.gates_.reserve(gates_.size());
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        Gate g = *it;
        g.matrix = g.matrix.adjoint();
        if (!g.name.empty() && g.name.back() != '+') {
            g.name += "+";
        }
        out.gates_.push_back(std::move(g));
    }
    return out;
}

Circuit Circuit::controlled(int control) const {
    Circuit out;
    out.gates_.reserve(gates_.size());
    for (Gate g : gates_) {
        require(std::find(g.targets.begin(), g.targets.end(), control) ==
                        g.targets.end() &&
                    std::find(g.controls.begin(), g.controls.end(),
                              control) == g.controls.end(),
                "extra control overlaps gate qubits");
        if (!g.control_values.empty()) {
            g.control_values.push_back(true);
        }
        g.controls.push_back(control);
        g.name = "c-" + g.name;
        out.gates_.push_back(std::move(g));
    }
    return out;
}

Circuit Circuit::shifted(int offset) const {
    Circuit out = *this;
    for (auto &g : out.gates_) {
        for (auto &q : g.targets) {
            q += offset;
        }
        for (auto &q : g.controls) {
            q += offset;
        }
    }
    return out;
}

void Circuit::apply(StateVector &state, GateTally *tally) const {
    for (const auto &g : gates_) {
        std::vector<bool> values = g.control_values;
        // std::vector<bool> has no contiguous storage; copy into a buffer.
        std::unique_ptr<bool[]> buf(new bool[values.size()]);
        std::copy(values.begin(), values.end(), buf.get());
        apply_gate(state, g.targets, g.controls, g.matrix, tally,
                   std::span<const bool>(buf.get(), values.size()));
    }
}

GateTally Circuit::tally() const {
    GateTally t;
    for (const auto &g : gates_) {
        const std::size_t involved = g.targets.size() + g.controls.size();
        if (involved > 2) {
            throw InputError("gate '" + g.name + "' touches " +
                             std::to_string(involved) + " qubits");
        }
        if (involved == 1) {
            ++t.single_qubit;
        } else if (g.matrix.is_diagonal(1e-15)) {
            ++t.controlled_phase;
        } else {
            ++t.other_two_qubit;
        }
    }
    return t;
}

} // namespace circq
