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

#include "circq/state_prep.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

namespace circq {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

Circuit tree_loading_circuit(const Amplitudes &amps, int width) {
    const Index dim = Index{1} << width;
    std::vector<double> mass(dim);
    for (Index k = 0; k < dim; ++k) {
        mass[k] = std::norm(amps[k]);
    }

    Circuit c;
    for (int level = 0; level < width; ++level) {
        const int q = width - 1 - level;
        for (Index prefix = 0; prefix < (Index{1} << level); ++prefix) {
            // Basis states k whose bits above q equal `prefix`, split by bit q.
            const Index base = prefix << (q + 1);
            const Index half = Index{1} << q;
            double m0 = 0.0, m1 = 0.0;
            for (Index r = 0; r < half; ++r) {
                m0 += mass[base | r];
                m1 += mass[base | half | r];
            }
            if (m0 + m1 == 0.0 || m1 == 0.0) {
                continue;
            }
            const double theta = 2.0 * std::atan2(std::sqrt(m1), std::sqrt(m0));
            Gate g{"RY", {q}, {}, {}, gates::ry(theta)};
            for (int b = width - 1; b > q; --b) {
                g.controls.push_back(b);
                g.control_values.push_back(((prefix >> (b - q - 1)) & 1U) != 0);
            }
            c.add(std::move(g));
        }
    }

    // Phases, one conditioned diagonal per pair (2m, 2m+1).
    for (Index m = 0; m < dim / 2; ++m) {
        const cplx a0 = amps[2 * m], a1 = amps[2 * m + 1];
        const double ph0 = std::abs(a0) > 0 ? std::arg(a0) : 0.0;
        const double ph1 = std::abs(a1) > 0 ? std::arg(a1) : 0.0;
        if (ph0 == 0.0 && ph1 == 0.0) {
            continue;
        }
        Gate g{"PH",
               {0},
               {},
               {},
               GateMatrix(1, {std::polar(1.0, ph0), 0.0, 0.0,
                              std::polar(1.0, ph1)})};
        for (int b = 1; b < width; ++b) {
            g.controls.push_back(b);
            g.control_values.push_back(((m >> (b - 1)) & 1U) != 0);
        }
        c.add(std::move(g));
    }
    return c;
}

} // namespace

AmplitudeOracle AmplitudeOracle::build(Amplitudes amplitudes) {
    require(!amplitudes.empty(), "oracle input is empty");
    require(is_power_of_two(amplitudes.size()),
            "oracle input length " + std::to_string(amplitudes.size()) +
                " is not a power of two");
    const double n2 = norm(amplitudes) * norm(amplitudes);
    require(std::abs(n2 - 1.0) <= 1e-10,
            "oracle input is not normalized (norm^2 = " + std::to_string(n2) +
                ")");
    AmplitudeOracle o;
    o.width_ = std::countr_zero(amplitudes.size());
    require(o.width_ >= 1, "oracle needs at least one qubit");
    o.circuit_ = tree_loading_circuit(amplitudes, o.width_);
    o.amplitudes_ = std::move(amplitudes);
    return o;
}

AmplitudeOracle
AmplitudeOracle::from_probabilities(std::span<const double> probabilities) {
    Amplitudes amps;
    amps.reserve(probabilities.size());
    for (double p : probabilities) {
        require(p >= 0.0, "O_c weights must be nonnegative");
        amps.emplace_back(std::sqrt(p), 0.0);
    }
    return build(std::move(amps));
}

Circuit AmplitudeOracle::circuit(const Register &reg) const {
    require(reg.width == width_,
            "oracle of width " + std::to_string(width_) +
                " applied to register '" + reg.name + "' of width " +
                std::to_string(reg.width));
    return circuit_.shifted(reg.offset);
}

void AmplitudeOracle::apply(StateVector &state, const Register &reg,
                            bool inverse) const {
    const Circuit c = circuit(reg);
    (inverse ? c.inverse() : c).apply(state);
}

void AmplitudeOracle::apply_controlled(StateVector &state, int control,
                                       const Register &reg,
                                       bool inverse) const {
    require(control < reg.offset || control >= reg.offset + reg.width,
            "control qubit lies inside register '" + reg.name + "'");
    const Circuit c = circuit(reg).controlled(control);
    (inverse ? c.inverse() : c).apply(state);
}

double unary_weight_normalization(double ratio, int K) {
    double term = 1.0, s = 1.0;
    for (int k = 1; k <= K; ++k) {
        term *= ratio / k;
        s += term;
    }
    return s;
}

Circuit unary_weights_circuit(const Register &reg, double ratio) {
    require(ratio > 0.0 && ratio <= std::numbers::ln2 + 1e-9,
            "unary weight ratio " + std::to_string(ratio) +
                " outside (0, ln 2]");
    const int K = reg.width;
    std::vector<double> w(K + 1);
    w[0] = 1.0;
    for (int k = 1; k <= K; ++k) {
        w[k] = w[k - 1] * ratio / k;
    }
    // tail[k] = sum_{m >= k} w[m]
    std::vector<double> tail(K + 2, 0.0);
    for (int k = K; k >= 0; --k) {
        tail[k] = tail[k + 1] + w[k];
    }
    Circuit c;
    for (int i = 0; i < K; ++i) {
        const double theta =
            2.0 * std::atan2(std::sqrt(tail[i + 1]), std::sqrt(w[i]));
        if (i == 0) {
            c.ry(reg.qubit(0), theta);
        } else {
            c.add({"CRY", {reg.qubit(i)}, {reg.qubit(i - 1)}, {}, gates::ry(theta)});
        }
    }
    return c;
}

void prepare_unary_weights(StateVector &state, const Register &reg,
                           double ratio) {
    unary_weights_circuit(reg, ratio).apply(state);
}

} // namespace circq
