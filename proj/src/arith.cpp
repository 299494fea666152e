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

#include "circq/arith.hpp"

#include <cmath>
#include <numbers>

namespace circq {

namespace {

// QFT with reversed output bit order: after the loop, qubit q of the
// register holds Fourier bit (L - 1 - q).
Circuit qft_noswap(const Register &reg) {
    Circuit c;
    for (int q = reg.width - 1; q >= 0; --q) {
        c.h(reg.qubit(q));
        for (int a = q - 1; a >= 0; --a) {
            c.cphase(reg.qubit(a), reg.qubit(q),
                     std::numbers::pi / static_cast<double>(Index{1} << (q - a)));
        }
    }
    return c;
}

void require_same_width(const Register &index, const Register &target) {
    require(index.width == target.width,
            "index register '" + index.name + "' (" +
                std::to_string(index.width) + " qubits) and target '" +
                target.name + "' (" + std::to_string(target.width) +
                " qubits) differ in width");
    require(index.offset + index.width <= target.offset ||
                target.offset + target.width <= index.offset,
            "index and target registers overlap");
}

void shift_by_register(StateVector &state, const Register &index,
                       const Register &target, int sign, Backend backend,
                       GateTally *tally) {
    require_same_width(index, target);
    if (backend == Backend::gate) {
        fourier_adder_circuit(index, target, sign).apply(state, tally);
        return;
    }
    const Index mod_mask = target.dim() - 1;
    permute_basis(state, [&](Index i) {
        const Index j = index.read(i);
        const Index k = target.read(i);
        const Index shifted = sign > 0 ? (k + j) & mod_mask
                                       : (k - j) & mod_mask;
        return target.write(i, shifted);
    });
}

void shift_by_constant(StateVector &state, const Register &target,
                       Index value, int sign, Backend backend,
                       GateTally *tally) {
    if (backend == Backend::gate) {
        fourier_constant_adder_circuit(target, value, sign)
            .apply(state, tally);
        return;
    }
    const Index mod_mask = target.dim() - 1;
    permute_basis(state, [&](Index i) {
        const Index k = target.read(i);
        const Index shifted = sign > 0 ? (k + value) & mod_mask
                                       : (k - value) & mod_mask;
        return target.write(i, shifted);
    });
}

} // namespace

Circuit qft_circuit(const Register &reg, bool inverse, bool swaps) {
    require(reg.width >= 1, "QFT needs a register of width >= 1");
    Circuit c = qft_noswap(reg);
    if (swaps) {
        for (int q = 0; q < reg.width / 2; ++q) {
            c.swap(reg.qubit(q), reg.qubit(reg.width - 1 - q));
        }
    }
    return inverse ? c.inverse() : c;
}

void qft(StateVector &state, const Register &reg, bool inverse,
         GateTally *tally) {
    qft_circuit(reg, inverse).apply(state, tally);
}

Circuit fourier_adder_circuit(const Register &index, const Register &target,
                              int sign) {
    require_same_width(index, target);
    require(sign == 1 || sign == -1, "adder sign must be +1 or -1");
    const Circuit to_fourier = qft_noswap(target);
    Circuit c = to_fourier;
    // Target qubit q carries Fourier bit b = L-1-q; index bit a contributes
    // 2 pi 2^{a+b} / 2^L, which is trivial unless a <= q.
    for (int q = 0; q < target.width; ++q) {
        for (int a = 0; a <= q; ++a) {
            c.cphase(index.qubit(a), target.qubit(q),
                     sign * std::numbers::pi /
                         static_cast<double>(Index{1} << (q - a)));
        }
    }
    c.append(to_fourier.inverse());
    return c;
}

Circuit fourier_constant_adder_circuit(const Register &target, Index value,
                                       int sign) {
    require(sign == 1 || sign == -1, "adder sign must be +1 or -1");
    const Circuit to_fourier = qft_noswap(target);
    Circuit c = to_fourier;
    for (int q = 0; q < target.width; ++q) {
        double angle = 0.0;
        for (int a = 0; a <= q; ++a) {
            if ((value >> a) & 1U) {
                angle += std::numbers::pi /
                         static_cast<double>(Index{1} << (q - a));
            }
        }
        angle = std::fmod(angle, 2.0 * std::numbers::pi);
        if (angle != 0.0) {
            c.phase(target.qubit(q), sign * angle);
        }
    }
    c.append(to_fourier.inverse());
    return c;
}

void controlled_subtract(StateVector &state, const Register &index,
                         const Register &target, Backend backend,
                         GateTally *tally) {
    shift_by_register(state, index, target, -1, backend, tally);
}

void controlled_add(StateVector &state, const Register &index,
                    const Register &target, Backend backend,
                    GateTally *tally) {
    shift_by_register(state, index, target, +1, backend, tally);
}

void subtract_constant(StateVector &state, const Register &target,
                       Index value, Backend backend, GateTally *tally) {
    shift_by_constant(state, target, value, -1, backend, tally);
}

void add_constant(StateVector &state, const Register &target, Index value,
                  Backend backend, GateTally *tally) {
    shift_by_constant(state, target, value, +1, backend, tally);
}

void bitflip_all(StateVector &state, const Register &reg, GateTally *tally) {
    Circuit c;
    for (int q = 0; q < reg.width; ++q) {
        c.x(reg.qubit(q));
    }
    c.apply(state, tally);
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
    require(x.size() == y.size() && x.size() >= 2,
            "slope fit needs at least two points");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        require(x[i] > 0 && y[i] > 0, "log-log fit needs positive data");
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ScalingTable adder_gate_scaling(std::span<const int> widths) {
    ScalingTable table;
    std::vector<double> xs, ys;
    for (int L : widths) {
        require(L >= 1, "adder width must be >= 1");
        RegisterLayout layout;
        layout.add("index", L).add("target", L);
        // Tally from the constructed circuit; no state needed.
        const Circuit c = fourier_adder_circuit(layout.at("index"),
                                                layout.at("target"), -1);
        table.rows.push_back({L, c.tally()});
        xs.push_back(L);
        ys.push_back(static_cast<double>(c.tally().total()));
    }
    if (xs.size() >= 2) {
        table.exponent = loglog_slope(xs, ys);
    }
    return table;
}

} // namespace circq
