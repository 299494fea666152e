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

#include "circq/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace circq {

RegisterLayout &RegisterLayout::add(std::string name, int width) {
    require(width >= 0, "register '" + name + "' has negative width");
    require(!contains(name), "duplicate register name '" + name + "'");
    registers_.push_back(Register{std::move(name), num_qubits_, width});
    num_qubits_ += width;
    return *this;
}

const Register &RegisterLayout::at(std::string_view name) const {
    for (const auto &r : registers_) {
        if (r.name == name) {
            return r;
        }
    }
    throw InputError("unknown register '" + std::string(name) + "'");
}

bool RegisterLayout::contains(std::string_view name) const {
    return std::any_of(registers_.begin(), registers_.end(),
                       [&](const Register &r) { return r.name == name; });
}

GateMatrix::GateMatrix(int k, std::vector<cplx> entries)
    : num_qubits(k), data(std::move(entries)) {
    require(k >= 1, "gate matrix needs at least one qubit");
    require(data.size() == dim() * dim(), "gate matrix has wrong size");
}

GateMatrix GateMatrix::adjoint() const {
    GateMatrix out = *this;
    const Index d = dim();
    for (Index r = 0; r < d; ++r) {
        for (Index c = 0; c < d; ++c) {
            out.data[r * d + c] = std::conj(data[c * d + r]);
        }
    }
    return out;
}

bool GateMatrix::is_unitary(double tol) const {
    const Index d = dim();
    for (Index r = 0; r < d; ++r) {
        for (Index c = 0; c < d; ++c) {
            cplx acc = 0.0;
            for (Index k = 0; k < d; ++k) {
                acc += std::conj(data[k * d + r]) * data[k * d + c];
            }
            const cplx expected = (r == c) ? 1.0 : 0.0;
            if (std::abs(acc - expected) > tol) {
                return false;
            }
        }
    }
    return true;
}

bool GateMatrix::is_diagonal(double tol) const {
    const Index d = dim();
    for (Index r = 0; r < d; ++r) {
        for (Index c = 0; c < d; ++c) {
            if (r != c && std::abs(data[r * d + c]) > tol) {
                return false;
            }
        }
    }
    return true;
}

StateVector::StateVector(RegisterLayout layout)
    : layout_(std::move(layout)) {
    if (layout_.num_qubits() > kMaxQubits) {
        throw ResourceError("dense state of " +
                            std::to_string(layout_.num_qubits()) +
                            " qubits exceeds the cap of " +
                            std::to_string(kMaxQubits));
    }
    amplitudes_.assign(Index{1} << layout_.num_qubits(), cplx{0.0, 0.0});
    amplitudes_[0] = 1.0;
}

StateVector::StateVector(RegisterLayout layout, Amplitudes amplitudes)
    : StateVector(std::move(layout)) {
    require(amplitudes.size() == amplitudes_.size(),
            "amplitude vector length " + std::to_string(amplitudes.size()) +
                " does not match 2^" + std::to_string(num_qubits()));
    amplitudes_ = std::move(amplitudes);
}

StateVector StateVector::zeros(int width, std::string name) {
    RegisterLayout layout;
    layout.add(std::move(name), width);
    return StateVector(std::move(layout));
}

StateVector StateVector::basis(RegisterLayout layout, Index index) {
    StateVector s(std::move(layout));
    require(index < s.dim(), "basis index out of range");
    s.amplitudes_[0] = 0.0;
    s.amplitudes_[index] = 1.0;
    return s;
}

double StateVector::norm_squared() const {
    double acc = 0.0;
    for (const auto &a : amplitudes_) {
        acc += std::norm(a);
    }
    return acc;
}

void StateVector::normalize() {
    const double n2 = norm_squared();
    if (n2 < kPostSelectionFloor) {
        throw PostSelectionError("cannot normalize a zero state");
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (auto &a : amplitudes_) {
        a *= inv;
    }
}

namespace {

void check_qubits(const StateVector &state, std::span<const int> targets,
                  std::span<const int> controls) {
    std::vector<int> all(targets.begin(), targets.end());
    all.insert(all.end(), controls.begin(), controls.end());
    for (int q : all) {
        require(q >= 0 && q < state.num_qubits(),
                "qubit index " + std::to_string(q) + " out of range for " +
                    std::to_string(state.num_qubits()) + "-qubit state");
    }
    std::sort(all.begin(), all.end());
    require(std::adjacent_find(all.begin(), all.end()) == all.end(),
            "target and control qubits overlap");
}

void count_gate(GateTally &tally, const GateMatrix &m, std::size_t n_targets,
                std::size_t n_controls) {
    const std::size_t involved = n_targets + n_controls;
    if (involved > 2) {
        throw InputError("gate-level tally only accepts one- or two-qubit "
                         "gates, got " +
                         std::to_string(involved) + " qubits");
    }
    if (involved == 1) {
        ++tally.single_qubit;
    } else if (m.is_diagonal(1e-15)) {
        ++tally.controlled_phase;
    } else {
        ++tally.other_two_qubit;
    }
}

} // namespace

void apply_gate(StateVector &state, std::span<const int> targets,
                std::span<const int> controls, const GateMatrix &matrix,
                GateTally *tally, std::span<const bool> control_values) {
    require(!targets.empty(), "gate needs at least one target");
    require(static_cast<int>(targets.size()) == matrix.num_qubits,
            "gate matrix size does not match target count");
    require(control_values.empty() ||
                control_values.size() == controls.size(),
            "control value count does not match control count");
    check_qubits(state, targets, controls);
    require(matrix.is_unitary(), "gate matrix is not unitary");
    if (tally != nullptr) {
        count_gate(*tally, matrix, targets.size(), controls.size());
    }

    Index target_mask = 0;
    for (int q : targets) {
        target_mask |= Index{1} << q;
    }
    Index control_mask = 0;
    Index control_pattern = 0;
    for (std::size_t i = 0; i < controls.size(); ++i) {
        const Index bit = Index{1} << controls[i];
        control_mask |= bit;
        if (control_values.empty() || control_values[i]) {
            control_pattern |= bit;
        }
    }

    auto &amps = state.amplitudes();
    const Index dim = state.dim();

    if (targets.size() == 1) {
        const Index bit = Index{1} << targets[0];
        const cplx m00 = matrix.data[0], m01 = matrix.data[1];
        const cplx m10 = matrix.data[2], m11 = matrix.data[3];
        for (Index i = 0; i < dim; ++i) {
            if ((i & bit) != 0 || (i & control_mask) != control_pattern) {
                continue;
            }
            const cplx a0 = amps[i];
            const cplx a1 = amps[i | bit];
            amps[i] = m00 * a0 + m01 * a1;
            amps[i | bit] = m10 * a0 + m11 * a1;
        }
        return;
    }

    const Index sub = matrix.dim();
    std::vector<Index> offsets(sub, 0);
    for (Index s = 0; s < sub; ++s) {
        for (std::size_t t = 0; t < targets.size(); ++t) {
            if ((s >> t) & 1U) {
                offsets[s] |= Index{1} << targets[t];
            }
        }
    }
    std::vector<cplx> in(sub), out(sub);
    for (Index i = 0; i < dim; ++i) {
        if ((i & target_mask) != 0 || (i & control_mask) != control_pattern) {
            continue;
        }
        for (Index s = 0; s < sub; ++s) {
            in[s] = amps[i | offsets[s]];
        }
        for (Index r = 0; r < sub; ++r) {
            cplx acc = 0.0;
            for (Index c = 0; c < sub; ++c) {
                acc += matrix.data[r * sub + c] * in[c];
            }
            out[r] = acc;
        }
        for (Index s = 0; s < sub; ++s) {
            amps[i | offsets[s]] = out[s];
        }
    }
}

void apply_diagonal(StateVector &state,
                    const std::function<cplx(Index)> &factor) {
    auto &amps = state.amplitudes();
    for (Index i = 0; i < amps.size(); ++i) {
        amps[i] *= factor(i);
    }
}

void permute_basis(StateVector &state,
                   const std::function<Index(Index)> &map) {
    const auto &in = state.amplitudes();
    Amplitudes out(in.size(), cplx{0.0, 0.0});
    std::vector<bool> hit(in.size(), false);
    for (Index i = 0; i < in.size(); ++i) {
        const Index j = map(i);
        require(j < in.size() && !hit[j], "basis map is not a bijection");
        hit[j] = true;
        out[j] = in[i];
    }
    state.amplitudes() = std::move(out);
}

double project_register(StateVector &state, const Register &reg,
                        Index outcome) {
    require(outcome < reg.dim(), "outcome " + std::to_string(outcome) +
                                     " out of range for register '" +
                                     reg.name + "'");
    require(reg.offset + reg.width <= state.num_qubits(),
            "register '" + reg.name + "' outside state");
    auto &amps = state.amplitudes();
    double p = 0.0;
    for (Index i = 0; i < amps.size(); ++i) {
        if (reg.read(i) == outcome) {
            p += std::norm(amps[i]);
        } else {
            amps[i] = 0.0;
        }
    }
    if (p < kPostSelectionFloor) {
        throw PostSelectionError("post-selection impossible: register '" +
                                 reg.name + "' = " + std::to_string(outcome) +
                                 " has probability " + std::to_string(p));
    }
    const double inv = 1.0 / std::sqrt(p);
    for (auto &a : amps) {
        a *= inv;
    }
    state.set_norm_tracked(state.norm_tracked() * p);
    return p;
}

std::vector<double> register_marginals(const StateVector &state,
                                       const Register &reg) {
    std::vector<double> p(reg.dim(), 0.0);
    const auto &amps = state.amplitudes();
    for (Index i = 0; i < amps.size(); ++i) {
        p[reg.read(i)] += std::norm(amps[i]);
    }
    return p;
}

Index measure_sample(StateVector &state, const Register &reg,
                     std::mt19937_64 &rng) {
    const auto p = register_marginals(state, reg);
    const double total = std::accumulate(p.begin(), p.end(), 0.0);
    // 53 random bits -> uniform double in [0, 1).
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
    double acc = 0.0;
    Index outcome = 0;
    for (Index k = 0; k < p.size(); ++k) {
        if (p[k] == 0.0) {
            continue;
        }
        outcome = k;
        acc += p[k];
        if (u < acc) {
            break;
        }
    }
    project_register(state, reg, outcome);
    return outcome;
}

Index measure_sample(StateVector &state, const Register &reg,
                     std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return measure_sample(state, reg, rng);
}

cplx inner_product(std::span<const cplx> a, std::span<const cplx> b) {
    require(a.size() == b.size(), "dimension mismatch in inner product");
    cplx acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double norm(std::span<const cplx> v) {
    double acc = 0.0;
    for (const auto &x : v) {
        acc += std::norm(x);
    }
    return std::sqrt(acc);
}

double state_distance(std::span<const cplx> a, std::span<const cplx> b,
                      DistanceMode mode) {
    require(a.size() == b.size(),
            "dimension mismatch: " + std::to_string(a.size()) + " vs " +
                std::to_string(b.size()));
    if (mode == DistanceMode::exact) {
        double acc = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            acc += std::norm(a[i] - b[i]);
        }
        return std::sqrt(acc);
    }
    // Align b to a with the optimal phase, then take the exact distance;
    // the closed form sqrt(2 - 2|<a|b>|) loses half the digits near zero.
    const cplx ov = inner_product(b, a);
    const cplx ph = std::abs(ov) > 0.0 ? ov / std::abs(ov) : cplx(1.0);
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::norm(a[i] - ph * b[i]);
    }
    return std::sqrt(acc);
}

double state_distance(const StateVector &a, const StateVector &b,
                      DistanceMode mode) {
    require(a.num_qubits() == b.num_qubits(),
            "dimension mismatch: " + std::to_string(a.num_qubits()) +
                " vs " + std::to_string(b.num_qubits()) + " qubits");
    return state_distance(a.amplitudes(), b.amplitudes(), mode);
}

StateVector tensor(const StateVector &low, const StateVector &high) {
    RegisterLayout layout = low.layout();
    for (const auto &r : high.layout().registers()) {
        layout.add(r.name, r.width);
    }
    StateVector out(std::move(layout));
    const int shift = low.num_qubits();
    auto &amps = out.amplitudes();
    for (Index h = 0; h < high.dim(); ++h) {
        for (Index l = 0; l < low.dim(); ++l) {
            amps[l | (h << shift)] = low[l] * high[h];
        }
    }
    out.set_norm_tracked(low.norm_tracked() * high.norm_tracked());
    return out;
}

Amplitudes low_block(const StateVector &state, int low_qubits) {
    require(low_qubits >= 0 && low_qubits <= state.num_qubits(),
            "low block width out of range");
    const auto &amps = state.amplitudes();
    return Amplitudes(amps.begin(),
                      amps.begin() + static_cast<std::ptrdiff_t>(
                                         Index{1} << low_qubits));
}

} // namespace circq
