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
 * Dense statevector substrate: named register layouts, gate application,
 * post-selection, sampling and state comparison.
 *
 * Qubit 0 is the least significant bit of a basis index. A register holding
 * qubits [offset, offset + width) reads its value with its own lowest qubit
 * as the LSB.
 */
#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "circq/error.hpp"

namespace circq {

using cplx = std::complex<double>;
using Amplitudes = std::vector<cplx>;
using Index = std::uint64_t;

inline constexpr int kMaxQubits = 26;
inline constexpr double kPostSelectionFloor = 1e-14;
inline constexpr double kUnitarityTolerance = 1e-10;

struct Register {
    std::string name;
    int offset = 0;
    int width = 0;

    [[nodiscard]] Index dim() const { return Index{1} << width; }
    [[nodiscard]] Index mask() const { return (dim() - 1) << offset; }
    /// Value of this register inside a full basis index.
    [[nodiscard]] Index read(Index basis) const {
        return (basis >> offset) & (dim() - 1);
    }
    /// Basis index with this register overwritten by `value`.
    [[nodiscard]] Index write(Index basis, Index value) const {
        return (basis & ~mask()) | ((value & (dim() - 1)) << offset);
    }
    [[nodiscard]] int qubit(int i) const { return offset + i; }
};

/// Ordered, contiguous, disjoint registers. Registers are appended from
/// qubit 0 upward.
class RegisterLayout {
  public:
    RegisterLayout() = default;

    RegisterLayout &add(std::string name, int width);

    [[nodiscard]] const Register &at(std::string_view name) const;
    [[nodiscard]] bool contains(std::string_view name) const;
    [[nodiscard]] int num_qubits() const { return num_qubits_; }
    [[nodiscard]] const std::vector<Register> &registers() const {
        return registers_;
    }

    friend bool operator==(const RegisterLayout &,
                           const RegisterLayout &) = default;

  private:
    std::vector<Register> registers_;
    int num_qubits_ = 0;
};

/// Gate counts by kind. Additive under circuit concatenation.
struct GateTally {
    std::size_t single_qubit = 0;
    std::size_t controlled_phase = 0;
    std::size_t other_two_qubit = 0;

    [[nodiscard]] std::size_t total() const {
        return single_qubit + controlled_phase + other_two_qubit;
    }
    GateTally &operator+=(const GateTally &o) {
        single_qubit += o.single_qubit;
        controlled_phase += o.controlled_phase;
        other_two_qubit += o.other_two_qubit;
        return *this;
    }
    friend GateTally operator+(GateTally a, const GateTally &b) {
        return a += b;
    }
    friend bool operator==(const GateTally &, const GateTally &) = default;
};

/// Row-major square matrix acting on 2^k amplitudes.
struct GateMatrix {
    int num_qubits = 1;
    std::vector<cplx> data;

    GateMatrix() = default;
    GateMatrix(int k, std::vector<cplx> entries);

    [[nodiscard]] Index dim() const { return Index{1} << num_qubits; }
    [[nodiscard]] cplx operator()(Index r, Index c) const {
        return data[r * dim() + c];
    }
    [[nodiscard]] GateMatrix adjoint() const;
    [[nodiscard]] bool is_unitary(double tol = kUnitarityTolerance) const;
    [[nodiscard]] bool is_diagonal(double tol = 0.0) const;
};

class StateVector {
  public:
    /// |0...0> on the given layout.
    explicit StateVector(RegisterLayout layout);
    StateVector(RegisterLayout layout, Amplitudes amplitudes);
    /// Single register of `width` qubits named `name`.
    static StateVector zeros(int width, std::string name = "q");
    static StateVector basis(RegisterLayout layout, Index index);

    [[nodiscard]] int num_qubits() const { return layout_.num_qubits(); }
    [[nodiscard]] Index dim() const { return amplitudes_.size(); }
    [[nodiscard]] const RegisterLayout &layout() const { return layout_; }
    [[nodiscard]] const Register &reg(std::string_view name) const {
        return layout_.at(name);
    }

    [[nodiscard]] const Amplitudes &amplitudes() const { return amplitudes_; }
    [[nodiscard]] Amplitudes &amplitudes() { return amplitudes_; }
    [[nodiscard]] cplx operator[](Index i) const { return amplitudes_[i]; }
    [[nodiscard]] cplx &operator[](Index i) { return amplitudes_[i]; }

    /// Accumulated post-selection survival probability (1 for fresh states).
    [[nodiscard]] double norm_tracked() const { return norm_tracked_; }
    void set_norm_tracked(double v) { norm_tracked_ = v; }

    [[nodiscard]] double norm_squared() const;
    /// Rescale to unit norm. Throws PostSelectionError on a zero state.
    void normalize();

  private:
    RegisterLayout layout_;
    Amplitudes amplitudes_;
    double norm_tracked_ = 1.0;
};

/// Apply `matrix` to `targets`, conditioned on every control qubit holding
/// the matching bit of `control_values` (all ones when empty).
///
/// When `tally` is supplied the gate must touch at most two qubits in total
/// and is counted by kind.
void apply_gate(StateVector &state, std::span<const int> targets,
                std::span<const int> controls, const GateMatrix &matrix,
                GateTally *tally = nullptr,
                std::span<const bool> control_values = {});

/// Multiply each amplitude by `factor(basis index)`. Callers are
/// responsible for unit modulus when a unitary is intended.
void apply_diagonal(StateVector &state,
                    const std::function<cplx(Index)> &factor);

/// out[map(i)] = in[i]. `map` must be a bijection on [0, dim).
void permute_basis(StateVector &state, const std::function<Index(Index)> &map);

/// Post-select `reg` onto `outcome`. Returns the outcome probability,
/// renormalizes the state and multiplies norm_tracked by the probability.
double project_register(StateVector &state, const Register &reg,
                        Index outcome);

/// Sample `reg` from its marginal distribution and collapse the state.
Index measure_sample(StateVector &state, const Register &reg,
                     std::uint64_t seed);
Index measure_sample(StateVector &state, const Register &reg,
                     std::mt19937_64 &rng);

/// Marginal probabilities of `reg` (length 2^width).
std::vector<double> register_marginals(const StateVector &state,
                                       const Register &reg);

enum class DistanceMode { exact, phase_invariant };

/// Exact: ||a - b||. Phase invariant: sqrt(2 - 2|<a|b>|) for unit vectors,
/// generalised as min over theta of ||a - e^{i theta} b||.
double state_distance(const StateVector &a, const StateVector &b,
                      DistanceMode mode);
double state_distance(std::span<const cplx> a, std::span<const cplx> b,
                      DistanceMode mode);

cplx inner_product(std::span<const cplx> a, std::span<const cplx> b);
double norm(std::span<const cplx> v);

/// Tensor product with `high` on the upper qubits. Register names must be
/// unique across both layouts.
StateVector tensor(const StateVector &low, const StateVector &high);

/// Amplitudes of the low `low_qubits` qubits on the branch where every
/// higher qubit is zero. Not renormalized.
Amplitudes low_block(const StateVector &state, int low_qubits);

} // namespace circq
