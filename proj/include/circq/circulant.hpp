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
 * Circulant, block-circulant, Toeplitz and Hankel operators applied through
 * the select(V) sandwich.
 *
 * Parameter vectors that do not sum to one are normalized on construction;
 * the factor is kept in `scale` and copied into every LcuResult, so
 * raw operator * psi = scale * unnormalized output.
 */
#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "circq/classical.hpp"
#include "circq/lcu.hpp"

namespace circq {

struct CirculantSpec {
    std::vector<double> c; ///< normalized, sums to 1
    int L = 0;
    SignMode sign = SignMode::plain;
    double scale = 1.0;

    /// Validates nonnegativity and N = 2^L, then normalizes.
    static CirculantSpec make(std::vector<double> raw,
                              SignMode sign = SignMode::plain);
    [[nodiscard]] std::size_t N() const { return c.size(); }
    /// c_j == c_{N-j} within `tol` (plain sign mode only matters for c_0).
    [[nodiscard]] bool is_hermitian(double tol = 1e-12) const;
};

/// `t` holds t_{-(N-1)}, ..., t_{N-1}.
struct ToeplitzSpec {
    std::vector<double> t;
    int L = 0;
    double scale = 1.0;

    static ToeplitzSpec make(std::vector<double> raw);
    [[nodiscard]] std::size_t N() const { return (t.size() + 1) / 2; }
    /// t_j for j in [-(N-1), N-1].
    [[nodiscard]] double at(long j) const;
};

/// `h` holds h_{-(N-1)}, ..., h_{N-1}.
struct HankelSpec {
    std::vector<double> h;
    int L = 0;
    double scale = 1.0;

    static HankelSpec make(std::vector<double> raw);
    [[nodiscard]] std::size_t N() const { return (h.size() + 1) / 2; }
};

/// Unitary blocks: C_j = c_j U_j. Either explicit U_j on L' qubits, or the
/// phase rule U_j = e^{i j theta} (scalar blocks when block_qubits == 0).
struct BlockUbSpec {
    std::vector<double> c;
    int L = 0;
    int block_qubits = 0;
    std::vector<GateMatrix> blocks;
    std::optional<double> theta;
    double scale = 1.0;

    static BlockUbSpec explicit_blocks(std::vector<double> raw,
                                       std::vector<GateMatrix> blocks);
    static BlockUbSpec phase_rule(std::vector<double> raw, double theta,
                                  int block_qubits = 0);
    /// Blocks as dense matrices (for the classical assembly).
    [[nodiscard]] std::vector<classical::DenseOperator> dense_blocks() const;
};

/// Circulant blocks: sum_{j, j'} w(j, j') V_j (x) V_j'.
struct BlockCbSpec {
    Eigen::MatrixXd weights; ///< N x N', normalized
    int L = 0;
    int block_qubits = 0;
    double scale = 1.0;

    static BlockCbSpec make(Eigen::MatrixXd raw);
};

struct ApplyOptions {
    int amplify_iterations = 0;
    /// Required when amplify_iterations > 0.
    const AmplitudeOracle *psi_oracle = nullptr;
    Backend backend = Backend::perm;
};

/// Pipeline for C on a system register named "sys".
Pipeline circulant_pipeline(const CirculantSpec &spec,
                            Backend backend = Backend::perm);

LcuResult apply_circulant(const CirculantSpec &spec, const StateVector &psi,
                          const ApplyOptions &options = {});

/// Embedded circulant of size 2N: (t_0, t_-1, ..., t_-(N-1), 0, t_{N-1},
/// ..., t_1).
CirculantSpec embed_toeplitz(const ToeplitzSpec &spec);

LcuResult apply_toeplitz(const ToeplitzSpec &spec, const StateVector &psi,
                         const ApplyOptions &options = {});

/// H = T P with t_j = h_{-j} and P the all-qubit bit flip.
ToeplitzSpec hankel_as_toeplitz(const HankelSpec &spec);

LcuResult apply_hankel(const HankelSpec &spec, const StateVector &psi,
                       const ApplyOptions &options = {});

/// psi has L + L' qubits; the block factor occupies the low L'.
LcuResult apply_block_ub(const BlockUbSpec &spec, const StateVector &psi,
                         const ApplyOptions &options = {});
LcuResult apply_block_cb(const BlockCbSpec &spec, const StateVector &psi,
                         const ApplyOptions &options = {});

namespace classical {
DenseOperator dense(const CirculantSpec &spec);
DenseOperator dense(const ToeplitzSpec &spec);
DenseOperator dense(const HankelSpec &spec);
DenseOperator dense(const BlockUbSpec &spec);
DenseOperator dense(const BlockCbSpec &spec);
} // namespace classical

} // namespace circq
