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
 * Exact classical ground truth for every quantum construction: dense
 * structured matrices, DFT eigenvalues, functions of circulants through
 * diagonalization, cyclic convolution and condition numbers.
 *
 * Everything here is computed by direct summation. Nothing in this header
 * depends on the simulator.
 */
#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace circq {

/// negate_v0 realizes -c_0 V_0 + sum_{j>=1} c_j V_j.
enum class SignMode { plain, negate_v0 };

namespace classical {

using cplx = std::complex<double>;
using Vector = std::vector<cplx>;
using DenseOperator = Eigen::MatrixXcd;

Vector to_complex(std::span<const double> v);

/// Entry (k, m) = c_{(m - k) mod N}; negate_v0 flips the sign of c_0.
DenseOperator dense_circulant(std::span<const cplx> c,
                              SignMode sign = SignMode::plain);
DenseOperator dense_circulant(std::span<const double> c,
                              SignMode sign = SignMode::plain);

/// a (x) b with `a` on the high index bits.
DenseOperator kron(const DenseOperator &a, const DenseOperator &b);

/// V_j = sum_k |(k - j) mod N><k|
DenseOperator shift_matrix(std::size_t N, std::size_t j);

/// F_{kj} = e^{2 pi i jk / N} / sqrt(N)
DenseOperator fourier_matrix(std::size_t N);

/// F v (or F^dagger v), direct O(N^2) sum.
Vector dft(std::span<const cplx> v, bool inverse = false);

/// Lambda_k = sum_j c_j e^{2 pi i jk / N}
Vector dft_eigenvalues(std::span<const cplx> c, SignMode sign = SignMode::plain);
Vector dft_eigenvalues(std::span<const double> c,
                       SignMode sign = SignMode::plain);

enum class MatFun { matvec, expm, inverse };

/// f(C) psi evaluated as F f(Lambda) F^dagger psi. expm is e^{-i C t}.
/// Throws std::domain_error for inverse when min |Lambda_k| <= 1e-12.
Vector oracle_matfun(std::span<const cplx> c, std::span<const cplx> psi,
                     MatFun fun, double t = 0.0,
                     SignMode sign = SignMode::plain);
Vector oracle_matfun(std::span<const double> c, std::span<const cplx> psi,
                     MatFun fun, double t = 0.0,
                     SignMode sign = SignMode::plain);

Vector matvec(const DenseOperator &m, std::span<const cplx> v);

/// (a * b)_j = sum_{j1 + j2 = j mod N} a_j1 b_j2, direct double sum.
Vector cyclic_convolution(std::span<const cplx> a, std::span<const cplx> b);
std::vector<double> cyclic_convolution(std::span<const double> a,
                                       std::span<const double> b);

/// max |Lambda| / min |Lambda|; +infinity when min |Lambda| <= 1e-12.
double condition_number(std::span<const double> c,
                        SignMode sign = SignMode::plain);
double condition_number(std::span<const cplx> c,
                        SignMode sign = SignMode::plain);

/// `t` holds t_{-(N-1)}, ..., t_{N-1}; T_{ik} = t_{i-k}.
DenseOperator dense_toeplitz(std::span<const double> t);
/// `h` holds h_{-(N-1)}, ..., h_{N-1}; H_{ik} = h_{N-1-i-k}.
DenseOperator dense_hankel(std::span<const double> h);

/// sum_j V_j (x) C_j with C_j = c_j U_j (first factor on the high qubits).
DenseOperator dense_block_ub(std::span<const cplx> c,
                             std::span<const DenseOperator> blocks);
/// sum_{j, j'} w(j, j') V_j (x) V_j'.
DenseOperator dense_block_cb(const Eigen::MatrixXd &weights);

} // namespace classical
} // namespace circq
