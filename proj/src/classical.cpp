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

#include "circq/classical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "circq/error.hpp"

namespace circq::classical {

namespace {

cplx root_of_unity(std::size_t power, std::size_t N) {
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>(power % N) /
        static_cast<double>(N);
    return {std::cos(angle), std::sin(angle)};
}

Vector signed_copy(std::span<const cplx> c, SignMode sign) {
    Vector out(c.begin(), c.end());
    if (sign == SignMode::negate_v0 && !out.empty()) {
        out[0] = -out[0];
    }
    return out;
}

} // namespace

Vector to_complex(std::span<const double> v) {
    return Vector(v.begin(), v.end());
}

DenseOperator dense_circulant(std::span<const cplx> c, SignMode sign) {
    require(!c.empty(), "circulant needs N >= 1");
    const Vector cs = signed_copy(c, sign);
    const auto N = static_cast<Eigen::Index>(cs.size());
    DenseOperator m(N, N);
    for (Eigen::Index k = 0; k < N; ++k) {
        for (Eigen::Index col = 0; col < N; ++col) {
            m(k, col) = cs[static_cast<std::size_t>(((col - k) % N + N) % N)];
        }
    }
    return m;
}

DenseOperator dense_circulant(std::span<const double> c, SignMode sign) {
    const Vector cc = to_complex(c);
    return dense_circulant(cc, sign);
}

DenseOperator kron(const DenseOperator &a, const DenseOperator &b) {
    DenseOperator out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        for (Eigen::Index c = 0; c < a.cols(); ++c) {
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) =
                a(r, c) * b;
        }
    }
    return out;
}

DenseOperator shift_matrix(std::size_t N, std::size_t j) {
    DenseOperator v = DenseOperator::Zero(static_cast<Eigen::Index>(N),
                                          static_cast<Eigen::Index>(N));
    for (std::size_t k = 0; k < N; ++k) {
        v(static_cast<Eigen::Index>((k + N - j % N) % N),
          static_cast<Eigen::Index>(k)) = 1.0;
    }
    return v;
}

DenseOperator fourier_matrix(std::size_t N) {
    const double s = 1.0 / std::sqrt(static_cast<double>(N));
    DenseOperator f(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N));
    for (std::size_t k = 0; k < N; ++k) {
        for (std::size_t j = 0; j < N; ++j) {
            f(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) =
                s * root_of_unity(j * k, N);
        }
    }
    return f;
}

Vector dft(std::span<const cplx> v, bool inverse) {
    const std::size_t N = v.size();
    const double s = 1.0 / std::sqrt(static_cast<double>(N));
    Vector out(N);
    for (std::size_t k = 0; k < N; ++k) {
        cplx acc = 0.0;
        for (std::size_t j = 0; j < N; ++j) {
            const cplx w = root_of_unity(j * k, N);
            acc += (inverse ? std::conj(w) : w) * v[j];
        }
        out[k] = s * acc;
    }
    return out;
}

Vector dft_eigenvalues(std::span<const cplx> c, SignMode sign) {
    const Vector cs = signed_copy(c, sign);
    const std::size_t N = cs.size();
    Vector lambda(N);
    for (std::size_t k = 0; k < N; ++k) {
        cplx acc = 0.0;
        for (std::size_t j = 0; j < N; ++j) {
            acc += cs[j] * root_of_unity(j * k, N);
        }
        lambda[k] = acc;
    }
    return lambda;
}

Vector dft_eigenvalues(std::span<const double> c, SignMode sign) {
    const Vector cc = to_complex(c);
    return dft_eigenvalues(cc, sign);
}

Vector oracle_matfun(std::span<const cplx> c, std::span<const cplx> psi,
                     MatFun fun, double t, SignMode sign) {
    require(c.size() == psi.size(), "circulant and state dimensions differ");
    const Vector lambda = dft_eigenvalues(c, sign);
    Vector phi = dft(psi, /*inverse=*/true);
    if (fun == MatFun::inverse) {
        double min_abs = std::numeric_limits<double>::infinity();
        for (const auto &l : lambda) {
            min_abs = std::min(min_abs, std::abs(l));
        }
        if (min_abs <= 1e-12) {
            throw std::domain_error("circulant is singular");
        }
    }
    for (std::size_t k = 0; k < phi.size(); ++k) {
        switch (fun) {
        case MatFun::matvec:
            phi[k] *= lambda[k];
            break;
        case MatFun::expm:
            phi[k] *= std::exp(cplx{0.0, -t} * lambda[k]);
            break;
        case MatFun::inverse:
            phi[k] /= lambda[k];
            break;
        }
    }
    return dft(phi, /*inverse=*/false);
}

Vector oracle_matfun(std::span<const double> c, std::span<const cplx> psi,
                     MatFun fun, double t, SignMode sign) {
    const Vector cc = to_complex(c);
    return oracle_matfun(cc, psi, fun, t, sign);
}

Vector matvec(const DenseOperator &m, std::span<const cplx> v) {
    require(static_cast<std::size_t>(m.cols()) == v.size(),
            "matrix/vector dimension mismatch");
    Vector out(static_cast<std::size_t>(m.rows()), 0.0);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        cplx acc = 0.0;
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            acc += m(r, c) * v[static_cast<std::size_t>(c)];
        }
        out[static_cast<std::size_t>(r)] = acc;
    }
    return out;
}

Vector cyclic_convolution(std::span<const cplx> a, std::span<const cplx> b) {
    require(a.size() == b.size(), "convolution operands differ in length");
    const std::size_t N = a.size();
    Vector out(N, 0.0);
    for (std::size_t j1 = 0; j1 < N; ++j1) {
        for (std::size_t j2 = 0; j2 < N; ++j2) {
            out[(j1 + j2) % N] += a[j1] * b[j2];
        }
    }
    return out;
}

std::vector<double> cyclic_convolution(std::span<const double> a,
                                       std::span<const double> b) {
    require(a.size() == b.size(), "convolution operands differ in length");
    const std::size_t N = a.size();
    std::vector<double> out(N, 0.0);
    for (std::size_t j1 = 0; j1 < N; ++j1) {
        for (std::size_t j2 = 0; j2 < N; ++j2) {
            out[(j1 + j2) % N] += a[j1] * b[j2];
        }
    }
    return out;
}

double condition_number(std::span<const cplx> c, SignMode sign) {
    const Vector lambda = dft_eigenvalues(c, sign);
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (const auto &l : lambda) {
        lo = std::min(lo, std::abs(l));
        hi = std::max(hi, std::abs(l));
    }
    if (lo <= 1e-12) {
        return std::numeric_limits<double>::infinity();
    }
    return hi / lo;
}

double condition_number(std::span<const double> c, SignMode sign) {
    const Vector cc = to_complex(c);
    return condition_number(cc, sign);
}

DenseOperator dense_toeplitz(std::span<const double> t) {
    require(t.size() % 2 == 1, "Toeplitz parameter vector must have odd length");
    const auto N = static_cast<Eigen::Index>((t.size() + 1) / 2);
    DenseOperator m(N, N);
    for (Eigen::Index i = 0; i < N; ++i) {
        for (Eigen::Index k = 0; k < N; ++k) {
            m(i, k) = t[static_cast<std::size_t>(i - k + N - 1)];
        }
    }
    return m;
}

DenseOperator dense_hankel(std::span<const double> h) {
    require(h.size() % 2 == 1, "Hankel parameter vector must have odd length");
    const auto N = static_cast<Eigen::Index>((h.size() + 1) / 2);
    DenseOperator m(N, N);
    for (Eigen::Index i = 0; i < N; ++i) {
        for (Eigen::Index k = 0; k < N; ++k) {
            // h_{N-1-i-k} stored at index (N-1-i-k) + (N-1).
            m(i, k) = h[static_cast<std::size_t>(2 * (N - 1) - i - k)];
        }
    }
    return m;
}

DenseOperator dense_block_ub(std::span<const cplx> c,
                             std::span<const DenseOperator> blocks) {
    require(c.size() == blocks.size(), "one block per circulant weight");
    const std::size_t N = c.size();
    const Eigen::Index Nb = blocks.empty() ? 1 : blocks[0].rows();
    DenseOperator out =
        DenseOperator::Zero(static_cast<Eigen::Index>(N) * Nb,
                            static_cast<Eigen::Index>(N) * Nb);
    for (std::size_t j = 0; j < N; ++j) {
        const DenseOperator v = shift_matrix(N, j);
        for (Eigen::Index r = 0; r < v.rows(); ++r) {
            for (Eigen::Index col = 0; col < v.cols(); ++col) {
                if (v(r, col) != cplx{0.0, 0.0}) {
                    out.block(r * Nb, col * Nb, Nb, Nb) += c[j] * blocks[j];
                }
            }
        }
    }
    return out;
}

DenseOperator dense_block_cb(const Eigen::MatrixXd &weights) {
    const auto N = static_cast<std::size_t>(weights.rows());
    const auto Nb = static_cast<std::size_t>(weights.cols());
    const auto dim = static_cast<Eigen::Index>(N * Nb);
    DenseOperator out = DenseOperator::Zero(dim, dim);
    for (std::size_t j = 0; j < N; ++j) {
        for (std::size_t jb = 0; jb < Nb; ++jb) {
            const double w = weights(static_cast<Eigen::Index>(j),
                                     static_cast<Eigen::Index>(jb));
            if (w == 0.0) {
                continue;
            }
            out += w * kron(shift_matrix(N, j), shift_matrix(Nb, jb));
        }
    }
    return out;
}

} // namespace circq::classical
