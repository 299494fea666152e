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

#include "circq/random_specs.hpp"

#include <algorithm>
#include <numeric>

#include <Eigen/Dense>

namespace circq::random {

std::vector<double> probability_vector(std::size_t n, std::mt19937_64 &rng,
                                       std::size_t nonzeros) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> w(n);
    for (auto &x : w) {
        x = u(rng) + 1e-3;
    }
    if (nonzeros > 0 && nonzeros < n) {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        for (std::size_t i = nonzeros; i < n; ++i) {
            w[order[i]] = 0.0;
        }
    }
    const double s = std::accumulate(w.begin(), w.end(), 0.0);
    for (auto &x : w) {
        x /= s;
    }
    return w;
}

Amplitudes unit_vector(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Amplitudes a(n);
    for (auto &x : a) {
        x = {g(rng), g(rng)};
    }
    const double nn = norm(a);
    for (auto &x : a) {
        x /= nn;
    }
    return a;
}

StateVector state(int L, std::mt19937_64 &rng, const char *name) {
    RegisterLayout layout;
    layout.add(name, L);
    return StateVector(layout, unit_vector(Index{1} << L, rng));
}

std::vector<double> hermitian_weights(std::size_t n, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> w(n, 0.0);
    for (std::size_t j = 0; j <= n / 2; ++j) {
        w[j] = u(rng);
        w[(n - j) % n] = w[j];
    }
    const double s = std::accumulate(w.begin(), w.end(), 0.0);
    for (auto &x : w) {
        x /= s;
    }
    return w;
}

std::vector<double> positive_definite_weights(std::size_t n,
                                              std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0.55, 0.9);
    const double c0 = u(rng);
    std::vector<double> w(n, 0.0);
    w[0] = c0;
    if (n > 1) {
        std::vector<double> rest = hermitian_weights(n, rng);
        double s = 1.0 - rest[0];
        for (std::size_t j = 1; j < n; ++j) {
            w[j] = (1.0 - c0) * rest[j] / s;
        }
    } else {
        w[0] = 1.0;
    }
    return w;
}

GateMatrix unitary(int k, std::mt19937_64 &rng) {
    const auto d = static_cast<Eigen::Index>(Index{1} << k);
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::MatrixXcd m(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
            m(r, c) = {g(rng), g(rng)};
        }
    }
    const Eigen::MatrixXcd q = Eigen::HouseholderQR<Eigen::MatrixXcd>(m)
                                   .householderQ();
    std::vector<cplx> data(static_cast<std::size_t>(d * d));
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
            data[static_cast<std::size_t>(r * d + c)] = q(r, c);
        }
    }
    return GateMatrix(k, std::move(data));
}

} // namespace circq::random
