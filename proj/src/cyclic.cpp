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

#include "circq/cyclic.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace circq {

AssembledSystem assemble_system(const CyclicSystemSpec &spec) {
    const auto &s = spec.stiffness_row;
    const std::size_t N = s.size();
    require(N >= 2, "stiffness row needs at least two sectors");
    for (std::size_t j = 1; j < N; ++j) {
        require(std::abs(s[j] - s[N - j]) <= 1e-12,
                "stiffness row is not symmetric (s_j != s_{N-j})");
    }
    AssembledSystem out;
    out.a_row = s;
    out.a_row[0] -= static_cast<double>(spec.n) * spec.Omega;
    double off = 0.0;
    for (std::size_t j = 1; j < N; ++j) {
        require(out.a_row[j] <= 0.0,
                "off-diagonal entry " + std::to_string(j) +
                    " is positive: only nonpositive couplings are supported");
        off += std::abs(out.a_row[j]);
    }
    out.weak_coupling = std::abs(out.a_row[0]) > 2.0 * off;

    std::vector<double> raw(N);
    if (out.a_row[0] > 0.0) {
        out.sign_case = SignCase::positive_diagonal;
        for (std::size_t j = 0; j < N; ++j) {
            raw[j] = std::abs(out.a_row[j]);
        }
        out.spec = CirculantSpec::make(std::move(raw), SignMode::negate_v0);
    } else {
        out.sign_case = SignCase::all_negative;
        for (std::size_t j = 0; j < N; ++j) {
            raw[j] = -out.a_row[j];
        }
        out.spec = CirculantSpec::make(std::move(raw), SignMode::plain);
    }
    out.scale = out.spec.scale;
    return out;
}

classical::DenseOperator dense_system(const AssembledSystem &sys) {
    return classical::dense_circulant(std::span<const double>(sys.a_row));
}

StateVector travelling_wave_force(std::size_t N, int n, cplx f_amp) {
    require(N != 0 && (N & (N - 1)) == 0, "N must be a power of two");
    require(std::abs(f_amp) > 0.0, "force amplitude is zero");
    const int L = std::countr_zero(N);
    Amplitudes a(N);
    const double inv = 1.0 / std::sqrt(static_cast<double>(N));
    const cplx ph = f_amp / std::abs(f_amp);
    for (std::size_t j = 0; j < N; ++j) {
        const auto k = static_cast<long long>(n) * static_cast<long long>(j);
        const auto r = ((k % static_cast<long long>(N)) +
                        static_cast<long long>(N)) %
                       static_cast<long long>(N);
        a[j] = ph * inv *
               std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) /
                                   static_cast<double>(N));
    }
    RegisterLayout layout;
    layout.add("sys", L);
    return StateVector(layout, std::move(a));
}

CyclicSolution solve_cyclic(const CyclicSystemSpec &spec, double epsilon,
                            const CyclicOptions &options) {
    AssembledSystem sys = assemble_system(spec);
    const std::size_t N = sys.spec.N();
    const StateVector f_state = travelling_wave_force(N, spec.n, spec.f_amp);
    const double f_norm = std::abs(spec.f_amp) * std::sqrt(static_cast<double>(N));

    const double kappa = classical::condition_number(
        std::span<const double>(sys.spec.c), sys.spec.sign);
    require(std::isfinite(kappa), "K - n Omega I is singular");
    InversionPlan plan = InversionPlan::make(kappa, epsilon, options.backend);
    plan.T += options.extra_phase_bits;
    // The inversion runs on M = -R, which equals A / scale when the
    // diagonal is positive and -A / scale otherwise.
    plan.negate_operator = sys.sign_case == SignCase::positive_diagonal;

    InversionResult inv = invert_circulant(sys.spec, f_state, plan);

    const double sgn = sys.sign_case == SignCase::positive_diagonal ? 1.0 : -1.0;
    const double factor = sgn * f_norm * plan.kappa / sys.scale;
    Amplitudes q0_full = inv.lcu.unnormalized;
    for (auto &v : q0_full) {
        v *= factor;
    }

    CyclicSolution out{inv.lcu.output, q0_full, norm(q0_full), sys, plan,
                       inv.diagnostics, kappa, 0.0, 0.0, {}, {}};

    Amplitudes f(N);
    for (std::size_t j = 0; j < N; ++j) {
        f[j] = f_state[j] * f_norm;
    }
    Amplitudes r = classical::matvec(dense_system(sys), q0_full);
    for (std::size_t j = 0; j < N; ++j) {
        r[j] -= f[j];
    }
    out.residual = norm(r) / f_norm;
    out.force_overlap =
        std::abs(inner_product(f_state.amplitudes(), out.q0.amplitudes()));
    if (options.observable) {
        const Amplitudes mq = classical::matvec(*options.observable,
                                                out.q0.amplitudes());
        out.expectation = inner_product(out.q0.amplitudes(), mq);
    }
    if (options.reference) {
        require(options.reference->size() == N,
                "reference state has the wrong length");
        Amplitudes ref = *options.reference;
        const double n = norm(ref);
        require(n > 0.0, "reference state is zero");
        for (auto &v : ref) {
            v /= n;
        }
        out.overlap = inner_product(ref, out.q0.amplitudes());
    }
    return out;
}

} // namespace circq
