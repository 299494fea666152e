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

#include "circq/hhl.hpp"

#include <cmath>
#include <memory>
#include <numbers>

namespace circq {

namespace {

struct Machinery {
    int L = 0;
    int T = 0;
    std::vector<double> mu; ///< eigenvalues of the inverted operator
    /// factor[x * N + m]: controlled-power phase on mode m for register x,
    /// forward and undo.
    std::vector<cplx> factor;
    std::vector<cplx> undo;
};

Machinery build_machinery(const CirculantSpec &spec, const InversionPlan &plan) {
    Machinery mc;
    mc.L = spec.L;
    mc.T = plan.T;
    mc.mu = checked_spectrum(spec, plan);
    const std::size_t N = spec.N();
    const Index X = Index{1} << plan.T;
    mc.factor.assign(X * N, 1.0);
    mc.undo.assign(X * N, 1.0);
    if (plan.backend == InversionBackend::exact_diagonal) {
        for (Index x = 0; x < X; ++x) {
            for (std::size_t m = 0; m < N; ++m) {
                const double ang =
                    std::numbers::pi * mc.mu[m] * static_cast<double>(x);
                mc.factor[x * N + m] = std::polar(1.0, ang);
                mc.undo[x * N + m] = std::polar(1.0, -ang);
            }
        }
        return mc;
    }
    // e^{i pi (sigma C) 2^p} = e^{-i C t} with t = -sigma pi 2^p.
    const Direction fwd =
        plan.negate_operator ? Direction::forward : Direction::backward;
    const Direction back =
        plan.negate_operator ? Direction::backward : Direction::forward;
    const double eps = plan.epsilon / (2.0 * plan.T);
    for (int p = 0; p < plan.T; ++p) {
        const HamSimPlan hp =
            plan_simulation(std::numbers::pi * static_cast<double>(Index{1} << p),
                            eps);
        const auto f = evolution_mode_factors(spec, hp, fwd);
        const auto g = evolution_mode_factors(spec, hp, back);
        for (Index x = 0; x < X; ++x) {
            if (((x >> p) & 1U) == 0) {
                continue;
            }
            for (std::size_t m = 0; m < N; ++m) {
                mc.factor[x * N + m] *= f[m];
                mc.undo[x * N + m] *= g[m];
            }
        }
    }
    return mc;
}

void controlled_powers(StateVector &s, const Machinery &mc, bool undo,
                       GateTally *tally) {
    const Register sys = s.reg("sys");
    const Register ph = s.reg("ph");
    const std::size_t N = sys.dim();
    const auto &table = undo ? mc.undo : mc.factor;
    qft(s, sys, /*inverse=*/true, tally);
    apply_diagonal(s, [&](Index i) {
        return table[ph.read(i) * N + sys.read(i)];
    });
    qft(s, sys, /*inverse=*/false, tally);
}

void hadamards(StateVector &s, GateTally *tally) {
    const Register ph = s.reg("ph");
    Circuit c;
    for (int q = 0; q < ph.width; ++q) {
        c.h(ph.qubit(q));
    }
    c.apply(s, tally);
}

// Ry on the ancilla with sin(theta/2) = min(1, 1/(kappa lambda~)),
// lambda~ = 2x / 2^T; x = 0 is left alone.
void rotate(StateVector &s, double kappa, bool inverse,
            InversionDiagnostics *diag) {
    const Register ph = s.reg("ph");
    const Register anc = s.reg("anc");
    const Index X = ph.dim();
    std::vector<double> sin_half(X, 0.0);
    std::vector<bool> clamped(X, false);
    for (Index x = 1; x < X; ++x) {
        const double lam = 2.0 * static_cast<double>(x) / static_cast<double>(X);
        const double v = 1.0 / (kappa * lam);
        clamped[x] = v > 1.0;
        sin_half[x] = std::min(v, 1.0);
    }
    if (diag != nullptr) {
        const auto marg = register_marginals(s, ph);
        diag->zero_phase_weight = marg[0];
        for (Index x = 1; x < X; ++x) {
            if (clamped[x] && marg[x] > kPostSelectionFloor) {
                ++diag->clamped_values;
                diag->clamped_weight += marg[x];
            }
        }
    }
    auto &amps = s.amplitudes();
    const Index bit = Index{1} << anc.offset;
    for (Index i = 0; i < amps.size(); ++i) {
        if ((i & bit) != 0) {
            continue;
        }
        const Index x = ph.read(i);
        if (x == 0) {
            continue;
        }
        const double sn = inverse ? -sin_half[x] : sin_half[x];
        const double cs = std::sqrt(std::max(0.0, 1.0 - sin_half[x] * sin_half[x]));
        const cplx a0 = amps[i], a1 = amps[i | bit];
        amps[i] = cs * a0 - sn * a1;
        amps[i | bit] = sn * a0 + cs * a1;
    }
}

Pipeline inversion_pipeline(const CirculantSpec &spec,
                            const InversionPlan &plan,
                            InversionDiagnostics *diag) {
    require(plan.T >= 1, "phase register needs at least one qubit");
    Pipeline p;
    p.layout.add("sys", spec.L).add("ph", plan.T).add("anc", 1);
    if (p.layout.num_qubits() > kMaxQubits) {
        throw ResourceError("inversion needs " +
                            std::to_string(p.layout.num_qubits()) +
                            " qubits (cap " + std::to_string(kMaxQubits) + ")");
    }
    p.system_qubits = spec.L;
    p.flags = {{"ph", 0}, {"anc", 1}};
    auto mc = std::make_shared<Machinery>(build_machinery(spec, plan));
    const double kappa = plan.kappa;
    p.forward = [mc, kappa, diag](StateVector &s, GateTally *tally) {
        hadamards(s, tally);
        controlled_powers(s, *mc, false, tally);
        qft(s, s.reg("ph"), /*inverse=*/true, tally);
        rotate(s, kappa, false, diag);
        qft(s, s.reg("ph"), /*inverse=*/false, tally);
        controlled_powers(s, *mc, true, tally);
        hadamards(s, tally);
    };
    p.inverse = [mc, kappa](StateVector &s, GateTally *tally) {
        hadamards(s, tally);
        controlled_powers(s, *mc, false, tally);
        qft(s, s.reg("ph"), /*inverse=*/true, tally);
        rotate(s, kappa, true, nullptr);
        qft(s, s.reg("ph"), /*inverse=*/false, tally);
        controlled_powers(s, *mc, true, tally);
        hadamards(s, tally);
    };
    return p;
}

} // namespace

InversionPlan InversionPlan::make(double kappa, double epsilon,
                                  InversionBackend backend) {
    require(std::isfinite(kappa) && kappa >= 1.0, "kappa must be finite and >= 1");
    require(epsilon > 0.0 && epsilon < 1.0, "epsilon must lie in (0, 1)");
    InversionPlan p;
    p.kappa = kappa;
    p.epsilon = epsilon;
    p.backend = backend;
    p.T = static_cast<int>(std::ceil(std::log2(kappa / epsilon))) + 2;
    return p;
}

std::vector<double> checked_spectrum(const CirculantSpec &spec,
                                     const InversionPlan &plan) {
    require(spec.is_hermitian(1e-12),
            "inversion needs a Hermitian circulant (c_j = c_{N-j})");
    const auto lambda =
        classical::dft_eigenvalues(std::span<const double>(spec.c), spec.sign);
    const double sigma = plan.negate_operator ? -1.0 : 1.0;
    std::vector<double> mu;
    double lo = 1e300, hi = 0.0;
    for (const auto &l : lambda) {
        const double v = sigma * l.real();
        if (!(v > 1e-12)) {
            throw InputError(
                "eigenvalue " + std::to_string(v) +
                " is not positive; the rotation 1/(kappa Lambda) needs a "
                "positive spectrum (negate the operator or rescale so every "
                "Lambda lies in (0, 1])");
        }
        require(v <= 1.0 + 1e-12, "eigenvalue above 1: normalize the weights");
        mu.push_back(v);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    require(plan.kappa >= 0.9 * hi / lo,
            "plan kappa " + std::to_string(plan.kappa) +
                " underestimates the condition number " +
                std::to_string(hi / lo));
    return mu;
}

StateVector phase_estimate(const CirculantSpec &spec, const StateVector &psi,
                           const InversionPlan &plan) {
    require(psi.num_qubits() == spec.L, "state width differs from the circulant");
    RegisterLayout layout;
    layout.add("sys", spec.L).add("ph", plan.T);
    StateVector s(layout);
    for (Index k = 0; k < psi.dim(); ++k) {
        s[k] = psi[k];
    }
    const Machinery mc = build_machinery(spec, plan);
    hadamards(s, nullptr);
    controlled_powers(s, mc, false, nullptr);
    qft(s, s.reg("ph"), /*inverse=*/true);
    return s;
}

InversionResult invert_circulant(const CirculantSpec &spec,
                                 const StateVector &psi,
                                 const InversionPlan &plan) {
    InversionDiagnostics diag;
    const Pipeline p = inversion_pipeline(spec, plan, &diag);
    RegisterLayout sys;
    sys.add("sys", spec.L);
    require(psi.num_qubits() == spec.L, "state width differs from the circulant");
    StateVector s = embed_input(p, StateVector(sys, psi.amplitudes()));
    GateTally tally;
    p.forward(s, &tally);

    const double p_anc = register_marginals(s, s.reg("anc"))[1];
    if (p_anc < kPostSelectionFloor) {
        throw PostSelectionError("post-selection impossible: ancilla never 1");
    }
    InversionResult res{postselect(s, p), diag};
    res.diagnostics.ancilla_probability = p_anc;
    res.diagnostics.uncompute_residual =
        std::max(0.0, 1.0 - res.lcu.success_probability / p_anc);
    res.diagnostics.lower_bound = 1.0 / (plan.kappa * plan.kappa);
    res.lcu.success_probability = p_anc;
    res.lcu.tally = tally;
    return res;
}

LcuResult invert_amplified(const CirculantSpec &spec,
                           const AmplitudeOracle &psi_oracle,
                           const InversionPlan &plan, int iterations) {
    require(plan.backend == InversionBackend::exact_diagonal,
            "amplified inversion needs the exact_diagonal backend");
    const Pipeline p = inversion_pipeline(spec, plan, nullptr);
    return amplitude_amplify(p, psi_oracle, iterations);
}

} // namespace circq
