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

#include "circq/hamsim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace circq {

namespace {

constexpr int kMaxOrder = 40;

std::string idx_name(int i) { return "idx" + std::to_string(i); }

void require_hermitian(const CirculantSpec &spec) {
    require(spec.is_hermitian(1e-12),
            "Hamiltonian simulation needs a Hermitian circulant (c_j = c_{N-j})");
}

double unary_phase(Direction d) {
    return d == Direction::forward ? -std::numbers::pi / 2.0
                                   : std::numbers::pi / 2.0;
}

cplx unit_step(Direction d) {
    return d == Direction::forward ? cplx{0.0, -1.0} : cplx{0.0, 1.0};
}

StateVector as_system(const StateVector &psi, int L) {
    require(psi.num_qubits() == L, "state width differs from the circulant");
    RegisterLayout sys;
    sys.add("sys", L);
    return StateVector(sys, psi.amplitudes());
}

} // namespace

double taylor_tail_bound(int K) {
    double term = 2.0;
    for (int k = 1; k <= K + 1; ++k) {
        term *= std::numbers::ln2 / k;
    }
    return term;
}

HamSimPlan plan_simulation(double t, double epsilon,
                           std::optional<int> K_override) {
    require(std::isfinite(t) && t >= 0.0, "evolution time must be >= 0");
    require(std::isfinite(epsilon) && epsilon > 0.0, "epsilon must be > 0");
    HamSimPlan p;
    p.t = t;
    p.epsilon = epsilon;
    if (t == 0.0) {
        return p;
    }
    p.r = static_cast<int>(std::ceil(t / std::numbers::ln2 - 1e-12));
    p.r = std::max(p.r, 1);
    p.ratio = t / p.r;
    if (K_override) {
        require(*K_override >= 1 && *K_override <= kMaxOrder,
                "truncation order out of range");
        p.K = *K_override;
    } else {
        p.K = 1;
        while (taylor_tail_bound(p.K) > epsilon / p.r) {
            ++p.K;
            require(p.K <= kMaxOrder, "epsilon too small for the order cap");
        }
    }
    p.s = unary_weight_normalization(p.ratio, p.K);
    p.tail_bound = taylor_tail_bound(p.K);
    double term = 1.0, deficit = 0.0;
    for (int k = 1; k <= p.K + 60; ++k) {
        term *= p.ratio / k;
        if (k > p.K) {
            deficit += term;
        }
    }
    p.deficit = deficit;
    p.dilution = p.s / 2.0;
    return p;
}

int segment_qubits(const HamSimPlan &plan, int L) {
    return L + 1 + plan.K + plan.K * L;
}

Pipeline segment_pipeline(const CirculantSpec &spec, const HamSimPlan &plan,
                          Direction direction, Backend arith) {
    require_hermitian(spec);
    require(plan.K >= 1, "segment needs a plan with K >= 1");
    const int K = plan.K;
    const AmplitudeOracle oc = AmplitudeOracle::from_probabilities(spec.c);
    Pipeline p;
    p.layout.add("sys", spec.L).add("dil", 1).add("u", K);
    for (int i = 0; i < K; ++i) {
        p.layout.add(idx_name(i), spec.L);
    }
    if (p.layout.num_qubits() > kMaxQubits) {
        throw ResourceError("dense segment needs " +
                            std::to_string(p.layout.num_qubits()) +
                            " qubits (cap " + std::to_string(kMaxQubits) + ")");
    }
    p.system_qubits = spec.L;
    for (const auto &r : p.layout.registers()) {
        if (r.name != "sys") {
            p.flags.emplace_back(r.name, 0);
        }
    }
    const double dil_theta = 2.0 * std::acos(std::clamp(plan.dilution, 0.0, 1.0));
    const Register u = p.layout.at("u");
    const Circuit r_ini = unary_weights_circuit(u, plan.ratio);
    const double phi = unary_phase(direction);
    const bool negate = spec.sign == SignMode::negate_v0;

    auto load = [oc, K, u](StateVector &s, bool inverse) {
        for (int i = 0; i < K; ++i) {
            oc.apply_controlled(s, u.qubit(i), s.reg(idx_name(i)), inverse);
        }
    };
    auto shift = [K, arith](StateVector &s, bool inverse, GateTally *tally) {
        for (int i = 0; i < K; ++i) {
            if (!inverse) {
                controlled_subtract(s, s.reg(idx_name(i)), s.reg("sys"), arith,
                                    tally);
            } else {
                controlled_add(s, s.reg(idx_name(i)), s.reg("sys"), arith,
                               tally);
            }
        }
    };
    // -1 on idx_i == 0, only where unary digit i is set.
    auto reflect = [K, u, negate](StateVector &s) {
        if (!negate) {
            return;
        }
        for (int i = 0; i < K; ++i) {
            const Register r = s.reg(idx_name(i));
            const int q = u.qubit(i);
            apply_diagonal(s, [r, q](Index b) {
                return (((b >> q) & 1U) != 0 && r.read(b) == 0) ? cplx{-1.0}
                                                                : cplx{1.0};
            });
        }
    };
    auto phases = [K, u](StateVector &s, double angle, GateTally *tally) {
        Circuit c;
        for (int i = 0; i < K; ++i) {
            c.phase(u.qubit(i), angle);
        }
        c.apply(s, tally);
    };

    p.forward = [=](StateVector &s, GateTally *tally) {
        Circuit pre;
        pre.ry(s.reg("dil").qubit(0), dil_theta);
        pre.append(r_ini);
        pre.apply(s, tally);
        load(s, false);
        shift(s, false, tally);
        reflect(s);
        phases(s, phi, tally);
        load(s, true);
        r_ini.inverse().apply(s, tally);
    };
    p.inverse = [=](StateVector &s, GateTally *tally) {
        r_ini.apply(s, tally);
        load(s, false);
        phases(s, -phi, tally);
        reflect(s);
        shift(s, true, tally);
        load(s, true);
        Circuit post = r_ini.inverse();
        post.ry(s.reg("dil").qubit(0), -dil_theta);
        post.apply(s, tally);
    };
    p.calls_per_forward.controlled_oracle = 2 * static_cast<std::size_t>(K);
    return p;
}

Amplitudes taylor_segment_oracle(const CirculantSpec &spec,
                                 const HamSimPlan &plan, Direction direction,
                                 std::span<const cplx> psi) {
    const classical::Vector lambda =
        classical::dft_eigenvalues(std::span<const double>(spec.c), spec.sign);
    classical::Vector phi = classical::dft(psi, true);
    const cplx step = unit_step(direction) * plan.ratio;
    for (std::size_t m = 0; m < phi.size(); ++m) {
        cplx term = 1.0, sum = 1.0;
        for (int k = 1; k <= plan.K; ++k) {
            term *= step * lambda[m] / static_cast<double>(k);
            sum += term;
        }
        phi[m] *= sum;
    }
    return classical::dft(phi, false);
}

namespace {

// B_m: the ancilla-zero block of one (unamplified) segment on mode m.
std::vector<cplx> segment_mode_blocks(const CirculantSpec &spec,
                                      const HamSimPlan &plan,
                                      Direction direction) {
    require_hermitian(spec);
    require(plan.K >= 1, "segment needs a plan with K >= 1");
    const std::size_t N = spec.N();
    const AmplitudeOracle oc = AmplitudeOracle::from_probabilities(spec.c);

    // Unary weights |a_k|^2 read off the executed R_ini circuit.
    StateVector u = StateVector::zeros(plan.K, "u");
    prepare_unary_weights(u, u.reg("u"), plan.ratio);
    std::vector<double> w(plan.K + 1);
    for (int k = 0; k <= plan.K; ++k) {
        w[k] = std::norm(u[(Index{1} << k) - 1]);
    }

    std::vector<cplx> y(N);
    const cplx step = unit_step(direction);
    for (std::size_t m = 0; m < N; ++m) {
        // g_m = <0| O_c^dagger D_m O_c |0>, D_m|j> = omega^{jm} |j>.
        StateVector s = StateVector::zeros(spec.L, "idx");
        const Register &idx = s.reg("idx");
        oc.apply(s, idx);
        const bool negate = spec.sign == SignMode::negate_v0;
        apply_diagonal(s, [&](Index j) {
            const double ang = 2.0 * std::numbers::pi *
                               static_cast<double>((j * m) % N) /
                               static_cast<double>(N);
            const cplx f = std::polar(1.0, ang);
            return (negate && j == 0) ? -f : f;
        });
        oc.apply(s, idx, true);
        const cplx g = s[0];

        cplx B = 0.0, power = 1.0;
        for (int k = 0; k <= plan.K; ++k) {
            B += w[k] * power;
            power *= step * g;
        }
        y[m] = B * plan.dilution;
    }
    return y;
}

Amplitudes apply_modes(std::span<const cplx> psi, const std::vector<cplx> &f) {
    classical::Vector phi = classical::dft(psi, true);
    for (std::size_t m = 0; m < phi.size(); ++m) {
        phi[m] *= f[m];
    }
    return classical::dft(phi, false);
}

} // namespace

std::vector<cplx> segment_mode_factors(const CirculantSpec &spec,
                                       const HamSimPlan &plan,
                                       Direction direction) {
    std::vector<cplx> y = segment_mode_blocks(spec, plan, direction);
    for (auto &B : y) {
        B = 3.0 * B - 4.0 * std::norm(B) * B;
    }
    return y;
}

std::vector<cplx> evolution_mode_factors(const CirculantSpec &spec,
                                         const HamSimPlan &plan,
                                         Direction direction) {
    if (plan.r == 0) {
        return std::vector<cplx>(spec.N(), 1.0);
    }
    std::vector<cplx> y = segment_mode_factors(spec, plan, direction);
    for (auto &v : y) {
        v = std::pow(v, plan.r);
    }
    return y;
}

namespace {

SegmentBackend resolve(SegmentBackend b, const HamSimPlan &plan, int L) {
    if (b != SegmentBackend::automatic) {
        return b;
    }
    return segment_qubits(plan, L) <= 20 ? SegmentBackend::dense
                                         : SegmentBackend::factored;
}

} // namespace

SegmentResult apply_segment(const CirculantSpec &spec, const StateVector &psi,
                            const HamSimPlan &plan,
                            const SegmentOptions &options) {
    require_hermitian(spec);
    const StateVector in = as_system(psi, spec.L);
    SegmentResult res{in, 1.0, 0.0, plan.effective_s(), {}, 0, 0,
                      SegmentBackend::dense};
    if (plan.r == 0) {
        return res;
    }
    res.backend = resolve(options.backend, plan, spec.L);
    res.controlled_oracle_calls = 2 * static_cast<std::size_t>(plan.K);
    res.executed_controlled_oracle_calls = 6 * static_cast<std::size_t>(plan.K);
    const Amplitudes ideal =
        taylor_segment_oracle(spec, plan, options.direction, in.amplitudes());

    if (res.backend == SegmentBackend::dense) {
        const Pipeline A =
            segment_pipeline(spec, plan, options.direction, options.arith);
        const LcuResult once = run_pipeline(A, in);
        res.measured_s = norm(ideal) / norm(once.unnormalized);
        const LcuResult amp = oaa_step(A, in, plan.effective_s());
        res.output = amp.output;
        res.weight = amp.success_probability;
        res.tally = amp.tally;
    } else {
        std::vector<cplx> y =
            segment_mode_blocks(spec, plan, options.direction);
        res.measured_s = norm(ideal) / norm(apply_modes(in.amplitudes(), y));
        for (auto &B : y) {
            B = 3.0 * B - 4.0 * std::norm(B) * B;
        }
        Amplitudes out = apply_modes(in.amplitudes(), y);
        res.weight = norm(out) * norm(out);
        require(res.weight > kPostSelectionFloor,
                "segment annihilated the state");
        const double inv = 1.0 / std::sqrt(res.weight);
        for (auto &a : out) {
            a *= inv;
        }
        res.output = StateVector(in.layout(), std::move(out));
    }
    res.residual = std::max(0.0, 1.0 - res.weight);
    return res;
}

Evolution simulate_evolution(const CirculantSpec &spec, const StateVector &psi,
                             double t, double epsilon,
                             const SegmentOptions &options,
                             std::optional<int> K_override) {
    require_hermitian(spec);
    const HamSimPlan plan = plan_simulation(t, epsilon, K_override);
    StateVector cur = as_system(psi, spec.L);
    EvolutionDiagnostics d;
    d.plan = plan;
    d.measured_s = plan.effective_s();
    d.backend = resolve(options.backend, plan, spec.L);
    SegmentOptions seg = options;
    seg.backend = d.backend;
    const double sign = options.direction == Direction::forward ? 1.0 : -1.0;
    for (int i = 0; i < plan.r; ++i) {
        const Amplitudes exact = classical::oracle_matfun(
            std::span<const double>(spec.c), cur.amplitudes(),
            classical::MatFun::expm, sign * plan.ratio, spec.sign);
        SegmentResult r = apply_segment(spec, cur, plan, seg);
        d.segment_error.push_back(state_distance(
            r.output.amplitudes(), exact, DistanceMode::phase_invariant));
        d.segment_residual.push_back(r.residual);
        d.controlled_oracle_calls += r.controlled_oracle_calls;
        d.executed_controlled_oracle_calls += r.executed_controlled_oracle_calls;
        d.tally += r.tally;
        if (i == 0) {
            d.measured_s = r.measured_s;
        }
        cur = std::move(r.output);
    }
    const Amplitudes target = classical::oracle_matfun(
        std::span<const double>(spec.c), psi.amplitudes(),
        classical::MatFun::expm, sign * t, spec.sign);
    d.distance = state_distance(cur.amplitudes(), target,
                                DistanceMode::phase_invariant);
    return Evolution{std::move(cur), std::move(d)};
}

} // namespace circq
