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

#include "circq/lcu.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>

namespace circq {

namespace {

// Value of the flag block in every basis index, precomputed as mask/value.
struct FlagMask {
    Index mask = 0;
    Index value = 0;
};

FlagMask flag_mask(const Pipeline &pipeline) {
    FlagMask f;
    for (const auto &[name, value] : pipeline.flags) {
        const Register &r = pipeline.layout.at(name);
        require(value < r.dim(), "flag value out of range for '" + name + "'");
        f.mask |= r.mask();
        f.value = r.write(f.value, value);
    }
    return f;
}

bool is_flagged(const Pipeline &pipeline, const std::string &name) {
    for (const auto &f : pipeline.flags) {
        if (f.first == name) {
            return true;
        }
    }
    return false;
}

void scale_calls(OracleCalls &c, std::size_t n) {
    c.oracle *= n;
    c.controlled_oracle *= n;
    c.psi_oracle *= n;
}

void apply_indexed(StateVector &s, const Register &ir, const Register &sr,
                   const std::vector<GateMatrix> &us) {
    std::vector<int> targets, controls;
    for (int q = 0; q < sr.width; ++q) {
        targets.push_back(sr.qubit(q));
    }
    for (int q = 0; q < ir.width; ++q) {
        controls.push_back(ir.qubit(q));
    }
    std::unique_ptr<bool[]> values(new bool[controls.size() + 1]);
    for (Index j = 0; j < us.size(); ++j) {
        require(us[j].num_qubits == sr.width,
                "W_j width differs from register '" + sr.name + "'");
        for (std::size_t b = 0; b < controls.size(); ++b) {
            values[b] = ((j >> b) & 1U) != 0;
        }
        apply_gate(s, targets, controls, us[j], nullptr,
                   std::span<const bool>(values.get(), controls.size()));
    }
}

} // namespace

UnitaryFamily shift_family(std::string index, std::string system,
                           Backend backend) {
    UnitaryFamily f;
    f.index_registers = {index};
    f.system_registers = {system};
    f.select = [index, system, backend](StateVector &s, GateTally *tally) {
        controlled_subtract(s, s.reg(index), s.reg(system), backend, tally);
    };
    f.select_inverse = [index, system, backend](StateVector &s,
                                                GateTally *tally) {
        controlled_add(s, s.reg(index), s.reg(system), backend, tally);
    };
    return f;
}

UnitaryFamily explicit_family(std::string index, std::string system,
                              std::vector<GateMatrix> unitaries) {
    for (const auto &u : unitaries) {
        require(u.is_unitary(), "W_j is not unitary within 1e-10");
    }
    std::vector<GateMatrix> adjoints;
    for (const auto &u : unitaries) {
        adjoints.push_back(u.adjoint());
    }
    UnitaryFamily f;
    f.index_registers = {index};
    f.system_registers = {system};
    f.defined_count = unitaries.size();
    f.select = [index, system, us = std::move(unitaries)](StateVector &s,
                                                          GateTally *) {
        apply_indexed(s, s.reg(index), s.reg(system), us);
    };
    f.select_inverse = [index, system, us = std::move(adjoints)](
                           StateVector &s, GateTally *) {
        apply_indexed(s, s.reg(index), s.reg(system), us);
    };
    return f;
}

void select_apply(StateVector &state, const UnitaryFamily &family,
                  GateTally *tally) {
    if (family.defined_count != 0) {
        for (const auto &name : family.index_registers) {
            const auto marg = register_marginals(state, state.reg(name));
            for (Index j = family.defined_count; j < marg.size(); ++j) {
                if (marg[j] > kPostSelectionFloor) {
                    throw InputError("no W_j defined for index value " +
                                     std::to_string(j));
                }
            }
        }
    }
    family.select(state, tally);
}

AncillaPreparation oracle_preparation(const AmplitudeOracle &oracle,
                                      std::string name) {
    AncillaPreparation p;
    p.registers = {{name, oracle.width()}};
    p.prepare = [oracle, name](StateVector &s, bool inverse) {
        oracle.apply(s, s.reg(name), inverse);
    };
    return p;
}

StateVector embed_input(const Pipeline &pipeline, const StateVector &psi) {
    require(psi.num_qubits() == pipeline.system_qubits,
            "input state has " + std::to_string(psi.num_qubits()) +
                " qubits, pipeline expects " +
                std::to_string(pipeline.system_qubits));
    StateVector s(pipeline.layout);
    auto &amps = s.amplitudes();
    for (Index k = 0; k < psi.dim(); ++k) {
        amps[k] = psi[k];
    }
    return s;
}

double flag_probability(const StateVector &state, const Pipeline &pipeline) {
    const FlagMask f = flag_mask(pipeline);
    double p = 0.0;
    const auto &amps = state.amplitudes();
    for (Index i = 0; i < amps.size(); ++i) {
        if ((i & f.mask) == f.value) {
            p += std::norm(amps[i]);
        }
    }
    return p;
}

LcuResult postselect(const StateVector &state, const Pipeline &pipeline) {
    const FlagMask f = flag_mask(pipeline);
    RegisterLayout kept;
    std::vector<const Register *> kept_src;
    for (const auto &r : pipeline.layout.registers()) {
        if (!is_flagged(pipeline, r.name)) {
            kept.add(r.name, r.width);
            kept_src.push_back(&r);
        }
    }
    Amplitudes block(Index{1} << kept.num_qubits(), 0.0);
    const auto &amps = state.amplitudes();
    for (Index i = 0; i < amps.size(); ++i) {
        if ((i & f.mask) != f.value) {
            continue;
        }
        Index k = 0;
        for (std::size_t r = 0; r < kept_src.size(); ++r) {
            k = kept.registers()[r].write(k, kept_src[r]->read(i));
        }
        block[k] = amps[i];
    }
    const double p = norm(block) * norm(block);
    if (p < kPostSelectionFloor) {
        throw PostSelectionError("post-selection impossible: flag probability " +
                                 std::to_string(p));
    }
    Amplitudes normalized = block;
    const double inv = 1.0 / std::sqrt(p);
    for (auto &a : normalized) {
        a *= inv;
    }
    StateVector out(kept, std::move(normalized));
    out.set_norm_tracked(state.norm_tracked() * p);
    LcuResult res{std::move(out), std::move(block), p, {}, {}, 1.0};
    return res;
}

LcuResult run_pipeline(const Pipeline &pipeline, const StateVector &psi,
                       GateTally *tally) {
    StateVector s = embed_input(pipeline, psi);
    GateTally local;
    pipeline.forward(s, &local);
    LcuResult res = postselect(s, pipeline);
    res.tally = local;
    res.calls = pipeline.calls_per_forward;
    if (tally != nullptr) {
        *tally += local;
    }
    return res;
}

Pipeline lcu_pipeline(const RegisterLayout &psi_layout,
                      const AncillaPreparation &prep,
                      const UnitaryFamily &family) {
    Pipeline p;
    p.layout = psi_layout;
    p.system_qubits = psi_layout.num_qubits();
    for (const auto &[name, width] : prep.registers) {
        p.layout.add(name, width);
        p.flags.emplace_back(name, 0);
    }
    p.forward = [prep, family](StateVector &s, GateTally *tally) {
        prep.prepare(s, false);
        select_apply(s, family, tally);
        prep.prepare(s, true);
    };
    if (family.select_inverse) {
        p.inverse = [prep, family](StateVector &s, GateTally *tally) {
            prep.prepare(s, false);
            family.select_inverse(s, tally);
            prep.prepare(s, true);
        };
    }
    p.calls_per_forward.oracle = 2 * static_cast<std::size_t>(prep.oracle_calls);
    return p;
}

LcuResult lcu_sandwich(const StateVector &psi, const AncillaPreparation &prep,
                       const UnitaryFamily &family) {
    return run_pipeline(lcu_pipeline(psi.layout(), prep, family), psi);
}

LcuResult lcu_sandwich(const StateVector &psi, const AmplitudeOracle &alpha,
                       const UnitaryFamily &family) {
    return lcu_sandwich(psi, oracle_preparation(alpha), family);
}

double amplified_probability(double p0, int iterations) {
    const double theta = std::asin(std::sqrt(std::clamp(p0, 0.0, 1.0)));
    const double s = std::sin((2.0 * iterations + 1.0) * theta);
    return s * s;
}

int optimal_iterations(double p0) {
    require(p0 > 0.0, "amplitude amplification needs a nonzero success amplitude");
    const double theta = std::asin(std::sqrt(std::min(p0, 1.0)));
    return std::max(0, static_cast<int>(std::floor(std::numbers::pi /
                                                   (4.0 * theta))));
}

void reflect_flags(StateVector &state, const Pipeline &pipeline) {
    const FlagMask f = flag_mask(pipeline);
    apply_diagonal(state, [&](Index i) {
        return (i & f.mask) == f.value ? cplx{1.0} : cplx{-1.0};
    });
}

LcuResult amplitude_amplify(const Pipeline &pipeline,
                            const AmplitudeOracle &psi_oracle,
                            int iterations) {
    require(iterations >= 0, "iteration count must be nonnegative");
    require(pipeline.inverse != nullptr,
            "amplitude amplification needs an invertible pipeline");
    require(psi_oracle.width() <= pipeline.system_qubits,
            "psi oracle is wider than the system");
    const Register sys{"sys", 0, psi_oracle.width()};

    StateVector s(pipeline.layout);
    GateTally tally;
    auto U = [&](StateVector &st) {
        psi_oracle.apply(st, sys);
        pipeline.forward(st, &tally);
    };
    auto U_dag = [&](StateVector &st) {
        pipeline.inverse(st, &tally);
        psi_oracle.apply(st, sys, /*inverse=*/true);
    };

    U(s);
    const double p0 = flag_probability(s, pipeline);
    require(p0 > kPostSelectionFloor,
            "amplitude amplification undefined: initial success amplitude is 0");
    const FlagMask f = flag_mask(pipeline);
    for (int n = 0; n < iterations; ++n) {
        // S_good, then -U S_0 U^dagger.
        apply_diagonal(s, [&](Index i) {
            return (i & f.mask) == f.value ? cplx{-1.0} : cplx{1.0};
        });
        U_dag(s);
        s[0] = -s[0];
        U(s);
        for (auto &a : s.amplitudes()) {
            a = -a;
        }
    }
    LcuResult res = postselect(s, pipeline);
    res.tally = tally;
    res.calls = pipeline.calls_per_forward;
    scale_calls(res.calls, 2 * static_cast<std::size_t>(iterations) + 1);
    res.calls.psi_oracle = 2 * static_cast<std::size_t>(iterations) + 1;
    return res;
}

LcuResult oaa_step(const Pipeline &pipeline, const StateVector &psi,
                   double s) {
    require(std::abs(s - 2.0) <= 1e-3,
            "oblivious amplification needs s = 2 within 1e-3, got " +
                std::to_string(s));
    require(pipeline.inverse != nullptr,
            "oblivious amplification needs an invertible pipeline");
    StateVector st = embed_input(pipeline, psi);
    GateTally tally;
    pipeline.forward(st, &tally);
    reflect_flags(st, pipeline);
    pipeline.inverse(st, &tally);
    reflect_flags(st, pipeline);
    pipeline.forward(st, &tally);
    for (auto &a : st.amplitudes()) {
        a = -a;
    }
    LcuResult res = postselect(st, pipeline);
    res.tally = tally;
    res.calls = pipeline.calls_per_forward;
    scale_calls(res.calls, 3);
    return res;
}

} // namespace circq
