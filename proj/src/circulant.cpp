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

#include "circq/circulant.hpp"

#include <bit>
#include <cmath>
#include <memory>

namespace circq {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

int width_of(std::size_t n, const std::string &what) {
    require(is_power_of_two(n), what + " length " + std::to_string(n) +
                                    " is not a power of two");
    return std::countr_zero(n);
}

double normalize_weights(std::vector<double> &w, const std::string &what) {
    double sum = 0.0;
    for (double x : w) {
        require(std::isfinite(x), what + " has a non-finite entry");
        require(x >= 0.0, what + " entries must be nonnegative");
        sum += x;
    }
    require(sum > 0.0, what + " is identically zero");
    for (double &x : w) {
        x /= sum;
    }
    return sum;
}

StateVector relabel(const StateVector &psi, RegisterLayout layout) {
    require(psi.num_qubits() == layout.num_qubits(),
            "input state has " + std::to_string(psi.num_qubits()) +
                " qubits, operator expects " +
                std::to_string(layout.num_qubits()));
    StateVector out(std::move(layout), psi.amplitudes());
    out.set_norm_tracked(psi.norm_tracked());
    return out;
}

// Forward and inverse of O_c^dagger [Ref_0] select(V) O_c on explicit
// registers, so Toeplitz and block variants can reuse it.
struct Stage {
    StateOp forward;
    StateOp inverse;
};

Stage circulant_stage(const AmplitudeOracle &oc, SignMode sign,
                      std::string system, std::string index,
                      Backend backend, int system_width = -1) {
    auto sys_reg = [system, system_width](const StateVector &s) {
        if (system_width < 0) {
            return s.reg(system);
        }
        const Register &base = s.reg(system);
        return Register{system + "+", base.offset, system_width};
    };
    auto negate = [index, sign](StateVector &s) {
        if (sign != SignMode::negate_v0) {
            return;
        }
        const Register r = s.reg(index);
        apply_diagonal(s, [r](Index i) {
            return r.read(i) == 0 ? cplx{-1.0} : cplx{1.0};
        });
    };
    Stage st;
    st.forward = [=](StateVector &s, GateTally *tally) {
        const Register idx = s.reg(index);
        oc.apply(s, idx);
        controlled_subtract(s, idx, sys_reg(s), backend, tally);
        negate(s);
        oc.apply(s, idx, true);
    };
    st.inverse = [=](StateVector &s, GateTally *tally) {
        const Register idx = s.reg(index);
        oc.apply(s, idx);
        negate(s);
        controlled_add(s, idx, sys_reg(s), backend, tally);
        oc.apply(s, idx, true);
    };
    return st;
}

LcuResult finish(const Pipeline &pipeline, const StateVector &psi,
                 const ApplyOptions &options, double scale) {
    LcuResult res = [&] {
        if (options.amplify_iterations > 0) {
            require(options.psi_oracle != nullptr,
                    "amplitude amplification requires a psi oracle");
            return amplitude_amplify(pipeline, *options.psi_oracle,
                                     options.amplify_iterations);
        }
        return run_pipeline(pipeline, psi);
    }();
    res.scale = scale;
    return res;
}

} // namespace

CirculantSpec CirculantSpec::make(std::vector<double> raw, SignMode sign) {
    CirculantSpec s;
    s.L = width_of(raw.size(), "circulant parameter vector");
    s.scale = normalize_weights(raw, "circulant parameter vector");
    s.c = std::move(raw);
    s.sign = sign;
    return s;
}

bool CirculantSpec::is_hermitian(double tol) const {
    const std::size_t n = N();
    for (std::size_t j = 1; j < n; ++j) {
        if (std::abs(c[j] - c[n - j]) > tol) {
            return false;
        }
    }
    return true;
}

ToeplitzSpec ToeplitzSpec::make(std::vector<double> raw) {
    require(raw.size() % 2 == 1,
            "Toeplitz parameter vector must have 2N - 1 entries");
    ToeplitzSpec s;
    s.L = width_of((raw.size() + 1) / 2, "Toeplitz dimension");
    s.scale = normalize_weights(raw, "Toeplitz parameter vector");
    s.t = std::move(raw);
    return s;
}

double ToeplitzSpec::at(long j) const {
    const long n = static_cast<long>(N());
    require(j > -n && j < n, "Toeplitz index out of range");
    return t[static_cast<std::size_t>(j + n - 1)];
}

HankelSpec HankelSpec::make(std::vector<double> raw) {
    require(raw.size() % 2 == 1,
            "Hankel parameter vector must have 2N - 1 entries");
    HankelSpec s;
    s.L = width_of((raw.size() + 1) / 2, "Hankel dimension");
    s.scale = normalize_weights(raw, "Hankel parameter vector");
    s.h = std::move(raw);
    return s;
}

BlockUbSpec BlockUbSpec::explicit_blocks(std::vector<double> raw,
                                         std::vector<GateMatrix> blocks) {
    BlockUbSpec s;
    s.L = width_of(raw.size(), "block weight vector");
    require(blocks.size() == raw.size(), "one block per circulant weight");
    s.block_qubits = blocks.front().num_qubits;
    for (const auto &b : blocks) {
        require(b.num_qubits == s.block_qubits, "blocks differ in size");
        require(b.is_unitary(), "block is not unitary within 1e-10");
    }
    s.scale = normalize_weights(raw, "block weight vector");
    s.c = std::move(raw);
    s.blocks = std::move(blocks);
    return s;
}

BlockUbSpec BlockUbSpec::phase_rule(std::vector<double> raw, double theta,
                                    int block_qubits) {
    require(block_qubits >= 0, "negative block width");
    BlockUbSpec s;
    s.L = width_of(raw.size(), "block weight vector");
    s.block_qubits = block_qubits;
    s.scale = normalize_weights(raw, "block weight vector");
    s.c = std::move(raw);
    s.theta = theta;
    return s;
}

std::vector<classical::DenseOperator> BlockUbSpec::dense_blocks() const {
    std::vector<classical::DenseOperator> out;
    const auto nb = static_cast<Eigen::Index>(Index{1} << block_qubits);
    for (std::size_t j = 0; j < c.size(); ++j) {
        classical::DenseOperator m(nb, nb);
        if (theta) {
            m = classical::DenseOperator::Identity(nb, nb) *
                std::polar(1.0, static_cast<double>(j) * *theta);
        } else {
            for (Eigen::Index r = 0; r < nb; ++r) {
                for (Eigen::Index col = 0; col < nb; ++col) {
                    m(r, col) = blocks[j](static_cast<Index>(r),
                                          static_cast<Index>(col));
                }
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

BlockCbSpec BlockCbSpec::make(Eigen::MatrixXd raw) {
    BlockCbSpec s;
    s.L = width_of(static_cast<std::size_t>(raw.rows()), "CB weight rows");
    s.block_qubits =
        width_of(static_cast<std::size_t>(raw.cols()), "CB weight columns");
    require(s.block_qubits >= 1, "CB blocks need at least one qubit");
    std::vector<double> flat(raw.data(), raw.data() + raw.size());
    s.scale = normalize_weights(flat, "CB weight matrix");
    s.weights = raw / s.scale;
    return s;
}

Pipeline circulant_pipeline(const CirculantSpec &spec, Backend backend) {
    const AmplitudeOracle oc = AmplitudeOracle::from_probabilities(spec.c);
    Pipeline p;
    p.layout.add("sys", spec.L).add("idx", spec.L);
    p.system_qubits = spec.L;
    p.flags = {{"idx", 0}};
    Stage st = circulant_stage(oc, spec.sign, "sys", "idx", backend);
    p.forward = st.forward;
    p.inverse = st.inverse;
    p.calls_per_forward.oracle = 2;
    return p;
}

LcuResult apply_circulant(const CirculantSpec &spec, const StateVector &psi,
                          const ApplyOptions &options) {
    const Pipeline p = circulant_pipeline(spec, options.backend);
    RegisterLayout sys;
    sys.add("sys", spec.L);
    return finish(p, relabel(psi, sys), options, spec.scale);
}

CirculantSpec embed_toeplitz(const ToeplitzSpec &spec) {
    const std::size_t n = spec.N();
    std::vector<double> c(2 * n, 0.0);
    c[0] = spec.at(0);
    for (std::size_t k = 1; k < n; ++k) {
        c[k] = spec.at(-static_cast<long>(k));
        c[n + k] = spec.at(static_cast<long>(n - k));
    }
    CirculantSpec out = CirculantSpec::make(std::move(c));
    out.scale = spec.scale;
    return out;
}

namespace {

Pipeline toeplitz_pipeline(const ToeplitzSpec &spec, Backend backend,
                           bool hankel_flip) {
    const CirculantSpec emb = embed_toeplitz(spec);
    const AmplitudeOracle oc = AmplitudeOracle::from_probabilities(emb.c);
    Pipeline p;
    p.layout.add("sys", spec.L).add("pad", 1).add("idx", spec.L + 1);
    p.system_qubits = spec.L;
    p.flags = {{"pad", 0}, {"idx", 0}};
    // The embedded circulant acts on sys and pad together, pad on top.
    Stage st = circulant_stage(oc, SignMode::plain, "sys", "idx", backend,
                               spec.L + 1);
    if (!hankel_flip) {
        p.forward = st.forward;
        p.inverse = st.inverse;
    } else {
        p.forward = [st](StateVector &s, GateTally *tally) {
            bitflip_all(s, s.reg("sys"), tally);
            st.forward(s, tally);
        };
        p.inverse = [st](StateVector &s, GateTally *tally) {
            st.inverse(s, tally);
            bitflip_all(s, s.reg("sys"), tally);
        };
    }
    p.calls_per_forward.oracle = 2;
    return p;
}

// The pipeline system is sys (L qubits) while the layout also holds pad;
// embed_input copies psi into the low L qubits and leaves pad at 0.
LcuResult run_toeplitz(const ToeplitzSpec &spec, const StateVector &psi,
                       const ApplyOptions &options, bool hankel_flip,
                       double scale) {
    const Pipeline p = toeplitz_pipeline(spec, options.backend, hankel_flip);
    RegisterLayout sys;
    sys.add("sys", spec.L);
    return finish(p, relabel(psi, sys), options, scale);
}

} // namespace

LcuResult apply_toeplitz(const ToeplitzSpec &spec, const StateVector &psi,
                         const ApplyOptions &options) {
    return run_toeplitz(spec, psi, options, false, spec.scale);
}

ToeplitzSpec hankel_as_toeplitz(const HankelSpec &spec) {
    std::vector<double> t(spec.h.rbegin(), spec.h.rend());
    ToeplitzSpec out = ToeplitzSpec::make(std::move(t));
    out.scale = spec.scale;
    return out;
}

LcuResult apply_hankel(const HankelSpec &spec, const StateVector &psi,
                       const ApplyOptions &options) {
    return run_toeplitz(hankel_as_toeplitz(spec), psi, options, true,
                        spec.scale);
}

LcuResult apply_block_ub(const BlockUbSpec &spec, const StateVector &psi,
                         const ApplyOptions &options) {
    const AmplitudeOracle oc = AmplitudeOracle::from_probabilities(spec.c);
    const int Lb = spec.block_qubits;
    Pipeline p;
    RegisterLayout sys;
    if (Lb > 0) {
        sys.add("blk", Lb);
    }
    sys.add("cyc", spec.L);
    p.layout = sys;
    p.layout.add("idx", spec.L);
    p.system_qubits = sys.num_qubits();
    p.flags = {{"idx", 0}};

    std::vector<GateMatrix> us = spec.blocks, us_dag;
    for (const auto &u : us) {
        us_dag.push_back(u.adjoint());
    }
    const std::optional<double> theta = spec.theta;
    auto blocks = [us, us_dag, theta, Lb](StateVector &s, bool inverse) {
        const Register idx = s.reg("idx");
        if (theta) {
            const double sgn = inverse ? -1.0 : 1.0;
            apply_diagonal(s, [&](Index i) {
                return std::polar(1.0, sgn * static_cast<double>(idx.read(i)) *
                                           *theta);
            });
            return;
        }
        const Register blk = s.reg("blk");
        std::vector<int> targets, controls;
        for (int q = 0; q < Lb; ++q) {
            targets.push_back(blk.qubit(q));
        }
        for (int q = 0; q < idx.width; ++q) {
            controls.push_back(idx.qubit(q));
        }
        std::unique_ptr<bool[]> values(new bool[controls.size()]);
        const auto &mats = inverse ? us_dag : us;
        for (Index j = 0; j < mats.size(); ++j) {
            for (std::size_t b = 0; b < controls.size(); ++b) {
                values[b] = ((j >> b) & 1U) != 0;
            }
            apply_gate(s, targets, controls, mats[j], nullptr,
                       std::span<const bool>(values.get(), controls.size()));
        }
    };
    const Backend backend = options.backend;
    p.forward = [oc, blocks, backend](StateVector &s, GateTally *tally) {
        const Register idx = s.reg("idx");
        oc.apply(s, idx);
        controlled_subtract(s, idx, s.reg("cyc"), backend, tally);
        blocks(s, false);
        oc.apply(s, idx, true);
    };
    p.inverse = [oc, blocks, backend](StateVector &s, GateTally *tally) {
        const Register idx = s.reg("idx");
        oc.apply(s, idx);
        blocks(s, true);
        controlled_add(s, idx, s.reg("cyc"), backend, tally);
        oc.apply(s, idx, true);
    };
    p.calls_per_forward.oracle = 2;
    return finish(p, relabel(psi, sys), options, spec.scale);
}

LcuResult apply_block_cb(const BlockCbSpec &spec, const StateVector &psi,
                         const ApplyOptions &options) {
    const Index nb = Index{1} << spec.block_qubits;
    const Index n = Index{1} << spec.L;
    // Joint index j' + N' j: idxb holds j' (low), idxa holds j (high).
    std::vector<double> joint(n * nb);
    for (Index j = 0; j < n; ++j) {
        for (Index jb = 0; jb < nb; ++jb) {
            joint[j * nb + jb] = spec.weights(static_cast<Eigen::Index>(j),
                                              static_cast<Eigen::Index>(jb));
        }
    }
    const AmplitudeOracle oc = AmplitudeOracle::from_probabilities(joint);
    RegisterLayout sys;
    sys.add("blk", spec.block_qubits).add("cyc", spec.L);
    Pipeline p;
    p.layout = sys;
    p.layout.add("idxb", spec.block_qubits).add("idxa", spec.L);
    p.system_qubits = sys.num_qubits();
    p.flags = {{"idxb", 0}, {"idxa", 0}};
    auto joint_reg = [](const StateVector &s) {
        const Register &b = s.reg("idxb");
        return Register{"joint", b.offset, b.width + s.reg("idxa").width};
    };
    const Backend backend = options.backend;
    p.forward = [oc, joint_reg, backend](StateVector &s, GateTally *tally) {
        oc.apply(s, joint_reg(s));
        controlled_subtract(s, s.reg("idxa"), s.reg("cyc"), backend, tally);
        controlled_subtract(s, s.reg("idxb"), s.reg("blk"), backend, tally);
        oc.apply(s, joint_reg(s), true);
    };
    p.inverse = [oc, joint_reg, backend](StateVector &s, GateTally *tally) {
        oc.apply(s, joint_reg(s));
        controlled_add(s, s.reg("idxb"), s.reg("blk"), backend, tally);
        controlled_add(s, s.reg("idxa"), s.reg("cyc"), backend, tally);
        oc.apply(s, joint_reg(s), true);
    };
    p.calls_per_forward.oracle = 2;
    return finish(p, relabel(psi, sys), options, spec.scale);
}

namespace classical {

DenseOperator dense(const CirculantSpec &spec) {
    return dense_circulant(std::span<const double>(spec.c), spec.sign);
}

DenseOperator dense(const ToeplitzSpec &spec) { return dense_toeplitz(spec.t); }

DenseOperator dense(const HankelSpec &spec) { return dense_hankel(spec.h); }

DenseOperator dense(const BlockUbSpec &spec) {
    const Vector c = to_complex(spec.c);
    const auto blocks = spec.dense_blocks();
    return dense_block_ub(c, blocks);
}

DenseOperator dense(const BlockCbSpec &spec) {
    return dense_block_cb(spec.weights);
}

} // namespace classical

} // namespace circq
