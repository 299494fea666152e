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

#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "circq/arith.hpp"
#include "circq/circulant.hpp"
#include "circq/random_specs.hpp"
#include "support.hpp"

using namespace circq;
using circq::support::dense_apply;
using circq::support::expect_amplitudes;
using circq::support::max_abs_diff;

namespace {

// ||Lambda F^dagger psi||^2 from the DFT eigenvalues.
double spectral_probability(const CirculantSpec &spec, const StateVector &psi) {
    const auto lam = classical::dft_eigenvalues(std::span<const double>(spec.c),
                                                spec.sign);
    const auto phi = classical::dft(psi.amplitudes(), true);
    double p = 0.0;
    for (std::size_t k = 0; k < lam.size(); ++k) {
        p += std::norm(lam[k] * phi[k]);
    }
    return p;
}

std::vector<double> uniform_vector(std::size_t n, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> v(n);
    for (auto &x : v) {
        x = u(rng);
    }
    return v;
}

} // namespace

TEST(Circulant, IdentityLeavesStateAlone) {
    std::mt19937_64 rng(1);
    const StateVector psi = random::state(2, rng);
    const LcuResult r = apply_circulant(CirculantSpec::make({1, 0, 0, 0}), psi);
    EXPECT_NEAR(r.success_probability, 1.0, 1e-12);
    expect_amplitudes(r.output.amplitudes(), psi.amplitudes(), 1e-12);
}

TEST(Circulant, HalfHalfOnZero) {
    const LcuResult r = apply_circulant(CirculantSpec::make({0.5, 0.5, 0, 0}),
                                        support::sys_basis(2, 0));
    const double h = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(r.success_probability, 0.5, 1e-12);
    expect_amplitudes(r.output.amplitudes(), Amplitudes{h, 0, 0, h}, 1e-12);
}

TEST(Circulant, ExhaustiveBasisInputsMatchDense) {
    std::mt19937_64 rng(2);
    for (int L = 1; L <= 3; ++L) {
        const std::size_t N = std::size_t{1} << L;
        for (int rep = 0; rep < 3; ++rep) {
            const auto spec = CirculantSpec::make(random::probability_vector(N, rng));
            const auto C = classical::dense(spec);
            for (Index k = 0; k < N; ++k) {
                const StateVector psi = support::sys_basis(L, k);
                const LcuResult r = apply_circulant(spec, psi);
                const auto want = dense_apply(C, psi.amplitudes());
                EXPECT_LT(max_abs_diff(r.unnormalized, want), 1e-10);
                EXPECT_NEAR(r.success_probability, std::pow(norm(want), 2), 1e-10);
            }
        }
    }
}

TEST(Circulant, RandomInputsMatchDenseAndSpectralProbability) {
    std::mt19937_64 rng(3);
    for (int L = 2; L <= 6; ++L) {
        for (int rep = 0; rep < 4; ++rep) {
            const SignMode sign = rep % 2 ? SignMode::negate_v0 : SignMode::plain;
            const auto spec = CirculantSpec::make(
                random::probability_vector(std::size_t{1} << L, rng), sign);
            const StateVector psi = random::state(L, rng);
            const LcuResult r = apply_circulant(spec, psi);
            EXPECT_LT(max_abs_diff(r.unnormalized,
                                   dense_apply(classical::dense(spec), psi.amplitudes())),
                      1e-10);
            EXPECT_NEAR(r.success_probability, spectral_probability(spec, psi), 1e-10);
        }
    }
}

TEST(Circulant, ProbabilityAtLeastInverseKappaSquared) {
    std::mt19937_64 rng(4);
    for (int rep = 0; rep < 20; ++rep) {
        const auto spec = CirculantSpec::make(random::probability_vector(8, rng));
        const double kappa =
            classical::condition_number(std::span<const double>(spec.c));
        if (!std::isfinite(kappa)) {
            continue;
        }
        const StateVector psi = random::state(3, rng);
        EXPECT_GE(apply_circulant(spec, psi).success_probability,
                  1.0 / (kappa * kappa) - 1e-10);
    }
}

TEST(Circulant, VanishingMiddleModeBound) {
    // c = (1/2, 1/2): Lambda = (1, 0).
    std::mt19937_64 rng(5);
    const auto spec = CirculantSpec::make({0.5, 0.5});
    for (int rep = 0; rep < 20; ++rep) {
        const StateVector psi = random::state(1, rng);
        const auto phi = classical::dft(psi.amplitudes(), true);
        EXPECT_GE(apply_circulant(spec, psi).success_probability,
                  1.0 - std::norm(phi[1]) - 1e-10);
    }
}

TEST(Circulant, ScaleRecoversRawOperator) {
    std::mt19937_64 rng(6);
    const std::vector<double> raw{2.0, 1.0, 0.0, 3.0};
    const auto spec = CirculantSpec::make(raw);
    EXPECT_DOUBLE_EQ(spec.scale, 6.0);
    const StateVector psi = random::state(2, rng);
    const LcuResult r = apply_circulant(spec, psi);
    Amplitudes back = r.unnormalized;
    for (auto &z : back) {
        z *= r.scale;
    }
    const auto want = dense_apply(
        classical::dense_circulant(std::span<const double>(raw)), psi.amplitudes());
    EXPECT_LT(max_abs_diff(back, want), 1e-12);
}

TEST(Circulant, GateAndPermBackendsAgree) {
    std::mt19937_64 rng(7);
    for (int L = 1; L <= 4; ++L) {
        const auto spec =
            CirculantSpec::make(random::probability_vector(std::size_t{1} << L, rng));
        const StateVector psi = random::state(L, rng);
        ApplyOptions g;
        g.backend = Backend::gate;
        const LcuResult a = apply_circulant(spec, psi, g);
        const LcuResult b = apply_circulant(spec, psi);
        EXPECT_LT(max_abs_diff(a.unnormalized, b.unnormalized), 1e-10);
        EXPECT_GT(a.tally.total(), 0u);
        EXPECT_EQ(b.tally.total(), 0u);
    }
}

TEST(Circulant, InvalidSpecsRejected) {
    EXPECT_THROW(CirculantSpec::make({1, 0, 0}), InputError);
    EXPECT_THROW(CirculantSpec::make({1, -1}), InputError);
    EXPECT_THROW(CirculantSpec::make({0, 0}), InputError);
    const auto spec = CirculantSpec::make({0.5, 0.5});
    EXPECT_THROW(apply_circulant(spec, support::sys_basis(2, 0)), InputError);
}

TEST(Circulant, AnnihilatedInputIsPostSelectionError) {
    const double h = 1.0 / std::sqrt(2.0);
    EXPECT_THROW(apply_circulant(CirculantSpec::make({0.5, 0.5}),
                                 support::sys_state({h, -h})),
                 PostSelectionError);
}

TEST(Circulant, AmplifiedUniformReachesOne) {
    const auto spec = CirculantSpec::make({0.25, 0.25, 0.25, 0.25});
    const auto psi_o = AmplitudeOracle::build({1, 0, 0, 0});
    ApplyOptions o;
    o.amplify_iterations = 1;
    o.psi_oracle = &psi_o;
    EXPECT_NEAR(apply_circulant(spec, support::sys_basis(2, 0), o).success_probability,
                1.0, 1e-10);
}

TEST(Toeplitz, EmbeddingOrder) {
    const auto emb = embed_toeplitz(ToeplitzSpec::make({0.3, 0.5, 0.2}));
    const std::vector<double> want{0.5, 0.3, 0.0, 0.2};
    for (int j = 0; j < 4; ++j) {
        EXPECT_NEAR(emb.c[j], want[j], 1e-15);
    }
}

TEST(Toeplitz, EmbeddingHasZeroAtN) {
    std::mt19937_64 rng(8);
    for (int L = 1; L <= 4; ++L) {
        const std::size_t N = std::size_t{1} << L;
        const auto emb = embed_toeplitz(ToeplitzSpec::make(uniform_vector(2 * N - 1, rng)));
        EXPECT_EQ(emb.c[N], 0.0);
    }
}

TEST(Toeplitz, SymmetricStaysSymmetric) {
    const auto emb = embed_toeplitz(ToeplitzSpec::make({0.1, 0.2, 0.3, 0.4, 0.3, 0.2, 0.1}));
    EXPECT_TRUE(emb.is_hermitian());
}

TEST(Toeplitz, EmbeddedBlockForm) {
    std::mt19937_64 rng(9);
    const std::size_t N = 4;
    const auto v = uniform_vector(2 * N - 1, rng);
    const auto spec = ToeplitzSpec::make(v);
    const auto CT = classical::dense(embed_toeplitz(spec));
    const auto T = classical::dense(spec);
    const auto n = static_cast<Eigen::Index>(N);
    EXPECT_LT((CT.topLeftCorner(n, n) - T).norm(), 1e-14);
    EXPECT_LT((CT.bottomRightCorner(n, n) - T).norm(), 1e-14);
    EXPECT_LT((CT.topRightCorner(n, n) - CT.bottomLeftCorner(n, n)).norm(), 1e-14);
    for (Eigen::Index i = 0; i < n; ++i) {
        EXPECT_EQ(CT.topRightCorner(n, n)(i, i), cplx(0.0));
    }
}

TEST(Toeplitz, UnitCentreIsIdentity) {
    std::mt19937_64 rng(10);
    const StateVector psi = random::state(2, rng);
    const LcuResult r =
        apply_toeplitz(ToeplitzSpec::make({0, 0, 0, 1, 0, 0, 0}), psi);
    EXPECT_NEAR(r.success_probability, 1.0, 1e-12);
    expect_amplitudes(r.output.amplitudes(), psi.amplitudes(), 1e-12);
}

TEST(Toeplitz, TwoByTwoWorkedExample) {
    const LcuResult r =
        apply_toeplitz(ToeplitzSpec::make({0.3, 0.5, 0.2}), support::sys_basis(1, 0));
    // Dense T|0> = (0.5, 0.2).
    EXPECT_NEAR(r.success_probability, 0.29, 1e-12);
    expect_amplitudes(r.unnormalized, Amplitudes{0.5, 0.2}, 1e-12);
}

TEST(Toeplitz, RandomMatchesDense) {
    std::mt19937_64 rng(11);
    for (int L = 1; L <= 4; ++L) {
        const std::size_t N = std::size_t{1} << L;
        const auto v = uniform_vector(2 * N - 1, rng);
        const auto spec = ToeplitzSpec::make(v);
        const StateVector psi = random::state(L, rng);
        const LcuResult r = apply_toeplitz(spec, psi);
        EXPECT_LT(max_abs_diff(r.unnormalized,
                               dense_apply(classical::dense(spec), psi.amplitudes())),
                  1e-10);
        Amplitudes back = r.unnormalized;
        for (auto &z : back) {
            z *= r.scale;
        }
        EXPECT_LT(max_abs_diff(back, dense_apply(classical::dense_toeplitz(v),
                                                 psi.amplitudes())),
                  1e-10);
    }
}

TEST(Hankel, TwoByTwoWorkedExample) {
    const LcuResult r =
        apply_hankel(HankelSpec::make({0.3, 0.5, 0.2}), support::sys_basis(1, 0));
    // Column 0 of H is (h_1, h_0).
    EXPECT_NEAR(r.success_probability, 0.29, 1e-12);
    expect_amplitudes(r.unnormalized, Amplitudes{0.2, 0.5}, 1e-12);
}

TEST(Hankel, SymmetricAgreesWithFlippedToeplitz) {
    std::mt19937_64 rng(12);
    const std::vector<double> h{0.05, 0.1, 0.2, 0.3, 0.2, 0.1, 0.05};
    const auto H = classical::dense_hankel(h);
    const auto T = classical::dense_toeplitz(h);
    classical::DenseOperator P = classical::DenseOperator::Zero(4, 4);
    for (int k = 0; k < 4; ++k) {
        P(3 - k, k) = 1.0;
    }
    EXPECT_LT((H - T * P).norm(), 1e-15);
    const StateVector psi = random::state(2, rng);
    const LcuResult r = apply_hankel(HankelSpec::make(h), psi);
    EXPECT_LT(max_abs_diff(r.unnormalized,
                           dense_apply(classical::dense(HankelSpec::make(h)),
                                       psi.amplitudes())),
              1e-10);
}

TEST(Hankel, RandomMatchesDenseDefinition) {
    std::mt19937_64 rng(13);
    for (int L = 1; L <= 4; ++L) {
        const std::size_t N = std::size_t{1} << L;
        const auto v = uniform_vector(2 * N - 1, rng);
        const auto spec = HankelSpec::make(v);
        const StateVector psi = random::state(L, rng);
        const LcuResult r = apply_hankel(spec, psi);
        Amplitudes back = r.unnormalized;
        for (auto &z : back) {
            z *= r.scale;
        }
        EXPECT_LT(max_abs_diff(back, dense_apply(classical::dense_hankel(v),
                                                 psi.amplitudes())),
                  1e-10);
    }
}

TEST(Hankel, FlippedInputGivesToeplitzAction) {
    std::mt19937_64 rng(14);
    const auto spec = HankelSpec::make(uniform_vector(7, rng));
    const StateVector psi = random::state(2, rng);
    StateVector flipped = psi;
    bitflip_all(flipped, flipped.reg("sys"));
    const LcuResult a = apply_hankel(spec, flipped);
    const LcuResult b = apply_toeplitz(hankel_as_toeplitz(spec), psi);
    EXPECT_LT(max_abs_diff(a.unnormalized, b.unnormalized), 1e-12);
}

TEST(BlockUb, IdentityBlocksReduceToCirculant) {
    std::mt19937_64 rng(15);
    const auto c = random::probability_vector(4, rng);
    const std::vector<GateMatrix> id(4, GateMatrix(1, {1, 0, 0, 1}));
    const auto spec = BlockUbSpec::explicit_blocks(c, id);
    const StateVector psi = random::state(3, rng);
    const LcuResult r = apply_block_ub(spec, psi);
    const auto want = dense_apply(
        classical::kron(classical::dense_circulant(std::span<const double>(c)),
                        classical::DenseOperator::Identity(2, 2)),
        psi.amplitudes());
    EXPECT_LT(max_abs_diff(r.unnormalized, want), 1e-10);
}

TEST(BlockUb, PhaseRuleAlternatingSigns) {
    const auto spec = BlockUbSpec::phase_rule({0.5, 0.5, 0, 0}, std::numbers::pi);
    const LcuResult r = apply_block_ub(spec, support::sys_basis(2, 0));
    const double h = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(r.success_probability, 0.5, 1e-12);
    expect_amplitudes(r.output.amplitudes(), Amplitudes{h, 0, 0, -h}, 1e-12);
    const std::vector<double> signed_c{0.5, -0.5, 0, 0};
    EXPECT_LT((classical::dense(spec) -
               classical::dense_circulant(std::span<const double>(signed_c)))
                  .cwiseAbs()
                  .maxCoeff(),
              1e-15);
}

TEST(BlockUb, RandomUnitaryBlocks) {
    std::mt19937_64 rng(16);
    for (int rep = 0; rep < 5; ++rep) {
        std::vector<GateMatrix> blocks;
        for (int j = 0; j < 4; ++j) {
            blocks.push_back(random::unitary(1, rng));
        }
        const auto spec =
            BlockUbSpec::explicit_blocks(random::probability_vector(4, rng), blocks);
        const StateVector psi = random::state(3, rng);
        const LcuResult r = apply_block_ub(spec, psi);
        EXPECT_LT(max_abs_diff(r.unnormalized,
                               dense_apply(classical::dense(spec), psi.amplitudes())),
                  1e-10);
    }
}

TEST(BlockCb, DeltaIsIdentity) {
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(2, 2);
    w(0, 0) = 1.0;
    std::mt19937_64 rng(17);
    const StateVector psi = random::state(2, rng);
    const LcuResult r = apply_block_cb(BlockCbSpec::make(w), psi);
    EXPECT_NEAR(r.success_probability, 1.0, 1e-12);
    expect_amplitudes(r.output.amplitudes(), psi.amplitudes(), 1e-12);
}

TEST(BlockCb, UniformQuarter) {
    const Eigen::MatrixXd w = Eigen::MatrixXd::Constant(2, 2, 0.25);
    const LcuResult r = apply_block_cb(BlockCbSpec::make(w), support::sys_basis(2, 0));
    EXPECT_NEAR(r.success_probability, 0.25, 1e-12);
    expect_amplitudes(r.output.amplitudes(), Amplitudes{0.5, 0.5, 0.5, 0.5}, 1e-12);
}

TEST(BlockCb, RandomWeightsMatchKroneckerSum) {
    std::mt19937_64 rng(18);
    std::uniform_real_distribution<double> u(0, 1);
    Eigen::MatrixXd w(4, 4);
    for (int i = 0; i < 16; ++i) {
        w(i / 4, i % 4) = u(rng);
    }
    const auto spec = BlockCbSpec::make(w);
    const StateVector psi = random::state(4, rng);
    const LcuResult r = apply_block_cb(spec, psi);
    EXPECT_LT(max_abs_diff(r.unnormalized,
                           dense_apply(classical::dense_block_cb(w / w.sum()),
                                       psi.amplitudes())),
              1e-10);
}
