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

#include <random>

#include <gtest/gtest.h>

#include "circq/cyclic.hpp"
#include "support.hpp"

using namespace circq;
using circq::support::expect_amplitudes;

namespace {

CyclicSystemSpec worked(int n = 1) {
    CyclicSystemSpec s;
    s.stiffness_row = {5, -1, 0, -1};
    s.n = n;
    s.Omega = 1.0 / n;
    return s;
}

} // namespace

TEST(Assemble, PositiveDiagonalCase) {
    const AssembledSystem a = assemble_system(worked());
    EXPECT_EQ(a.sign_case, SignCase::positive_diagonal);
    EXPECT_EQ(a.spec.sign, SignMode::negate_v0);
    EXPECT_DOUBLE_EQ(a.scale, 6.0);
    const std::vector<double> c{4.0 / 6, 1.0 / 6, 0.0, 1.0 / 6};
    for (int j = 0; j < 4; ++j) {
        EXPECT_NEAR(a.spec.c[j], c[j], 1e-15);
    }
    const std::vector<double> row{4, -1, 0, -1};
    EXPECT_EQ(a.a_row, row);
    // scale * realized = -A.
    EXPECT_LT((a.scale * classical::dense(a.spec) + dense_system(a)).cwiseAbs().maxCoeff(),
              1e-12);
    EXPECT_TRUE(a.weak_coupling == false);
}

TEST(Assemble, AllNegativeCase) {
    CyclicSystemSpec s;
    s.stiffness_row = {-5, -1, 0, -1};
    s.n = 1;
    s.Omega = 1.0;
    const AssembledSystem a = assemble_system(s);
    EXPECT_EQ(a.sign_case, SignCase::all_negative);
    EXPECT_EQ(a.spec.sign, SignMode::plain);
    EXPECT_DOUBLE_EQ(a.scale, 8.0);
    EXPECT_LT((a.scale * classical::dense(a.spec) + dense_system(a)).cwiseAbs().maxCoeff(),
              1e-12);
    EXPECT_TRUE(a.weak_coupling);
}

TEST(Assemble, Spectrum) {
    const AssembledSystem a = assemble_system(worked());
    const auto lam = classical::dft_eigenvalues(std::span<const double>(a.a_row));
    expect_amplitudes(lam, classical::Vector{2, 4, 6, 4}, 1e-12);
    EXPECT_NEAR(classical::condition_number(std::span<const double>(a.a_row)), 3.0,
                1e-12);
}

TEST(Assemble, WeakCouplingThreshold) {
    CyclicSystemSpec s;
    s.stiffness_row = {4.01, -1, 0, -1};
    EXPECT_TRUE(assemble_system(s).weak_coupling);
    s.stiffness_row = {4.0, -1, 0, -1};
    EXPECT_FALSE(assemble_system(s).weak_coupling);
}

TEST(Assemble, BadInputsRejected) {
    CyclicSystemSpec s;
    s.stiffness_row = {5, 1, 0, 1};
    EXPECT_THROW(assemble_system(s), InputError);
    s.stiffness_row = {5, -1, 0, -2};
    EXPECT_THROW(assemble_system(s), InputError);
}

TEST(Force, Cases) {
    const double h = 0.5;
    expect_amplitudes(travelling_wave_force(4, 0).amplitudes(), Amplitudes{h, h, h, h},
                      1e-15);
    const cplx i{0, 1};
    expect_amplitudes(travelling_wave_force(4, 1).amplitudes(),
                      Amplitudes{h, h * i, -h, -h * i}, 1e-15);
}

TEST(Force, EigenvectorOfAnyCirculant) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1, 1);
    std::vector<double> c(8);
    for (auto &x : c) {
        x = u(rng);
    }
    const auto C = classical::dense_circulant(std::span<const double>(c));
    for (int n = 0; n < 8; ++n) {
        const StateVector f = travelling_wave_force(8, n);
        const auto af = classical::matvec(C, f.amplitudes());
        EXPECT_NEAR(std::abs(inner_product(f.amplitudes(), af)), norm(af), 1e-12);
    }
}

TEST(Solve, WorkedSystemFirstOrder) {
    const CyclicSolution s = solve_cyclic(worked(), 1e-3);
    const StateVector f = travelling_wave_force(4, 1);
    EXPECT_NEAR(s.kappa, 3.0, 1e-12);
    EXPECT_GE(s.force_overlap, 1.0 - 1e-3);
    EXPECT_LE(s.residual, 1e-3);
    EXPECT_NEAR(s.magnitude, 0.5, 1e-3);
    // q0 = f / Lambda_1(A) = f / 4 with ||f|| = 2.
    Amplitudes want(4);
    for (int j = 0; j < 4; ++j) {
        want[j] = f[j] * 2.0 / 4.0;
    }
    expect_amplitudes(s.q0_full, want, 1e-3);
}

TEST(Solve, WorkedSystemZeroOrder) {
    CyclicSystemSpec spec = worked();
    spec.n = 0;
    spec.Omega = 0.0;
    spec.stiffness_row = {3, -1, 0, -1};
    const CyclicSolution s = solve_cyclic(spec, 1e-3);
    // A = circ(3, -1, 0, -1), Lambda_0 = 1, f uniform.
    EXPECT_GE(s.force_overlap, 1.0 - 1e-3);
    EXPECT_LE(s.residual, 1e-3);
    expect_amplitudes(s.q0_full, Amplitudes{1, 1, 1, 1}, 1e-3);
}

TEST(Solve, AllNegativeCase) {
    CyclicSystemSpec spec;
    spec.stiffness_row = {-5, -1, 0, -1};
    spec.n = 2;
    spec.Omega = 0.5;
    spec.f_amp = cplx(0, 2);
    const CyclicSolution s = solve_cyclic(spec, 1e-3);
    EXPECT_EQ(s.system.sign_case, SignCase::all_negative);
    EXPECT_LE(s.residual, 1e-3);
}

TEST(Solve, ObservablesAndReference) {
    CyclicOptions o;
    o.observable = classical::DenseOperator::Identity(4, 4);
    o.reference = travelling_wave_force(4, 1).amplitudes();
    const CyclicSolution s = solve_cyclic(worked(), 1e-3, o);
    ASSERT_TRUE(s.expectation.has_value());
    EXPECT_NEAR(s.expectation->real(), 1.0, 1e-10);
    ASSERT_TRUE(s.overlap.has_value());
    EXPECT_NEAR(std::abs(*s.overlap), s.force_overlap, 1e-12);
}

TEST(Solve, TaylorBackend) {
    CyclicOptions o;
    o.backend = InversionBackend::taylor;
    const CyclicSolution s = solve_cyclic(worked(), 1e-2, o);
    EXPECT_LE(s.residual, 1e-2);
}

TEST(Solve, SingularSystemRejected) {
    CyclicSystemSpec spec;
    spec.stiffness_row = {2, -1, 0, -1};
    EXPECT_THROW(solve_cyclic(spec, 1e-3), InputError);
}
