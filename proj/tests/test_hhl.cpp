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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "circq/hhl.hpp"
#include "circq/random_specs.hpp"
#include "support.hpp"

using namespace circq;
using circq::support::expect_amplitudes;
using circq::support::normalized;

namespace {

StateVector inverse_direction(const CirculantSpec &spec, const StateVector &psi) {
    RegisterLayout l;
    l.add("sys", spec.L);
    return StateVector(l, normalized(classical::oracle_matfun(
                              std::span<const double>(spec.c), psi.amplitudes(),
                              classical::MatFun::inverse)));
}

double kappa_of(const CirculantSpec &spec) {
    return classical::condition_number(std::span<const double>(spec.c));
}

// sum_j |b_j / (kappa Lambda_j)|^2 with b = F^dagger psi.
double step_three_probability(const CirculantSpec &spec, const StateVector &psi,
                              double kappa) {
    const auto lam = classical::dft_eigenvalues(std::span<const double>(spec.c));
    const auto b = classical::dft(psi.amplitudes(), true);
    double p = 0.0;
    for (std::size_t j = 0; j < lam.size(); ++j) {
        p += std::norm(b[j] / (kappa * lam[j]));
    }
    return p;
}

} // namespace

TEST(InversionPlan, PhaseBits) {
    EXPECT_EQ(InversionPlan::make(2.0, 1e-3).T, 13);
    EXPECT_EQ(InversionPlan::make(1.0, 0.25).T, 4);
    EXPECT_THROW(InversionPlan::make(0.5, 1e-3), InputError);
}

TEST(PhaseEstimate, IdentityPeaksAtHalf) {
    const auto spec = CirculantSpec::make({1, 0, 0, 0});
    InversionPlan plan = InversionPlan::make(1.0, 0.1);
    std::mt19937_64 rng(1);
    const StateVector s = phase_estimate(spec, random::state(2, rng), plan);
    const auto marg = register_marginals(s, s.reg("ph"));
    EXPECT_NEAR(marg[Index{1} << (plan.T - 1)], 1.0, 1e-12);
}

TEST(PhaseEstimate, FourierVectorReadsQuarter) {
    const auto spec = CirculantSpec::make({0.625, 0.125, 0.125, 0.125});
    const InversionPlan plan = InversionPlan::make(2.0, 0.1);
    StateVector f1 = support::sys_basis(2, 1);
    qft(f1, f1.reg("sys"), false);
    const StateVector s = phase_estimate(spec, f1, plan);
    const auto marg = register_marginals(s, s.reg("ph"));
    EXPECT_NEAR(marg[Index{1} << (plan.T - 2)], 1.0, 1e-12);
}

TEST(Invert, IdentityReturnsInput) {
    std::mt19937_64 rng(2);
    const auto spec = CirculantSpec::make({1, 0, 0, 0});
    const StateVector psi = random::state(2, rng);
    const InversionResult r = invert_circulant(spec, psi, InversionPlan::make(1.0, 1e-3));
    EXPECT_NEAR(r.lcu.success_probability, 1.0, 1e-12);
    EXPECT_LT(state_distance(r.lcu.output, psi, DistanceMode::phase_invariant), 1e-10);
}

TEST(Invert, FiveEighthsOnZero) {
    const auto spec = CirculantSpec::make({0.625, 0.125, 0.125, 0.125});
    const StateVector psi = support::sys_basis(2, 0);
    const InversionResult r = invert_circulant(spec, psi, InversionPlan::make(2.0, 1e-3));
    const double n = std::sqrt(52.0);
    expect_amplitudes(r.lcu.output.amplitudes(),
                      Amplitudes{7 / n, -1 / n, -1 / n, -1 / n}, 1e-10);
    // C^{-1}|0> = (7, -1, -1, -1) / 4, so p = 52 / 16 / kappa^2.
    EXPECT_NEAR(r.lcu.success_probability, 0.8125, 1e-10);
    EXPECT_NEAR(step_three_probability(spec, psi, 2.0), 0.8125, 1e-12);
    EXPECT_LT(r.diagnostics.uncompute_residual, 1e-12);
    EXPECT_EQ(r.diagnostics.clamped_values, 0u);
}

TEST(Invert, ExactPhasesMatchOracle) {
    // Lambda = (1, 1/2, 1/4, 1/2): every half-scaled phase is a dyadic.
    const auto spec = CirculantSpec::make({0.5625, 0.1875, 0.0625, 0.1875});
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 5; ++rep) {
        const StateVector psi = random::state(2, rng);
        const InversionResult r =
            invert_circulant(spec, psi, InversionPlan::make(4.0, 1e-3));
        EXPECT_LT(state_distance(r.lcu.output, inverse_direction(spec, psi),
                                 DistanceMode::phase_invariant),
                  1e-10);
        EXPECT_NEAR(r.lcu.success_probability,
                    step_three_probability(spec, psi, 4.0), 1e-10);
    }
}

TEST(Invert, RandomPositiveDefiniteBound) {
    std::mt19937_64 rng(4);
    for (int rep = 0; rep < 10; ++rep) {
        const int L = 1 + rep % 3;
        const auto spec = CirculantSpec::make(
            random::positive_definite_weights(std::size_t{1} << L, rng));
        const double kappa = kappa_of(spec);
        const InversionPlan plan = InversionPlan::make(kappa, 1e-2);
        const StateVector psi = random::state(L, rng);
        const InversionResult r = invert_circulant(spec, psi, plan);
        EXPECT_GE(r.lcu.success_probability,
                  1.0 / (kappa * kappa) - std::pow(2.0, -plan.T + 2));
        EXPECT_LE(state_distance(r.lcu.output, inverse_direction(spec, psi),
                                 DistanceMode::phase_invariant),
                  1e-2);
        EXPECT_LE(r.diagnostics.uncompute_residual, 4 * std::pow(2.0, -plan.T));
    }
}

TEST(Invert, DoublingPhaseBitsDoesNotHurt) {
    std::mt19937_64 rng(5);
    const auto spec = CirculantSpec::make(random::positive_definite_weights(4, rng));
    const StateVector psi = random::state(2, rng);
    InversionPlan plan = InversionPlan::make(kappa_of(spec), 0.1);
    const double coarse = state_distance(invert_circulant(spec, psi, plan).lcu.output,
                                         inverse_direction(spec, psi),
                                         DistanceMode::phase_invariant);
    plan.T *= 2;
    const double fine = state_distance(invert_circulant(spec, psi, plan).lcu.output,
                                       inverse_direction(spec, psi),
                                       DistanceMode::phase_invariant);
    EXPECT_LE(fine, coarse + 1e-12);
}

TEST(Invert, TaylorBackendAgreesWithExact) {
    std::mt19937_64 rng(6);
    const auto spec = CirculantSpec::make(random::positive_definite_weights(4, rng));
    const StateVector psi = random::state(2, rng);
    const double eps = 1e-2;
    const InversionPlan exact = InversionPlan::make(kappa_of(spec), eps);
    const InversionPlan taylor =
        InversionPlan::make(kappa_of(spec), eps, InversionBackend::taylor);
    const auto a = invert_circulant(spec, psi, exact);
    const auto b = invert_circulant(spec, psi, taylor);
    EXPECT_LE(state_distance(a.lcu.output, b.lcu.output, DistanceMode::phase_invariant),
              5 * eps);
}

TEST(Invert, NonPositiveSpectrumRejected) {
    const auto spec = CirculantSpec::make({0.2, 0.8});
    EXPECT_THROW(invert_circulant(spec, support::sys_basis(1, 0),
                                  InversionPlan::make(4.0, 1e-2)),
                 InputError);
    const auto singular = CirculantSpec::make({0.5, 0.5});
    EXPECT_THROW(invert_circulant(singular, support::sys_basis(1, 0),
                                  InversionPlan::make(4.0, 1e-2)),
                 InputError);
}

TEST(Invert, NegatedOperator) {
    // negate_v0 on (4, 1, 0, 1) / 6 realizes circ(-4, 1, 0, 1) / 6 with
    // eigenvalues -(2, 4, 6, 4) / 6.
    const auto spec = CirculantSpec::make({4, 1, 0, 1}, SignMode::negate_v0);
    InversionPlan plan = InversionPlan::make(3.0, 1e-3);
    plan.negate_operator = true;
    std::mt19937_64 rng(7);
    const StateVector psi = random::state(2, rng);
    const InversionResult r = invert_circulant(spec, psi, plan);
    RegisterLayout l;
    l.add("sys", 2);
    const auto x = classical::oracle_matfun(std::span<const double>(spec.c),
                                            psi.amplitudes(),
                                            classical::MatFun::inverse, 0.0,
                                            SignMode::negate_v0);
    EXPECT_LT(state_distance(r.lcu.output, StateVector(l, normalized(x)),
                             DistanceMode::phase_invariant),
              1e-3);
}

TEST(Invert, KappaUnderestimateRejected) {
    const auto spec = CirculantSpec::make({0.625, 0.125, 0.125, 0.125});
    EXPECT_THROW(invert_circulant(spec, support::sys_basis(2, 0),
                                  InversionPlan::make(1.0, 1e-2)),
                 InputError);
}

TEST(Invert, AmplifiedRaisesProbability) {
    const auto spec = CirculantSpec::make({0.5625, 0.1875, 0.0625, 0.1875});
    const auto psi_o = AmplitudeOracle::build({1, 0, 0, 0});
    const InversionPlan plan = InversionPlan::make(4.0, 1e-2);
    const double p0 = invert_amplified(spec, psi_o, plan, 0).success_probability;
    const LcuResult r = invert_amplified(spec, psi_o, plan, optimal_iterations(p0));
    EXPECT_NEAR(r.success_probability,
                amplified_probability(p0, optimal_iterations(p0)), 1e-10);
    EXPECT_GT(r.success_probability, p0);
    EXPECT_LT(state_distance(r.output, inverse_direction(spec, support::sys_basis(2, 0)),
                             DistanceMode::phase_invariant),
              1e-10);
}
