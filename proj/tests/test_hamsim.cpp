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
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "circq/hamsim.hpp"
#include "circq/random_specs.hpp"
#include "support.hpp"

using namespace circq;
using circq::support::expect_amplitudes;

namespace {

StateVector expm_oracle(const CirculantSpec &spec, const StateVector &psi, double t) {
    RegisterLayout l;
    l.add("sys", spec.L);
    return StateVector(l, classical::oracle_matfun(std::span<const double>(spec.c),
                                                   psi.amplitudes(),
                                                   classical::MatFun::expm, t));
}

double factorial(int k) {
    return std::tgamma(k + 1.0);
}

} // namespace

TEST(Plan, SegmentCounts) {
    EXPECT_EQ(plan_simulation(0.5, 1e-3).r, 1);
    EXPECT_EQ(plan_simulation(1.0, 1e-3).r, 2);
    EXPECT_EQ(plan_simulation(4.0, 1e-3).r, 6);
}

TEST(Plan, TruncationOrderIsMinimal) {
    const HamSimPlan p = plan_simulation(1.0, 1e-6);
    const double target = 1e-6 / p.r;
    auto bound = [](int K) {
        return 2.0 * std::pow(std::numbers::ln2, K + 1) / factorial(K + 1);
    };
    EXPECT_LE(bound(p.K), target);
    EXPECT_GT(bound(p.K - 1), target);
    EXPECT_DOUBLE_EQ(taylor_tail_bound(p.K), bound(p.K));
}

TEST(Plan, NormalizationWithinTailBound) {
    for (double t : {0.5, 1.0, 2.0, 4.0}) {
        for (double eps : {1e-3, 1e-5}) {
            const HamSimPlan p = plan_simulation(t, eps);
            double s = 0.0;
            for (int k = 0; k <= p.K; ++k) {
                s += std::pow(p.ratio, k) / factorial(k);
            }
            EXPECT_NEAR(p.s, s, 1e-14);
            EXPECT_LE(p.ratio, std::numbers::ln2 + 1e-15);
            EXPECT_LE(p.deficit, p.tail_bound);
        }
    }
}

TEST(Segment, IdentityHamiltonianIsPurePhase) {
    std::mt19937_64 rng(1);
    const auto spec = CirculantSpec::make({1, 0, 0, 0});
    const StateVector psi = random::state(2, rng);
    const HamSimPlan plan = plan_simulation(1.0, 1e-4);
    const SegmentResult r = apply_segment(spec, psi, plan);
    Amplitudes want = psi.amplitudes();
    for (auto &z : want) {
        z *= std::polar(1.0, -plan.ratio);
    }
    EXPECT_LT(state_distance(r.output, StateVector(psi.layout(), want),
                             DistanceMode::phase_invariant),
              1e-4 / plan.r);
}

TEST(Segment, QuarterSpecOnZero) {
    const auto spec = CirculantSpec::make({0.5, 0.25, 0, 0.25});
    const StateVector psi = support::sys_basis(2, 0);
    const HamSimPlan plan = plan_simulation(1.0, 1e-4);
    for (auto b : {SegmentBackend::dense, SegmentBackend::factored}) {
        SegmentOptions o;
        o.backend = b;
        const SegmentResult r = apply_segment(spec, psi, plan, o);
        EXPECT_LT(state_distance(r.output, expm_oracle(spec, psi, plan.ratio),
                                 DistanceMode::phase_invariant),
                  1e-4 / plan.r);
        EXPECT_LE(r.residual, 10 * 1e-4 / plan.r);
        EXPECT_EQ(r.controlled_oracle_calls, static_cast<std::size_t>(2 * plan.K));
    }
}

TEST(Segment, BackendsAgree) {
    std::mt19937_64 rng(2);
    const auto spec = CirculantSpec::make(random::hermitian_weights(4, rng));
    const StateVector psi = random::state(2, rng);
    const HamSimPlan plan = plan_simulation(0.5, 1e-3);
    SegmentOptions d, f;
    d.backend = SegmentBackend::dense;
    f.backend = SegmentBackend::factored;
    const SegmentResult a = apply_segment(spec, psi, plan, d);
    const SegmentResult b = apply_segment(spec, psi, plan, f);
    EXPECT_LT(state_distance(a.output, b.output, DistanceMode::exact), 1e-10);
    EXPECT_NEAR(a.measured_s, b.measured_s, 1e-10);
}

TEST(Segment, GateArithmeticMatchesPerm) {
    std::mt19937_64 rng(3);
    const auto spec = CirculantSpec::make(random::hermitian_weights(2, rng));
    const StateVector psi = random::state(1, rng);
    const HamSimPlan plan = plan_simulation(0.5, 1e-2);
    SegmentOptions g, p;
    g.backend = p.backend = SegmentBackend::dense;
    g.arith = Backend::gate;
    const SegmentResult a = apply_segment(spec, psi, plan, g);
    const SegmentResult b = apply_segment(spec, psi, plan, p);
    EXPECT_LT(state_distance(a.output, b.output, DistanceMode::exact), 1e-10);
    EXPECT_GT(a.tally.total(), b.tally.total());
}

TEST(Segment, BackwardInvertsForward) {
    std::mt19937_64 rng(4);
    const auto spec = CirculantSpec::make(random::hermitian_weights(4, rng));
    const StateVector psi = random::state(2, rng);
    const HamSimPlan plan = plan_simulation(0.5, 1e-6);
    SegmentOptions back;
    back.direction = Direction::backward;
    const SegmentResult f = apply_segment(spec, psi, plan);
    const SegmentResult b = apply_segment(spec, f.output, plan, back);
    EXPECT_LT(state_distance(b.output, psi, DistanceMode::phase_invariant), 1e-5);
}

TEST(Segment, NonHermitianRejected) {
    const auto spec = CirculantSpec::make({0.5, 0.5, 0, 0});
    EXPECT_THROW(apply_segment(spec, support::sys_basis(2, 0), plan_simulation(1, 1e-3)),
                 InputError);
}

TEST(Segment, TaylorOracleMatchesDenseSeries) {
    std::mt19937_64 rng(5);
    const auto spec = CirculantSpec::make(random::hermitian_weights(4, rng));
    const StateVector psi = random::state(2, rng);
    const HamSimPlan plan = plan_simulation(1.0, 1e-3);
    const auto C = classical::dense(spec);
    classical::DenseOperator term = classical::DenseOperator::Identity(4, 4);
    classical::DenseOperator sum = term;
    for (int k = 1; k <= plan.K; ++k) {
        term = term * C * cplx(0, -plan.ratio) / static_cast<double>(k);
        sum += term;
    }
    expect_amplitudes(taylor_segment_oracle(spec, plan, Direction::forward,
                                            psi.amplitudes()),
                      classical::matvec(sum, psi.amplitudes()), 1e-12);
}

TEST(Evolution, ZeroTimeIsIdentity) {
    std::mt19937_64 rng(6);
    const auto spec = CirculantSpec::make(random::hermitian_weights(4, rng));
    const StateVector psi = random::state(2, rng);
    const Evolution e = simulate_evolution(spec, psi, 0.0, 1e-3);
    EXPECT_LT(state_distance(e.output, psi, DistanceMode::exact), 1e-14);
}

TEST(Evolution, QuarterSpecLongTime) {
    std::mt19937_64 rng(7);
    const auto spec = CirculantSpec::make({0.5, 0.25, 0, 0.25});
    const StateVector psi = random::state(2, rng);
    const Evolution e = simulate_evolution(spec, psi, 2.0, 1e-3);
    EXPECT_LE(state_distance(e.output, expm_oracle(spec, psi, 2.0),
                             DistanceMode::phase_invariant),
              1e-3);
    const auto &d = e.diagnostics;
    EXPECT_NEAR(d.distance, state_distance(e.output, expm_oracle(spec, psi, 2.0),
                                           DistanceMode::phase_invariant),
                1e-12);
    EXPECT_EQ(d.controlled_oracle_calls,
              static_cast<std::size_t>(2 * d.plan.r * d.plan.K));
    EXPECT_EQ(d.executed_controlled_oracle_calls, 3 * d.controlled_oracle_calls);
    EXPECT_EQ(d.segment_error.size(), static_cast<std::size_t>(d.plan.r));
}

TEST(Evolution, RandomSpecsWithinEpsilon) {
    std::mt19937_64 rng(8);
    for (int L = 1; L <= 3; ++L) {
        for (double t : {0.5, 1.0, 2.0}) {
            const auto spec =
                CirculantSpec::make(random::hermitian_weights(std::size_t{1} << L, rng));
            const StateVector psi = random::state(L, rng);
            const Evolution e = simulate_evolution(spec, psi, t, 1e-5);
            EXPECT_LE(state_distance(e.output, expm_oracle(spec, psi, t),
                                     DistanceMode::phase_invariant),
                      1e-5);
            for (double res : e.diagnostics.segment_residual) {
                EXPECT_LE(res, 10 * 1e-5 / e.diagnostics.plan.r);
            }
        }
    }
}

TEST(Evolution, ErrorNonincreasingInOrder) {
    std::mt19937_64 rng(9);
    const auto spec = CirculantSpec::make(random::hermitian_weights(4, rng));
    const StateVector psi = random::state(2, rng);
    const int K = plan_simulation(1.0, 1e-3).K;
    double prev = 1.0;
    for (int k = K; k <= K + 2; ++k) {
        const Evolution e = simulate_evolution(spec, psi, 1.0, 1e-3, {}, k);
        EXPECT_LE(e.diagnostics.distance, prev + 1e-12);
        prev = e.diagnostics.distance;
    }
}

TEST(Evolution, CallCountsGrowWithTime) {
    const auto spec = CirculantSpec::make({0.5, 0.25, 0, 0.25});
    const StateVector psi = support::sys_basis(2, 0);
    std::size_t prev = 0;
    for (double t : {1.0, 2.0, 4.0, 8.0}) {
        SegmentOptions o;
        o.backend = SegmentBackend::factored;
        const Evolution e = simulate_evolution(spec, psi, t, 1e-3, o);
        const auto &d = e.diagnostics;
        EXPECT_EQ(d.controlled_oracle_calls,
                  static_cast<std::size_t>(2 * d.plan.r * d.plan.K));
        EXPECT_GT(d.controlled_oracle_calls, prev);
        prev = d.controlled_oracle_calls;
    }
}
