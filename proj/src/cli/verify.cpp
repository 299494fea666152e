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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "circq/arith.hpp"
#include "circq/cli/cli.hpp"
#include "circq/hamsim.hpp"
#include "circq/hhl.hpp"
#include "circq/product.hpp"
#include "circq/random_specs.hpp"

namespace circq::cli {

namespace {

using Rng = std::mt19937_64;

double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

Amplitudes dense_apply(const classical::DenseOperator &m,
                       std::span<const cplx> v) {
    const auto r = classical::matvec(m, v);
    return Amplitudes(r.data(), r.data() + r.size());
}

// max over the amplitude and probability deviations of one LCU run.
double lcu_deviation(const LcuResult &res, const Amplitudes &expected) {
    const double p = std::pow(norm(expected), 2);
    return std::max(max_abs_diff(res.unnormalized, expected),
                    std::abs(res.success_probability - p));
}

struct Tracker {
    double worst = 0.0;
    int cases = 0;
    void add(double d) {
        worst = std::max(worst, d);
        ++cases;
    }
};

StateVector basis_state(int L, Index k) {
    RegisterLayout layout;
    layout.add("sys", L);
    return StateVector::basis(layout, k);
}

Tracker suite_lcu(const std::vector<int> &widths, Rng &rng, int cases,
                  bool signs) {
    Tracker t;
    for (int L : widths) {
        const std::size_t N = std::size_t{1} << L;
        for (int i = 0; i < cases; ++i) {
            const SignMode sign = signs && (i % 2 == 1) ? SignMode::negate_v0
                                                       : SignMode::plain;
            const auto spec =
                CirculantSpec::make(random::probability_vector(N, rng), sign);
            const auto dense = classical::dense(spec);
            const StateVector psi = random::state(L, rng);
            const LcuResult res = apply_circulant(spec, psi);
            t.add(lcu_deviation(res, dense_apply(dense, psi.amplitudes())));
            if (signs) {
                // p = ||Lambda F^dagger psi||^2
                const auto lam = classical::dft_eigenvalues(
                    std::span<const double>(spec.c), spec.sign);
                const auto phi = classical::dft(psi.amplitudes(), true);
                double p = 0.0;
                for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(lam.size()); ++k) {
                    p += std::norm(lam[k] * phi[k]);
                }
                t.add(std::abs(p - res.success_probability));
            }
        }
        if (L <= 3) {
            const auto spec =
                CirculantSpec::make(random::probability_vector(N, rng));
            const auto dense = classical::dense(spec);
            for (Index k = 0; k < N; ++k) {
                const StateVector psi = basis_state(L, k);
                t.add(lcu_deviation(apply_circulant(spec, psi),
                                    dense_apply(dense, psi.amplitudes())));
            }
        }
    }
    return t;
}

Tracker suite_aa(const std::vector<int> &widths, Rng &rng, int cases) {
    Tracker t;
    for (int L : widths) {
        const std::size_t N = std::size_t{1} << L;
        for (int i = 0; i < cases; ++i) {
            const auto spec = CirculantSpec::make(random::probability_vector(N, rng));
            const StateVector psi = random::state(L, rng);
            const auto oracle = AmplitudeOracle::build(psi.amplitudes());
            const double p0 = apply_circulant(spec, psi).success_probability;
            for (int n = 0; n <= 5; ++n) {
                ApplyOptions o;
                o.amplify_iterations = n;
                o.psi_oracle = &oracle;
                const LcuResult res = apply_circulant(spec, psi, o);
                t.add(std::abs(res.success_probability -
                               amplified_probability(p0, n)));
            }
        }
    }
    return t;
}

Tracker suite_toeplitz(const std::vector<int> &widths, Rng &rng, int cases) {
    Tracker t;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int L : widths) {
        const std::size_t N = std::size_t{1} << L;
        for (int i = 0; i < cases; ++i) {
            std::vector<double> v(2 * N - 1);
            for (auto &x : v) {
                x = u(rng);
            }
            const StateVector psi = random::state(L, rng);
            const auto ts = ToeplitzSpec::make(v);
            t.add(lcu_deviation(apply_toeplitz(ts, psi),
                                dense_apply(classical::dense(ts), psi.amplitudes())));
            const auto hs = HankelSpec::make(v);
            t.add(lcu_deviation(apply_hankel(hs, psi),
                                dense_apply(classical::dense(hs), psi.amplitudes())));
            // Raw matrices rebuilt from the unnormalized vector.
            const auto raw = dense_apply(classical::dense_toeplitz(v), psi.amplitudes());
            const LcuResult r = apply_toeplitz(ts, psi);
            Amplitudes back = r.unnormalized;
            for (auto &z : back) {
                z *= r.scale;
            }
            t.add(max_abs_diff(back, raw));
        }
    }
    return t;
}

Tracker suite_block(const std::vector<int> &widths, Rng &rng, int cases) {
    Tracker t;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int L : widths) {
        const std::size_t N = std::size_t{1} << L;
        for (int i = 0; i < cases; ++i) {
            const int bq = 1;
            std::vector<GateMatrix> blocks;
            for (std::size_t j = 0; j < N; ++j) {
                blocks.push_back(random::unitary(bq, rng));
            }
            const auto ub = BlockUbSpec::explicit_blocks(
                random::probability_vector(N, rng), blocks);
            StateVector psi = random::state(L + bq, rng);
            t.add(lcu_deviation(apply_block_ub(ub, psi),
                                dense_apply(classical::dense(ub), psi.amplitudes())));

            const auto ph = BlockUbSpec::phase_rule(random::probability_vector(N, rng),
                                                    2.0 * std::numbers::pi * u(rng));
            psi = random::state(L, rng);
            t.add(lcu_deviation(apply_block_ub(ph, psi),
                                dense_apply(classical::dense(ph), psi.amplitudes())));

            const std::size_t Nb = 2;
            Eigen::MatrixXd w(static_cast<Eigen::Index>(N),
                              static_cast<Eigen::Index>(Nb));
            for (Eigen::Index r = 0; r < w.rows(); ++r) {
                for (Eigen::Index c = 0; c < w.cols(); ++c) {
                    w(r, c) = u(rng);
                }
            }
            const auto cb = BlockCbSpec::make(w);
            psi = random::state(L + 1, rng);
            t.add(lcu_deviation(apply_block_cb(cb, psi),
                                dense_apply(classical::dense(cb), psi.amplitudes())));
        }
    }
    return t;
}

Tracker suite_hamsim(const std::vector<int> &widths, Rng &rng, int cases,
                     double eps) {
    Tracker t;
    for (int L : widths) {
        const std::size_t N = std::size_t{1} << L;
        for (int i = 0; i < cases; ++i) {
            const auto spec = CirculantSpec::make(random::hermitian_weights(N, rng));
            const StateVector psi = random::state(L, rng);
            const double time = (i % 2 == 0) ? 0.5 : 1.0;
            const Evolution ev = simulate_evolution(spec, psi, time, eps);
            const auto ref = classical::oracle_matfun(
                std::span<const double>(spec.c), psi.amplitudes(),
                classical::MatFun::expm, time);
            t.add(state_distance(ev.output.amplitudes(),
                                 Amplitudes(ref.data(), ref.data() + ref.size()),
                                 DistanceMode::phase_invariant));
        }
    }
    return t;
}

Tracker suite_invert(const std::vector<int> &widths, Rng &rng, int cases,
                     double eps) {
    Tracker t;
    for (int L : widths) {
        const std::size_t N = std::size_t{1} << L;
        for (int i = 0; i < cases; ++i) {
            const auto spec =
                CirculantSpec::make(random::positive_definite_weights(N, rng));
            const StateVector psi = random::state(L, rng);
            const double kappa =
                classical::condition_number(std::span<const double>(spec.c));
            const auto res =
                invert_circulant(spec, psi, InversionPlan::make(kappa, eps));
            const auto ref = classical::oracle_matfun(
                std::span<const double>(spec.c), psi.amplitudes(),
                classical::MatFun::inverse);
            Amplitudes dir(ref.begin(), ref.end());
            const double n = norm(dir);
            for (auto &z : dir) {
                z /= n;
            }
            t.add(state_distance(res.lcu.output.amplitudes(), dir,
                                 DistanceMode::phase_invariant));
        }
    }
    return t;
}

Tracker suite_product(const std::vector<int> &widths, Rng &rng, int cases) {
    Tracker t;
    for (int L : widths) {
        const std::size_t N = std::size_t{1} << L;
        for (int i = 0; i < cases; ++i) {
            const std::size_t d = (i % 3 == 2) ? 3 : 2;
            std::vector<CirculantSpec> f;
            std::vector<AmplitudeOracle> o;
            std::vector<double> conv(N, 0.0);
            conv[0] = 1.0;
            for (std::size_t k = 0; k < d; ++k) {
                f.push_back(CirculantSpec::make(random::probability_vector(N, rng)));
                o.push_back(AmplitudeOracle::from_probabilities(f.back().c));
                conv = classical::cyclic_convolution(
                    std::span<const double>(conv), std::span<const double>(f.back().c));
            }
            const auto marg = product_marginals(ProductOracle::build(o));
            for (std::size_t j = 0; j < N; ++j) {
                t.add(std::abs(marg[j] - conv[j]));
            }
            const StateVector psi = random::state(L, rng);
            Amplitudes expected = psi.amplitudes();
            for (auto it = f.rbegin(); it != f.rend(); ++it) {
                expected = dense_apply(classical::dense(*it), expected);
            }
            t.add(lcu_deviation(apply_product_circulant(f, psi), expected));
        }
    }
    return t;
}

Tracker suite_arith(const std::vector<int> &widths, Rng &rng, int cases) {
    Tracker t;
    for (int L : widths) {
        for (int i = 0; i < cases; ++i) {
            RegisterLayout layout;
            layout.add("a", L).add("b", L);
            const Amplitudes a = random::unit_vector(std::size_t{1} << (2 * L), rng);
            StateVector g(layout, a), p(layout, a);
            const bool add = i % 2 == 0;
            if (add) {
                controlled_add(g, g.reg("a"), g.reg("b"), Backend::gate);
                controlled_add(p, p.reg("a"), p.reg("b"), Backend::perm);
            } else {
                controlled_subtract(g, g.reg("a"), g.reg("b"), Backend::gate);
                controlled_subtract(p, p.reg("a"), p.reg("b"), Backend::perm);
            }
            t.add(max_abs_diff(g.amplitudes(), p.amplitudes()));
        }
    }
    return t;
}

} // namespace

std::vector<std::string> suite_names() {
    return {"lcu",    "circulant", "aa",      "toeplitz", "block",
            "hamsim", "invert",    "product", "arith"};
}

SuiteResult run_suite(const std::string &suite, const std::vector<int> &widths,
                      std::uint64_t seed, int cases) {
    Rng rng(seed);
    SuiteResult out;
    out.threshold = 1e-10;
    Tracker t;
    if (suite == "lcu") {
        t = suite_lcu(widths, rng, cases, false);
    } else if (suite == "circulant") {
        t = suite_lcu(widths, rng, cases, true);
    } else if (suite == "aa") {
        t = suite_aa(widths, rng, cases);
    } else if (suite == "toeplitz") {
        t = suite_toeplitz(widths, rng, cases);
    } else if (suite == "block") {
        t = suite_block(widths, rng, cases);
    } else if (suite == "hamsim") {
        out.threshold = 1e-3;
        t = suite_hamsim(widths, rng, cases, out.threshold);
    } else if (suite == "invert") {
        out.threshold = 1e-3;
        t = suite_invert(widths, rng, cases, out.threshold);
    } else if (suite == "product") {
        t = suite_product(widths, rng, cases);
    } else if (suite == "arith") {
        t = suite_arith(widths, rng, cases);
    } else {
        throw InputError("unknown suite '" + suite + "'");
    }
    out.max_deviation = t.worst;
    out.pass = t.worst <= out.threshold;
    out.details = json{{"suite", suite}, {"widths", widths}, {"checks", t.cases}};
    return out;
}

} // namespace circq::cli
