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

// Shared helpers for the unit tests.
#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include <gtest/gtest.h>

#include "circq/classical.hpp"
#include "circq/state_vector.hpp"

namespace circq::support {

inline StateVector sys_basis(int L, Index k, const char *name = "sys") {
    RegisterLayout layout;
    layout.add(name, L);
    return StateVector::basis(layout, k);
}

inline StateVector sys_state(Amplitudes a, const char *name = "sys") {
    int L = 0;
    while ((std::size_t{1} << L) < a.size()) {
        ++L;
    }
    RegisterLayout layout;
    layout.add(name, L);
    return StateVector(layout, std::move(a));
}

inline Amplitudes dense_apply(const classical::DenseOperator &m,
                              std::span<const cplx> v) {
    return classical::matvec(m, v);
}

inline double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
    EXPECT_EQ(a.size(), b.size());
    double m = 0.0;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

inline Amplitudes normalized(Amplitudes v) {
    const double n = norm(v);
    for (auto &z : v) {
        z /= n;
    }
    return v;
}

inline void expect_amplitudes(std::span<const cplx> got,
                              std::span<const cplx> want, double tol) {
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
        EXPECT_NEAR(got[i].real(), want[i].real(), tol) << "i=" << i;
        EXPECT_NEAR(got[i].imag(), want[i].imag(), tol) << "i=" << i;
    }
}

} // namespace circq::support
