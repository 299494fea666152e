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

#include "circq/product.hpp"

namespace circq {

ProductOracle ProductOracle::build(std::vector<AmplitudeOracle> factors,
                                   Backend backend) {
    require(factors.size() >= 2, "a product oracle needs at least two factors");
    const int L = factors.front().width();
    for (const auto &f : factors) {
        require(f.width() == L, "factor oracles differ in width");
    }
    require(static_cast<int>(factors.size() + 1) * L <= kMaxQubits,
            "product oracle exceeds the qubit cap");
    ProductOracle o;
    o.width_ = L;
    o.factors_ = std::move(factors);
    o.backend_ = backend;
    return o;
}

std::vector<std::pair<std::string, int>> ProductOracle::registers() const {
    std::vector<std::pair<std::string, int>> regs{{"prod", width_}};
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        regs.emplace_back("fac" + std::to_string(i), width_);
    }
    return regs;
}

void ProductOracle::apply(StateVector &state, bool inverse,
                          GateTally *tally) const {
    const Register prod = state.reg("prod");
    const std::size_t d = factors_.size();
    if (!inverse) {
        for (std::size_t i = 0; i < d; ++i) {
            factors_[i].apply(state, state.reg("fac" + std::to_string(i)));
        }
        for (std::size_t i = d; i-- > 0;) {
            controlled_add(state, state.reg("fac" + std::to_string(i)), prod,
                           backend_, tally);
        }
        return;
    }
    for (std::size_t i = 0; i < d; ++i) {
        controlled_subtract(state, state.reg("fac" + std::to_string(i)), prod,
                            backend_, tally);
    }
    for (std::size_t i = d; i-- > 0;) {
        factors_[i].apply(state, state.reg("fac" + std::to_string(i)), true);
    }
}

AncillaPreparation ProductOracle::preparation() const {
    AncillaPreparation p;
    p.registers = registers();
    p.prepare = [self = *this](StateVector &s, bool inverse) {
        self.apply(s, inverse);
    };
    p.oracle_calls = static_cast<int>(factors_.size());
    return p;
}

std::vector<double> product_marginals(const ProductOracle &oracle) {
    RegisterLayout layout;
    for (const auto &[name, width] : oracle.registers()) {
        layout.add(name, width);
    }
    StateVector s(layout);
    oracle.apply(s);
    return register_marginals(s, s.reg("prod"));
}

LcuResult apply_product_circulant(const std::vector<CirculantSpec> &factors,
                                  const StateVector &psi, Backend backend) {
    require(!factors.empty(), "no factors given");
    double scale = 1.0;
    for (const auto &f : factors) {
        require(f.sign == SignMode::plain,
                "product factors must use the plain sign mode");
        scale *= f.scale;
    }
    RegisterLayout sys;
    sys.add("sys", factors.front().L);
    require(psi.num_qubits() == sys.num_qubits(),
            "input state width differs from the factors");
    StateVector in(sys, psi.amplitudes());

    LcuResult res = [&] {
        if (factors.size() == 1) {
            return apply_circulant(factors.front(), in,
                                   ApplyOptions{0, nullptr, backend});
        }
        std::vector<AmplitudeOracle> oracles;
        for (const auto &f : factors) {
            oracles.push_back(AmplitudeOracle::from_probabilities(f.c));
        }
        const ProductOracle po = ProductOracle::build(std::move(oracles), backend);
        UnitaryFamily fam = shift_family("prod", "sys", backend);
        for (std::size_t i = 0; i < factors.size(); ++i) {
            fam.garbage_registers.push_back("fac" + std::to_string(i));
        }
        return lcu_sandwich(in, po.preparation(), fam);
    }();
    res.scale = scale;
    return res;
}

} // namespace circq
