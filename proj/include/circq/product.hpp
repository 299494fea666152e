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

/**
 * @file
 * Oracles for products of circulants.
 *
 * Each factor oracle loads its own register; adders then accumulate every
 * factor index into the output register "prod", leaving
 * sum_j sqrt(c_j) |j>|Phi_j> with c the cyclic convolution of the factors.
 */
#pragma once

#include <vector>

#include "circq/circulant.hpp"
#include "circq/lcu.hpp"

namespace circq {

class ProductOracle {
  public:
    static ProductOracle build(std::vector<AmplitudeOracle> factors,
                               Backend backend = Backend::perm);

    [[nodiscard]] int width() const { return width_; }
    [[nodiscard]] std::size_t degree() const { return factors_.size(); }
    /// "prod" then "fac0", ..., "fac{d-1}".
    [[nodiscard]] std::vector<std::pair<std::string, int>> registers() const;
    [[nodiscard]] AncillaPreparation preparation() const;

    /// Apply (or undo) on a state holding the registers above.
    void apply(StateVector &state, bool inverse = false,
               GateTally *tally = nullptr) const;

  private:
    ProductOracle() = default;

    int width_ = 0;
    std::vector<AmplitudeOracle> factors_;
    Backend backend_ = Backend::perm;
};

/// Marginal distribution of "prod" after the oracle acts on |0...0>.
std::vector<double> product_marginals(const ProductOracle &oracle);

/// prod_i C^(i) |psi> via the garbage-register sandwich.
LcuResult apply_product_circulant(const std::vector<CirculantSpec> &factors,
                                  const StateVector &psi,
                                  Backend backend = Backend::perm);

} // namespace circq
