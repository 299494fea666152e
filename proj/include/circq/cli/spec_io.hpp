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
 * JSON spec, state and report encoding for the command-line tool. Complex
 * numbers are [re, im] pairs; a bare number is a real amplitude.
 */
#pragma once

#include <string>

#include <json.hpp>

#include "circq/circulant.hpp"
#include "circq/cyclic.hpp"
#include "circq/lcu.hpp"

namespace circq::cli {

using json = nlohmann::json;

/// Malformed spec or state file. The message names the file and field.
class SpecError : public InputError {
  public:
    using InputError::InputError;
};

/// Reads and parses a JSON file; records its bytes for the input digest.
json load_json(const std::string &path, std::string *raw = nullptr);

cplx parse_complex(const json &j, const std::string &where);
json complex_json(cplx z);
json amplitudes_json(std::span<const cplx> a);

/// {"amplitudes": [...]} or a bare array. Normalized on load when the norm
/// is within 1e-6 of 1, otherwise a SpecError.
StateVector parse_state(const json &j, int expected_qubits,
                        const std::string &where);

std::vector<double> real_array(const json &j, const std::string &field,
                               const std::string &where);

std::string spec_kind(const json &spec, const std::string &where);

CirculantSpec parse_circulant(const json &spec, const std::string &where);
ToeplitzSpec parse_toeplitz(const json &spec, const std::string &where);
HankelSpec parse_hankel(const json &spec, const std::string &where);
BlockUbSpec parse_block_ub(const json &spec, const std::string &where);
BlockCbSpec parse_block_cb(const json &spec, const std::string &where);
std::vector<CirculantSpec> parse_product(const json &spec,
                                         const std::string &where);
CyclicSystemSpec parse_cyclic(const json &spec, const std::string &where);

json tally_json(const GateTally &t);
json calls_json(const OracleCalls &c);
json lcu_json(const LcuResult &r);

/// 64-bit FNV-1a, hex encoded.
std::string digest(const std::string &bytes);

} // namespace circq::cli
