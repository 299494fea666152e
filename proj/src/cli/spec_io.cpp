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

#include "circq/cli/spec_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace circq::cli {

namespace {

const json &field(const json &spec, const std::string &name,
                  const std::string &where) {
    if (!spec.is_object() || !spec.contains(name)) {
        throw SpecError(where + ": missing field '" + name + "'");
    }
    return spec.at(name);
}

double number(const json &j, const std::string &where) {
    if (!j.is_number()) {
        throw SpecError(where + ": expected a number");
    }
    return j.get<double>();
}

SignMode parse_sign(const json &spec, const std::string &where) {
    if (!spec.contains("sign_mode")) {
        return SignMode::plain;
    }
    const auto &s = spec.at("sign_mode");
    if (s == "plain") {
        return SignMode::plain;
    }
    if (s == "negate_v0") {
        return SignMode::negate_v0;
    }
    throw SpecError(where + ": field 'sign_mode' must be plain or negate_v0");
}

// Library validation errors become spec errors tagged with the file.
template <class F> auto with_context(const std::string &where, F &&f) {
    try {
        return f();
    } catch (const SpecError &) {
        throw;
    } catch (const InputError &e) {
        throw SpecError(where + ": " + e.what());
    }
}

} // namespace

json load_json(const std::string &path, std::string *raw) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw SpecError(path + ": cannot open file");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    if (raw != nullptr) {
        *raw += text;
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw SpecError(path + ": " + e.what());
    }
}

cplx parse_complex(const json &j, const std::string &where) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    throw SpecError(where + ": expected a number or an [re, im] pair");
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json amplitudes_json(std::span<const cplx> a) {
    json out = json::array();
    for (const auto &z : a) {
        out.push_back(complex_json(z));
    }
    return out;
}

StateVector parse_state(const json &j, int expected_qubits,
                        const std::string &where) {
    const json &arr = j.is_object() ? field(j, "amplitudes", where) : j;
    if (!arr.is_array()) {
        throw SpecError(where + ": field 'amplitudes' must be an array");
    }
    Amplitudes a;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        a.push_back(parse_complex(arr[i], where + ": amplitudes[" +
                                              std::to_string(i) + "]"));
    }
    const std::size_t expected = std::size_t{1} << expected_qubits;
    if (a.size() != expected) {
        throw SpecError(where + ": state has " + std::to_string(a.size()) +
                        " amplitudes, expected " + std::to_string(expected));
    }
    const double n = norm(a);
    if (std::abs(n - 1.0) > 1e-6) {
        throw SpecError(where + ": state is not normalized (norm " +
                        std::to_string(n) + ")");
    }
    for (auto &z : a) {
        z /= n;
    }
    RegisterLayout layout;
    layout.add("sys", expected_qubits);
    return StateVector(layout, std::move(a));
}

std::vector<double> real_array(const json &j, const std::string &name,
                               const std::string &where) {
    const json &arr = field(j, name, where);
    if (!arr.is_array()) {
        throw SpecError(where + ": field '" + name + "' must be an array");
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        out.push_back(number(arr[i], where + ": " + name + "[" +
                                         std::to_string(i) + "]"));
    }
    return out;
}

std::string spec_kind(const json &spec, const std::string &where) {
    const json &k = field(spec, "kind", where);
    if (!k.is_string()) {
        throw SpecError(where + ": field 'kind' must be a string");
    }
    return k.get<std::string>();
}

CirculantSpec parse_circulant(const json &spec, const std::string &where) {
    auto c = real_array(spec, "c", where);
    const SignMode sign = parse_sign(spec, where);
    return with_context(where, [&] { return CirculantSpec::make(c, sign); });
}

ToeplitzSpec parse_toeplitz(const json &spec, const std::string &where) {
    auto t = real_array(spec, "t", where);
    return with_context(where, [&] { return ToeplitzSpec::make(t); });
}

HankelSpec parse_hankel(const json &spec, const std::string &where) {
    auto h = real_array(spec, "h", where);
    return with_context(where, [&] { return HankelSpec::make(h); });
}

BlockUbSpec parse_block_ub(const json &spec, const std::string &where) {
    auto c = real_array(spec, "c", where);
    if (spec.contains("theta")) {
        const double theta = number(spec.at("theta"), where + ": theta");
        int bq = 0;
        if (spec.contains("block_qubits")) {
            bq = static_cast<int>(number(spec.at("block_qubits"),
                                         where + ": block_qubits"));
        }
        return with_context(where,
                            [&] { return BlockUbSpec::phase_rule(c, theta, bq); });
    }
    const json &blocks = field(spec, "blocks", where);
    if (!blocks.is_array()) {
        throw SpecError(where + ": field 'blocks' must be an array of matrices");
    }
    std::vector<GateMatrix> mats;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const std::string w = where + ": blocks[" + std::to_string(b) + "]";
        const json &m = blocks[b];
        if (!m.is_array() || m.empty()) {
            throw SpecError(w + ": expected a square matrix");
        }
        const std::size_t d = m.size();
        if ((d & (d - 1)) != 0 || d < 2) {
            throw SpecError(w + ": dimension must be a power of two >= 2");
        }
        std::vector<cplx> data;
        for (std::size_t r = 0; r < d; ++r) {
            if (!m[r].is_array() || m[r].size() != d) {
                throw SpecError(w + ": row " + std::to_string(r) +
                                " has the wrong length");
            }
            for (std::size_t c2 = 0; c2 < d; ++c2) {
                data.push_back(parse_complex(m[r][c2], w));
            }
        }
        mats.emplace_back(std::countr_zero(d), std::move(data));
    }
    return with_context(where,
                        [&] { return BlockUbSpec::explicit_blocks(c, mats); });
}

BlockCbSpec parse_block_cb(const json &spec, const std::string &where) {
    const json &w = field(spec, "weights", where);
    if (!w.is_array() || w.empty() || !w[0].is_array()) {
        throw SpecError(where + ": field 'weights' must be a matrix");
    }
    const auto rows = static_cast<Eigen::Index>(w.size());
    const auto cols = static_cast<Eigen::Index>(w[0].size());
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const json &row = w[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
            throw SpecError(where + ": weights row " + std::to_string(r) +
                            " has the wrong length");
        }
        for (Eigen::Index c = 0; c < cols; ++c) {
            m(r, c) = number(row[static_cast<std::size_t>(c)],
                             where + ": weights");
        }
    }
    return with_context(where, [&] { return BlockCbSpec::make(m); });
}

std::vector<CirculantSpec> parse_product(const json &spec,
                                         const std::string &where) {
    const json &f = field(spec, "factors", where);
    if (!f.is_array() || f.size() < 2) {
        throw SpecError(where + ": field 'factors' needs at least two vectors");
    }
    std::vector<CirculantSpec> out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        json wrapped{{"c", f[i]}};
        out.push_back(
            parse_circulant(wrapped, where + ": factors[" + std::to_string(i) + "]"));
    }
    return out;
}

CyclicSystemSpec parse_cyclic(const json &spec, const std::string &where) {
    CyclicSystemSpec s;
    s.stiffness_row = real_array(spec, "stiffness_row", where);
    if (spec.contains("N")) {
        const auto N = static_cast<std::size_t>(number(spec.at("N"), where + ": N"));
        if (N != s.stiffness_row.size()) {
            throw SpecError(where + ": N does not match the stiffness row length");
        }
    }
    s.n = static_cast<int>(number(field(spec, "n", where), where + ": n"));
    s.Omega = number(field(spec, "Omega", where), where + ": Omega");
    if (spec.contains("force_amplitude")) {
        s.f_amp = parse_complex(spec.at("force_amplitude"),
                                where + ": force_amplitude");
    }
    return s;
}

json tally_json(const GateTally &t) {
    return json{{"single_qubit", t.single_qubit},
                {"controlled_phase", t.controlled_phase},
                {"other_two_qubit", t.other_two_qubit},
                {"total", t.total()}};
}

json calls_json(const OracleCalls &c) {
    return json{{"oracle", c.oracle},
                {"controlled_oracle", c.controlled_oracle},
                {"psi_oracle", c.psi_oracle}};
}

json lcu_json(const LcuResult &r) {
    return json{{"output", amplitudes_json(r.output.amplitudes())},
                {"unnormalized", amplitudes_json(r.unnormalized)},
                {"success_probability", r.success_probability},
                {"scale", r.scale},
                {"gate_tally", tally_json(r.tally)},
                {"oracle_calls", calls_json(r.calls)}};
}

std::string digest(const std::string &bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace circq::cli
