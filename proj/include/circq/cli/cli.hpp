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
 * Command-line driver. Every subcommand prints a JSON report and returns
 * 0 when all checks pass, 1 on a failed check or failed post-selection,
 * 2 on bad input.
 */
#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "circq/cli/spec_io.hpp"

namespace circq::cli {

constexpr int kExitOk = 0;
constexpr int kExitCheck = 1;
constexpr int kExitInput = 2;

/// Collects outputs and named checks into the report document.
class Report {
  public:
    explicit Report(std::vector<std::string> command);

    json &outputs() { return doc_["outputs"]; }
    void set_seed(std::uint64_t seed) { doc_["seed"] = seed; }
    void add_input(const std::string &bytes) { inputs_ += bytes; }

    /// value <= limit
    void check_at_most(const std::string &name, double value, double limit);
    /// value >= limit
    void check_at_least(const std::string &name, double value, double limit);
    void check_true(const std::string &name, bool ok);

    [[nodiscard]] bool pass() const;
    [[nodiscard]] json finish() const;

  private:
    json doc_;
    std::string inputs_;
};

/// "2..10", "3" or "2,4,6".
std::vector<int> parse_widths(const std::string &text);

struct SuiteResult {
    json details;
    double max_deviation = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

/// Names: lcu, circulant, aa, toeplitz, block, hamsim, invert, product,
/// arith.
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string &suite, const std::vector<int> &widths,
                      std::uint64_t seed, int cases);

/// `args` excludes the program name.
int run_command(const std::vector<std::string> &args, std::ostream &out,
                std::ostream &err);

} // namespace circq::cli
