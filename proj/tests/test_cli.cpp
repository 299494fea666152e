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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "circq/cli/cli.hpp"

using namespace circq::cli;
namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("circq_cli_" + std::string(::testing::UnitTest::GetInstance()
                                               ->current_test_info()
                                               ->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string &name, const std::string &body) {
        const fs::path p = dir_ / name;
        std::ofstream(p) << body;
        return p.string();
    }

    int run(std::vector<std::string> args) {
        out_.str("");
        err_.str("");
        return run_command(args, out_, err_);
    }

    json report() const { return json::parse(out_.str()); }

    fs::path dir_;
    std::ostringstream out_, err_;
};

} // namespace

TEST_F(CliTest, ApplyIdentity) {
    const auto spec = write("c4.json", R"({"kind": "circulant", "c": [1, 0, 0, 0]})");
    const auto state = write("e0.json", R"({"amplitudes": [1, 0, 0, 0]})");
    ASSERT_EQ(run({"apply", "--spec", spec, "--state", state}), kExitOk);
    const json r = report();
    EXPECT_TRUE(r["pass"].get<bool>());
    const json &res = r["outputs"]["result"];
    EXPECT_DOUBLE_EQ(res["success_probability"].get<double>(), 1.0);
    EXPECT_EQ(res["output"], json::parse("[[1.0, 0.0], [0.0, 0.0], [0.0, 0.0], [0.0, 0.0]]"));
}

TEST_F(CliTest, ReportFileMatchesStdout) {
    const auto spec = write("c.json", R"({"kind": "circulant", "c": [0.5, 0.5, 0, 0]})");
    const auto path = (dir_ / "report.json").string();
    ASSERT_EQ(run({"apply", "--spec", spec, "--report", path}), kExitOk);
    std::ifstream in(path);
    EXPECT_EQ(json::parse(in), report());
    EXPECT_NEAR(report()["outputs"]["result"]["success_probability"].get<double>(), 0.5,
                1e-12);
}

TEST_F(CliTest, VerifyLcuSuite) {
    ASSERT_EQ(run({"verify", "--suite", "lcu", "--L", "3", "--seed", "7"}), kExitOk);
    const json r = report();
    EXPECT_TRUE(r["pass"].get<bool>());
    EXPECT_LT(r["outputs"]["lcu"]["max_deviation"].get<double>(), 1e-10);
    EXPECT_EQ(r["seed"].get<std::uint64_t>(), 7u);
}

TEST_F(CliTest, GateCountExponent) {
    ASSERT_EQ(run({"gatecount", "--op", "adder", "--L", "2..10"}), kExitOk);
    const double e = report()["outputs"]["exponent"].get<double>();
    EXPECT_GE(e, 1.8);
    EXPECT_LE(e, 2.2);
    EXPECT_EQ(report()["outputs"]["table"].size(), 9u);
}

TEST_F(CliTest, DeterministicReports) {
    const auto spec = write("c.json", R"({"kind": "circulant", "c": [0.1, 0.2, 0.3, 0.4]})");
    ASSERT_EQ(run({"apply", "--spec", spec, "--seed", "3", "--backend", "gate"}), kExitOk);
    const std::string first = out_.str();
    ASSERT_EQ(run({"apply", "--spec", spec, "--seed", "3", "--backend", "gate"}), kExitOk);
    EXPECT_EQ(out_.str(), first);
    ASSERT_EQ(run({"verify", "--suite", "circulant", "--L", "2", "--cases", "3"}), kExitOk);
    const std::string v = out_.str();
    ASSERT_EQ(run({"verify", "--suite", "circulant", "--L", "2", "--cases", "3"}), kExitOk);
    EXPECT_EQ(out_.str(), v);
}

TEST_F(CliTest, AnnihilatedStateExitsWithCheckFailure) {
    const auto spec = write("c.json", R"({"kind": "circulant", "c": [0.5, 0.5]})");
    const auto state =
        write("s.json", R"({"amplitudes": [0.7071067811865476, -0.7071067811865476]})");
    EXPECT_EQ(run({"apply", "--spec", spec, "--state", state}), kExitCheck);
    EXPECT_FALSE(report()["pass"].get<bool>());
}

TEST_F(CliTest, InputErrors) {
    EXPECT_EQ(run({"apply", "--spec", (dir_ / "missing.json").string()}), kExitInput);
    EXPECT_NE(err_.str().find("cannot open"), std::string::npos);

    const auto bad = write("bad.json", R"({"kind": "circulant", "c": [1, 0, 0]})");
    EXPECT_EQ(run({"apply", "--spec", bad}), kExitInput);

    const auto neg = write("neg.json", R"({"kind": "circulant", "c": [1, -1]})");
    EXPECT_EQ(run({"apply", "--spec", neg}), kExitInput);

    const auto syntax = write("syntax.json", R"({"kind": "circulant", "c": [1, 0)");
    EXPECT_EQ(run({"apply", "--spec", syntax}), kExitInput);

    const auto toep = write("t.json", R"({"kind": "toeplitz", "t": [0.3, 0.5, 0.2]})");
    EXPECT_EQ(run({"hankel", "--spec", toep}), kExitInput);

    EXPECT_EQ(run({}), kExitInput);
    EXPECT_EQ(run({"frobnicate"}), kExitInput);
}

TEST_F(CliTest, ToeplitzWorkedExample) {
    const auto spec = write("t.json", R"({"kind": "toeplitz", "t": [0.3, 0.5, 0.2]})");
    ASSERT_EQ(run({"toeplitz", "--spec", spec}), kExitOk);
    EXPECT_NEAR(report()["outputs"]["result"]["success_probability"].get<double>(), 0.29,
                1e-12);
}

TEST_F(CliTest, HamsimAndInvert) {
    const auto spec = write("h.json", R"({"kind": "circulant", "c": [2, 1, 0, 1]})");
    EXPECT_EQ(run({"hamsim", "--spec", spec, "--time", "1", "--epsilon", "1e-4"}),
              kExitOk);
    EXPECT_TRUE(report()["pass"].get<bool>());
    const auto pd = write("pd.json", R"({"kind": "circulant", "c": [5, 1, 1, 1]})");
    EXPECT_EQ(run({"invert", "--spec", pd, "--epsilon", "1e-3"}), kExitOk);
    EXPECT_TRUE(report()["pass"].get<bool>());
}

TEST_F(CliTest, CyclicWorkedSystem) {
    const auto spec = write("cy.json", R"({"kind": "cyclic", "stiffness_row": [5, -1, 0, -1],
                                          "n": 1, "Omega": 1})");
    EXPECT_EQ(run({"cyclic", "--spec", spec}), kExitOk);
    EXPECT_TRUE(report()["pass"].get<bool>());
}

TEST(Widths, Parse) {
    EXPECT_EQ(parse_widths("2..4"), (std::vector<int>{2, 3, 4}));
    EXPECT_EQ(parse_widths("3"), (std::vector<int>{3}));
    EXPECT_EQ(parse_widths("2,4"), (std::vector<int>{2, 4}));
}
