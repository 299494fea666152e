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
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "circq/arith.hpp"
#include "circq/cli/cli.hpp"
#include "circq/hamsim.hpp"
#include "circq/hhl.hpp"
#include "circq/product.hpp"

namespace circq::cli {

Report::Report(std::vector<std::string> command) {
    doc_["command"] = std::move(command);
    doc_["seed"] = 0;
    doc_["outputs"] = json::object();
    doc_["checks"] = json::array();
}

void Report::check_at_most(const std::string &name, double value, double limit) {
    doc_["checks"].push_back(
        {{"name", name}, {"value", value}, {"limit", limit},
         {"relation", "<="}, {"pass", value <= limit}});
}

void Report::check_at_least(const std::string &name, double value,
                            double limit) {
    doc_["checks"].push_back(
        {{"name", name}, {"value", value}, {"limit", limit},
         {"relation", ">="}, {"pass", value >= limit}});
}

void Report::check_true(const std::string &name, bool ok) {
    doc_["checks"].push_back({{"name", name}, {"pass", ok}});
}

bool Report::pass() const {
    return std::all_of(doc_["checks"].begin(), doc_["checks"].end(),
                       [](const json &c) { return c["pass"].get<bool>(); });
}

json Report::finish() const {
    json out = doc_;
    out["inputs_digest"] = digest(inputs_);
    out["pass"] = pass();
    return out;
}

std::vector<int> parse_widths(const std::string &text) {
    std::vector<int> out;
    auto to_int = [&](const std::string &s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != s.size() || s.empty()) {
            throw InputError("--L: cannot read '" + text + "'");
        }
        require(v >= 1 && v <= kMaxQubits, "--L: width out of range");
        return v;
    };
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        const int lo = to_int(text.substr(0, dots));
        const int hi = to_int(text.substr(dots + 2));
        require(lo <= hi, "--L: empty range");
        for (int v = lo; v <= hi; ++v) {
            out.push_back(v);
        }
        return out;
    }
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        out.push_back(to_int(part));
    }
    require(!out.empty(), "--L: no widths given");
    return out;
}

namespace {

struct Args {
    std::string spec;
    std::string state;
    std::uint64_t seed = 1;
    double epsilon = 1e-3;
    double time = 1.0;
    std::optional<double> kappa;
    std::string backend = "perm";
    std::string report;
    std::string suite;
    std::string widths = "2..4";
    std::string op = "adder";
    int amplify = 0;
    int cases = 20;
    std::string method = "exact";
    std::string segment = "auto";
    int extra_bits = 0;
};

struct Context {
    Args args;
    Report report;
    json spec;
    std::string spec_path;

    Backend backend() const {
        return args.backend == "gate" ? Backend::gate : Backend::perm;
    }

    json &load_spec() {
        require(!args.spec.empty(), "--spec is required");
        std::string raw;
        spec = load_json(args.spec, &raw);
        report.add_input(raw);
        spec_path = args.spec;
        return spec;
    }

    void expect_kind(std::initializer_list<const char *> kinds) {
        const std::string k = spec_kind(spec, spec_path);
        for (const char *want : kinds) {
            if (k == want) {
                return;
            }
        }
        throw SpecError(spec_path + ": field 'kind' is '" + k +
                        "', which this command does not accept");
    }

    /// --state, or |0...0> when absent.
    StateVector input_state(int qubits) {
        if (args.state.empty()) {
            RegisterLayout layout;
            layout.add("sys", qubits);
            return StateVector::basis(layout, 0);
        }
        std::string raw;
        const json j = load_json(args.state, &raw);
        report.add_input(raw);
        return parse_state(j, qubits, args.state);
    }
};

Amplitudes scaled(std::span<const cplx> v, double s) {
    Amplitudes out(v.begin(), v.end());
    for (auto &z : out) {
        z *= s;
    }
    return out;
}

double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
    require(a.size() == b.size(), "length mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

Amplitudes as_amplitudes(const classical::Vector &v) {
    return Amplitudes(v.data(), v.data() + v.size());
}

// Shared checks for a single (or amplified) LCU application whose realized
// operator times psi is `expected`.
void lcu_checks(Context &ctx, const LcuResult &res, const Amplitudes &expected,
                int amplify) {
    auto &out = ctx.report.outputs();
    out["result"] = lcu_json(res);
    out["expected_unnormalized"] = amplitudes_json(expected);
    const double p0 = std::pow(norm(expected), 2);
    out["expected_success_probability"] = p0;
    if (amplify == 0) {
        const double dev = max_abs_diff(res.unnormalized, expected);
        out["max_deviation"] = dev;
        ctx.report.check_at_most("unnormalized output matches dense operator",
                                 dev, 1e-10);
        ctx.report.check_at_most(
            "success probability matches ||C psi||^2",
            std::abs(res.success_probability - p0), 1e-10);
        return;
    }
    const double dist =
        state_distance(res.output.amplitudes(), scaled(expected, 1.0 / norm(expected)),
                       DistanceMode::phase_invariant);
    const double pa = amplified_probability(p0, amplify);
    out["distance"] = dist;
    out["predicted_amplified_probability"] = pa;
    ctx.report.check_at_most("amplified output direction matches dense operator",
                             dist, 1e-10);
    ctx.report.check_at_most("amplified probability follows sin^2 law",
                             std::abs(res.success_probability - pa), 1e-10);
}

ApplyOptions apply_options(const Context &ctx, const StateVector &psi,
                           std::optional<AmplitudeOracle> &holder) {
    ApplyOptions o;
    o.backend = ctx.backend();
    o.amplify_iterations = ctx.args.amplify;
    if (ctx.args.amplify > 0) {
        holder = AmplitudeOracle::build(psi.amplitudes());
        o.psi_oracle = &*holder;
    }
    return o;
}

void cmd_apply(Context &ctx) {
    ctx.load_spec();
    ctx.expect_kind({"circulant"});
    const CirculantSpec spec = parse_circulant(ctx.spec, ctx.spec_path);
    const StateVector psi = ctx.input_state(spec.L);
    std::optional<AmplitudeOracle> holder;
    const LcuResult res = apply_circulant(spec, psi, apply_options(ctx, psi, holder));
    const Amplitudes expected =
        as_amplitudes(classical::matvec(classical::dense(spec), psi.amplitudes()));
    lcu_checks(ctx, res, expected, ctx.args.amplify);
    // Independent spectral form p = ||Lambda F^dagger psi||^2.
    const auto lam = classical::dft_eigenvalues(std::span<const double>(spec.c),
                                                spec.sign);
    const auto phi = classical::dft(psi.amplitudes(), /*inverse=*/true);
    double p = 0.0;
    for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(lam.size()); ++k) {
        p += std::norm(lam[k] * phi[k]);
    }
    ctx.report.outputs()["spectral_success_probability"] = p;
    ctx.report.outputs()["raw_output"] = amplitudes_json(scaled(res.unnormalized, res.scale));
}

void cmd_toeplitz(Context &ctx, bool hankel) {
    ctx.load_spec();
    ctx.expect_kind({hankel ? "hankel" : "toeplitz"});
    std::optional<AmplitudeOracle> holder;
    std::optional<LcuResult> res;
    Amplitudes expected;
    if (hankel) {
        const HankelSpec spec = parse_hankel(ctx.spec, ctx.spec_path);
        const StateVector psi = ctx.input_state(spec.L);
        res = apply_hankel(spec, psi, apply_options(ctx, psi, holder));
        expected = as_amplitudes(
            classical::matvec(classical::dense(spec), psi.amplitudes()));
    } else {
        const ToeplitzSpec spec = parse_toeplitz(ctx.spec, ctx.spec_path);
        const StateVector psi = ctx.input_state(spec.L);
        res = apply_toeplitz(spec, psi, apply_options(ctx, psi, holder));
        expected = as_amplitudes(
            classical::matvec(classical::dense(spec), psi.amplitudes()));
    }
    lcu_checks(ctx, *res, expected, ctx.args.amplify);
    ctx.report.outputs()["raw_output"] =
        amplitudes_json(scaled(res->unnormalized, res->scale));
}

void cmd_block(Context &ctx) {
    ctx.load_spec();
    ctx.expect_kind({"block_ub", "block_cb"});
    std::optional<AmplitudeOracle> holder;
    std::optional<LcuResult> res;
    Amplitudes expected;
    if (spec_kind(ctx.spec, ctx.spec_path) == "block_ub") {
        const BlockUbSpec spec = parse_block_ub(ctx.spec, ctx.spec_path);
        const StateVector psi = ctx.input_state(spec.L + spec.block_qubits);
        res = apply_block_ub(spec, psi, apply_options(ctx, psi, holder));
        expected = as_amplitudes(
            classical::matvec(classical::dense(spec), psi.amplitudes()));
    } else {
        const BlockCbSpec spec = parse_block_cb(ctx.spec, ctx.spec_path);
        const StateVector psi = ctx.input_state(spec.L + spec.block_qubits);
        res = apply_block_cb(spec, psi, apply_options(ctx, psi, holder));
        expected = as_amplitudes(
            classical::matvec(classical::dense(spec), psi.amplitudes()));
    }
    lcu_checks(ctx, *res, expected, ctx.args.amplify);
}

SegmentBackend segment_backend(const std::string &s) {
    if (s == "dense") {
        return SegmentBackend::dense;
    }
    if (s == "factored") {
        return SegmentBackend::factored;
    }
    return SegmentBackend::automatic;
}

const char *segment_name(SegmentBackend b) {
    switch (b) {
    case SegmentBackend::dense:
        return "dense";
    case SegmentBackend::factored:
        return "factored";
    default:
        return "auto";
    }
}

void cmd_hamsim(Context &ctx) {
    ctx.load_spec();
    ctx.expect_kind({"circulant"});
    const CirculantSpec spec = parse_circulant(ctx.spec, ctx.spec_path);
    const StateVector psi = ctx.input_state(spec.L);
    // --time refers to the raw operator; the normalized one runs for scale * t.
    const double t = ctx.args.time * spec.scale;
    SegmentOptions opt;
    opt.backend = segment_backend(ctx.args.segment);
    opt.arith = ctx.backend();
    const Evolution ev = simulate_evolution(spec, psi, t, ctx.args.epsilon, opt);
    const auto &d = ev.diagnostics;
    const auto oracle = classical::oracle_matfun(
        std::span<const double>(spec.c), psi.amplitudes(), classical::MatFun::expm,
        t, spec.sign);
    const double dist = state_distance(ev.output.amplitudes(), as_amplitudes(oracle),
                                       DistanceMode::phase_invariant);
    auto &out = ctx.report.outputs();
    out["output"] = amplitudes_json(ev.output.amplitudes());
    out["normalized_time"] = t;
    out["r"] = d.plan.r;
    out["K"] = d.plan.K;
    out["s_raw"] = d.plan.s;
    out["s_effective"] = d.measured_s;
    out["tail_bound"] = d.plan.tail_bound;
    out["segment_backend"] = segment_name(d.backend);
    out["segment_residual"] = d.segment_residual;
    out["controlled_oracle_calls"] = d.controlled_oracle_calls;
    out["executed_controlled_oracle_calls"] = d.executed_controlled_oracle_calls;
    out["gate_tally"] = tally_json(d.tally);
    out["distance"] = dist;
    ctx.report.check_at_most("distance to exact evolution", dist,
                             ctx.args.epsilon);
    ctx.report.check_true("controlled-O_c calls equal 2rK",
                          d.controlled_oracle_calls ==
                              static_cast<std::size_t>(2 * d.plan.r * d.plan.K));
    if (d.plan.r > 0) {
        ctx.report.check_at_most("effective |s - 2|",
                                 std::abs(d.measured_s - 2.0), d.plan.tail_bound);
        double worst = 0.0;
        for (double r : d.segment_residual) {
            worst = std::max(worst, r);
        }
        ctx.report.check_at_most("per-segment residual", worst,
                                 10.0 * ctx.args.epsilon / d.plan.r);
    }
}

InversionBackend inversion_backend(const std::string &s) {
    require(s == "exact" || s == "taylor", "--method must be exact or taylor");
    return s == "taylor" ? InversionBackend::taylor
                         : InversionBackend::exact_diagonal;
}

void cmd_invert(Context &ctx) {
    ctx.load_spec();
    ctx.expect_kind({"circulant"});
    const CirculantSpec spec = parse_circulant(ctx.spec, ctx.spec_path);
    const StateVector psi = ctx.input_state(spec.L);
    const double cond =
        classical::condition_number(std::span<const double>(spec.c), spec.sign);
    require(std::isfinite(cond), "the operator is singular");
    InversionPlan plan = InversionPlan::make(ctx.args.kappa.value_or(cond),
                                             ctx.args.epsilon,
                                             inversion_backend(ctx.args.method));
    plan.T += ctx.args.extra_bits;
    const InversionResult res = invert_circulant(spec, psi, plan);
    const auto exact = as_amplitudes(classical::oracle_matfun(
        std::span<const double>(spec.c), psi.amplitudes(),
        classical::MatFun::inverse, 0.0, spec.sign));
    const Amplitudes direction = scaled(exact, 1.0 / norm(exact));
    const double dist = state_distance(res.lcu.output.amplitudes(), direction,
                                       DistanceMode::phase_invariant);
    auto &out = ctx.report.outputs();
    out["result"] = lcu_json(res.lcu);
    out["T"] = plan.T;
    out["kappa"] = plan.kappa;
    out["condition_number"] = cond;
    out["uncompute_residual"] = res.diagnostics.uncompute_residual;
    out["clamped_values"] = res.diagnostics.clamped_values;
    out["zero_phase_weight"] = res.diagnostics.zero_phase_weight;
    out["expected_direction"] = amplitudes_json(direction);
    out["distance"] = dist;
    // C^{-1} psi = kappa * unnormalized / scale, raw operator units.
    out["raw_solution"] = amplitudes_json(
        scaled(res.lcu.unnormalized, plan.kappa / spec.scale));
    ctx.report.check_at_most("distance to C^-1 psi direction", dist,
                             ctx.args.epsilon);
    ctx.report.check_at_least(
        "success probability bound",
        res.lcu.success_probability,
        1.0 / (plan.kappa * plan.kappa) - std::ldexp(1.0, -plan.T + 2));
}

void cmd_product(Context &ctx) {
    ctx.load_spec();
    ctx.expect_kind({"product"});
    const auto factors = parse_product(ctx.spec, ctx.spec_path);
    const int L = factors.front().L;
    for (const auto &f : factors) {
        if (f.L != L) {
            throw SpecError(ctx.spec_path + ": factors differ in length");
        }
    }
    const StateVector psi = ctx.input_state(L);
    const LcuResult res = apply_product_circulant(factors, psi, ctx.backend());
    Amplitudes expected(psi.amplitudes().begin(), psi.amplitudes().end());
    std::vector<double> conv = {1.0};
    conv.resize(factors.front().N(), 0.0);
    std::vector<AmplitudeOracle> oracles;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        expected = as_amplitudes(classical::matvec(classical::dense(*it), expected));
    }
    for (const auto &f : factors) {
        conv = classical::cyclic_convolution(std::span<const double>(conv),
                                             std::span<const double>(f.c));
        oracles.push_back(AmplitudeOracle::from_probabilities(f.c));
    }
    const auto marg = product_marginals(ProductOracle::build(oracles, ctx.backend()));
    double mdev = 0.0;
    for (std::size_t j = 0; j < conv.size(); ++j) {
        mdev = std::max(mdev, std::abs(marg[j] - conv[j]));
    }
    ctx.report.outputs()["marginals"] = marg;
    ctx.report.outputs()["convolution"] = conv;
    ctx.report.check_at_most("marginals match cyclic convolution", mdev, 1e-12);
    lcu_checks(ctx, res, expected, 0);
}

void cmd_cyclic(Context &ctx) {
    ctx.load_spec();
    ctx.expect_kind({"cyclic"});
    const CyclicSystemSpec spec = parse_cyclic(ctx.spec, ctx.spec_path);
    CyclicOptions opt;
    opt.backend = inversion_backend(ctx.args.method);
    opt.extra_phase_bits = ctx.args.extra_bits;
    const CyclicSolution sol = solve_cyclic(spec, ctx.args.epsilon, opt);
    auto &out = ctx.report.outputs();
    out["sign_case"] = sol.system.sign_case == SignCase::positive_diagonal
                           ? "positive_diagonal"
                           : "all_negative";
    out["a_row"] = sol.system.a_row;
    out["scale"] = sol.system.scale;
    out["kappa"] = sol.kappa;
    out["T"] = sol.plan.T;
    out["q0"] = amplitudes_json(sol.q0.amplitudes());
    out["q0_full"] = amplitudes_json(sol.q0_full);
    out["magnitude"] = sol.magnitude;
    out["success_probability"] = sol.inversion.ancilla_probability;
    out["residual"] = sol.residual;
    out["force_overlap"] = sol.force_overlap;
    ctx.report.check_at_least("overlap with force state", sol.force_overlap,
                              1.0 - ctx.args.epsilon);
    ctx.report.check_at_most("relative residual ||A q0 - f|| / ||f||",
                             sol.residual, ctx.args.epsilon);
}

void cmd_verify(Context &ctx) {
    const std::vector<int> widths = parse_widths(ctx.args.widths);
    std::vector<std::string> suites;
    if (ctx.args.suite.empty() || ctx.args.suite == "all") {
        suites = suite_names();
    } else {
        suites = {ctx.args.suite};
    }
    for (const auto &name : suites) {
        const SuiteResult r = run_suite(name, widths, ctx.args.seed, ctx.args.cases);
        json entry = r.details;
        entry["max_deviation"] = r.max_deviation;
        entry["threshold"] = r.threshold;
        entry["pass"] = r.pass;
        ctx.report.outputs()[name] = entry;
        ctx.report.check_at_most(name + " max deviation", r.max_deviation,
                                 r.threshold);
    }
}

void cmd_gatecount(Context &ctx) {
    require(ctx.args.op == "adder", "--op: only 'adder' is available");
    const std::vector<int> widths = parse_widths(ctx.args.widths);
    require(widths.size() >= 2, "--L: a fit needs at least two widths");
    const ScalingTable table = adder_gate_scaling(widths);
    json rows = json::array();
    for (const auto &row : table.rows) {
        json r = tally_json(row.tally);
        r["L"] = row.width;
        rows.push_back(r);
    }
    ctx.report.outputs()["table"] = rows;
    ctx.report.outputs()["exponent"] = table.exponent;
    ctx.report.check_true("fitted exponent in [1.8, 2.2]",
                          table.exponent >= 1.8 && table.exponent <= 2.2);
}

void add_common(CLI::App *sub, Args &a, bool spec) {
    if (spec) {
        sub->add_option("--spec", a.spec, "spec file (JSON)")->required();
        sub->add_option("--state", a.state, "input state file; default |0>");
    }
    sub->add_option("--seed", a.seed, "random seed");
    sub->add_option("--epsilon", a.epsilon, "target accuracy")
        ->check(CLI::Range(1e-15, 0.5));
    sub->add_option("--backend", a.backend, "arithmetic backend")
        ->check(CLI::IsMember({"gate", "perm"}));
    sub->add_option("--report", a.report, "write the report here");
}

void write_report(const std::string &path, const json &doc) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw InputError(path + ": cannot write report");
    }
    f << doc.dump(2) << '\n';
}

} // namespace

int run_command(const std::vector<std::string> &args, std::ostream &out,
                std::ostream &err) {
    Args a;
    CLI::App app{"Circulant-operator circuits checked against dense linear algebra",
                 "circq"};
    app.require_subcommand(1);
    std::map<std::string, std::function<void(Context &)>> handlers;

    auto *apply = app.add_subcommand("apply", "apply a circulant to a state");
    add_common(apply, a, true);
    apply->add_option("--amplify", a.amplify, "amplitude-amplification rounds")
        ->check(CLI::NonNegativeNumber);
    handlers["apply"] = cmd_apply;

    auto *toep = app.add_subcommand("toeplitz", "apply a Toeplitz matrix");
    add_common(toep, a, true);
    toep->add_option("--amplify", a.amplify)->check(CLI::NonNegativeNumber);
    handlers["toeplitz"] = [](Context &c) { cmd_toeplitz(c, false); };

    auto *hank = app.add_subcommand("hankel", "apply a Hankel matrix");
    add_common(hank, a, true);
    hank->add_option("--amplify", a.amplify)->check(CLI::NonNegativeNumber);
    handlers["hankel"] = [](Context &c) { cmd_toeplitz(c, true); };

    auto *block = app.add_subcommand("block", "apply a block circulant (UB or CB)");
    add_common(block, a, true);
    block->add_option("--amplify", a.amplify)->check(CLI::NonNegativeNumber);
    handlers["block"] = cmd_block;

    auto *ham = app.add_subcommand("hamsim", "simulate exp(-i C t)");
    add_common(ham, a, true);
    ham->add_option("--time", a.time, "evolution time")->check(CLI::NonNegativeNumber);
    ham->add_option("--segment", a.segment, "segment backend")
        ->check(CLI::IsMember({"auto", "dense", "factored"}));
    handlers["hamsim"] = cmd_hamsim;

    auto *inv = app.add_subcommand("invert", "solve C x = psi");
    add_common(inv, a, true);
    inv->add_option("--kappa", a.kappa, "condition-number bound; default exact");
    inv->add_option("--method", a.method, "exact or taylor")
        ->check(CLI::IsMember({"exact", "taylor"}));
    inv->add_option("--extra-bits", a.extra_bits, "phase bits above the plan")
        ->check(CLI::NonNegativeNumber);
    handlers["invert"] = cmd_invert;

    auto *prod = app.add_subcommand("product", "apply a product of circulants");
    add_common(prod, a, true);
    handlers["product"] = cmd_product;

    auto *cyc = app.add_subcommand("cyclic", "steady-state cyclic structure solve");
    add_common(cyc, a, true);
    cyc->add_option("--method", a.method)->check(CLI::IsMember({"exact", "taylor"}));
    cyc->add_option("--extra-bits", a.extra_bits)->check(CLI::NonNegativeNumber);
    handlers["cyclic"] = cmd_cyclic;

    auto *ver = app.add_subcommand("verify", "run randomized oracle suites");
    add_common(ver, a, false);
    ver->add_option("--suite", a.suite, "suite name or 'all'");
    ver->add_option("--L", a.widths, "widths, e.g. 2..4");
    ver->add_option("--cases", a.cases, "random cases per width")
        ->check(CLI::PositiveNumber);
    handlers["verify"] = cmd_verify;

    auto *gc = app.add_subcommand("gatecount", "gate-count scaling table");
    add_common(gc, a, false);
    gc->add_option("--op", a.op, "operation (adder)");
    gc->add_option("--L", a.widths, "widths, e.g. 2..10");
    handlers["gatecount"] = cmd_gatecount;

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitInput;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    Context ctx{a, Report(args), {}, {}};
    ctx.report.set_seed(a.seed);
    int code = kExitOk;
    try {
        if (name == "verify" && !a.suite.empty() && a.suite != "all") {
            const auto names = suite_names();
            require(std::find(names.begin(), names.end(), a.suite) != names.end(),
                    "--suite: unknown suite '" + a.suite + "'");
        }
        handlers.at(name)(ctx);
        code = ctx.report.pass() ? kExitOk : kExitCheck;
    } catch (const PostSelectionError &e) {
        err << "error: " << e.what() << '\n';
        ctx.report.outputs()["error"] = e.what();
        ctx.report.check_true("post-selection", false);
        code = kExitCheck;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
    const json doc = ctx.report.finish();
    out << doc.dump(2) << '\n';
    if (!a.report.empty()) {
        try {
            write_report(a.report, doc);
        } catch (const Error &e) {
            err << "error: " << e.what() << '\n';
            return kExitInput;
        }
    }
    return code;
}

} // namespace circq::cli
