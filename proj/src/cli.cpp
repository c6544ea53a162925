// Copyright 2026 The qjd developers
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

#include "qjd/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qjd/io.hpp"
#include "qjd/joint.hpp"
#include "qjd/random.hpp"
#include "qjd/transport.hpp"
#include "qjd/verify.hpp"

namespace qjd::cli {

namespace {

// Suite base seeds are spaced apart so the four suites never share trial
// seeds for any sane --trials value.
constexpr std::uint64_t kCovarianceOffset = 1000000;
constexpr std::uint64_t kAxiomsOffset = 2000000;
constexpr std::uint64_t kSweepTupleOffset = 3000000;
constexpr std::uint64_t kSweepDirectionOffset = 4000000;

// Flags are shared across subcommands; empty string means "not given" and the
// per-command default is resolved after parsing.
struct Options {
    std::vector<std::string> obs_paths;
    std::string state_path;
    std::string out_path;
    std::string format;
    std::uint64_t seed = 0;
    int trials = 100;
    std::string dims;
    std::string nobs;
    std::vector<std::string> tol_overrides;
};

std::string value_or(const std::string& given, const char* fallback) {
    return given.empty() ? fallback : given;
}

// Every tolerance knob reachable from --tol name=value.
struct Settings {
    QjdConfig config;
    Tolerances matrix_tol;
    double agree_tol = 1e-8;
    double sweep_cap = 1e-2;
    double sweep_slack = 1e-10;
};

verify::Range parse_range(const std::string& text, const char* flag) {
    const auto bail = [&] {
        throw InvalidInput(std::string(flag) + ": expected <lo>..<hi> or <n>, got '" +
                           text + "'");
    };
    try {
        const auto pos = text.find("..");
        if (pos == std::string::npos) {
            const int v = std::stoi(text);
            if (v < 1) bail();
            return verify::Range{v, v};
        }
        const int lo = std::stoi(text.substr(0, pos));
        const int hi = std::stoi(text.substr(pos + 2));
        if (lo < 1 || hi < lo) bail();
        return verify::Range{lo, hi};
    } catch (const InvalidInput&) {
        throw;
    } catch (const std::exception&) {
        bail();
    }
    return {};
}

Settings settings_from(const std::vector<std::string>& overrides) {
    Settings s;
    for (const auto& item : overrides) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw InvalidInput("--tol: expected <name>=<value>, got '" + item + "'");
        }
        const std::string name = item.substr(0, eq);
        double value = 0.0;
        try {
            value = std::stod(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw InvalidInput("--tol " + name + ": bad value '" + item.substr(eq + 1) +
                               "'");
        }
        if (!(value > 0.0) || value > 1e-2) {
            std::ostringstream os;
            os << "--tol " << name << ": " << value << " outside (0, 1e-2]";
            throw InvalidInput(os.str());
        }
        if (name == "hermitian") {
            s.matrix_tol.hermitian = value;
        } else if (name == "commute") {
            s.config.commute_tol = value;
        } else if (name == "cluster") {
            s.config.cluster_tol = value;
        } else if (name == "clamp") {
            s.config.policy.clamp_tol = value;
        } else if (name == "agree") {
            s.agree_tol = value;
        } else if (name == "cap") {
            s.sweep_cap = value;
        } else {
            throw InvalidInput("--tol: unknown tolerance '" + name +
                               "' (known: hermitian, commute, cluster, clamp, agree, cap)");
        }
    }
    return s;
}

std::string basename_of(const std::string& path) {
    const auto pos = path.find_last_of("/\\");
    return pos == std::string::npos ? path : path.substr(pos + 1);
}

std::vector<HermitianObservable> load_observables(const Options& opts,
                                                  const Settings& settings) {
    if (opts.obs_paths.empty()) {
        throw InvalidInput("need at least one --obs <file>");
    }
    std::vector<HermitianObservable> obs;
    obs.reserve(opts.obs_paths.size());
    for (const auto& path : opts.obs_paths) {
        try {
            obs.emplace_back(io::load_matrix(path), basename_of(path),
                             settings.matrix_tol);
        } catch (const NotHermitian& e) {
            throw NotHermitian(path + ": " + e.what());
        }
    }
    return obs;
}

DensityState load_state(const Options& opts, const Settings& settings) {
    if (opts.state_path.empty()) {
        throw InvalidInput("need --state <file>");
    }
    try {
        return DensityState(io::load_matrix(opts.state_path), settings.matrix_tol);
    } catch (const NotDensityState& e) {
        throw NotDensityState(opts.state_path + ": " + e.what());
    }
}

void emit(const Options& opts, const std::string& content) {
    if (opts.out_path.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << '\n';
    } else {
        io::save_text(opts.out_path, content);
    }
}

int run_decompose(const Options& opts) {
    const Settings settings = settings_from(opts.tol_overrides);
    if (opts.obs_paths.size() != 1) {
        throw InvalidInput("decompose: expected exactly one --obs <file>");
    }
    const auto obs = load_observables(opts, settings);
    const SpectralMeasure sm = eigendecompose(obs[0], settings.config.cluster_tol);
    emit(opts, opts.format == "json" ? io::spectral_to_json(sm).dump(2)
                                     : io::spectral_to_table(sm));
    return kExitSuccess;
}

int run_joint(const Options& opts) {
    const Settings settings = settings_from(opts.tol_overrides);
    const auto obs = load_observables(opts, settings);
    const DensityState rho = load_state(opts, settings);
    const JointDistribution d = qjd_joint(obs, rho, settings.config);
    emit(opts, opts.format == "json" ? io::distribution_to_json(d).dump(2)
                                     : io::distribution_to_table(d));
    return kExitSuccess;
}

int run_baselines(const Options& opts) {
    const Settings settings = settings_from(opts.tol_overrides);
    const auto obs = load_observables(opts, settings);
    const DensityState rho = load_state(opts, settings);
    const QjdConfig& config = settings.config;

    const JointDistribution ours = qjd_joint(obs, rho, config);
    const JointDistribution sequential = sequential_joint(obs, rho, config.cluster_tol);

    std::optional<JointDistribution> standard;
    std::string standard_note;
    try {
        standard = standard_commuting_joint(obs, rho, config.commute_tol,
                                            config.cluster_tol);
    } catch (const NotCommuting& e) {
        standard_note = e.what();
    }

    std::optional<JointDistribution> margenau;
    if (obs.size() == 2) {
        margenau = margenau_hill_joint(obs, rho, config.cluster_tol);
    }

    const auto deviation = [&](const JointDistribution& other) {
        double dev = 0.0;
        for (std::size_t i = 0; i < ours.weights().size(); ++i) {
            dev = std::max(dev, std::abs(ours.weight(i) - other.weight(i)));
        }
        return dev;
    };

    // Single-axis marginals against Born: measured and reported, never
    // asserted; they genuinely differ for non-commuting tuples.
    std::vector<double> marginal_vs_born;
    for (std::size_t axis = 0; axis < obs.size(); ++axis) {
        const JointDistribution m = marginal(ours, {axis});
        const JointDistribution born =
            born_distribution(eigendecompose(obs[axis], config.cluster_tol), rho);
        double dev = 0.0;
        for (std::size_t j = 0; j < m.weights().size(); ++j) {
            dev = std::max(dev, std::abs(m.weight(j) - born.weight(j)));
        }
        marginal_vs_born.push_back(dev);
    }

    if (opts.format == "json") {
        io::json doc;
        doc["axes"] = ours.grid().axes();
        doc["commuting"] = standard.has_value();
        io::json constructions;
        constructions["qjd"] = ours.weights();
        constructions["sequential"] = sequential.weights();
        constructions["standard"] =
            standard ? io::json(standard->weights()) : io::json(nullptr);
        constructions["margenau_hill"] =
            margenau ? io::json(margenau->weights()) : io::json(nullptr);
        doc["constructions"] = std::move(constructions);
        io::json dev;
        dev["sequential"] = deviation(sequential);
        if (standard) dev["standard"] = deviation(*standard);
        if (margenau) dev["margenau_hill"] = deviation(*margenau);
        doc["max_deviation_vs_qjd"] = std::move(dev);
        doc["marginal_vs_born"] = marginal_vs_born;
        if (!standard_note.empty()) doc["standard_note"] = standard_note;
        emit(opts, doc.dump(2));
        return kExitSuccess;
    }

    std::ostringstream os;
    const auto fmt = [](double v) {
        char buffer[48];
        std::snprintf(buffer, sizeof(buffer), "%-16.12g", v);
        return std::string(buffer);
    };
    os << "outcome";
    for (std::size_t i = 0; i < ours.grid().num_axes(); ++i) os << "  lambda_" << i;
    os << "  qjd             sequential      standard        margenau_hill\n";
    for (std::size_t flat = 0; flat < ours.grid().size(); ++flat) {
        char cell[48];
        std::snprintf(cell, sizeof(cell), "%-8zu", flat);
        os << cell;
        for (double c : ours.grid().point(flat)) {
            std::snprintf(cell, sizeof(cell), " %-9.6g", c);
            os << cell;
        }
        os << "  " << fmt(ours.weight(flat)) << fmt(sequential.weight(flat));
        os << (standard ? fmt(standard->weight(flat)) : std::string("n/a             "));
        os << (margenau ? fmt(margenau->weight(flat)) : std::string("n/a"));
        os << "\n";
    }
    os << "max deviation vs qjd: sequential=" << deviation(sequential);
    if (standard) os << " standard=" << deviation(*standard);
    if (margenau) os << " margenau_hill=" << deviation(*margenau);
    os << "\n";
    os << "marginal vs born (qjd):";
    for (std::size_t axis = 0; axis < marginal_vs_born.size(); ++axis) {
        os << " axis" << axis << "=" << marginal_vs_born[axis];
    }
    os << "\n";
    if (!standard_note.empty()) {
        os << "standard: not applicable (" << standard_note << ")\n";
    }
    emit(opts, os.str());
    return kExitSuccess;
}

int run_verify(const Options& opts) {
    const Settings settings = settings_from(opts.tol_overrides);
    const verify::Range dims = parse_range(value_or(opts.dims, "2..6"), "--dims");
    const verify::Range nobs = parse_range(value_or(opts.nobs, "1..3"), "--nobs");
    if (opts.trials < 1) {
        throw InvalidInput("--trials must be >= 1");
    }

    const verify::Range commuting_nobs{std::max(2, nobs.lo), std::max(2, nobs.hi)};
    const int sweep_nobs = std::clamp(2, nobs.lo, nobs.hi);

    std::vector<verify::VerificationReport> reports;
    reports.push_back(verify::check_commuting_agreement(
        opts.trials, opts.seed, dims, commuting_nobs, settings.agree_tol,
        settings.config));
    reports.push_back(verify::check_unitary_covariance(
        opts.trials, opts.seed + kCovarianceOffset, dims, nobs, settings.agree_tol,
        settings.config));
    reports.push_back(verify::check_continuity_sweep(
        opts.seed + kSweepTupleOffset, opts.seed + kSweepDirectionOffset,
        verify::kDefaultSweep, dims.hi, sweep_nobs, settings.sweep_cap,
        settings.sweep_slack, settings.config));
    reports.push_back(verify::check_axioms(opts.trials, opts.seed + kAxiomsOffset,
                                           dims, nobs, settings.config));

    bool all_pass = true;
    for (const auto& report : reports) all_pass = all_pass && report.all_pass;

    if (opts.format == "json") {
        io::json doc;
        doc["command"] = "verify";
        doc["seed"] = opts.seed;
        doc["trials"] = opts.trials;
        io::json suites = io::json::array();
        for (const auto& report : reports) suites.push_back(io::report_to_json(report));
        doc["suites"] = std::move(suites);
        doc["all_pass"] = all_pass;
        emit(opts, doc.dump(2));
    } else {
        std::ostringstream os;
        for (const auto& report : reports) {
            os << io::report_to_table(report) << "\n";
        }
        os << "overall: " << (all_pass ? "all suites pass" : "FAILURES present") << "\n";
        emit(opts, os.str());
    }
    return all_pass ? kExitSuccess : kExitPropertyFailure;
}

int run_sweep(const Options& opts) {
    const Settings settings = settings_from(opts.tol_overrides);
    const verify::Range dims = parse_range(value_or(opts.dims, "3"), "--dims");
    const verify::Range nobs = parse_range(value_or(opts.nobs, "2"), "--nobs");

    const verify::VerificationReport report = verify::check_continuity_sweep(
        opts.seed, opts.seed + 1, verify::kDefaultSweep, dims.lo, nobs.lo,
        settings.sweep_cap, settings.sweep_slack, settings.config);

    const std::string format = value_or(opts.format, "csv");
    if (format == "json") {
        emit(opts, io::report_to_json(report).dump(2));
    } else if (format == "table") {
        emit(opts, io::report_to_table(report));
    } else {
        emit(opts, io::sweep_to_csv(report));
    }
    return report.all_pass ? kExitSuccess : kExitPropertyFailure;
}

}  // namespace

int run(int argc, const char* const* argv) {
    Options opts;
    CLI::App app{"joint outcome distributions for tuples of observables"};
    app.require_subcommand(1);

    const auto add_io = [&](CLI::App* cmd, bool needs_state) {
        cmd->add_option("--obs", opts.obs_paths,
                        "observable matrix JSON file (repeatable, order kept)");
        if (needs_state) {
            cmd->add_option("--state", opts.state_path, "density state JSON file");
        }
        cmd->add_option("--out", opts.out_path, "write output here instead of stdout");
        cmd->add_option("--tol", opts.tol_overrides,
                        "tolerance override <name>=<value>, value in (0, 1e-2]");
    };

    CLI::App* decompose = app.add_subcommand("decompose", "spectral decomposition");
    add_io(decompose, false);
    decompose->add_option("--format", opts.format)
        ->check(CLI::IsMember({"json", "table"}));

    CLI::App* joint = app.add_subcommand("joint", "joint distribution of a tuple");
    add_io(joint, true);
    joint->add_option("--format", opts.format)
        ->check(CLI::IsMember({"json", "table"}));

    CLI::App* baselines =
        app.add_subcommand("baselines", "compare against baseline constructions");
    add_io(baselines, true);
    baselines->add_option("--format", opts.format)
        ->check(CLI::IsMember({"json", "table"}));

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the property suites");
    verify_cmd->add_option("--out", opts.out_path);
    verify_cmd->add_option("--tol", opts.tol_overrides);
    verify_cmd->add_option("--seed", opts.seed, "base seed (required)")->required();
    verify_cmd->add_option("--trials", opts.trials, "trials per suite (default 100)");
    verify_cmd->add_option("--dims", opts.dims, "dimension range lo..hi (default 2..6)");
    verify_cmd->add_option("--nobs", opts.nobs,
                           "observable count range lo..hi (default 1..3)");
    verify_cmd->add_option("--format", opts.format)
        ->check(CLI::IsMember({"json", "table"}));

    CLI::App* sweep = app.add_subcommand("sweep", "continuity sweep, CSV output");
    sweep->add_option("--out", opts.out_path);
    sweep->add_option("--tol", opts.tol_overrides);
    sweep->add_option("--seed", opts.seed, "tuple seed (required); direction seed + 1")
        ->required();
    sweep->add_option("--dims", opts.dims,
                      "dimension (lo of a range is used, default 3)");
    sweep->add_option("--nobs", opts.nobs,
                      "observable count (lo of a range is used, default 2)");
    sweep->add_option("--format", opts.format)
        ->check(CLI::IsMember({"csv", "json", "table"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidInput;
    }

    try {
        if (decompose->parsed()) return run_decompose(opts);
        if (joint->parsed()) return run_joint(opts);
        if (baselines->parsed()) return run_baselines(opts);
        if (verify_cmd->parsed()) return run_verify(opts);
        if (sweep->parsed()) return run_sweep(opts);
        throw InvalidInput("no subcommand given");
    } catch (const PropertyViolation& e) {
        std::cerr << "property failure: " << e.what() << "\n";
        return kExitPropertyFailure;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace qjd::cli
