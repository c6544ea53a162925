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

#include "qjd/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "qjd/transport.hpp"

namespace qjd::verify {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string format_double(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

void require_range(const Range& r, const char* what) {
    if (r.lo < 1 || r.hi < r.lo) {
        std::ostringstream os;
        os << what << ": bad range [" << r.lo << ", " << r.hi << "]";
        throw InvalidInput(os.str());
    }
}

int draw_in_range(Xoshiro256pp& rng, const Range& r) {
    const auto span = static_cast<std::uint64_t>(r.hi - r.lo + 1);
    return r.lo + static_cast<int>(rng.next_u64() % span);
}

// Max per-weight deviation on grids that must agree.
double max_weight_deviation(const JointDistribution& a, const JointDistribution& b) {
    if (!a.grid().approx_equal(b.grid(), 1e-8)) {
        throw GridMismatch("max_weight_deviation: grids differ");
    }
    double dev = 0.0;
    for (std::size_t i = 0; i < a.weights().size(); ++i) {
        dev = std::max(dev, std::abs(a.weight(i) - b.weight(i)));
    }
    return dev;
}

double max_axis_deviation(const OutcomeGrid& a, const OutcomeGrid& b) {
    if (!a.same_shape(b)) {
        throw GridMismatch("max_axis_deviation: grid shapes differ");
    }
    double dev = 0.0;
    for (std::size_t i = 0; i < a.num_axes(); ++i) {
        for (std::size_t j = 0; j < a.axis(i).size(); ++j) {
            dev = std::max(dev, std::abs(a.axis(i)[j] - b.axis(i)[j]));
        }
    }
    return dev;
}

void finalize(VerificationReport& report, Clock::time_point start) {
    report.valid_trials = 0;
    report.invalid_trials = 0;
    report.max_error = 0.0;
    bool all = true;
    for (const auto& trial : report.trials) {
        if (!trial.valid) {
            ++report.invalid_trials;
            continue;
        }
        ++report.valid_trials;
        report.max_error = std::max(report.max_error, trial.error);
        all = all && trial.pass;
    }
    if (report.valid_trials == 0) {
        throw InvalidInput("suite '" + report.suite + "' produced zero valid trials");
    }
    report.all_pass = all;
    report.wall_time_ms = elapsed_ms(start);
}

}  // namespace

std::string to_string(Family family) {
    switch (family) {
        case Family::generic: return "generic";
        case Family::commuting: return "commuting";
        case Family::near_commuting: return "near_commuting";
    }
    return "unknown";
}

CommutingFamily random_commuting_family(int dim, int n_obs, std::uint64_t seed) {
    if (dim < 1 || n_obs < 1) {
        throw InvalidInput("random_commuting_family: dim and n_obs must be >= 1");
    }
    Xoshiro256pp rng(seed);
    UnitaryMatrix basis = haar_unitary(dim, rng.next_u64());

    CommutingFamily family{std::move(basis), {}, {}};
    family.diagonals.reserve(n_obs);
    family.observables.reserve(n_obs);
    for (int k = 0; k < n_obs; ++k) {
        Eigen::VectorXd diag(dim);
        for (int i = 0; i < dim; ++i) {
            // Small integers: exact degeneracies, gaps of at least one.
            diag(i) = static_cast<double>(rng.next_u64() % 9) - 4.0;
        }
        ComplexMatrix d = ComplexMatrix::Zero(dim, dim);
        d.diagonal() = diag.cast<Complex>();
        std::ostringstream label;
        label << "C" << k;
        family.observables.push_back(
            conjugate(HermitianObservable(std::move(d), label.str()), family.basis));
        family.diagonals.push_back(std::move(diag));
    }
    return family;
}

std::vector<HermitianObservable> random_generic_family(int dim, int n_obs,
                                                       std::uint64_t seed) {
    if (dim < 1 || n_obs < 1) {
        throw InvalidInput("random_generic_family: dim and n_obs must be >= 1");
    }
    Xoshiro256pp rng(seed);
    std::vector<HermitianObservable> obs;
    obs.reserve(n_obs);
    for (int k = 0; k < n_obs; ++k) {
        std::ostringstream label;
        label << "G" << k;
        obs.push_back(random_hermitian(dim, rng.next_u64(), label.str()));
    }
    return obs;
}

std::vector<HermitianObservable> random_near_commuting_family(int dim, int n_obs,
                                                              std::uint64_t seed,
                                                              double epsilon) {
    if (!(epsilon > 0.0)) {
        throw InvalidInput("random_near_commuting_family: epsilon must be positive");
    }
    // Perturbs random_commuting_family(dim, n_obs, seed); the direction
    // stream is offset so it never collides with the base family's draws.
    Xoshiro256pp rng(seed + 0x9E3779B97F4A7C15ull);
    CommutingFamily base = random_commuting_family(dim, n_obs, seed);
    std::vector<HermitianObservable> obs;
    obs.reserve(n_obs);
    for (int k = 0; k < n_obs; ++k) {
        HermitianObservable direction = random_hermitian(dim, rng.next_u64());
        const double norm = direction.matrix().norm();
        ComplexMatrix m = base.observables[k].matrix();
        if (norm > 0.0) {
            m += (epsilon / norm) * direction.matrix();
        }
        obs.emplace_back(std::move(m), base.observables[k].label());
    }
    return obs;
}

VerificationReport check_commuting_agreement(int trials, std::uint64_t base_seed,
                                             Range dims, Range n_obs, double tol,
                                             const QjdConfig& config, Family family,
                                             double epsilon) {
    if (trials < 1) throw InvalidInput("check_commuting_agreement: trials must be >= 1");
    require_range(dims, "check_commuting_agreement dims");
    require_range(n_obs, "check_commuting_agreement n_obs");
    const auto start = Clock::now();

    VerificationReport report;
    report.suite = "commuting_agreement";
    report.tolerance = tol;
    report.config_echo = {{"trials", std::to_string(trials)},
                          {"base_seed", std::to_string(base_seed)},
                          {"dims", std::to_string(dims.lo) + ".." + std::to_string(dims.hi)},
                          {"n_obs", std::to_string(n_obs.lo) + ".." + std::to_string(n_obs.hi)},
                          {"tolerance", format_double(tol)},
                          {"family", to_string(family)},
                          {"commute_tol", format_double(config.commute_tol)},
                          {"cluster_tol", format_double(config.cluster_tol)}};

    for (int index = 0; index < trials; ++index) {
        const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(index);
        Xoshiro256pp rng(seed);
        TrialRecord trial;
        trial.spec = {draw_in_range(rng, dims), draw_in_range(rng, n_obs), seed, family,
                      family == Family::near_commuting ? epsilon : 0.0};
        try {
            std::vector<HermitianObservable> obs;
            switch (family) {
                case Family::commuting:
                    obs = random_commuting_family(trial.spec.dim, trial.spec.n_obs,
                                                  rng.next_u64())
                              .observables;
                    break;
                case Family::generic:
                    obs = random_generic_family(trial.spec.dim, trial.spec.n_obs,
                                                rng.next_u64());
                    break;
                case Family::near_commuting:
                    obs = random_near_commuting_family(trial.spec.dim, trial.spec.n_obs,
                                                       rng.next_u64(), epsilon);
                    break;
            }
            const DensityState rho = random_density(trial.spec.dim, rng.next_u64());
            const JointDistribution ours = qjd_joint(obs, rho, config);
            const JointDistribution standard = standard_commuting_joint(
                obs, rho, config.commute_tol, config.cluster_tol);
            trial.value = max_weight_deviation(ours, standard);
            trial.error = trial.value;
            trial.pass = trial.error <= tol;
        } catch (const NotCommuting& e) {
            trial.valid = false;
            trial.status = std::string("invalid-input: ") + e.what();
        } catch (const GridMismatch& e) {
            trial.pass = false;
            trial.error = std::numeric_limits<double>::infinity();
            trial.status = std::string("error: ") + e.what();
        } catch (const InvalidInput& e) {
            trial.valid = false;
            trial.status = std::string("invalid-input: ") + e.what();
        } catch (const Error& e) {
            trial.pass = false;
            trial.error = std::numeric_limits<double>::infinity();
            trial.status = std::string("error: ") + e.what();
        }
        report.trials.push_back(std::move(trial));
    }
    finalize(report, start);
    return report;
}

VerificationReport check_unitary_covariance(int trials, std::uint64_t base_seed,
                                            Range dims, Range n_obs, double tol,
                                            const QjdConfig& config) {
    if (trials < 1) throw InvalidInput("check_unitary_covariance: trials must be >= 1");
    require_range(dims, "check_unitary_covariance dims");
    require_range(n_obs, "check_unitary_covariance n_obs");
    const auto start = Clock::now();

    VerificationReport report;
    report.suite = "unitary_covariance";
    report.tolerance = tol;
    report.config_echo = {{"trials", std::to_string(trials)},
                          {"base_seed", std::to_string(base_seed)},
                          {"dims", std::to_string(dims.lo) + ".." + std::to_string(dims.hi)},
                          {"n_obs", std::to_string(n_obs.lo) + ".." + std::to_string(n_obs.hi)},
                          {"tolerance", format_double(tol)},
                          {"cluster_tol", format_double(config.cluster_tol)}};

    for (int index = 0; index < trials; ++index) {
        const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(index);
        Xoshiro256pp rng(seed);
        TrialRecord trial;
        trial.spec = {draw_in_range(rng, dims), draw_in_range(rng, n_obs), seed,
                      Family::generic, 0.0};
        try {
            const auto obs =
                random_generic_family(trial.spec.dim, trial.spec.n_obs, rng.next_u64());
            const DensityState rho = random_density(trial.spec.dim, rng.next_u64());
            const UnitaryMatrix u = haar_unitary(trial.spec.dim, rng.next_u64());

            std::vector<HermitianObservable> rotated;
            rotated.reserve(obs.size());
            for (const auto& a : obs) rotated.push_back(conjugate(a, u));

            const JointDistribution original = qjd_joint(obs, rho, config);
            const JointDistribution conjugated = qjd_joint(rotated, conjugate(rho, u), config);

            const double axis_dev =
                max_axis_deviation(original.grid(), conjugated.grid());
            const double tv = total_variation(original, conjugated);
            trial.value = tv;
            trial.error = std::max(tv, axis_dev);
            trial.pass = trial.error <= tol;
        } catch (const GridMismatch& e) {
            trial.pass = false;
            trial.error = std::numeric_limits<double>::infinity();
            trial.status = std::string("error: ") + e.what();
        } catch (const InvalidInput& e) {
            trial.valid = false;
            trial.status = std::string("invalid-input: ") + e.what();
        } catch (const Error& e) {
            trial.pass = false;
            trial.error = std::numeric_limits<double>::infinity();
            trial.status = std::string("error: ") + e.what();
        }
        report.trials.push_back(std::move(trial));
    }
    finalize(report, start);
    return report;
}

VerificationReport check_continuity_sweep(std::uint64_t tuple_seed,
                                          std::uint64_t direction_seed,
                                          std::vector<double> ts, int dim, int n_obs,
                                          double cap, double slack,
                                          const QjdConfig& config) {
    if (ts.empty()) throw InvalidInput("check_continuity_sweep: empty sweep");
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (!(ts[i] > 0.0) || (i > 0 && !(ts[i] < ts[i - 1]))) {
            throw InvalidInput(
                "check_continuity_sweep: ts must be strictly decreasing and positive");
        }
    }
    if (dim < 2 || n_obs < 1) {
        throw InvalidInput("check_continuity_sweep: need dim >= 2 and n_obs >= 1");
    }
    const auto start = Clock::now();

    VerificationReport report;
    report.suite = "continuity_sweep";
    report.tolerance = slack;
    report.note = "perturbation: Frobenius-normalized Hermitian direction, "
                  "A1(t) = A1 + t*H";
    report.config_echo = {{"tuple_seed", std::to_string(tuple_seed)},
                          {"direction_seed", std::to_string(direction_seed)},
                          {"dim", std::to_string(dim)},
                          {"n_obs", std::to_string(n_obs)},
                          {"cap", format_double(cap)},
                          {"slack", format_double(slack)},
                          {"cluster_tol", format_double(config.cluster_tol)}};

    Xoshiro256pp rng(tuple_seed);
    const auto obs = random_generic_family(dim, n_obs, rng.next_u64());
    const DensityState rho = random_density(dim, rng.next_u64());

    HermitianObservable direction = random_hermitian(dim, direction_seed);
    const double norm = direction.matrix().norm();
    if (!(norm > 0.0)) {
        throw DegenerateSample("check_continuity_sweep: zero perturbation direction");
    }
    const ComplexMatrix unit_direction = direction.matrix() / norm;

    const JointDistribution base = qjd_joint(obs, rho, config);

    double previous = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < ts.size(); ++k) {
        const double t = ts[k];
        TrialRecord trial;
        trial.spec = {dim, n_obs, tuple_seed, Family::generic, 0.0};
        trial.t = t;
        try {
            std::vector<HermitianObservable> perturbed = obs;
            perturbed[0] = HermitianObservable(
                ComplexMatrix(obs[0].matrix() + t * unit_direction), obs[0].label());
            const double w = wasserstein1(qjd_joint(perturbed, rho, config), base);
            trial.value = w;
            double violation = k == 0 ? 0.0 : std::max(0.0, w - previous);
            if (k + 1 == ts.size()) {
                violation = std::max(violation, w - cap);
            }
            trial.error = std::max(0.0, violation);
            trial.pass = trial.error <= slack;
            previous = w;
        } catch (const Error& e) {
            trial.pass = false;
            trial.error = std::numeric_limits<double>::infinity();
            trial.status = std::string("error: ") + e.what();
        }
        report.trials.push_back(std::move(trial));
    }
    finalize(report, start);
    return report;
}

VerificationReport check_axioms(int trials, std::uint64_t base_seed, Range dims,
                                Range n_obs, const QjdConfig& config) {
    if (trials < 1) throw InvalidInput("check_axioms: trials must be >= 1");
    require_range(dims, "check_axioms dims");
    require_range(n_obs, "check_axioms n_obs");
    const auto start = Clock::now();
    const double tol = config.policy.normalization_tol;

    VerificationReport report;
    report.suite = "axioms";
    report.tolerance = tol;
    report.config_echo = {{"trials", std::to_string(trials)},
                          {"base_seed", std::to_string(base_seed)},
                          {"dims", std::to_string(dims.lo) + ".." + std::to_string(dims.hi)},
                          {"n_obs", std::to_string(n_obs.lo) + ".." + std::to_string(n_obs.hi)},
                          {"tolerance", format_double(tol)},
                          {"cluster_tol", format_double(config.cluster_tol)}};

    const auto axiom_error = [](const JointDistribution& d) {
        return std::max(std::abs(d.sum() - 1.0), std::max(0.0, -d.min_weight()));
    };

    for (int index = 0; index < trials; ++index) {
        const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(index);
        Xoshiro256pp rng(seed);
        TrialRecord trial;
        trial.spec = {draw_in_range(rng, dims), draw_in_range(rng, n_obs), seed,
                      Family::generic, 0.0};
        try {
            const auto obs =
                random_generic_family(trial.spec.dim, trial.spec.n_obs, rng.next_u64());
            const std::uint64_t density_seed = rng.next_u64();
            const DensityState rho = random_density(trial.spec.dim, density_seed);

            double error = axiom_error(qjd_joint(obs, rho, config));
            error = std::max(error,
                             axiom_error(sequential_joint(obs, rho, config.cluster_tol)));

            // Same trial seed drives a commuting companion for the standard
            // construction, which is only defined there.
            const CommutingFamily commuting =
                random_commuting_family(trial.spec.dim, trial.spec.n_obs, rng.next_u64());
            error = std::max(
                error, axiom_error(standard_commuting_joint(
                           commuting.observables, rho, config.commute_tol,
                           config.cluster_tol)));

            trial.value = error;
            trial.error = error;
            trial.pass = error <= tol;
        } catch (const InvalidInput& e) {
            trial.valid = false;
            trial.status = std::string("invalid-input: ") + e.what();
        } catch (const Error& e) {
            trial.pass = false;
            trial.error = std::numeric_limits<double>::infinity();
            trial.status = std::string("error: ") + e.what();
        }
        report.trials.push_back(std::move(trial));
    }
    finalize(report, start);
    return report;
}

}  // namespace qjd::verify
