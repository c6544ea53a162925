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

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "oracles.hpp"
#include "qjd/io.hpp"
#include "qjd/transport.hpp"
#include "qjd/verify.hpp"

using namespace qjd;
using Catch::Approx;

TEST_CASE("commuting agreement on a single delta-like trial is near machine precision") {
    const auto report = verify::check_commuting_agreement(1, 7, {2, 2}, {2, 2});
    REQUIRE(report.valid_trials == 1);
    REQUIRE(report.all_pass);
    REQUIRE(report.max_error <= 1e-12);
}

TEST_CASE("commuting agreement holds over a seeded batch") {
    const auto report = verify::check_commuting_agreement(25, 1, {2, 6}, {2, 3});
    REQUIRE(report.valid_trials == 25);
    REQUIRE(report.invalid_trials == 0);
    REQUIRE(report.all_pass);
    REQUIRE(report.max_error <= 1e-8);
}

TEST_CASE("generic tuples are recorded as invalid input, never as failures") {
    // Every trial trips the NotCommuting precondition, so the suite ends with
    // zero valid trials, which is itself an error rather than a failed run.
    REQUIRE_THROWS_AS(verify::check_commuting_agreement(3, 1, {3, 4}, {2, 2}, 1e-8, {},
                                                        verify::Family::generic),
                      InvalidInput);
}

TEST_CASE("suites are pure functions of their arguments") {
    const auto a = verify::check_commuting_agreement(10, 5, {2, 5}, {2, 3});
    const auto b = verify::check_commuting_agreement(10, 5, {2, 5}, {2, 3});
    REQUIRE(io::strip_wall_time(io::report_to_json(a)).dump() ==
            io::strip_wall_time(io::report_to_json(b)).dump());
}

TEST_CASE("per-trial seeds are base seed plus trial index") {
    const auto report = verify::check_axioms(5, 42, {2, 3}, {1, 2});
    for (std::size_t i = 0; i < report.trials.size(); ++i) {
        REQUIRE(report.trials[i].spec.seed == 42 + i);
    }
}

TEST_CASE("conjugating by the identity leaves the distribution untouched") {
    const auto obs = verify::random_generic_family(3, 2, 19);
    const auto rho = random_density(3, 20);
    const auto base = qjd_joint(obs, rho);

    std::vector<HermitianObservable> rotated;
    const UnitaryMatrix id(ComplexMatrix::Identity(3, 3));
    for (const auto& a : obs) rotated.push_back(conjugate(a, id));
    const auto same = qjd_joint(rotated, conjugate(rho, id));
    REQUIRE(total_variation(base, same) <= 1e-14);
}

TEST_CASE("global phases conjugate trivially") {
    const auto obs = verify::random_generic_family(3, 2, 21);
    const auto rho = random_density(3, 22);
    const Complex phase = std::polar(1.0, 0.7);
    const UnitaryMatrix u(ComplexMatrix(phase * ComplexMatrix::Identity(3, 3)));

    std::vector<HermitianObservable> rotated;
    for (const auto& a : obs) rotated.push_back(conjugate(a, u));
    const auto base = qjd_joint(obs, rho);
    const auto same = qjd_joint(rotated, conjugate(rho, u));
    REQUIRE(total_variation(base, same) <= 1e-12);
}

TEST_CASE("unitary covariance suite passes") {
    const auto report = verify::check_unitary_covariance(25, 2, {2, 6}, {1, 3});
    REQUIRE(report.all_pass);
    REQUIRE(report.max_error <= 1e-8);
}

TEST_CASE("continuity sweep rejects bad schedules") {
    REQUIRE_THROWS_AS(verify::check_continuity_sweep(5, 6, {1e-2, 1e-1}), InvalidInput);
    REQUIRE_THROWS_AS(verify::check_continuity_sweep(5, 6, {1e-2, -1e-3}), InvalidInput);
    REQUIRE_THROWS_AS(verify::check_continuity_sweep(5, 6, {}), InvalidInput);
}

TEST_CASE("a diagonal family perturbed along its diagonal moves at most linearly") {
    // Closed form: the distribution is a delta whose first coordinate moves
    // with eigenvalue speed |h_0| <= ||H||_F = 1, so w(t) <= t.
    const ComplexMatrix a = test::diag({0.0, 1.0, 2.5});
    const ComplexMatrix b = test::diag({3.0, 4.0, 6.0});
    Eigen::VectorXd h(3);
    h << 0.6, -0.64, 0.48;  // unit Frobenius norm
    REQUIRE(h.norm() == Approx(1.0).margin(1e-12));
    ComplexMatrix hm = ComplexMatrix::Zero(3, 3);
    hm.diagonal() = h.cast<Complex>();

    const DensityState rho = test::pure_state(3, 0);
    const auto base = qjd_joint({test::observable(a), test::observable(b)}, rho);
    for (double t : {1e-1, 1e-2, 1e-3}) {
        const auto moved =
            qjd_joint({test::observable(ComplexMatrix(a + t * hm)), test::observable(b)},
                      rho);
        const double w = wasserstein1(moved, base);
        REQUIRE(w <= t + 1e-12);
        REQUIRE(w == Approx(t * 0.6).margin(1e-10));
    }
}

TEST_CASE("the generic continuity sweep decreases and lands small") {
    const auto report = verify::check_continuity_sweep(5, 6);
    REQUIRE(report.all_pass);
    REQUIRE(report.trials.size() == verify::kDefaultSweep.size());
    // w values themselves decrease along the sweep.
    for (std::size_t k = 1; k < report.trials.size(); ++k) {
        REQUIRE(report.trials[k].value <= report.trials[k - 1].value + 1e-10);
    }
    REQUIRE(report.trials.back().value <= 1e-2);
}

TEST_CASE("axioms suite passes and a corrupted vector is caught") {
    const auto report = verify::check_axioms(50, 3, {2, 6}, {1, 3});
    REQUIRE(report.all_pass);
    REQUIRE(report.max_error <= 1e-10);

    const auto obs = verify::random_generic_family(3, 2, 33);
    const auto rho = random_density(3, 34);
    const auto d = qjd_joint(obs, rho);
    std::vector<double> corrupted = d.weights();
    for (double& w : corrupted) w *= 1.1;
    REQUIRE_THROWS_AS(
        JointDistribution(d.grid(), corrupted, WeightKind::probability),
        NormalizationViolation);
}

TEST_CASE("maximally mixed states give multiplicity-weighted born weights") {
    const DensityState mixed(ComplexMatrix(ComplexMatrix::Identity(3, 3) / 3.0));
    const auto d = qjd_joint({test::observable(test::diag({5, 5, 7}))}, mixed);
    REQUIRE(d.weight(0) == Approx(2.0 / 3.0).margin(1e-12));
    REQUIRE(d.weight(1) == Approx(1.0 / 3.0).margin(1e-12));
    REQUIRE(d.sum() == Approx(1.0).margin(1e-12));
}

TEST_CASE("suite arguments are validated") {
    REQUIRE_THROWS_AS(verify::check_axioms(0, 1), InvalidInput);
    REQUIRE_THROWS_AS(verify::check_commuting_agreement(5, 1, {6, 2}), InvalidInput);
}
