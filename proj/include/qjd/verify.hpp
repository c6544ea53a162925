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

// verify.hpp — randomized, seed-reproducible property suites. Each suite is
// a pure function of its arguments: per-trial seeds are base_seed +
// trial_index and every draw inside a trial derives from that seed alone, so
// identical arguments give identical reports modulo wall time. Invalid-input
// trials are counted separately from failures; a suite with zero valid
// trials throws.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qjd/joint.hpp"
#include "qjd/matrix.hpp"
#include "qjd/random.hpp"

namespace qjd::verify {

struct Range {
    int lo = 2;
    int hi = 6;
};

enum class Family { generic, commuting, near_commuting };

std::string to_string(Family family);

struct TrialSpec {
    int dim = 2;
    int n_obs = 1;
    std::uint64_t seed = 0;
    Family family = Family::generic;
    double epsilon = 0.0;  // near_commuting perturbation size
};

struct TrialRecord {
    TrialSpec spec;
    double value = 0.0;   // suite statistic (max deviation, tv distance, w1, ...)
    double error = 0.0;   // pass-relevant measured error
    bool pass = false;
    bool valid = true;    // false: precondition rejected the inputs, not a failure
    double t = 0.0;       // sweep parameter; meaningful for sweep suites only
    std::string status = "ok";
};

struct VerificationReport {
    std::string suite;
    double tolerance = 0.0;
    std::vector<TrialRecord> trials;
    std::size_t valid_trials = 0;
    std::size_t invalid_trials = 0;
    double max_error = 0.0;  // over valid trials
    bool all_pass = false;
    std::vector<std::pair<std::string, std::string>> config_echo;
    std::string note;
    double wall_time_ms = 0.0;
};

// ------------------------------ input families ------------------------------

// Commuting family by common conjugation: diagonal matrices with small
// integer entries (so spectra have exact degeneracies and unit gaps) rotated
// by one Haar unitary. The basis and diagonals are exposed so tests can
// compute the joint distribution independently.
struct CommutingFamily {
    UnitaryMatrix basis;
    std::vector<Eigen::VectorXd> diagonals;
    std::vector<HermitianObservable> observables;
};

CommutingFamily random_commuting_family(int dim, int n_obs, std::uint64_t seed);

std::vector<HermitianObservable> random_generic_family(int dim, int n_obs,
                                                       std::uint64_t seed);

// random_commuting_family(dim, n_obs, seed) plus epsilon times a
// unit-Frobenius Hermitian direction on each observable.
std::vector<HermitianObservable> random_near_commuting_family(int dim, int n_obs,
                                                              std::uint64_t seed,
                                                              double epsilon);

// --------------------------------- suites -----------------------------------

// Max per-weight |qjd_joint - standard_commuting_joint| over commuting
// families. Other families are accepted to probe precondition handling:
// tuples rejected by standard_commuting_joint (NotCommuting) are recorded as
// invalid-input trials, not failures.
VerificationReport check_commuting_agreement(int trials, std::uint64_t base_seed,
                                             Range dims = {2, 6},
                                             Range n_obs = {2, 3},
                                             double tol = 1e-8,
                                             const QjdConfig& config = {},
                                             Family family = Family::commuting,
                                             double epsilon = 1e-3);

// Total variation between qjd_joint before/after conjugating everything by a
// Haar unitary, plus the max eigenvalue-axis discrepancy.
VerificationReport check_unitary_covariance(int trials, std::uint64_t base_seed,
                                            Range dims = {2, 6},
                                            Range n_obs = {1, 3},
                                            double tol = 1e-8,
                                            const QjdConfig& config = {});

inline const std::vector<double> kDefaultSweep = {1e-1, 3e-2, 1e-2,  3e-3,
                                                  1e-3, 3e-4, 1e-4};

// Perturbs the first observable of a fixed generic tuple along a fixed
// Frobenius-normalized Hermitian direction, A1(t) = A1 + t*H, and records
// w(t) = wasserstein1 against the unperturbed distribution. Passes when w is
// non-increasing across the (strictly decreasing) t sweep within `slack` and
// w at the smallest t is at most `cap`.
VerificationReport check_continuity_sweep(std::uint64_t tuple_seed,
                                          std::uint64_t direction_seed,
                                          std::vector<double> ts = kDefaultSweep,
                                          int dim = 3, int n_obs = 2,
                                          double cap = 1e-2, double slack = 1e-10,
                                          const QjdConfig& config = {});

// Normalization and nonnegativity regression: qjd_joint and sequential_joint
// on generic tuples, standard_commuting_joint on commuting tuples derived
// from the same trial seeds.
VerificationReport check_axioms(int trials, std::uint64_t base_seed,
                                Range dims = {2, 6}, Range n_obs = {1, 3},
                                const QjdConfig& config = {});

}  // namespace qjd::verify
