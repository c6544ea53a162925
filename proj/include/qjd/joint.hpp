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

// joint.hpp — joint outcome distributions for tuples of observables against
// a density state.
//
// Four constructions share one grid convention (axes in argument order, each
// axis the ascending clustered spectrum of its observable):
//
//   * standard_commuting_joint — Re tr(rho P1 P2 ... Pn), defined only for
//     pairwise commuting tuples; the textbook joint distribution.
//   * qjd_joint — the order-averaged projective joint
//         p(j1..jn) = (1/n!) sum_pi tr(K_pi rho K_pi'),
//         K_pi = P^{pi(n)}_{j_{pi(n)}} ... P^{pi(1)}_{j_{pi(1)}},
//     a genuine probability distribution for arbitrary tuples. Each summand
//     is nonnegative and telescopes to one via the resolutions of identity,
//     the average is permutation-symmetric, reduces to the standard joint on
//     commuting tuples, is unitarily covariant, and varies continuously with
//     the observables.
//   * sequential_joint — the single-order chain tr(Pn..P1 rho P1..Pn);
//     order-dependent baseline.
//   * margenau_hill_joint — Re tr(rho P1_i P2_j); symmetrized two-observable
//     quasi-distribution baseline, weights may be negative.

#pragma once

#include <vector>

#include "qjd/distribution.hpp"
#include "qjd/matrix.hpp"
#include "qjd/spectral.hpp"

namespace qjd {

// Every numerical knob of the joint constructions in one auditable record.
// The order average is a finite exact sum, so there are no iteration or
// quadrature parameters beyond these.
struct QjdConfig {
    double commute_tol = 1e-10;                 // relative pairwise commutator test
    double cluster_tol = kDefaultClusterTol;    // eigenvalue clustering
    WeightPolicy policy;                        // clamp / renormalize / violation floors
};

// True when all pairs satisfy ||[A_i,A_j]||_F <= tol * max(1, ||A_i|| ||A_j||).
bool pairwise_commuting(const std::vector<HermitianObservable>& obs, double tol);

// Born distribution of a single decomposed observable: p_j = Re tr(rho P_j).
JointDistribution born_distribution(const SpectralMeasure& sm, const DensityState& rho);

// Throws NotCommuting (with the offending pair and its commutator norm) when
// the precondition fails.
JointDistribution standard_commuting_joint(const std::vector<HermitianObservable>& obs,
                                           const DensityState& rho,
                                           double commute_tol = 1e-10,
                                           double cluster_tol = kDefaultClusterTol);

JointDistribution qjd_joint(const std::vector<HermitianObservable>& obs,
                            const DensityState& rho, const QjdConfig& config = {});

// Measurement order = argument order.
JointDistribution sequential_joint(const std::vector<HermitianObservable>& obs,
                                   const DensityState& rho,
                                   double cluster_tol = kDefaultClusterTol);

// Exactly two observables; throws WrongArity otherwise.
JointDistribution margenau_hill_joint(const std::vector<HermitianObservable>& obs,
                                      const DensityState& rho,
                                      double cluster_tol = kDefaultClusterTol);

}  // namespace qjd
