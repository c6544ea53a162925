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

#include "qjd/joint.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

namespace qjd {

namespace {

// n! orderings are averaged; past this the construction is out of its
// desk-scale domain anyway.
constexpr std::size_t kMaxObservables = 8;

void require_tuple(const std::vector<HermitianObservable>& obs,
                   const DensityState& rho, const char* context) {
    if (obs.empty()) {
        throw InvalidInput(std::string(context) + ": need at least one observable");
    }
    for (std::size_t i = 0; i < obs.size(); ++i) {
        if (obs[i].dim() != rho.dim()) {
            std::ostringstream os;
            os << context << ": observable " << i << " has dim " << obs[i].dim()
               << ", state has dim " << rho.dim();
            throw DimensionMismatch(os.str());
        }
    }
}

std::vector<SpectralMeasure> decompose_all(const std::vector<HermitianObservable>& obs,
                                           double cluster_tol) {
    std::vector<SpectralMeasure> measures;
    measures.reserve(obs.size());
    for (const auto& a : obs) {
        measures.push_back(eigendecompose(a, cluster_tol));
    }
    return measures;
}

OutcomeGrid grid_from(const std::vector<SpectralMeasure>& measures) {
    std::vector<std::vector<double>> axes;
    axes.reserve(measures.size());
    for (const auto& sm : measures) {
        axes.push_back(sm.eigenvalues());
    }
    return OutcomeGrid(std::move(axes));
}

// Accumulates, for the measurement order `order`, the weights
// tr(K rho K') into `weights` scaled by `coeff`. Index tuples stay in
// argument order regardless of the measurement order.
void accumulate_sequential(const std::vector<SpectralMeasure>& measures,
                           const OutcomeGrid& grid, const ComplexMatrix& rho,
                           const std::vector<std::size_t>& order, double coeff,
                           std::vector<double>& weights) {
    const std::size_t n = measures.size();
    std::vector<std::size_t> indices(n, 0);

    auto recurse = [&](auto&& self, std::size_t level,
                       const ComplexMatrix& conditioned) -> void {
        if (level == n) {
            weights[grid.flat_index(indices)] += coeff * conditioned.trace().real();
            return;
        }
        const std::size_t axis = order[level];
        const SpectralMeasure& sm = measures[axis];
        for (std::size_t j = 0; j < sm.size(); ++j) {
            const ComplexMatrix& p = sm.projector_for(j);
            indices[axis] = j;
            self(self, level + 1, ComplexMatrix(p * conditioned * p));
        }
    };
    recurse(recurse, 0, rho);
}

}  // namespace

bool pairwise_commuting(const std::vector<HermitianObservable>& obs, double tol) {
    for (std::size_t i = 0; i < obs.size(); ++i) {
        for (std::size_t j = i + 1; j < obs.size(); ++j) {
            const double scale =
                std::max(1.0, obs[i].matrix().norm() * obs[j].matrix().norm());
            if (commutator_norm(obs[i], obs[j]) > tol * scale) {
                return false;
            }
        }
    }
    return true;
}

JointDistribution born_distribution(const SpectralMeasure& sm, const DensityState& rho) {
    if (sm.dim() != rho.dim()) {
        throw DimensionMismatch("born_distribution: dims differ");
    }
    std::vector<double> weights(sm.size());
    for (std::size_t j = 0; j < sm.size(); ++j) {
        weights[j] = (rho.matrix() * sm.projector_for(j)).trace().real();
    }
    return JointDistribution(OutcomeGrid({sm.eigenvalues()}), std::move(weights),
                             WeightKind::probability);
}

JointDistribution standard_commuting_joint(const std::vector<HermitianObservable>& obs,
                                           const DensityState& rho,
                                           double commute_tol, double cluster_tol) {
    require_tuple(obs, rho, "standard_commuting_joint");
    for (std::size_t i = 0; i < obs.size(); ++i) {
        for (std::size_t j = i + 1; j < obs.size(); ++j) {
            const double norm = commutator_norm(obs[i], obs[j]);
            const double scale =
                std::max(1.0, obs[i].matrix().norm() * obs[j].matrix().norm());
            if (norm > commute_tol * scale) {
                std::ostringstream os;
                os << "standard_commuting_joint: observables " << i << " and " << j
                   << " do not commute, ||[A_i,A_j]||_F = " << norm
                   << " (limit " << commute_tol * scale << ")";
                throw NotCommuting(i, j, norm, os.str());
            }
        }
    }

    const auto measures = decompose_all(obs, cluster_tol);
    OutcomeGrid grid = grid_from(measures);
    std::vector<double> weights(grid.size(), 0.0);
    std::vector<std::size_t> indices(obs.size(), 0);

    auto recurse = [&](auto&& self, std::size_t axis,
                       const ComplexMatrix& partial) -> void {
        if (axis == measures.size()) {
            weights[grid.flat_index(indices)] =
                (rho.matrix() * partial).trace().real();
            return;
        }
        for (std::size_t j = 0; j < measures[axis].size(); ++j) {
            indices[axis] = j;
            self(self, axis + 1,
                 ComplexMatrix(partial * measures[axis].projector_for(j)));
        }
    };
    const Eigen::Index d = rho.dim();
    recurse(recurse, 0, ComplexMatrix::Identity(d, d));

    return JointDistribution(std::move(grid), std::move(weights),
                             WeightKind::probability);
}

JointDistribution qjd_joint(const std::vector<HermitianObservable>& obs,
                            const DensityState& rho, const QjdConfig& config) {
    require_tuple(obs, rho, "qjd_joint");
    const std::size_t n = obs.size();
    if (n > kMaxObservables) {
        std::ostringstream os;
        os << "qjd_joint: " << n << " observables exceeds the supported maximum of "
           << kMaxObservables;
        throw TooLarge(os.str());
    }

    const auto measures = decompose_all(obs, config.cluster_tol);
    OutcomeGrid grid = grid_from(measures);
    std::vector<double> weights(grid.size(), 0.0);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::size_t factorial = 1;
    for (std::size_t i = 2; i <= n; ++i) factorial *= i;
    const double coeff = 1.0 / static_cast<double>(factorial);

    do {
        accumulate_sequential(measures, grid, rho.matrix(), order, coeff, weights);
    } while (std::next_permutation(order.begin(), order.end()));

    return JointDistribution(std::move(grid), std::move(weights),
                             WeightKind::probability, config.policy);
}

JointDistribution sequential_joint(const std::vector<HermitianObservable>& obs,
                                   const DensityState& rho, double cluster_tol) {
    require_tuple(obs, rho, "sequential_joint");
    const auto measures = decompose_all(obs, cluster_tol);
    OutcomeGrid grid = grid_from(measures);
    std::vector<double> weights(grid.size(), 0.0);

    std::vector<std::size_t> order(obs.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    accumulate_sequential(measures, grid, rho.matrix(), order, 1.0, weights);

    return JointDistribution(std::move(grid), std::move(weights),
                             WeightKind::probability);
}

JointDistribution margenau_hill_joint(const std::vector<HermitianObservable>& obs,
                                      const DensityState& rho, double cluster_tol) {
    if (obs.size() != 2) {
        std::ostringstream os;
        os << "margenau_hill_joint: expected exactly 2 observables, got " << obs.size();
        throw WrongArity(os.str());
    }
    require_tuple(obs, rho, "margenau_hill_joint");

    const auto measures = decompose_all(obs, cluster_tol);
    OutcomeGrid grid = grid_from(measures);
    std::vector<double> weights(grid.size(), 0.0);

    // Re tr(rho (P1_i P2_j + P2_j P1_i)/2) = Re tr(rho P1_i P2_j) since the
    // two summands are adjoint up to the trace.
    std::vector<std::size_t> indices(2);
    for (std::size_t i = 0; i < measures[0].size(); ++i) {
        for (std::size_t j = 0; j < measures[1].size(); ++j) {
            indices[0] = i;
            indices[1] = j;
            weights[grid.flat_index(indices)] =
                (rho.matrix() * measures[0].projector_for(i) *
                 measures[1].projector_for(j))
                    .trace()
                    .real();
        }
    }
    return JointDistribution(std::move(grid), std::move(weights), WeightKind::quasi);
}

}  // namespace qjd
