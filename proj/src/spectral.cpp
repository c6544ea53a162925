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

#include "qjd/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>
#include <utility>

namespace qjd {

namespace {

constexpr double kProjectorTol = 1e-8;      // idempotency/orthogonality/identity
constexpr double kReconstructTol = 1e-7;    // * max(1, ||A||_F)

}  // namespace

SpectralMeasure::SpectralMeasure(std::vector<double> eigenvalues,
                                 std::vector<ComplexMatrix> projectors)
    : eigenvalues_(std::move(eigenvalues)), projectors_(std::move(projectors)) {
    if (eigenvalues_.empty() || eigenvalues_.size() != projectors_.size()) {
        throw InvalidInput("SpectralMeasure: need one projector per eigenvalue");
    }
    dim_ = projectors_.front().rows();
    for (std::size_t j = 1; j < eigenvalues_.size(); ++j) {
        if (!(eigenvalues_[j] > eigenvalues_[j - 1])) {
            throw InvalidInput("SpectralMeasure: eigenvalues must be strictly increasing");
        }
    }
    int rank_sum = 0;
    ComplexMatrix total = ComplexMatrix::Zero(dim_, dim_);
    for (std::size_t j = 0; j < projectors_.size(); ++j) {
        const ComplexMatrix& p = projectors_[j];
        require_square_finite(p, "SpectralMeasure projector");
        if (p.rows() != dim_) {
            throw DimensionMismatch("SpectralMeasure: projector dims differ");
        }
        if ((p * p - p).norm() > kProjectorTol || hermiticity_defect(p) > kProjectorTol) {
            std::ostringstream os;
            os << "SpectralMeasure: projector " << j << " is not an orthogonal projector";
            throw InvalidInput(os.str());
        }
        for (std::size_t i = 0; i < j; ++i) {
            if ((projectors_[i] * p).norm() > kProjectorTol) {
                std::ostringstream os;
                os << "SpectralMeasure: projectors " << i << " and " << j
                   << " are not orthogonal";
                throw InvalidInput(os.str());
            }
        }
        rank_sum += static_cast<int>(std::lround(p.trace().real()));
        total += p;
    }
    if ((total - ComplexMatrix::Identity(dim_, dim_)).norm() > kProjectorTol) {
        throw InvalidInput("SpectralMeasure: projectors do not resolve the identity");
    }
    if (rank_sum != static_cast<int>(dim_)) {
        std::ostringstream os;
        os << "SpectralMeasure: ranks sum to " << rank_sum << ", expected " << dim_;
        throw InvalidInput(os.str());
    }
}

double SpectralMeasure::eigenvalue(std::size_t index) const {
    if (index >= eigenvalues_.size()) {
        throw IndexOutOfRange("SpectralMeasure::eigenvalue: index out of range");
    }
    return eigenvalues_[index];
}

const ComplexMatrix& SpectralMeasure::projector_for(std::size_t index) const {
    if (index >= projectors_.size()) {
        std::ostringstream os;
        os << "projector_for: index " << index << " out of range [0, "
           << projectors_.size() << ")";
        throw IndexOutOfRange(os.str());
    }
    return projectors_[index];
}

int SpectralMeasure::rank(std::size_t index) const {
    return static_cast<int>(std::lround(projector_for(index).trace().real()));
}

double SpectralMeasure::reconstruction_defect(const ComplexMatrix& a) const {
    ComplexMatrix rebuilt = ComplexMatrix::Zero(dim_, dim_);
    for (std::size_t j = 0; j < eigenvalues_.size(); ++j) {
        rebuilt += eigenvalues_[j] * projectors_[j];
    }
    return (rebuilt - a).norm();
}

SpectralMeasure eigendecompose(const HermitianObservable& a, double cluster_tol) {
    if (!(cluster_tol > 0.0)) {
        throw InvalidInput("eigendecompose: cluster_tol must be positive");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a.matrix());
    if (solver.info() != Eigen::Success) {
        throw DecompositionFailure("eigendecompose: eigensolver did not converge");
    }
    const Eigen::VectorXd lambda = solver.eigenvalues();  // ascending
    const ComplexMatrix vectors = solver.eigenvectors();
    const Eigen::Index d = a.dim();

    const double scale = std::max(1.0, lambda.cwiseAbs().maxCoeff());
    const double gap_floor = cluster_tol * scale;

    std::vector<double> values;
    std::vector<ComplexMatrix> projectors;
    Eigen::Index start = 0;
    while (start < d) {
        Eigen::Index stop = start + 1;
        while (stop < d && lambda(stop) - lambda(stop - 1) <= gap_floor) {
            ++stop;
        }
        // Members are rank-1, so the rank-weighted mean is the plain mean.
        double mean = 0.0;
        for (Eigen::Index i = start; i < stop; ++i) {
            mean += lambda(i);
        }
        mean /= static_cast<double>(stop - start);

        const ComplexMatrix block = vectors.middleCols(start, stop - start);
        ComplexMatrix p = block * block.adjoint();
        p = 0.5 * (p + ComplexMatrix(p.adjoint()));

        values.push_back(mean);
        projectors.push_back(std::move(p));
        start = stop;
    }

    SpectralMeasure sm(std::move(values), std::move(projectors));
    const double defect = sm.reconstruction_defect(a.matrix());
    const double limit = kReconstructTol * std::max(1.0, a.matrix().norm());
    if (defect > limit) {
        std::ostringstream os;
        os << "eigendecompose: reconstruction defect " << defect << " exceeds "
           << limit;
        throw DecompositionFailure(os.str());
    }
    return sm;
}

SpectralMeasure conjugate(const SpectralMeasure& sm, const UnitaryMatrix& u) {
    if (sm.dim() != u.dim()) {
        throw DimensionMismatch("conjugate: spectral measure and unitary dims differ");
    }
    std::vector<ComplexMatrix> projectors;
    projectors.reserve(sm.size());
    for (std::size_t j = 0; j < sm.size(); ++j) {
        ComplexMatrix p = u.matrix() * sm.projector_for(j) * u.matrix().adjoint();
        p = 0.5 * (p + ComplexMatrix(p.adjoint()));
        projectors.push_back(std::move(p));
    }
    return SpectralMeasure(sm.eigenvalues(), std::move(projectors));
}

}  // namespace qjd
