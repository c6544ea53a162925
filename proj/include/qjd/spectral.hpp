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

// spectral.hpp — resolution of a Hermitian observable into distinct
// eigenvalues and orthogonal spectral projectors. Numerically coincident
// eigenvalues are merged by a relative gap threshold; the merged projector
// (sum of member rank-1 outer products) is canonical even though individual
// eigenvectors inside a degenerate cluster are not, so consumers must only
// ever use the projectors.

#pragma once

#include <vector>

#include "qjd/matrix.hpp"

namespace qjd {

inline constexpr double kDefaultClusterTol = 1e-8;

class SpectralMeasure {
public:
    // Validates idempotency, hermiticity, pairwise orthogonality, resolution
    // of identity and that ranks sum to dim. Eigenvalues must be strictly
    // increasing.
    SpectralMeasure(std::vector<double> eigenvalues,
                    std::vector<ComplexMatrix> projectors);

    std::size_t size() const { return eigenvalues_.size(); }
    Eigen::Index dim() const { return dim_; }

    const std::vector<double>& eigenvalues() const { return eigenvalues_; }
    double eigenvalue(std::size_t index) const;

    // P_{index+1}; throws IndexOutOfRange.
    const ComplexMatrix& projector_for(std::size_t index) const;

    // round(tr P_j).
    int rank(std::size_t index) const;

    // ||sum_j lambda_j P_j - a||_F
    double reconstruction_defect(const ComplexMatrix& a) const;

private:
    std::vector<double> eigenvalues_;
    std::vector<ComplexMatrix> projectors_;
    Eigen::Index dim_;
};

// Full Hermitian eigendecomposition with ascending eigenvalues; consecutive
// eigenvalues with gap <= cluster_tol * max(1, max|lambda|) are merged into
// one cluster (eigenvalue = mean of members, projector = sum of rank-1
// projectors). Throws DecompositionFailure if the eigensolver fails and
// validates the reconstruction of `a` before returning.
SpectralMeasure eigendecompose(const HermitianObservable& a,
                               double cluster_tol = kDefaultClusterTol);

// Same eigenvalues, projectors U P_j U'.
SpectralMeasure conjugate(const SpectralMeasure& sm, const UnitaryMatrix& u);

}  // namespace qjd
