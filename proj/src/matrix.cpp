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

#include "qjd/matrix.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>

namespace qjd {

double frobenius_norm(const ComplexMatrix& m) { return m.norm(); }

ComplexMatrix adjoint(const ComplexMatrix& m) { return m.adjoint(); }

double hermiticity_defect(const ComplexMatrix& m) {
    return (m - ComplexMatrix(m.adjoint())).norm();
}

bool all_entries_finite(const ComplexMatrix& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) {
                return false;
            }
        }
    }
    return true;
}

void require_square_finite(const ComplexMatrix& m, const std::string& context) {
    if (m.rows() == 0 || m.rows() != m.cols()) {
        std::ostringstream os;
        os << context << ": matrix must be square and non-empty, got "
           << m.rows() << "x" << m.cols();
        throw InvalidInput(os.str());
    }
    if (!all_entries_finite(m)) {
        throw InvalidInput(context + ": matrix has non-finite entries");
    }
}

HermitianObservable::HermitianObservable(ComplexMatrix matrix, std::string label,
                                         const Tolerances& tol)
    : matrix_(std::move(matrix)), label_(std::move(label)) {
    require_square_finite(matrix_, "HermitianObservable");
    const double defect = hermiticity_defect(matrix_);
    const double scale = std::max(1.0, matrix_.norm());
    if (defect > tol.hermitian * scale) {
        std::ostringstream os;
        os << "HermitianObservable";
        if (!label_.empty()) os << " '" << label_ << "'";
        os << ": hermiticity defect " << defect << " exceeds " << tol.hermitian
           << " * " << scale;
        throw NotHermitian(os.str());
    }
}

DensityState::DensityState(ComplexMatrix matrix, const Tolerances& tol)
    : matrix_(std::move(matrix)) {
    require_square_finite(matrix_, "DensityState");
    const double defect = hermiticity_defect(matrix_);
    const double scale = std::max(1.0, matrix_.norm());
    if (defect > tol.hermitian * scale) {
        std::ostringstream os;
        os << "DensityState: hermiticity defect " << defect;
        throw NotDensityState(os.str());
    }
    const double tr = matrix_.trace().real();
    if (std::abs(tr - 1.0) > tol.trace_one) {
        std::ostringstream os;
        os << "DensityState: trace " << tr << " deviates from 1 by more than "
           << tol.trace_one;
        throw NotDensityState(os.str());
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(matrix_,
                                                        Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw DecompositionFailure("DensityState: eigenvalue check did not converge");
    }
    const double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < -tol.psd_floor) {
        std::ostringstream os;
        os << "DensityState: smallest eigenvalue " << min_eig << " below -"
           << tol.psd_floor;
        throw NotDensityState(os.str());
    }
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix matrix, const Tolerances& tol)
    : matrix_(std::move(matrix)) {
    require_square_finite(matrix_, "UnitaryMatrix");
    const Eigen::Index d = matrix_.rows();
    const double defect =
        (matrix_.adjoint() * matrix_ - ComplexMatrix::Identity(d, d)).norm();
    if (defect > tol.unitary * static_cast<double>(d)) {
        std::ostringstream os;
        os << "UnitaryMatrix: ||U'U - I||_F = " << defect << " exceeds "
           << tol.unitary << " * " << d;
        throw NotUnitary(os.str());
    }
}

double commutator_norm(const HermitianObservable& a, const HermitianObservable& b) {
    if (a.dim() != b.dim()) {
        std::ostringstream os;
        os << "commutator_norm: dimension mismatch " << a.dim() << " vs " << b.dim();
        throw DimensionMismatch(os.str());
    }
    return (a.matrix() * b.matrix() - b.matrix() * a.matrix()).norm();
}

HermitianObservable conjugate(const HermitianObservable& a, const UnitaryMatrix& u) {
    if (a.dim() != u.dim()) {
        throw DimensionMismatch("conjugate: observable and unitary dims differ");
    }
    ComplexMatrix m = u.matrix() * a.matrix() * u.matrix().adjoint();
    // Roundoff from the two products can push the hermiticity defect slightly
    // past the constructor tolerance; symmetrize before validating.
    m = 0.5 * (m + ComplexMatrix(m.adjoint()));
    return HermitianObservable(std::move(m), a.label());
}

DensityState conjugate(const DensityState& rho, const UnitaryMatrix& u) {
    if (rho.dim() != u.dim()) {
        throw DimensionMismatch("conjugate: state and unitary dims differ");
    }
    ComplexMatrix m = u.matrix() * rho.matrix() * u.matrix().adjoint();
    m = 0.5 * (m + ComplexMatrix(m.adjoint()));
    return DensityState(std::move(m));
}

}  // namespace qjd
