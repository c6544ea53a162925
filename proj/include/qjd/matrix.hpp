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

// matrix.hpp — dense complex-matrix kernel: validated carrier types for
// observables, density states and unitaries, plus the small arithmetic the
// rest of the library is built on. Frobenius norm is the canonical norm for
// every tolerance check.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <utility>

#include "qjd/errors.hpp"

namespace qjd {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

// Default tolerances for the type invariants below. Relative where a natural
// scale exists (Frobenius norm of the matrix), absolute otherwise.
struct Tolerances {
    double hermitian = 1e-10;   // ||A - A'||_F <= hermitian * max(1, ||A||_F)
    double trace_one = 1e-10;   // |tr(rho) - 1|
    double psd_floor = 1e-10;   // eigenvalues >= -psd_floor
    double unitary = 1e-8;      // ||U'U - I||_F <= unitary * d
};

double frobenius_norm(const ComplexMatrix& m);

// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& m);

// ||A - A'||_F, the distance from the Hermitian cone.
double hermiticity_defect(const ComplexMatrix& m);

bool all_entries_finite(const ComplexMatrix& m);

// Throws InvalidInput unless m is square with finite entries.
void require_square_finite(const ComplexMatrix& m, const std::string& context);

// ------------------------------- carrier types -------------------------------

// A Hermitian matrix representing a measurable quantity; the constructor
// enforces square/finite/hermiticity and the stored matrix is immutable.
class HermitianObservable {
public:
    explicit HermitianObservable(ComplexMatrix matrix, std::string label = "",
                                 const Tolerances& tol = {});

    const ComplexMatrix& matrix() const { return matrix_; }
    const std::string& label() const { return label_; }
    Eigen::Index dim() const { return matrix_.rows(); }

private:
    ComplexMatrix matrix_;
    std::string label_;
};

// Positive-semidefinite trace-one matrix.
class DensityState {
public:
    explicit DensityState(ComplexMatrix matrix, const Tolerances& tol = {});

    const ComplexMatrix& matrix() const { return matrix_; }
    Eigen::Index dim() const { return matrix_.rows(); }

private:
    ComplexMatrix matrix_;
};

class UnitaryMatrix {
public:
    explicit UnitaryMatrix(ComplexMatrix matrix, const Tolerances& tol = {});

    const ComplexMatrix& matrix() const { return matrix_; }
    Eigen::Index dim() const { return matrix_.rows(); }

private:
    ComplexMatrix matrix_;
};

// ------------------------------- operations ---------------------------------

// ||AB - BA||_F. Symmetric in its arguments.
double commutator_norm(const HermitianObservable& a, const HermitianObservable& b);

// U A U' as a validated observable (spectra are conjugation-invariant).
HermitianObservable conjugate(const HermitianObservable& a, const UnitaryMatrix& u);

// U rho U'.
DensityState conjugate(const DensityState& rho, const UnitaryMatrix& u);

}  // namespace qjd
