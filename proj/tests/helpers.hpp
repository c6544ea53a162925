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

// Shared fixtures for the test suites: Pauli matrices, basis projectors and
// small constructors used all over.

#pragma once

#include "qjd/matrix.hpp"

namespace qjd::test {

inline ComplexMatrix sigma_x() {
    ComplexMatrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

inline ComplexMatrix sigma_y() {
    ComplexMatrix m(2, 2);
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
}

inline ComplexMatrix sigma_z() {
    ComplexMatrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}

inline ComplexMatrix hadamard() {
    ComplexMatrix m(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    m << s, s, s, -s;
    return m;
}

// |k><k| in dimension d.
inline ComplexMatrix basis_projector(int d, int k) {
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    m(k, k) = 1.0;
    return m;
}

inline ComplexMatrix diag(std::initializer_list<double> values) {
    const auto n = static_cast<Eigen::Index>(values.size());
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    Eigen::Index i = 0;
    for (double v : values) {
        m(i, i) = v;
        ++i;
    }
    return m;
}

inline HermitianObservable observable(const ComplexMatrix& m, std::string label = "") {
    return HermitianObservable(m, std::move(label));
}

inline DensityState pure_state(int d, int k) { return DensityState(basis_projector(d, k)); }

}  // namespace qjd::test
