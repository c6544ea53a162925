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

#include <Eigen/Eigenvalues>

#include "qjd/random.hpp"

using namespace qjd;
using Catch::Approx;

TEST_CASE("random hermitian sampling is a pure function of dim and seed") {
    const auto a = random_hermitian(4, 42);
    const auto b = random_hermitian(4, 42);
    REQUIRE(a.matrix() == b.matrix());
    const auto c = random_hermitian(4, 43);
    REQUIRE(a.matrix() != c.matrix());
}

TEST_CASE("one-dimensional hermitian samples are real") {
    for (std::uint64_t seed : {0ull, 7ull, 123456789ull}) {
        const auto a = random_hermitian(1, seed);
        REQUIRE(a.matrix()(0, 0).imag() == 0.0);
    }
}

TEST_CASE("random hermitian samples satisfy the hermiticity invariant") {
    const auto a = random_hermitian(4, 42);
    const double scale = std::max(1.0, a.matrix().norm());
    REQUIRE(hermiticity_defect(a.matrix()) <= 1e-10 * scale);
}

TEST_CASE("one-dimensional density states are the scalar one") {
    const auto rho = random_density(1, 5);
    REQUIRE(rho.matrix()(0, 0).real() == Approx(1.0).margin(1e-15));
    REQUIRE(rho.matrix()(0, 0).imag() == 0.0);
}

TEST_CASE("random density states have unit trace and nonnegative spectrum") {
    const auto rho = random_density(3, 7);
    REQUIRE(std::abs(rho.matrix().trace().real() - 1.0) <= 1e-12);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho.matrix());
    REQUIRE(solver.info() == Eigen::Success);
    REQUIRE(solver.eigenvalues().minCoeff() >= 0.0);
    REQUIRE(random_density(3, 7).matrix() == rho.matrix());
}

TEST_CASE("one-dimensional haar samples are unit-modulus scalars") {
    const auto u = haar_unitary(1, 11);
    REQUIRE(std::abs(u.matrix()(0, 0)) == Approx(1.0).margin(1e-14));
}

TEST_CASE("haar samples are unitary with unit determinant modulus") {
    const auto u = haar_unitary(4, 9);
    const ComplexMatrix gram = u.matrix().adjoint() * u.matrix();
    REQUIRE((gram - ComplexMatrix::Identity(4, 4)).norm() <= 1e-12);
    REQUIRE(std::abs(u.matrix().determinant()) == Approx(1.0).margin(1e-10));
    REQUIRE(haar_unitary(4, 9).matrix() == u.matrix());
}

TEST_CASE("samplers reject non-positive dimensions") {
    REQUIRE_THROWS_AS(random_hermitian(0, 1), InvalidInput);
    REQUIRE_THROWS_AS(random_density(0, 1), InvalidInput);
    REQUIRE_THROWS_AS(haar_unitary(-2, 1), InvalidInput);
}
