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
#include "qjd/joint.hpp"
#include "qjd/random.hpp"
#include "qjd/transport.hpp"
#include "qjd/verify.hpp"

using namespace qjd;
using Catch::Approx;

namespace {

double max_weight_dev(const JointDistribution& a, const JointDistribution& b) {
    REQUIRE(a.grid().approx_equal(b.grid(), 1e-8));
    double dev = 0.0;
    for (std::size_t i = 0; i < a.weights().size(); ++i) {
        dev = std::max(dev, std::abs(a.weight(i) - b.weight(i)));
    }
    return dev;
}

double max_weight_dev(const JointDistribution& a, const oracle::GriddedWeights& b) {
    REQUIRE(a.grid().num_axes() == b.axes.size());
    for (std::size_t i = 0; i < b.axes.size(); ++i) {
        REQUIRE(a.grid().axis(i).size() == b.axes[i].size());
        for (std::size_t j = 0; j < b.axes[i].size(); ++j) {
            REQUIRE(a.grid().axis(i)[j] == Approx(b.axes[i][j]).margin(1e-12));
        }
    }
    double dev = 0.0;
    for (std::size_t k = 0; k < b.weights.size(); ++k) {
        dev = std::max(dev, std::abs(a.weight(k) - b.weights[k]));
    }
    return dev;
}

}  // namespace

// ---------------------------------------------------------------------------
// standard_commuting_joint

TEST_CASE("born rule on a sigma_z eigenstate") {
    const auto d = standard_commuting_joint({test::observable(test::sigma_z())},
                                            test::pure_state(2, 0));
    REQUIRE(d.weight(0) == Approx(0.0).margin(1e-14));  // lambda = -1
    REQUIRE(d.weight(1) == Approx(1.0).margin(1e-14));  // lambda = +1
}

TEST_CASE("simultaneously diagonal pair gives the diagonal joint") {
    const double q = 0.3;
    const auto d = standard_commuting_joint(
        {test::observable(test::diag({1, 2})), test::observable(test::diag({3, 4}))},
        DensityState(test::diag({q, 1 - q})));
    REQUIRE(d.weight(d.grid().flat_index({0, 0})) == Approx(q).margin(1e-14));
    REQUIRE(d.weight(d.grid().flat_index({1, 1})) == Approx(1 - q).margin(1e-14));
    REQUIRE(d.weight(d.grid().flat_index({0, 1})) == Approx(0.0).margin(1e-14));
    REQUIRE(d.weight(d.grid().flat_index({1, 0})) == Approx(0.0).margin(1e-14));
}

TEST_CASE("conjugated diagonal pair concentrates on the rotated eigenstate") {
    const auto u = haar_unitary(3, 11);
    const Eigen::VectorXd diag_a = (Eigen::VectorXd(3) << 0, 1, 2).finished();
    const Eigen::VectorXd diag_b = (Eigen::VectorXd(3) << 5, 5, 7).finished();
    const auto a = conjugate(test::observable(test::diag({0, 1, 2}), "A"), u);
    const auto b = conjugate(test::observable(test::diag({5, 5, 7}), "B"), u);
    const DensityState rho = conjugate(test::pure_state(3, 0), u);

    const auto d = standard_commuting_joint({a, b}, rho);
    REQUIRE(d.grid().axis(0).size() == 3);
    REQUIRE(d.grid().axis(1).size() == 2);  // 5 is doubly degenerate
    REQUIRE(d.weight(d.grid().flat_index({0, 0})) == Approx(1.0).margin(1e-12));
    REQUIRE(d.sum() == Approx(1.0).margin(1e-12));

    const auto expected = oracle::commuting_joint_bruteforce({diag_a, diag_b},
                                                             u.matrix(), rho.matrix());
    REQUIRE(max_weight_dev(d, expected) <= 1e-12);
}

TEST_CASE("standard joint matches the common-eigenbasis brute force on random families") {
    for (std::uint64_t seed = 100; seed < 120; ++seed) {
        Xoshiro256pp rng(seed);
        const int dim = 2 + static_cast<int>(rng.next_u64() % 5);
        const int n = 2 + static_cast<int>(rng.next_u64() % 2);
        const auto family = verify::random_commuting_family(dim, n, rng.next_u64());
        const auto rho = random_density(dim, rng.next_u64());
        const auto d = standard_commuting_joint(family.observables, rho);
        const auto expected = oracle::commuting_joint_bruteforce(
            family.diagonals, family.basis.matrix(), rho.matrix());
        REQUIRE(max_weight_dev(d, expected) <= 1e-12);
    }
}

TEST_CASE("non-commuting pairs are rejected with the offending pair reported") {
    try {
        standard_commuting_joint(
            {test::observable(test::sigma_x()), test::observable(test::sigma_z())},
            DensityState(ComplexMatrix(0.5 * ComplexMatrix::Identity(2, 2))));
        FAIL("expected NotCommuting");
    } catch (const NotCommuting& e) {
        REQUIRE(e.first_index == 0);
        REQUIRE(e.second_index == 1);
        REQUIRE(e.commutator_norm == Approx(2.0 * std::sqrt(2.0)).margin(1e-12));
    }
}

TEST_CASE("standard joint rejects mismatched dimensions") {
    REQUIRE_THROWS_AS(
        standard_commuting_joint({test::observable(test::sigma_z())},
                                 DensityState(test::diag({0.5, 0.25, 0.25}))),
        DimensionMismatch);
}

// ---------------------------------------------------------------------------
// qjd_joint

TEST_CASE("single-observable joint reduces to the born distribution") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const int dim = 2 + static_cast<int>(seed % 4);
        const auto a = random_hermitian(dim, seed);
        const auto rho = random_density(dim, seed + 500);
        const auto d = qjd_joint({a}, rho);
        const auto born = born_distribution(eigendecompose(a), rho);
        REQUIRE(max_weight_dev(d, born) <= 1e-10);
    }
}

TEST_CASE("diagonal pair on a basis state is a delta") {
    const auto d = qjd_joint(
        {test::observable(test::diag({1, 2})), test::observable(test::diag({3, 4}))},
        test::pure_state(2, 0));
    REQUIRE(d.weight(d.grid().flat_index({0, 0})) == Approx(1.0).margin(1e-14));
    REQUIRE(d.sum() == Approx(1.0).margin(1e-14));
}

TEST_CASE("commuting triples agree with the standard joint") {
    const auto u = haar_unitary(4, 23);
    const auto a = conjugate(test::observable(test::diag({0, 1, 2, 3})), u);
    const auto b = conjugate(test::observable(test::diag({5, 5, 7, 9})), u);
    const auto c = conjugate(test::observable(test::diag({-1, 2, 2, 4})), u);
    const auto rho = random_density(4, 24);
    const auto ours = qjd_joint({a, b, c}, rho);
    const auto standard = standard_commuting_joint({a, b, c}, rho);
    REQUIRE(max_weight_dev(ours, standard) <= 1e-8);
}

TEST_CASE("unitary covariance holds on generic tuples") {
    for (std::uint64_t seed = 40; seed < 50; ++seed) {
        Xoshiro256pp rng(seed);
        const int dim = 2 + static_cast<int>(rng.next_u64() % 5);
        const int n = 1 + static_cast<int>(rng.next_u64() % 3);
        const auto obs = verify::random_generic_family(dim, n, rng.next_u64());
        const auto rho = random_density(dim, rng.next_u64());
        const auto u = haar_unitary(dim, rng.next_u64());

        std::vector<HermitianObservable> rotated;
        for (const auto& a : obs) rotated.push_back(conjugate(a, u));

        const auto before = qjd_joint(obs, rho);
        const auto after = qjd_joint(rotated, conjugate(rho, u));
        REQUIRE(max_weight_dev(before, after) <= 1e-8);
        REQUIRE(total_variation(before, after) <= 1e-8);
    }
}

TEST_CASE("the order average is permutation symmetric") {
    // Documented behavior of this construction; the axes permute with the
    // arguments and the weights follow.
    const auto a = random_hermitian(3, 61, "a");
    const auto b = random_hermitian(3, 62, "b");
    const auto rho = random_density(3, 63);
    const auto ab = qjd_joint({a, b}, rho);
    const auto ba = qjd_joint({b, a}, rho);
    for (std::size_t i = 0; i < ab.grid().axis(0).size(); ++i) {
        for (std::size_t j = 0; j < ab.grid().axis(1).size(); ++j) {
            REQUIRE(ab.weight(ab.grid().flat_index({i, j})) ==
                    Approx(ba.weight(ba.grid().flat_index({j, i}))).margin(1e-12));
        }
    }
}

TEST_CASE("qjd joint is genuinely nonnegative on non-commuting tuples") {
    for (std::uint64_t seed = 200; seed < 230; ++seed) {
        Xoshiro256pp rng(seed);
        const int dim = 2 + static_cast<int>(rng.next_u64() % 5);
        const int n = 2 + static_cast<int>(rng.next_u64() % 2);
        const auto obs = verify::random_generic_family(dim, n, rng.next_u64());
        const auto rho = random_density(dim, rng.next_u64());
        const auto d = qjd_joint(obs, rho);
        REQUIRE(d.min_weight() >= 0.0);
        REQUIRE(d.sum() == Approx(1.0).margin(1e-10));
    }
}

TEST_CASE("near-commuting tuples stay transport-close to their commuting base") {
    const double epsilon = 1e-4;
    Xoshiro256pp rng(71);
    const auto base = verify::random_commuting_family(3, 2, 71);
    const auto near = verify::random_near_commuting_family(3, 2, 71, epsilon);
    const auto rho = random_density(3, 72);
    const double w = wasserstein1(qjd_joint(near, rho), qjd_joint(base.observables, rho));
    REQUIRE(w <= 50.0 * epsilon);
}

// ---------------------------------------------------------------------------
// sequential_joint

TEST_CASE("sequential single observable is the born rule") {
    const auto a = random_hermitian(4, 81);
    const auto rho = random_density(4, 82);
    const auto d = sequential_joint({a}, rho);
    const auto born = born_distribution(eigendecompose(a), rho);
    REQUIRE(max_weight_dev(d, born) <= 1e-12);
}

TEST_CASE("sigma_x then sigma_z on the up state is uniform") {
    const auto d = sequential_joint(
        {test::observable(test::sigma_x()), test::observable(test::sigma_z())},
        test::pure_state(2, 0));
    for (std::size_t flat = 0; flat < 4; ++flat) {
        REQUIRE(d.weight(flat) == Approx(0.25).margin(1e-14));
    }
}

TEST_CASE("sigma_z then sigma_x on the up state splits only the second outcome") {
    const auto d = sequential_joint(
        {test::observable(test::sigma_z()), test::observable(test::sigma_x())},
        test::pure_state(2, 0));
    // axes ascending: z in {-1, +1}, x in {-1, +1}; the state is the +1
    // eigenstate of z.
    REQUIRE(d.weight(d.grid().flat_index({1, 0})) == Approx(0.5).margin(1e-14));
    REQUIRE(d.weight(d.grid().flat_index({1, 1})) == Approx(0.5).margin(1e-14));
    REQUIRE(d.weight(d.grid().flat_index({0, 0})) == Approx(0.0).margin(1e-14));
    REQUIRE(d.weight(d.grid().flat_index({0, 1})) == Approx(0.0).margin(1e-14));
}

TEST_CASE("sequential order dependence is visible on non-commuting pairs") {
    const auto sx = test::observable(test::sigma_x());
    const auto sz = test::observable(test::sigma_z());
    const auto rho = test::pure_state(2, 0);
    const auto xz = sequential_joint({sx, sz}, rho);
    const auto zx = sequential_joint({sz, sx}, rho);
    // Same grid (both axes are {-1, 1}), different weights.
    double dev = 0.0;
    for (std::size_t flat = 0; flat < 4; ++flat) {
        dev = std::max(dev, std::abs(xz.weight(flat) - zx.weight(flat)));
    }
    REQUIRE(dev > 0.2);
}

// ---------------------------------------------------------------------------
// margenau_hill_joint

TEST_CASE("margenau-hill agrees with the standard joint on commuting pairs") {
    const auto u = haar_unitary(3, 91);
    const auto a = conjugate(test::observable(test::diag({0, 1, 2})), u);
    const auto b = conjugate(test::observable(test::diag({5, 5, 7})), u);
    const auto rho = random_density(3, 92);
    const auto mh = margenau_hill_joint({a, b}, rho);
    const auto standard = standard_commuting_joint({a, b}, rho);
    REQUIRE(mh.kind() == WeightKind::quasi);
    double dev = 0.0;
    for (std::size_t flat = 0; flat < mh.weights().size(); ++flat) {
        dev = std::max(dev, std::abs(mh.weight(flat) - standard.weight(flat)));
    }
    REQUIRE(dev <= 1e-12);
}

TEST_CASE("margenau-hill of sigma_x and sigma_z on the up state") {
    const auto d = margenau_hill_joint(
        {test::observable(test::sigma_x()), test::observable(test::sigma_z())},
        test::pure_state(2, 0));
    REQUIRE(d.weight(d.grid().flat_index({0, 1})) == Approx(0.5).margin(1e-14));
    REQUIRE(d.weight(d.grid().flat_index({1, 1})) == Approx(0.5).margin(1e-14));
    REQUIRE(d.weight(d.grid().flat_index({0, 0})) == Approx(0.0).margin(1e-14));
    REQUIRE(d.weight(d.grid().flat_index({1, 0})) == Approx(0.0).margin(1e-14));
}

TEST_CASE("margenau-hill requires exactly two observables") {
    const auto a = test::observable(test::sigma_x());
    const auto rho = test::pure_state(2, 0);
    REQUIRE_THROWS_AS(margenau_hill_joint({a}, rho), WrongArity);
    REQUIRE_THROWS_AS(margenau_hill_joint({a, a, a}, rho), WrongArity);
}

TEST_CASE("margenau-hill sums to one on random pairs") {
    for (std::uint64_t seed = 300; seed < 315; ++seed) {
        const int dim = 2 + static_cast<int>(seed % 4);
        const auto a = random_hermitian(dim, seed);
        const auto b = random_hermitian(dim, seed + 1000);
        const auto rho = random_density(dim, seed + 2000);
        const auto d = margenau_hill_joint({a, b}, rho);
        REQUIRE(d.sum() == Approx(1.0).margin(1e-10));
    }
}

// ---------------------------------------------------------------------------
// marginals of the constructions

TEST_CASE("one-axis marginal of a commuting joint is the born distribution") {
    const auto u = haar_unitary(4, 95);
    const auto a = conjugate(test::observable(test::diag({0, 1, 2, 3})), u);
    const auto b = conjugate(test::observable(test::diag({5, 5, 7, 9})), u);
    const auto rho = random_density(4, 96);
    const auto joint = standard_commuting_joint({a, b}, rho);
    const auto born = born_distribution(eigendecompose(a), rho);
    REQUIRE(max_weight_dev(marginal(joint, {0}), born) <= 1e-12);
}
