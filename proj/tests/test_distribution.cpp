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

#include "qjd/distribution.hpp"

using namespace qjd;
using Catch::Approx;

namespace {

JointDistribution delta_on(std::vector<std::vector<double>> axes, std::size_t flat) {
    OutcomeGrid grid(std::move(axes));
    std::vector<double> weights(grid.size(), 0.0);
    weights[flat] = 1.0;
    return JointDistribution(std::move(grid), std::move(weights),
                             WeightKind::probability);
}

}  // namespace

TEST_CASE("grid size is the product of axis lengths") {
    const OutcomeGrid grid({{0.0, 1.0}, {5.0, 6.0, 7.0}});
    REQUIRE(grid.num_axes() == 2);
    REQUIRE(grid.size() == 6);
}

TEST_CASE("grid enumeration is lexicographic with the first axis slowest") {
    const OutcomeGrid grid({{0.0, 1.0}, {5.0, 6.0, 7.0}});
    const std::vector<std::vector<std::size_t>> expected = {
        {0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}};
    for (std::size_t flat = 0; flat < grid.size(); ++flat) {
        REQUIRE(grid.multi_index(flat) == expected[flat]);
        REQUIRE(grid.flat_index(expected[flat]) == flat);
    }
    REQUIRE(grid.point(4) == std::vector<double>{1.0, 6.0});
}

TEST_CASE("grids require ascending axes") {
    REQUIRE_THROWS_AS(OutcomeGrid({{1.0, 1.0}}), InvalidInput);
    REQUIRE_THROWS_AS(OutcomeGrid({{2.0, 1.0}}), InvalidInput);
    REQUIRE_THROWS_AS(OutcomeGrid({}), EmptyAxisSet);
}

TEST_CASE("probability weights must sum to one") {
    OutcomeGrid grid({{0.0, 1.0}});
    REQUIRE_NOTHROW(JointDistribution(grid, {0.25, 0.75}, WeightKind::probability));
    REQUIRE_THROWS_AS(JointDistribution(grid, {0.25, 0.5}, WeightKind::probability),
                      NormalizationViolation);
}

TEST_CASE("a corrupted weight vector trips the normalization check") {
    OutcomeGrid grid({{0.0, 1.0}, {0.0, 1.0}});
    std::vector<double> weights = {0.25, 0.25, 0.25, 0.25};
    for (double& w : weights) w *= 1.1;
    REQUIRE_THROWS_AS(JointDistribution(grid, weights, WeightKind::probability),
                      NormalizationViolation);
}

TEST_CASE("roundoff negatives clamp to zero and renormalize") {
    OutcomeGrid grid({{0.0, 1.0, 2.0}});
    const double eps = 5e-11;
    const JointDistribution d(grid, {-eps, 0.6, 0.4 + eps}, WeightKind::probability);
    REQUIRE(d.min_weight() == 0.0);
    REQUIRE(d.sum() == Approx(1.0).margin(1e-15));
}

TEST_CASE("negatives below the clamp window raise with the raw weight attached") {
    OutcomeGrid grid({{0.0, 1.0}});
    try {
        JointDistribution(grid, {-1e-8, 1.0 + 1e-8}, WeightKind::probability);
        FAIL("expected NonnegativityViolation");
    } catch (const NonnegativityViolation& e) {
        REQUIRE(e.raw_weight == Approx(-1e-8));
    }
    REQUIRE_THROWS_AS(JointDistribution(grid, {-1e-3, 1.0 + 1e-3},
                                        WeightKind::probability),
                      NonnegativityViolation);
}

TEST_CASE("quasi distributions may carry negative weights") {
    OutcomeGrid grid({{0.0, 1.0}});
    const JointDistribution d(grid, {-0.25, 1.25}, WeightKind::quasi);
    REQUIRE(d.min_weight() == -0.25);
    REQUIRE_THROWS_AS(JointDistribution(grid, {-0.25, 1.0}, WeightKind::quasi),
                      NormalizationViolation);
}

TEST_CASE("marginal over every axis is the identity") {
    const auto d = delta_on({{0.0, 1.0}, {5.0, 6.0}}, 2);
    const auto m = marginal(d, {0, 1});
    REQUIRE(m.grid().approx_equal(d.grid(), 0.0));
    REQUIRE(m.weights() == d.weights());
}

TEST_CASE("marginal of the two-outcome delta pair") {
    // p(1,3) = q, p(2,4) = 1-q on axes {1,2} x {3,4}.
    const double q = 0.3;
    OutcomeGrid grid({{1.0, 2.0}, {3.0, 4.0}});
    const JointDistribution d(grid, {q, 0.0, 0.0, 1.0 - q}, WeightKind::probability);
    const auto m = marginal(d, {0});
    REQUIRE(m.grid().num_axes() == 1);
    REQUIRE(m.weight(0) == Approx(q).margin(1e-15));
    REQUIRE(m.weight(1) == Approx(1.0 - q).margin(1e-15));
}

TEST_CASE("marginal rejects bad axis sets") {
    const auto d = delta_on({{0.0, 1.0}}, 0);
    REQUIRE_THROWS_AS(marginal(d, {}), EmptyAxisSet);
    REQUIRE_THROWS_AS(marginal(d, {1}), IndexOutOfRange);
}

TEST_CASE("total variation basics") {
    const auto d0 = delta_on({{0.0, 1.0, 2.0, 3.0}}, 0);
    const auto d1 = delta_on({{0.0, 1.0, 2.0, 3.0}}, 1);
    REQUIRE(total_variation(d0, d0) == 0.0);
    REQUIRE(total_variation(d0, d1) == Approx(1.0).margin(1e-15));

    OutcomeGrid grid({{0.0, 1.0, 2.0, 3.0}});
    const JointDistribution uniform(grid, {0.25, 0.25, 0.25, 0.25},
                                    WeightKind::probability);
    REQUIRE(total_variation(uniform, d0) == Approx(0.75).margin(1e-15));
}

TEST_CASE("total variation rejects different grids") {
    const auto a = delta_on({{0.0, 1.0}}, 0);
    const auto b = delta_on({{0.0, 1.5}}, 0);
    REQUIRE_THROWS_AS(total_variation(a, b), GridMismatch);
}
