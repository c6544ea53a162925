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

// transport.hpp — exact discrete optimal transport between small
// distributions. Ground metric: L1 distance between outcome tuples in
// eigenvalue coordinates. Solved as a min-cost flow on the complete
// bipartite support graph with successive shortest paths (Dijkstra over
// reduced costs with node potentials), which is exact for these sizes.

#pragma once

#include <cstddef>
#include <vector>

#include "qjd/distribution.hpp"

namespace qjd {

inline constexpr std::size_t kMaxTransportSupport = 4096;  // combined cap

struct TransportMove {
    std::size_t from;  // index into the first support
    std::size_t to;    // index into the second support
    double mass;
};

struct TransportPlan {
    double cost = 0.0;
    std::vector<TransportMove> moves;
};

double l1_distance(const std::vector<double>& a, const std::vector<double>& b);

// Exact optimal transport between two balanced discrete measures given as
// support points (equal-length coordinate tuples) and positive masses.
// Masses are normalized to total one before solving.
TransportPlan solve_transport(const std::vector<std::vector<double>>& points_a,
                              const std::vector<double>& mass_a,
                              const std::vector<std::vector<double>>& points_b,
                              const std::vector<double>& mass_b);

// Wasserstein-1 between two probability distributions whose grids share the
// axis count but may otherwise differ (perturbed spectra move and cross, so
// transport distance is the only well-defined comparison). Throws
// UnsupportedKind on quasi inputs and TooLarge past the combined support cap.
double wasserstein1(const JointDistribution& d1, const JointDistribution& d2);

}  // namespace qjd
