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

#include "qjd/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <utility>

namespace qjd {

namespace {

// Mass below this is exhausted roundoff, not demand worth routing.
constexpr double kMassEps = 1e-13;

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Support {
    std::vector<std::vector<double>> points;
    std::vector<double> mass;
};

Support support_of(const JointDistribution& d) {
    Support s;
    for (std::size_t flat = 0; flat < d.weights().size(); ++flat) {
        if (d.weight(flat) > 0.0) {
            s.points.push_back(d.grid().point(flat));
            s.mass.push_back(d.weight(flat));
        }
    }
    return s;
}

}  // namespace

double l1_distance(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("l1_distance: coordinate tuples differ in length");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::abs(a[i] - b[i]);
    }
    return acc;
}

TransportPlan solve_transport(const std::vector<std::vector<double>>& points_a,
                              const std::vector<double>& mass_a,
                              const std::vector<std::vector<double>>& points_b,
                              const std::vector<double>& mass_b) {
    const std::size_t n = points_a.size();
    const std::size_t m = points_b.size();
    if (n == 0 || m == 0 || n != mass_a.size() || m != mass_b.size()) {
        throw InvalidInput("solve_transport: empty or inconsistent supports");
    }

    double total_a = 0.0, total_b = 0.0;
    for (double w : mass_a) {
        if (!(w > 0.0)) throw InvalidInput("solve_transport: masses must be positive");
        total_a += w;
    }
    for (double w : mass_b) {
        if (!(w > 0.0)) throw InvalidInput("solve_transport: masses must be positive");
        total_b += w;
    }

    // Balance exactly; inputs are probability vectors up to 1e-10 roundoff.
    std::vector<double> supply(mass_a), demand(mass_b);
    for (double& w : supply) w /= total_a;
    for (double& w : demand) w /= total_b;

    std::vector<double> cost(n * m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            cost[i * m + j] = l1_distance(points_a[i], points_b[j]);
        }
    }

    // Successive shortest paths. Nodes: 0..n-1 sources, n..n+m-1 sinks.
    const std::size_t nodes = n + m;
    std::vector<double> flow(n * m, 0.0);
    std::vector<double> potential(nodes, 0.0);
    std::vector<double> dist(nodes);
    std::vector<std::int64_t> parent(nodes);  // preceding node on the path
    std::vector<char> done(nodes);

    double remaining = 1.0;
    const std::size_t max_rounds = 64 * nodes + 1024;
    std::size_t rounds = 0;

    while (remaining > kMassEps) {
        if (++rounds > max_rounds) {
            throw InternalError("solve_transport: augmentation limit exceeded");
        }

        // Multi-source Dijkstra over reduced costs from all unsaturated sources.
        std::fill(dist.begin(), dist.end(), kInf);
        std::fill(parent.begin(), parent.end(), -1);
        std::fill(done.begin(), done.end(), 0);
        using Item = std::pair<double, std::size_t>;
        std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
        for (std::size_t i = 0; i < n; ++i) {
            if (supply[i] > kMassEps) {
                dist[i] = 0.0;
                queue.emplace(0.0, i);
            }
        }
        while (!queue.empty()) {
            const auto [du, u] = queue.top();
            queue.pop();
            if (done[u]) continue;
            done[u] = 1;
            if (u < n) {
                for (std::size_t j = 0; j < m; ++j) {
                    const std::size_t v = n + j;
                    if (done[v]) continue;
                    const double rc = std::max(
                        0.0, cost[u * m + j] + potential[u] - potential[v]);
                    if (du + rc < dist[v]) {
                        dist[v] = du + rc;
                        parent[v] = static_cast<std::int64_t>(u);
                        queue.emplace(dist[v], v);
                    }
                }
            } else {
                const std::size_t j = u - n;
                for (std::size_t i = 0; i < n; ++i) {
                    if (done[i] || flow[i * m + j] <= 0.0) continue;
                    const double rc = std::max(
                        0.0, -cost[i * m + j] + potential[u] - potential[i]);
                    if (du + rc < dist[i]) {
                        dist[i] = du + rc;
                        parent[i] = static_cast<std::int64_t>(u);
                        queue.emplace(dist[i], i);
                    }
                }
            }
        }

        // Nearest sink that still needs mass.
        std::size_t target = nodes;
        for (std::size_t j = 0; j < m; ++j) {
            if (demand[j] > kMassEps && dist[n + j] < kInf &&
                (target == nodes || dist[n + j] < dist[target])) {
                target = n + j;
            }
        }
        if (target == nodes) {
            throw InternalError("solve_transport: no augmenting path found");
        }

        // Bottleneck along the path back to its source.
        double bottleneck = demand[target - n];
        std::size_t v = target;
        while (parent[v] >= 0) {
            const std::size_t u = static_cast<std::size_t>(parent[v]);
            if (u < n) {  // forward arc u -> v
                if (parent[u] < 0) bottleneck = std::min(bottleneck, supply[u]);
            } else {  // backward arc: mass currently flowing v -> u
                bottleneck = std::min(bottleneck, flow[v * m + (u - n)]);
            }
            v = u;
        }
        const std::size_t origin = v;
        bottleneck = std::min(bottleneck, supply[origin]);

        v = target;
        while (parent[v] >= 0) {
            const std::size_t u = static_cast<std::size_t>(parent[v]);
            if (u < n) {
                flow[u * m + (v - n)] += bottleneck;
            } else {
                flow[v * m + (u - n)] -= bottleneck;
            }
            v = u;
        }
        supply[origin] -= bottleneck;
        demand[target - n] -= bottleneck;
        remaining -= bottleneck;

        const double reach = dist[target];
        for (std::size_t k = 0; k < nodes; ++k) {
            potential[k] += dist[k] < kInf ? dist[k] : reach;
        }
    }

    TransportPlan plan;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const double f = flow[i * m + j];
            if (f > 0.0) {
                plan.moves.push_back({i, j, f});
                plan.cost += f * cost[i * m + j];
            }
        }
    }
    return plan;
}

double wasserstein1(const JointDistribution& d1, const JointDistribution& d2) {
    if (d1.kind() != WeightKind::probability || d2.kind() != WeightKind::probability) {
        throw UnsupportedKind("wasserstein1: defined for probability distributions only");
    }
    if (d1.grid().num_axes() != d2.grid().num_axes()) {
        throw GridMismatch("wasserstein1: grids have different axis counts");
    }
    const Support a = support_of(d1);
    const Support b = support_of(d2);
    if (a.points.size() + b.points.size() > kMaxTransportSupport) {
        std::ostringstream os;
        os << "wasserstein1: combined support " << a.points.size() + b.points.size()
           << " exceeds " << kMaxTransportSupport;
        throw TooLarge(os.str());
    }
    return solve_transport(a.points, a.mass, b.points, b.mass).cost;
}

}  // namespace qjd
