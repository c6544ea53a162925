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

// distribution.hpp — outcome grids over products of spectra and weight
// vectors on them. Grid points are enumerated lexicographically in the index
// tuple (first axis slowest), and that enumeration is the canonical order for
// weights everywhere, including serialization.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qjd/errors.hpp"

namespace qjd {

class OutcomeGrid {
public:
    // One ascending eigenvalue list per observable.
    explicit OutcomeGrid(std::vector<std::vector<double>> axes);

    std::size_t num_axes() const { return axes_.size(); }
    const std::vector<double>& axis(std::size_t i) const;
    const std::vector<std::vector<double>>& axes() const { return axes_; }

    // Product of the axis lengths.
    std::size_t size() const { return size_; }

    std::size_t flat_index(const std::vector<std::size_t>& indices) const;
    std::vector<std::size_t> multi_index(std::size_t flat) const;

    // Eigenvalue coordinates of a grid point.
    std::vector<double> point(std::size_t flat) const;

    bool same_shape(const OutcomeGrid& other) const;
    // Same shape and eigenvalues equal within tol per entry.
    bool approx_equal(const OutcomeGrid& other, double tol) const;

private:
    std::vector<std::vector<double>> axes_;
    std::size_t size_;
};

enum class WeightKind { probability, quasi };

std::string to_string(WeightKind kind);

// Knobs separating roundoff from genuine failure when a probability weight
// vector is finalized. Weights in [-clamp_tol, 0) are treated as roundoff and
// clamped to zero (renormalizing when the clamped mass exceeds
// renorm_threshold); anything more negative raises NonnegativityViolation
// with the raw weight attached.
struct WeightPolicy {
    double clamp_tol = 1e-10;
    double renorm_threshold = 1e-12;
    double normalization_tol = 1e-10;
};

class JointDistribution {
public:
    // Validates and, for kind == probability, applies the policy above.
    JointDistribution(OutcomeGrid grid, std::vector<double> weights,
                      WeightKind kind, const WeightPolicy& policy = {});

    const OutcomeGrid& grid() const { return grid_; }
    const std::vector<double>& weights() const { return weights_; }
    WeightKind kind() const { return kind_; }

    double weight(std::size_t flat) const;
    double sum() const;
    double min_weight() const;

private:
    OutcomeGrid grid_;
    std::vector<double> weights_;
    WeightKind kind_;
};

// Sums weights over the dropped axes; axes_to_keep is an index set (order
// does not matter, output axes keep their original relative order).
JointDistribution marginal(const JointDistribution& d,
                           const std::vector<std::size_t>& axes_to_keep);

// (1/2) sum |w1 - w2| on a shared grid (eigenvalues equal within 1e-8).
double total_variation(const JointDistribution& d1, const JointDistribution& d2);

}  // namespace qjd
