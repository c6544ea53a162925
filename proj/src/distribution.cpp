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

#include "qjd/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

namespace qjd {

namespace {

constexpr double kGridEigTol = 1e-8;

// Hard floors past which a probability construction reports failure instead
// of repairing; below these the result is a bug or a genuine counterexample.
constexpr double kHardNegativity = 1e-6;
constexpr double kHardNormalization = 1e-6;

}  // namespace

OutcomeGrid::OutcomeGrid(std::vector<std::vector<double>> axes)
    : axes_(std::move(axes)) {
    if (axes_.empty()) {
        throw EmptyAxisSet("OutcomeGrid: need at least one axis");
    }
    size_ = 1;
    for (const auto& axis : axes_) {
        if (axis.empty()) {
            throw InvalidInput("OutcomeGrid: empty axis");
        }
        for (std::size_t i = 1; i < axis.size(); ++i) {
            if (!(axis[i] > axis[i - 1])) {
                throw InvalidInput("OutcomeGrid: axis values must be strictly increasing");
            }
        }
        size_ *= axis.size();
    }
}

const std::vector<double>& OutcomeGrid::axis(std::size_t i) const {
    if (i >= axes_.size()) {
        throw IndexOutOfRange("OutcomeGrid::axis: index out of range");
    }
    return axes_[i];
}

std::size_t OutcomeGrid::flat_index(const std::vector<std::size_t>& indices) const {
    if (indices.size() != axes_.size()) {
        throw DimensionMismatch("OutcomeGrid::flat_index: wrong tuple length");
    }
    std::size_t flat = 0;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] >= axes_[i].size()) {
            throw IndexOutOfRange("OutcomeGrid::flat_index: index out of range");
        }
        flat = flat * axes_[i].size() + indices[i];
    }
    return flat;
}

std::vector<std::size_t> OutcomeGrid::multi_index(std::size_t flat) const {
    if (flat >= size_) {
        throw IndexOutOfRange("OutcomeGrid::multi_index: flat index out of range");
    }
    std::vector<std::size_t> indices(axes_.size());
    for (std::size_t i = axes_.size(); i-- > 0;) {
        indices[i] = flat % axes_[i].size();
        flat /= axes_[i].size();
    }
    return indices;
}

std::vector<double> OutcomeGrid::point(std::size_t flat) const {
    const auto indices = multi_index(flat);
    std::vector<double> coords(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        coords[i] = axes_[i][indices[i]];
    }
    return coords;
}

bool OutcomeGrid::same_shape(const OutcomeGrid& other) const {
    if (axes_.size() != other.axes_.size()) return false;
    for (std::size_t i = 0; i < axes_.size(); ++i) {
        if (axes_[i].size() != other.axes_[i].size()) return false;
    }
    return true;
}

bool OutcomeGrid::approx_equal(const OutcomeGrid& other, double tol) const {
    if (!same_shape(other)) return false;
    for (std::size_t i = 0; i < axes_.size(); ++i) {
        for (std::size_t j = 0; j < axes_[i].size(); ++j) {
            if (std::abs(axes_[i][j] - other.axes_[i][j]) > tol) return false;
        }
    }
    return true;
}

std::string to_string(WeightKind kind) {
    return kind == WeightKind::probability ? "probability" : "quasi";
}

JointDistribution::JointDistribution(OutcomeGrid grid, std::vector<double> weights,
                                     WeightKind kind, const WeightPolicy& policy)
    : grid_(std::move(grid)), weights_(std::move(weights)), kind_(kind) {
    if (weights_.size() != grid_.size()) {
        std::ostringstream os;
        os << "JointDistribution: " << weights_.size() << " weights for a grid of "
           << grid_.size() << " points";
        throw DimensionMismatch(os.str());
    }
    for (double w : weights_) {
        if (!std::isfinite(w)) {
            throw InvalidInput("JointDistribution: non-finite weight");
        }
    }

    if (kind_ == WeightKind::probability) {
        double min_w = std::numeric_limits<double>::infinity();
        for (double w : weights_) min_w = std::min(min_w, w);
        if (min_w < -policy.clamp_tol) {
            std::ostringstream os;
            os << "JointDistribution: weight " << min_w << " below -"
               << policy.clamp_tol
               << (min_w < -kHardNegativity ? " (hard floor exceeded)" : "");
            throw NonnegativityViolation(min_w, os.str());
        }
        double clamped_mass = 0.0;
        for (double& w : weights_) {
            if (w < 0.0) {
                clamped_mass += -w;
                w = 0.0;
            }
        }
        double total = 0.0;
        for (double w : weights_) total += w;
        if (clamped_mass > policy.renorm_threshold && total > 0.0) {
            for (double& w : weights_) w /= total;
            total = 0.0;
            for (double w : weights_) total += w;
        }
        if (std::abs(total - 1.0) > policy.normalization_tol) {
            std::ostringstream os;
            os << "JointDistribution: weights sum to " << total
               << ", |sum - 1| exceeds " << policy.normalization_tol
               << (std::abs(total - 1.0) > kHardNormalization
                       ? " (hard floor exceeded)"
                       : "");
            throw NormalizationViolation(total, os.str());
        }
    } else {
        double total = 0.0;
        for (double w : weights_) total += w;
        if (std::abs(total - 1.0) > policy.normalization_tol) {
            std::ostringstream os;
            os << "JointDistribution(quasi): weights sum to " << total;
            throw NormalizationViolation(total, os.str());
        }
    }
}

double JointDistribution::weight(std::size_t flat) const {
    if (flat >= weights_.size()) {
        throw IndexOutOfRange("JointDistribution::weight: index out of range");
    }
    return weights_[flat];
}

double JointDistribution::sum() const {
    double total = 0.0;
    for (double w : weights_) total += w;
    return total;
}

double JointDistribution::min_weight() const {
    double m = std::numeric_limits<double>::infinity();
    for (double w : weights_) m = std::min(m, w);
    return m;
}

JointDistribution marginal(const JointDistribution& d,
                           const std::vector<std::size_t>& axes_to_keep) {
    if (axes_to_keep.empty()) {
        throw EmptyAxisSet("marginal: axes_to_keep is empty");
    }
    const std::size_t n = d.grid().num_axes();
    std::vector<bool> keep(n, false);
    for (std::size_t axis : axes_to_keep) {
        if (axis >= n) {
            throw IndexOutOfRange("marginal: axis index out of range");
        }
        keep[axis] = true;
    }

    std::vector<std::vector<double>> kept_axes;
    std::vector<std::size_t> kept_positions;
    for (std::size_t i = 0; i < n; ++i) {
        if (keep[i]) {
            kept_axes.push_back(d.grid().axis(i));
            kept_positions.push_back(i);
        }
    }
    OutcomeGrid out_grid(std::move(kept_axes));

    std::vector<double> out_weights(out_grid.size(), 0.0);
    std::vector<std::size_t> kept_index(kept_positions.size());
    for (std::size_t flat = 0; flat < d.grid().size(); ++flat) {
        const auto full = d.grid().multi_index(flat);
        for (std::size_t k = 0; k < kept_positions.size(); ++k) {
            kept_index[k] = full[kept_positions[k]];
        }
        out_weights[out_grid.flat_index(kept_index)] += d.weight(flat);
    }
    return JointDistribution(std::move(out_grid), std::move(out_weights), d.kind());
}

double total_variation(const JointDistribution& d1, const JointDistribution& d2) {
    if (!d1.grid().approx_equal(d2.grid(), kGridEigTol)) {
        throw GridMismatch("total_variation: grids differ");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < d1.weights().size(); ++i) {
        acc += std::abs(d1.weight(i) - d2.weight(i));
    }
    return 0.5 * acc;
}

}  // namespace qjd
