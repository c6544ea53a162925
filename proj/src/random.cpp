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

#include "qjd/random.hpp"

#include <Eigen/QR>

#include <cmath>
#include <numbers>
#include <sstream>

namespace qjd {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

void require_positive_dim(int dim, const char* context) {
    if (dim < 1) {
        std::ostringstream os;
        os << context << ": dim must be >= 1, got " << dim;
        throw InvalidInput(os.str());
    }
}

ComplexMatrix ginibre(int dim, Xoshiro256pp& rng) {
    ComplexMatrix g(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            g(i, j) = rng.next_complex_gaussian();
        }
    }
    return g;
}

}  // namespace

Xoshiro256pp::Xoshiro256pp(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& s : state_) {
        s = splitmix64(x);
    }
}

std::uint64_t Xoshiro256pp::next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double Xoshiro256pp::next_unit() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

Complex Xoshiro256pp::next_complex_gaussian() {
    const double u1 = next_unit();
    const double u2 = next_unit();
    const double r = std::sqrt(-std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(theta), r * std::sin(theta)};
}

HermitianObservable random_hermitian(int dim, std::uint64_t seed,
                                     std::string label) {
    require_positive_dim(dim, "random_hermitian");
    Xoshiro256pp rng(seed);
    const ComplexMatrix g = ginibre(dim, rng);
    ComplexMatrix h = g + ComplexMatrix(g.adjoint());
    // Pin the diagonal to exactly real; g_ii + conj(g_ii) has imag 0 up to
    // representation, this removes the -0.0 asymmetry.
    for (int i = 0; i < dim; ++i) {
        h(i, i) = Complex(h(i, i).real(), 0.0);
    }
    return HermitianObservable(std::move(h), std::move(label));
}

DensityState random_density(int dim, std::uint64_t seed) {
    require_positive_dim(dim, "random_density");
    for (std::uint64_t attempt = 0; attempt <= 8; ++attempt) {
        Xoshiro256pp rng(seed + attempt);
        const ComplexMatrix g = ginibre(dim, rng);
        ComplexMatrix gram = g * g.adjoint();
        const double tr = gram.trace().real();
        if (tr < 1e-14) {
            continue;
        }
        gram /= tr;
        gram = 0.5 * (gram + ComplexMatrix(gram.adjoint()));
        return DensityState(std::move(gram));
    }
    std::ostringstream os;
    os << "random_density: degenerate Gram trace for dim " << dim << ", seed "
       << seed << " after 8 retries";
    throw DegenerateSample(os.str());
}

UnitaryMatrix haar_unitary(int dim, std::uint64_t seed) {
    require_positive_dim(dim, "haar_unitary");
    Xoshiro256pp rng(seed);
    const ComplexMatrix g = ginibre(dim, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < dim; ++j) {
        const Complex rjj = r(j, j);
        const double mag = std::abs(rjj);
        const Complex phase = mag > 0.0 ? rjj / mag : Complex(1.0, 0.0);
        q.col(j) *= phase;
    }
    return UnitaryMatrix(std::move(q));
}

}  // namespace qjd
