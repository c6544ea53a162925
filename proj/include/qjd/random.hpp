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

// random.hpp — seeded sampling of Hermitian matrices, density states and
// Haar unitaries. The generator is pinned to a fixed published algorithm so
// a given (dim, seed) pair reproduces the same stream everywhere:
//
//   * state initialization: SplitMix64 (Steele, Lea & Flood),
//     gamma 0x9E3779B97F4A7C15
//   * stream: xoshiro256++ (Blackman & Vigna 2019), rotations (23, 45),
//     shift 17
//   * uniforms: high 53 bits mapped to (0,1]
//   * Gaussians: polar Box-Muller; a standard complex normal z = r*e^{i*th}
//     with r = sqrt(-ln u1), th = 2*pi*u2, so E|z|^2 = 1
//
// Matrices are filled row-major, one complex draw per entry. Every sampler
// below is a pure function of its arguments.

#pragma once

#include <cstdint>

#include "qjd/matrix.hpp"

namespace qjd {

class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed);

    std::uint64_t next_u64();

    // Uniform in (0,1]; never returns 0 so logarithms are safe.
    double next_unit();

    // Standard complex Gaussian, E|z|^2 = 1.
    Complex next_complex_gaussian();

private:
    std::uint64_t state_[4];
};

// G + G' for G with i.i.d. standard complex Gaussian entries.
HermitianObservable random_hermitian(int dim, std::uint64_t seed,
                                     std::string label = "");

// G G' / tr(G G'). Retries with seed+1, seed+2, ... (at most 8 times) if the
// sample is numerically degenerate, then throws DegenerateSample.
DensityState random_density(int dim, std::uint64_t seed);

// QR of a complex Ginibre matrix with the diag(R)/|diag(R)| column phase
// correction, which makes Q Haar-distributed.
UnitaryMatrix haar_unitary(int dim, std::uint64_t seed);

}  // namespace qjd
