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

#pragma once

#include <stdexcept>
#include <string>

namespace qjd {

// Base class for every error raised by this library. Three broad kinds:
// invalid input (bad matrices, mismatched shapes, bad indices), property
// failure (a distribution violated an axiom it must satisfy), and internal
// failure (a backend did not converge). The CLI maps these onto exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

class PropertyViolation : public Error {
public:
    using Error::Error;
};

class InternalError : public Error {
public:
    using Error::Error;
};

// ------------------------------ invalid input -------------------------------

class DimensionMismatch : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class NotHermitian : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class NotDensityState : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class NotUnitary : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class NotCommuting : public InvalidInput {
public:
    NotCommuting(std::size_t first, std::size_t second, double norm,
                 const std::string& what)
        : InvalidInput(what), first_index(first), second_index(second),
          commutator_norm(norm) {}

    std::size_t first_index;
    std::size_t second_index;
    double commutator_norm;
};

class IndexOutOfRange : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class DegenerateSample : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class WrongArity : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class EmptyAxisSet : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class GridMismatch : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class UnsupportedKind : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class TooLarge : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

// ----------------------------- property failure ------------------------------

// Raised when a weight sits below the clamp window; carries the raw value so
// reports never hide the magnitude of the failure.
class NonnegativityViolation : public PropertyViolation {
public:
    NonnegativityViolation(double raw, const std::string& what)
        : PropertyViolation(what), raw_weight(raw) {}

    double raw_weight;
};

class NormalizationViolation : public PropertyViolation {
public:
    NormalizationViolation(double sum, const std::string& what)
        : PropertyViolation(what), weight_sum(sum) {}

    double weight_sum;
};

// ----------------------------- internal failure ------------------------------

class DecompositionFailure : public InternalError {
public:
    using InternalError::InternalError;
};

}  // namespace qjd
