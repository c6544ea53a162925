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

// io.hpp — JSON, table and CSV renderings of the library types. The matrix
// file format is {"dim": d, "re": [[...]], "im": [[...]]} (row-major, "im"
// optional, zero when absent); numbers round-trip losslessly. JSON key order
// is fixed so identical inputs give byte-identical documents.

#pragma once

#include <json.hpp>

#include <string>

#include "qjd/distribution.hpp"
#include "qjd/matrix.hpp"
#include "qjd/spectral.hpp"
#include "qjd/verify.hpp"

namespace qjd::io {

using json = nlohmann::ordered_json;

json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& doc);

json spectral_to_json(const SpectralMeasure& sm);
json distribution_to_json(const JointDistribution& d);
json report_to_json(const verify::VerificationReport& report);

// Fixed-width human tables; numbers print with 12 significant digits.
std::string spectral_to_table(const SpectralMeasure& sm);
std::string distribution_to_table(const JointDistribution& d);
std::string report_to_table(const verify::VerificationReport& report);

// "t,w1_distance" rows for sweep reports.
std::string sweep_to_csv(const verify::VerificationReport& report);

// Drops every "wall_time_ms" field (recursively); lets callers compare
// machine reports from different runs byte for byte.
json strip_wall_time(json doc);

// File helpers; errors carry the path.
ComplexMatrix load_matrix(const std::string& path);
void save_text(const std::string& path, const std::string& content);

}  // namespace qjd::io
