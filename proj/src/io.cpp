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

#include "qjd/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace qjd::io {

namespace {

std::string fmt12(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", v);
    return buffer;
}

json real_rows(const ComplexMatrix& m, bool imag) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(imag ? m(i, j).imag() : m(i, j).real());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
    json doc;
    doc["dim"] = m.rows();
    doc["re"] = real_rows(m, false);
    doc["im"] = real_rows(m, true);
    return doc;
}

ComplexMatrix matrix_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("re")) {
        throw InvalidInput("matrix JSON: need at least {\"dim\", \"re\"}");
    }
    const auto dim = doc.at("dim").get<Eigen::Index>();
    if (dim < 1) {
        throw InvalidInput("matrix JSON: dim must be >= 1");
    }
    const json& re = doc.at("re");
    const bool has_im = doc.contains("im");
    const json im = has_im ? doc.at("im") : json::array();
    if (!re.is_array() || static_cast<Eigen::Index>(re.size()) != dim ||
        (has_im && static_cast<Eigen::Index>(im.size()) != dim)) {
        throw InvalidInput("matrix JSON: row count does not match dim");
    }
    ComplexMatrix m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const json& re_row = re.at(i);
        if (!re_row.is_array() || static_cast<Eigen::Index>(re_row.size()) != dim) {
            throw InvalidInput("matrix JSON: column count does not match dim");
        }
        for (Eigen::Index j = 0; j < dim; ++j) {
            double x = re_row.at(j).get<double>();
            double y = 0.0;
            if (has_im) {
                const json& im_row = im.at(i);
                if (!im_row.is_array() || static_cast<Eigen::Index>(im_row.size()) != dim) {
                    throw InvalidInput("matrix JSON: column count does not match dim");
                }
                y = im_row.at(j).get<double>();
            }
            m(i, j) = Complex(x, y);
        }
    }
    if (!all_entries_finite(m)) {
        throw InvalidInput("matrix JSON: non-finite entries");
    }
    return m;
}

json spectral_to_json(const SpectralMeasure& sm) {
    json doc;
    doc["eigenvalues"] = sm.eigenvalues();
    json projectors = json::array();
    for (std::size_t j = 0; j < sm.size(); ++j) {
        projectors.push_back(matrix_to_json(sm.projector_for(j)));
    }
    doc["projectors"] = std::move(projectors);
    return doc;
}

json distribution_to_json(const JointDistribution& d) {
    json doc;
    doc["axes"] = d.grid().axes();
    doc["weights"] = d.weights();
    doc["kind"] = to_string(d.kind());
    return doc;
}

json report_to_json(const verify::VerificationReport& report) {
    json doc;
    doc["suite"] = report.suite;
    doc["tolerance"] = report.tolerance;
    json config = json::object();
    for (const auto& [key, value] : report.config_echo) {
        config[key] = value;
    }
    doc["config"] = std::move(config);
    if (!report.note.empty()) {
        doc["note"] = report.note;
    }
    json trials = json::array();
    for (const auto& trial : report.trials) {
        json row;
        row["dim"] = trial.spec.dim;
        row["n_obs"] = trial.spec.n_obs;
        row["seed"] = trial.spec.seed;
        row["family"] = verify::to_string(trial.spec.family);
        if (trial.spec.family == verify::Family::near_commuting) {
            row["epsilon"] = trial.spec.epsilon;
        }
        if (report.suite == "continuity_sweep") {
            row["t"] = trial.t;
        }
        row["value"] = trial.value;
        row["error"] = trial.error;
        row["pass"] = trial.pass;
        row["valid"] = trial.valid;
        if (trial.status != "ok") {
            row["status"] = trial.status;
        }
        trials.push_back(std::move(row));
    }
    doc["trials"] = std::move(trials);
    doc["valid_trials"] = report.valid_trials;
    doc["invalid_trials"] = report.invalid_trials;
    doc["max_error"] = report.max_error;
    doc["all_pass"] = report.all_pass;
    doc["wall_time_ms"] = report.wall_time_ms;
    return doc;
}

std::string spectral_to_table(const SpectralMeasure& sm) {
    std::ostringstream os;
    os << "index  eigenvalue        rank\n";
    for (std::size_t j = 0; j < sm.size(); ++j) {
        char line[96];
        std::snprintf(line, sizeof(line), "%-6zu %-17s %d\n", j,
                      fmt12(sm.eigenvalue(j)).c_str(), sm.rank(j));
        os << line;
    }
    return os.str();
}

std::string distribution_to_table(const JointDistribution& d) {
    std::ostringstream os;
    os << "kind: " << to_string(d.kind()) << "\n";
    os << "outcome";
    for (std::size_t i = 0; i < d.grid().num_axes(); ++i) {
        os << "  lambda_" << i;
    }
    os << "  weight\n";
    for (std::size_t flat = 0; flat < d.grid().size(); ++flat) {
        const auto coords = d.grid().point(flat);
        char cell[64];
        std::snprintf(cell, sizeof(cell), "%-8zu", flat);
        os << cell;
        for (double c : coords) {
            std::snprintf(cell, sizeof(cell), " %-14s", fmt12(c).c_str());
            os << cell;
        }
        std::snprintf(cell, sizeof(cell), " %s\n", fmt12(d.weight(flat)).c_str());
        os << cell;
    }
    return os.str();
}

std::string report_to_table(const verify::VerificationReport& report) {
    std::ostringstream os;
    os << "suite: " << report.suite << "   tolerance: " << fmt12(report.tolerance)
       << "\n";
    for (const auto& [key, value] : report.config_echo) {
        os << "  " << key << " = " << value << "\n";
    }
    if (!report.note.empty()) {
        os << "  " << report.note << "\n";
    }
    os << "trial  dim  n  family          value            error            result\n";
    for (std::size_t i = 0; i < report.trials.size(); ++i) {
        const auto& trial = report.trials[i];
        char line[160];
        std::snprintf(line, sizeof(line), "%-6zu %-4d %-2d %-15s %-16s %-16s %s\n", i,
                      trial.spec.dim, trial.spec.n_obs,
                      verify::to_string(trial.spec.family).c_str(),
                      fmt12(trial.value).c_str(), fmt12(trial.error).c_str(),
                      !trial.valid ? "invalid" : (trial.pass ? "pass" : "FAIL"));
        os << line;
    }
    os << "valid: " << report.valid_trials << "  invalid: " << report.invalid_trials
       << "  max_error: " << fmt12(report.max_error) << "  all_pass: "
       << (report.all_pass ? "yes" : "no") << "  wall_time_ms: "
       << fmt12(report.wall_time_ms) << "\n";
    return os.str();
}

std::string sweep_to_csv(const verify::VerificationReport& report) {
    std::ostringstream os;
    os << "t,w1_distance\n";
    for (const auto& trial : report.trials) {
        char line[80];
        std::snprintf(line, sizeof(line), "%.17g,%.17g\n", trial.t, trial.value);
        os << line;
    }
    return os.str();
}

json strip_wall_time(json doc) {
    if (doc.is_object()) {
        doc.erase("wall_time_ms");
        for (auto& [key, value] : doc.items()) {
            value = strip_wall_time(value);
        }
    } else if (doc.is_array()) {
        for (auto& item : doc) {
            item = strip_wall_time(item);
        }
    }
    return doc;
}

ComplexMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open file: " + path);
    }
    json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw InvalidInput("cannot parse JSON in " + path + ": " + e.what());
    }
    try {
        return matrix_from_json(doc);
    } catch (const InvalidInput& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

void save_text(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) {
        throw InvalidInput("cannot open file for writing: " + path);
    }
    out << content;
    if (!out) {
        throw InvalidInput("write failed: " + path);
    }
}

}  // namespace qjd::io
