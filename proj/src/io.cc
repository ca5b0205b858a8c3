// Copyright 2026 The loopmesh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "loopmesh/io.h"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "loopmesh/errors.h"
#include "loopmesh/format.h"

namespace loopmesh {

ComplexMatrix read_matrix_csv(std::istream &in) {
    std::vector<Complex> entries;
    std::size_t cols = 0;
    std::size_t rows = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.find_first_not_of(" \t") == std::string::npos || line.front() == '#') {
            continue;
        }
        std::istringstream cells(line);
        std::string cell;
        std::size_t count = 0;
        while (std::getline(cells, cell, ',')) {
            auto v = parse_complex(cell);
            if (!v) {
                throw Error(
                    ErrorKind::invalid_input, "line " + std::to_string(line_no) + ": cannot parse entry '" + cell + "'");
            }
            entries.push_back(*v);
            count++;
        }
        if (rows == 0) {
            cols = count;
        } else if (count != cols) {
            throw Error(ErrorKind::invalid_input, "line " + std::to_string(line_no) + ": ragged row");
        }
        rows++;
    }
    if (rows == 0) {
        throw Error(ErrorKind::invalid_input, "matrix file is empty");
    }
    if (rows != cols) {
        throw Error(
            ErrorKind::invalid_dimension,
            "matrix must be square, got " + std::to_string(rows) + "x" + std::to_string(cols));
    }
    return ComplexMatrix(rows, cols, std::move(entries));
}

ComplexMatrix read_matrix_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::io, "cannot open '" + path + "'");
    }
    return read_matrix_csv(in);
}

void write_gates_csv(const MeshDecomposition &mesh, std::ostream &out) {
    out << "layer,pair,theta,phi,is_padding\n";
    for (const auto &g : mesh.gates) {
        out << g.layer << ',' << g.pair << ',' << format_real(g.params.theta()) << ',' << format_real(g.params.phi())
            << ',' << (g.is_padding ? 1 : 0) << '\n';
    }
}

void write_phases_csv(const MeshDecomposition &mesh, std::ostream &out) {
    out << "mode,phase\n";
    for (std::size_t k = 0; k < mesh.output_phases.size(); k++) {
        out << k + 1 << ',' << format_complex(mesh.output_phases[k]) << '\n';
    }
}

namespace {

using nlohmann::json;

void reject_unknown(const json &object, const std::set<std::string> &allowed, const std::string &where) {
    for (const auto &[key, value] : object.items()) {
        if (!allowed.contains(key)) {
            throw Error(ErrorKind::invalid_input, "unknown key '" + key + "' in " + where);
        }
    }
}

double transmission_field(const json &t, const char *key, bool required, double fallback) {
    if (!t.contains(key)) {
        if (required) {
            throw Error(ErrorKind::invalid_input, std::string("transmissions.") + key + " is required");
        }
        return fallback;
    }
    if (!t.at(key).is_number()) {
        throw Error(ErrorKind::invalid_input, std::string("transmissions.") + key + " must be a number");
    }
    return t.at(key).get<double>();
}

std::uint64_t count_field(const json &value, const char *key) {
    if (!value.is_number_unsigned()) {
        throw Error(ErrorKind::invalid_input, std::string(key) + " must be a non-negative integer");
    }
    return value.get<std::uint64_t>();
}

}  // namespace

SweepConfig parse_sweep_config(const std::string &json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error &ex) {
        throw Error(ErrorKind::invalid_input, std::string("sweep config is not valid JSON: ") + ex.what());
    }
    if (!doc.is_object()) {
        throw Error(ErrorKind::invalid_input, "sweep config must be a JSON object");
    }
    reject_unknown(doc, {"architecture", "transmissions", "n_values", "trials", "seed", "output"}, "sweep config");

    SweepConfig config;
    try {
        if (!doc.contains("architecture")) {
            throw Error(ErrorKind::invalid_input, "architecture is required");
        }
        auto kind = parse_architecture(doc.at("architecture").get<std::string>());
        if (!kind || *kind == ArchitectureKind::spatial) {
            throw Error(ErrorKind::invalid_input, "architecture must be dual_loop or chain_loop");
        }
        config.architecture.kind = *kind;

        if (!doc.contains("transmissions") || !doc.at("transmissions").is_object()) {
            throw Error(ErrorKind::invalid_input, "transmissions object is required");
        }
        const json &t = doc.at("transmissions");
        reject_unknown(t, {"gate", "switch", "inner", "outer_base"}, "transmissions");
        const bool dual = *kind == ArchitectureKind::dual_loop;
        config.architecture.eta_gate = transmission_field(t, "gate", true, 1);
        config.architecture.eta_inner = transmission_field(t, "inner", true, 1);
        config.architecture.eta_switch = transmission_field(t, "switch", dual, 1);
        config.architecture.outer_base = transmission_field(t, "outer_base", dual, 1);

        if (!doc.contains("n_values")) {
            throw Error(ErrorKind::invalid_input, "n_values is required");
        }
        if (!doc.at("n_values").is_array()) {
            throw Error(ErrorKind::invalid_input, "n_values must be an array");
        }
        for (const auto &v : doc.at("n_values")) {
            config.n_values.push_back(count_field(v, "n_values entry"));
        }
        if (doc.contains("trials")) {
            config.trials = count_field(doc.at("trials"), "trials");
        }
        if (doc.contains("seed")) {
            config.base_seed = count_field(doc.at("seed"), "seed");
        }
        if (doc.contains("output")) {
            config.output_path = doc.at("output").get<std::string>();
        }
    } catch (const json::exception &ex) {
        throw Error(ErrorKind::invalid_input, std::string("sweep config has a field of the wrong type: ") + ex.what());
    }
    config.validate();
    return config;
}

SweepConfig load_sweep_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::io, "cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_sweep_config(buf.str());
}

}  // namespace loopmesh
