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

#include <gtest/gtest.h>

#include <sstream>

#include "loopmesh/errors.h"
#include "loopmesh/format.h"

using namespace loopmesh;

TEST(read_matrix_csv, parses_and_round_trips_through_decompose) {
    auto u = haar_unitary(4, RandomSource{77, 0});
    std::stringstream text;
    text << "# a Haar sample\n";
    for (std::size_t r = 0; r < 4; r++) {
        for (std::size_t c = 0; c < 4; c++) {
            text << (c ? "," : "") << format_complex(u(r, c));
        }
        text << "\r\n";
    }
    auto parsed = read_matrix_csv(text);
    ASSERT_EQ(parsed, u);
    ASSERT_LT(frobenius_distance(reconstruct(decompose_reck(parsed)), u), 1e-10);
}

TEST(read_matrix_csv, errors) {
    std::istringstream ragged("1,0\n0\n");
    ASSERT_THROW(read_matrix_csv(ragged), Error);
    std::istringstream rect("1,0,0\n0,1,0\n");
    ASSERT_THROW(read_matrix_csv(rect), Error);
    std::istringstream junk("1,zz\n0,1\n");
    ASSERT_THROW(read_matrix_csv(junk), Error);
    std::istringstream empty("");
    ASSERT_THROW(read_matrix_csv(empty), Error);
    try {
        read_matrix_file("/definitely/not/here.csv");
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::io);
    }
}

TEST(mesh_csv, gate_and_phase_tables) {
    auto mesh = decompose_reck(ComplexMatrix{{0, Complex(0, 1)}, {Complex(0, 1), 0}});
    std::ostringstream gates;
    write_gates_csv(mesh, gates);
    ASSERT_EQ(gates.str(), "layer,pair,theta,phi,is_padding\n1,1,0,0,0\n");
    std::ostringstream phases;
    write_phases_csv(mesh, phases);
    ASSERT_EQ(phases.str(), "mode,phase\n1,1+0j\n2,1+0j\n");
}

TEST(sweep_config, parses_full_document) {
    auto c = parse_sweep_config(R"({
        "architecture": "dual_loop",
        "transmissions": {"gate": 0.6, "switch": 0.75, "inner": 0.9, "outer_base": 0.8},
        "n_values": [4, 6],
        "trials": 12,
        "seed": 99,
        "output": "out.csv"
    })");
    ASSERT_EQ(c.architecture.kind, ArchitectureKind::dual_loop);
    ASSERT_EQ(c.architecture.eta_gate, 0.6);
    ASSERT_EQ(c.architecture.eta_switch, 0.75);
    ASSERT_EQ(c.architecture.eta_inner, 0.9);
    ASSERT_EQ(c.architecture.outer_base, 0.8);
    ASSERT_EQ(c.n_values, (std::vector<std::size_t>{4, 6}));
    ASSERT_EQ(c.trials, 12u);
    ASSERT_EQ(c.base_seed, 99u);
    ASSERT_EQ(c.output_path, "out.csv");
}

TEST(sweep_config, chain_loop_defaults) {
    auto c = parse_sweep_config(R"({"architecture": "chain_loop", "transmissions": {"gate": 0.7, "inner": 0.8}, "n_values": [4]})");
    ASSERT_EQ(c.trials, 50u);
    ASSERT_EQ(c.base_seed, 0u);
    ASSERT_TRUE(c.output_path.empty());
}

TEST(sweep_config, rejects_bad_documents) {
    const char *bad[] = {
        R"({"architecture": "chain_loop", "transmissions": {"gate": 0.7, "inner": 0.8}, "n_values": [4], "colour": 1})",
        R"({"architecture": "chain_loop", "transmissions": {"gate": 0.7, "inner": 0.8, "outr": 1}, "n_values": [4]})",
        R"({"architecture": "dual_loop", "transmissions": {"gate": 0.7, "inner": 0.8}, "n_values": [4]})",
        R"({"architecture": "spatial", "transmissions": {"gate": 0.7, "inner": 0.8}, "n_values": [4]})",
        R"({"architecture": "chain_loop", "transmissions": {"gate": 1.7, "inner": 0.8}, "n_values": [4]})",
        R"({"architecture": "chain_loop", "transmissions": {"gate": 0.7, "inner": 0.8}, "n_values": [1]})",
        R"({"architecture": "chain_loop", "transmissions": {"gate": 0.7, "inner": 0.8}, "n_values": [4], "trials": -3})",
        R"({"architecture": "chain_loop", "transmissions": {"gate": "x", "inner": 0.8}, "n_values": [4]})",
        R"({"architecture": "chain_loop", "transmissions": {"gate": 0.7, "inner": 0.8}})",
        R"([1, 2])",
        R"({"architecture": )",
    };
    for (const char *doc : bad) {
        ASSERT_THROW(parse_sweep_config(doc), Error) << doc;
    }
}
