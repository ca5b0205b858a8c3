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

#include "loopmesh/heuristics.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "loopmesh/errors.h"
#include "test_util.h"

using namespace loopmesh;
using loopmesh::testing::test_rng;
using loopmesh::testing::uniform;

TEST(eta_spatial, examples) {
    ASSERT_EQ(eta_spatial(1.0, 10), 1.0);
    ASSERT_EQ(eta_spatial(0.987, 1), 0.987);
    ASSERT_NEAR(eta_spatial(0.987, 50), 0.5198, 5e-4);
    ASSERT_THROW(eta_spatial(0.9, 0), Error);
    ASSERT_THROW(eta_spatial(1.2, 3), Error);
}

TEST(eta_dual_loop, examples) {
    for (std::size_t n : {2, 5, 40}) {
        ASSERT_EQ(eta_dual_loop(1, 1, 1, 1, n), 1.0);
    }
    ASSERT_NEAR(eta_dual_loop(0.6, 0.75, 0.9, 0.123, 2), 0.36 * 0.5625 * 0.9, 1e-15);
    // (0.36 * 0.5625 * 0.9 * 0.8^4)^3 / 0.8^4
    const double per_layer = 0.36 * 0.5625 * 0.9 * 0.4096;
    ASSERT_NEAR(per_layer * per_layer * per_layer / 0.4096, 1.0156e-3, 1e-6);
    ASSERT_NEAR(eta_dual_loop(0.6, 0.75, 0.9, 0.8, 4), 1.0156e-3, 1e-6);
    ASSERT_THROW(eta_dual_loop(0.6, 0.75, 0.9, 0.8, 1), Error);
}

TEST(eta_chain_loop, examples) {
    ASSERT_EQ(eta_chain_loop(1, 1, 17), 1.0);
    ASSERT_NEAR(eta_chain_loop(0.7, 0.8, 2), 0.392, 1e-15);
    ASSERT_NEAR(eta_chain_loop(0.9998, 0.9906, 50), 0.617, 2e-3);
    ASSERT_THROW(eta_chain_loop(0.7, 0.8, 1), Error);
    ASSERT_THROW(eta_chain_loop(0.7, 0.0, 3), Error);
}

TEST(per_layer_ratio, examples_and_identity) {
    ASSERT_EQ(per_layer_ratio(1, 1, 9), 1.0);
    ASSERT_NEAR(per_layer_ratio(0.75, 0.8, 4), 0.2304, 1e-15);
    auto rng = test_rng(6);
    for (int k = 0; k < 100; k++) {
        double g = uniform(rng, 0.5, 1), s = uniform(rng, 0.5, 1), i = uniform(rng, 0.5, 1), b = uniform(rng, 0.9, 1);
        std::size_t n = 2 + k % 20;
        double eta_o = std::pow(b, static_cast<double>(n));
        double rhs = eta_chain_loop(g, i, n) * std::pow(per_layer_ratio(s, b, n), static_cast<double>(n - 1)) / eta_o;
        double lhs = eta_dual_loop(g, s, i, b, n);
        ASSERT_NEAR(lhs, rhs, 1e-12 * std::max(1.0, std::abs(lhs)));
    }
}

TEST(heuristics, monotone_in_transmissions_and_modes) {
    auto rng = test_rng(7);
    for (int k = 0; k < 200; k++) {
        double g = uniform(rng, 0.5, 0.99), s = uniform(rng, 0.5, 0.99), i = uniform(rng, 0.5, 0.99),
               b = uniform(rng, 0.9, 0.999);
        std::size_t n = 2 + k % 15;
        const double up = 1.001;
        ASSERT_LT(eta_spatial(g, n), eta_spatial(g * up, n));
        ASSERT_LT(eta_chain_loop(g, i, n), eta_chain_loop(g * up, i, n));
        ASSERT_LT(eta_chain_loop(g, i, n), eta_chain_loop(g, i * up, n));
        const double dl = eta_dual_loop(g, s, i, b, n);
        ASSERT_LT(dl, eta_dual_loop(g * up, s, i, b, n));
        ASSERT_LT(dl, eta_dual_loop(g, s * up, i, b, n));
        ASSERT_LT(dl, eta_dual_loop(g, s, i * up, b, n));
        if (n > 2) {
            ASSERT_LT(dl, eta_dual_loop(g, s, i, b * up, n));
        }
        ASSERT_LE(eta_spatial(g, n + 1), eta_spatial(g, n));
        ASSERT_LE(eta_chain_loop(g, i, n + 1), eta_chain_loop(g, i, n));
        ASSERT_LE(eta_dual_loop(g, s, i, b, n + 1), dl);
    }
}

TEST(chain_competitive_threshold, examples) {
    ASSERT_EQ(chain_competitive_threshold(1, 1, 1, 1), 1.0);
    ASSERT_NEAR(chain_competitive_threshold(0.93, 1, 0.8, 0.8), 0.93, 1e-15);
    ASSERT_NEAR(chain_competitive_threshold(0.9604, 0.9146, 0.9951, 0.9188), 0.9141, 5e-4);
    ASSERT_THROW(chain_competitive_threshold(0.9, 0.9, 0.9, 0), Error);
}

TEST(transmission_from_loss, examples) {
    ASSERT_EQ(transmission_from_loss(12.5, 0), 1.0);
    ASSERT_NEAR(transmission_from_loss(2.7, 0.13627), 0.9188, 5e-4);
    ASSERT_NEAR(transmission_from_loss(240, 235e-6), 0.987, 5e-4);
    ASSERT_NEAR(transmission_from_loss(10, 1), 0.1, 1e-15);
    ASSERT_THROW(transmission_from_loss(-1, 1), Error);
    ASSERT_THROW(transmission_from_loss(1, -1), Error);
    PhysicalParams p{2.7, loop_length(1e-9, 2.2), 1e-9, 2.2};
    ASSERT_NEAR(p.transmission(), 0.9188, 5e-4);
}

TEST(loop_length, examples) {
    ASSERT_EQ(loop_length(0, 3.5), 0.0);
    ASSERT_NEAR(loop_length(1e-9, 2.2), 0.13627, 1e-5);
    ASSERT_NEAR(loop_length(1e-8, 1.4), 2.1414, 1e-4);
    ASSERT_THROW(loop_length(1e-9, 0.5), Error);
}

TEST(catalog, stored_values) {
    ASSERT_EQ(catalog().size(), 6u);
    ASSERT_EQ(catalog_entry("CL_INT_CURRENT").eta_gate, 0.7943);
    ASSERT_EQ(catalog_entry("DL_FS").eta_switch, 0.9146);
    ASSERT_EQ(catalog_entry("CL_INT_FUTURE").eta_inner, 0.9906);
    ASSERT_EQ(catalog_entry("CL_INT_FUTURE").eta_gate, 0.9998);
    ASSERT_EQ(catalog_entry("DL_FS").outer_base, 0.9999);
    ASSERT_EQ(catalog_entry("DL_FS").tau, 1e-8);
    ASSERT_EQ(catalog_entry("CL_FS").eta_inner, 1.0);
    ASSERT_EQ(catalog_entry("CL_INT_CURRENT").tau, 1e-9);
    ASSERT_EQ(catalog_entry("SE_INT_CURRENT").eta_gate, 0.987);
    ASSERT_EQ(catalog_entry("SE_INT_OPTIMISTIC").eta_gate, 0.998);
    for (const auto &e : catalog()) {
        ASSERT_GT(e.eta_gate, 0);
        ASSERT_LE(e.eta_gate, 1);
        ASSERT_FALSE(e.provenance.empty());
        if (e.kind != ArchitectureKind::dual_loop) {
            ASSERT_FALSE(e.eta_switch.has_value()) << e.name;
            ASSERT_FALSE(e.outer_base.has_value()) << e.name;
        }
        if (e.kind == ArchitectureKind::spatial) {
            ASSERT_FALSE(e.eta_inner.has_value()) << e.name;
            ASSERT_THROW(e.architecture_config(), Error);
        } else {
            ASSERT_NO_THROW(e.architecture_config().validate());
        }
    }
}

TEST(catalog, reproducible_from_raw_inputs) {
    const double tol = 5e-4;
    const double modulator = 0.98;
    ASSERT_NEAR(modulator * modulator, catalog_entry("DL_FS").eta_gate, tol);
    ASSERT_NEAR(modulator * transmission_from_loss(0.3, 1), *catalog_entry("DL_FS").eta_switch, tol);
    const double ln_loop = loop_length(1e-9, 2.2);
    ASSERT_NEAR(transmission_from_loss(2.7, ln_loop), *catalog_entry("CL_INT_CURRENT").eta_inner, tol);
    ASSERT_NEAR(transmission_from_loss(0.5, 1) * transmission_from_loss(0.5, 1), catalog_entry("CL_INT_CURRENT").eta_gate, tol);
    ASSERT_NEAR(transmission_from_loss(0.3, ln_loop), *catalog_entry("CL_INT_FUTURE").eta_inner, tol);
    ASSERT_NEAR(transmission_from_loss(0.3, 3e-3), catalog_entry("CL_INT_FUTURE").eta_gate, tol);
    ASSERT_NEAR(transmission_from_loss(240, 235e-6), catalog_entry("SE_INT_CURRENT").eta_gate, tol);
    // Outer fiber: 0.2 dB/km over tau c / n per bin.
    const double per_bin = transmission_from_loss(0.2e-3, loop_length(1e-8, 1.4));
    ASSERT_NEAR(per_bin, *catalog_entry("DL_FS").outer_base, tol);
    ASSERT_NEAR(std::pow(*catalog_entry("DL_FS").outer_base, 50), 0.9951, tol);
}

TEST(catalog, unknown_name_lists_valid_names) {
    try {
        catalog_entry("CL_MOON");
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::unknown_name);
        std::string msg = e.what();
        ASSERT_NE(msg.find("CL_MOON"), std::string::npos);
        ASSERT_NE(msg.find("DL_FS"), std::string::npos);
        ASSERT_NE(msg.find("SE_INT_OPTIMISTIC"), std::string::npos);
    }
}

TEST(catalog, csv_export) {
    std::ostringstream out;
    write_catalog_csv(out);
    std::string text = out.str();
    ASSERT_EQ(text.substr(0, text.find('\n')), "name,kind,eta_gate,eta_switch,eta_inner,outer_base,tau,provenance");
    ASSERT_NE(text.find("\nCL_FS,chain_loop,0.9604,,1,,1e-08,\""), std::string::npos);
    ASSERT_NE(text.find("\nSE_INT_CURRENT,spatial,0.987,,,,,\""), std::string::npos);
    ASSERT_EQ(std::count(text.begin(), text.end(), '\n'), 7);
}

TEST(bs_feasibility, verdicts) {
    ASSERT_EQ(bs_feasibility(0.75, 50), Feasibility::feasible);
    ASSERT_EQ(bs_feasibility(0.7, 50), Feasibility::feasible);
    ASSERT_EQ(bs_feasibility(0.617, 50), Feasibility::infeasible);
    ASSERT_EQ(bs_feasibility(eta_chain_loop(0.9998, 0.9906, 50), 50), Feasibility::infeasible);
    ASSERT_EQ(bs_feasibility(0.9, 30), Feasibility::unknown_n);
    ASSERT_EQ(bs_feasibility(0.5, 30, {{30, 0.4}}), Feasibility::feasible);
    ASSERT_EQ(feasibility_name(Feasibility::unknown_n), "unknown_N");
}
