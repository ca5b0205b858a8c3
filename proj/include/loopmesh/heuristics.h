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

#ifndef LOOPMESH_HEURISTICS_H
#define LOOPMESH_HEURISTICS_H

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "loopmesh/architectures.h"

namespace loopmesh {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

// Closed-form mode-line transmissions. outer_base is the per-bin outer loop transmission.
double eta_spatial(double eta_g, std::size_t n);
double eta_dual_loop(double eta_g, double eta_s, double eta_i, double outer_base, std::size_t n);
double eta_chain_loop(double eta_g, double eta_i, std::size_t n);

/// eta_s^2 * outer_base^N: excess loss per layer of the dual loop over the chain loop.
double per_layer_ratio(double eta_s, double outer_base, std::size_t n);

/// Chain-loop MZI transmission above which an integrated chain loop beats the dual loop
/// per layer (dual-loop inner loop taken as lossless).
double chain_competitive_threshold(double eta_g_dl, double eta_s, double eta_o, double eta_i_cl);

/// 10^(-loss_rate * length / 10), loss_rate in dB/m.
double transmission_from_loss(double loss_rate_db_per_m, double length_m);

/// Delay-line length tau * c / n.
double loop_length(double tau, double refractive_index);

struct PhysicalParams {
    double loss_rate = 0;  // dB/m
    double length = 0;     // m
    double tau = 0;        // s
    double refractive_index = 1;

    double transmission() const {
        return transmission_from_loss(loss_rate, length);
    }
};

struct ComponentCatalogEntry {
    std::string name;
    ArchitectureKind kind;
    double eta_gate;
    std::optional<double> eta_switch;
    std::optional<double> eta_inner;
    std::optional<double> outer_base;
    std::optional<double> tau;
    std::string provenance;

    /// Heuristic transmission of this platform at n modes.
    double heuristic(std::size_t n) const;
    /// Architecture parameters for diagram building; throws for spatial entries.
    ArchitectureConfig architecture_config() const;
};

const std::vector<ComponentCatalogEntry> &catalog();
const ComponentCatalogEntry &catalog_entry(std::string_view name);

/// CSV: name,kind,eta_gate,eta_switch,eta_inner,outer_base,tau,provenance.
void write_catalog_csv(std::ostream &out);

enum class Feasibility { feasible, infeasible, unknown_n };

std::string_view feasibility_name(Feasibility verdict);

/// Minimum transmission per photon number for a sampling advantage; only N = 50 is known.
const std::map<std::size_t, double> &default_feasibility_thresholds();

Feasibility bs_feasibility(
    double eta, std::size_t n, const std::map<std::size_t, double> &thresholds = default_feasibility_thresholds());

}  // namespace loopmesh

#endif
