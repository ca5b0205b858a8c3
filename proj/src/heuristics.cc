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

#include <cmath>

#include "loopmesh/errors.h"
#include "loopmesh/format.h"

namespace loopmesh {

namespace {

void require_transmission(double value, const char *name) {
    if (!(value > 0 && value <= 1)) {
        throw Error(ErrorKind::invalid_input, std::string(name) + " must lie in (0, 1], got " + format_real(value));
    }
}

void require_modes(std::size_t n, std::size_t minimum) {
    if (n < minimum) {
        throw Error(
            ErrorKind::invalid_dimension, "mode count must be at least " + std::to_string(minimum) + ", got " + std::to_string(n));
    }
}

double power(double base, std::size_t exponent) {
    return std::pow(base, static_cast<double>(exponent));
}

}  // namespace

double eta_spatial(double eta_g, std::size_t n) {
    require_transmission(eta_g, "eta_g");
    require_modes(n, 1);
    return power(eta_g, n);
}

double eta_dual_loop(double eta_g, double eta_s, double eta_i, double outer_base, std::size_t n) {
    require_transmission(eta_g, "eta_g");
    require_transmission(eta_s, "eta_s");
    require_transmission(eta_i, "eta_i");
    require_transmission(outer_base, "outer_base");
    require_modes(n, 2);
    const double eta_o = power(outer_base, n);
    return power(eta_g * eta_g * eta_s * eta_s * eta_i * eta_o, n - 1) / eta_o;
}

double eta_chain_loop(double eta_g, double eta_i, std::size_t n) {
    require_transmission(eta_g, "eta_g");
    require_transmission(eta_i, "eta_i");
    require_modes(n, 2);
    return power(eta_g * eta_g * eta_i, n - 1);
}

double per_layer_ratio(double eta_s, double outer_base, std::size_t n) {
    require_transmission(eta_s, "eta_s");
    require_transmission(outer_base, "outer_base");
    return eta_s * eta_s * power(outer_base, n);
}

double chain_competitive_threshold(double eta_g_dl, double eta_s, double eta_o, double eta_i_cl) {
    require_transmission(eta_g_dl, "eta_g_dl");
    require_transmission(eta_s, "eta_s");
    require_transmission(eta_o, "eta_o");
    require_transmission(eta_i_cl, "eta_i_cl");
    return eta_g_dl * eta_s * std::sqrt(eta_o / eta_i_cl);
}

double transmission_from_loss(double loss_rate_db_per_m, double length_m) {
    if (!(loss_rate_db_per_m >= 0) || !(length_m >= 0)) {
        throw Error(ErrorKind::invalid_input, "loss rate and length must be non-negative");
    }
    return std::pow(10.0, -loss_rate_db_per_m * length_m / 10.0);
}

double loop_length(double tau, double refractive_index) {
    if (!(tau >= 0) || !(refractive_index >= 1)) {
        throw Error(ErrorKind::invalid_input, "loop length needs tau >= 0 and refractive index >= 1");
    }
    return tau * kSpeedOfLight / refractive_index;
}

double ComponentCatalogEntry::heuristic(std::size_t n) const {
    switch (kind) {
        case ArchitectureKind::spatial:
            return eta_spatial(eta_gate, n);
        case ArchitectureKind::chain_loop:
            return eta_chain_loop(eta_gate, eta_inner.value(), n);
        case ArchitectureKind::dual_loop:
            return eta_dual_loop(eta_gate, eta_switch.value(), eta_inner.value(), outer_base.value(), n);
    }
    return 0;
}

ArchitectureConfig ComponentCatalogEntry::architecture_config() const {
    if (kind == ArchitectureKind::spatial) {
        throw Error(ErrorKind::unsupported_diagram, name + " is a spatially-encoded platform without a loop diagram");
    }
    ArchitectureConfig config;
    config.kind = kind;
    config.eta_gate = eta_gate;
    config.eta_inner = eta_inner.value();
    // Unused by the chain loop; validate() skips them.
    config.eta_switch = eta_switch.value_or(1.0);
    config.outer_base = outer_base.value_or(1.0);
    return config;
}

const std::vector<ComponentCatalogEntry> &catalog() {
    static const std::vector<ComponentCatalogEntry> entries{
        {"DL_FS",
         ArchitectureKind::dual_loop,
         0.9604,
         0.9146,
         1.0,
         0.9999,
         1e-8,
         "free space; MZI = two bulk modulators at 0.98 each (0.98^2); switch = one 0.98 modulator with 0.3 dB fiber "
         "coupling (0.98*10^-0.03, tabulated rounded as 0.91); outer fiber 0.2 dB/km over tau*c/n = 2.14 m per bin "
         "(n = 1.4); inner loop in free space ~1"},
        {"CL_FS",
         ArchitectureKind::chain_loop,
         0.9604,
         std::nullopt,
         1.0,
         std::nullopt,
         1e-8,
         "free space; same bulk modulators as DL_FS (0.98^2); free-space loops ~1"},
        {"CL_INT_CURRENT",
         ArchitectureKind::chain_loop,
         0.7943,
         std::nullopt,
         0.9188,
         std::nullopt,
         1e-9,
         "integrated lithium niobate; loop tau*c/n = 13.6 cm (n = 2.2) at 2.7 dB/m; MZI = two 0.5 dB modulators "
         "(10^-0.1)"},
        {"CL_INT_FUTURE",
         ArchitectureKind::chain_loop,
         0.9998,
         std::nullopt,
         0.9906,
         std::nullopt,
         1e-9,
         "integrated lithium niobate at 0.3 dB/m over the 13.6 cm loop; MZI value is one 3 mm modulator pass at "
         "0.3 dB/m, whereas CL_INT_CURRENT counts two modulators"},
        {"SE_INT_CURRENT",
         ArchitectureKind::spatial,
         0.987,
         std::nullopt,
         std::nullopt,
         std::nullopt,
         std::nullopt,
         "silicon mesh; 2.4 dB/cm over 235 um per MZI layer"},
        {"SE_INT_OPTIMISTIC",
         ArchitectureKind::spatial,
         0.998,
         std::nullopt,
         std::nullopt,
         std::nullopt,
         std::nullopt,
         "silicon mesh at a projected 0.03 dB/cm; value stored as published, a direct 235 um evaluation gives 0.9998"},
    };
    return entries;
}

const ComponentCatalogEntry &catalog_entry(std::string_view name) {
    std::string valid;
    for (const auto &e : catalog()) {
        if (e.name == name) {
            return e;
        }
        valid += valid.empty() ? "" : ", ";
        valid += e.name;
    }
    throw Error(ErrorKind::unknown_name, "unknown catalog entry '" + std::string(name) + "' (valid: " + valid + ")");
}

static std::string optional_cell(const std::optional<double> &value) {
    return value ? format_real(*value) : std::string();
}

void write_catalog_csv(std::ostream &out) {
    out << "name,kind,eta_gate,eta_switch,eta_inner,outer_base,tau,provenance\n";
    for (const auto &e : catalog()) {
        out << e.name << ',' << architecture_name(e.kind) << ',' << format_real(e.eta_gate) << ','
            << optional_cell(e.eta_switch) << ',' << optional_cell(e.eta_inner) << ',' << optional_cell(e.outer_base)
            << ',' << optional_cell(e.tau) << ",\"" << e.provenance << "\"\n";
    }
}

std::string_view feasibility_name(Feasibility verdict) {
    switch (verdict) {
        case Feasibility::feasible:
            return "feasible";
        case Feasibility::infeasible:
            return "infeasible";
        case Feasibility::unknown_n:
            return "unknown_N";
    }
    return "?";
}

const std::map<std::size_t, double> &default_feasibility_thresholds() {
    static const std::map<std::size_t, double> table{{50, 0.7}};
    return table;
}

Feasibility bs_feasibility(double eta, std::size_t n, const std::map<std::size_t, double> &thresholds) {
    require_transmission(eta, "eta");
    auto it = thresholds.find(n);
    if (it == thresholds.end()) {
        return Feasibility::unknown_n;
    }
    return eta >= it->second ? Feasibility::feasible : Feasibility::infeasible;
}

}  // namespace loopmesh
