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

#include "loopmesh/architectures.h"

#include <cmath>
#include <sstream>

#include "loopmesh/errors.h"
#include "loopmesh/format.h"

namespace loopmesh {

std::string_view architecture_name(ArchitectureKind kind) {
    switch (kind) {
        case ArchitectureKind::spatial:
            return "spatial";
        case ArchitectureKind::dual_loop:
            return "dual_loop";
        case ArchitectureKind::chain_loop:
            return "chain_loop";
    }
    return "?";
}

std::optional<ArchitectureKind> parse_architecture(std::string_view text) {
    if (text == "spatial" || text == "se") {
        return ArchitectureKind::spatial;
    }
    if (text == "dual_loop" || text == "dl") {
        return ArchitectureKind::dual_loop;
    }
    if (text == "chain_loop" || text == "cl") {
        return ArchitectureKind::chain_loop;
    }
    return std::nullopt;
}

static void require_transmission(double value, const char *name) {
    if (!(value > 0 && value <= 1)) {
        throw Error(ErrorKind::invalid_input, std::string(name) + " must lie in (0, 1], got " + format_real(value));
    }
}

void ArchitectureConfig::validate() const {
    require_transmission(eta_gate, "eta_gate");
    if (kind == ArchitectureKind::spatial) {
        return;
    }
    require_transmission(eta_inner, "eta_inner");
    if (kind == ArchitectureKind::dual_loop) {
        require_transmission(eta_switch, "eta_switch");
        require_transmission(outer_base, "outer_base");
    }
}

std::string_view attenuator_kind_name(AttenuatorKind kind) {
    switch (kind) {
        case AttenuatorKind::gate:
            return "gate";
        case AttenuatorKind::switch_:
            return "switch";
        case AttenuatorKind::inner:
            return "inner";
        case AttenuatorKind::outer:
            return "outer";
        case AttenuatorKind::extra_gate:
            return "extra_gate";
    }
    return "?";
}

LossDiagram build_diagram(const MeshDecomposition &mesh, const ArchitectureConfig &config) {
    if (config.kind == ArchitectureKind::spatial) {
        throw Error(ErrorKind::unsupported_diagram, "spatial encoding is modelled by its closed form only");
    }
    config.validate();
    const std::size_t n = mesh.n;
    if (n < 2 || mesh.gates.size() != (n - 1) * (n - 1)) {
        throw Error(ErrorKind::invalid_input, "loss diagram requires a padded mesh with (N-1)^2 gates");
    }
    const bool dual = config.kind == ArchitectureKind::dual_loop;
    const double g = config.eta_gate;
    const double in = config.eta_inner;
    const double s = config.eta_switch;
    const double outer = std::pow(config.outer_base, static_cast<double>(n));

    LossDiagram diagram;
    diagram.n = n;
    auto &el = diagram.elements;
    std::size_t current_layer = 0;
    auto att = [&](std::size_t mode, double factor, AttenuatorKind kind) {
        el.emplace_back(Attenuator{mode, factor, kind, current_layer});
    };
    auto switch_screen = [&]() {
        for (std::size_t m = 1; m <= n; m++) {
            att(m, s, AttenuatorKind::switch_);
        }
    };

    if (dual) {
        switch_screen();
    }
    for (std::size_t layer = 1; layer < n; layer++) {
        current_layer = 0;
        if (dual && layer > 1) {
            // Between layers every bin leaves through the output switch, circulates the outer loop
            // and re-enters through the input switch.
            for (std::size_t m = 1; m <= n; m++) {
                att(m, s, AttenuatorKind::switch_);
                att(m, outer, AttenuatorKind::outer);
                att(m, s, AttenuatorKind::switch_);
            }
        }
        current_layer = layer;
        // Push-in: the first bin crosses the MZI once and enters the delay loop.
        att(1, g, AttenuatorKind::extra_gate);
        att(1, in, AttenuatorKind::inner);
        for (std::size_t pair = 1; pair < n; pair++) {
            el.emplace_back(mesh.gate_at(layer, pair));
            att(pair, g, AttenuatorKind::gate);
            att(pair + 1, g, AttenuatorKind::gate);
            if (pair + 1 < n) {
                att(pair + 1, in, AttenuatorKind::inner);
            }
        }
        // Push-out: the last bin makes its final loop round trip and leaves through the MZI.
        att(n, in, AttenuatorKind::inner);
        att(n, g, AttenuatorKind::extra_gate);
    }
    current_layer = 0;
    if (dual) {
        switch_screen();
    }
    return diagram;
}

std::vector<double> mode_line_transmissions(const LossDiagram &diagram) {
    std::vector<double> out(diagram.n, 1.0);
    for (const auto &e : diagram.elements) {
        if (const auto *a = std::get_if<Attenuator>(&e)) {
            out.at(a->mode - 1) *= a->factor;
        }
    }
    return out;
}

AuditCounts audit_counts(const LossDiagram &diagram) {
    AuditCounts c;
    for (const auto &e : diagram.elements) {
        if (std::holds_alternative<PlacedGate>(e)) {
            c.gates++;
            continue;
        }
        switch (std::get<Attenuator>(e).kind) {
            case AttenuatorKind::gate:
                c.gate++;
                break;
            case AttenuatorKind::switch_:
                c.switch_++;
                break;
            case AttenuatorKind::inner:
                c.inner++;
                break;
            case AttenuatorKind::outer:
                c.outer++;
                break;
            case AttenuatorKind::extra_gate:
                c.extra_gate++;
                break;
        }
    }
    return c;
}

AuditCounts expected_counts(ArchitectureKind kind, std::size_t n) {
    AuditCounts c;
    if (n < 2 || kind == ArchitectureKind::spatial) {
        return c;
    }
    c.gates = (n - 1) * (n - 1);
    c.gate = 2 * (n - 1) * (n - 1);
    c.extra_gate = 2 * (n - 1);
    c.inner = n * (n - 1);
    if (kind == ArchitectureKind::dual_loop) {
        c.switch_ = 2 * n * (n - 1);
        c.outer = n * (n - 2);
    }
    return c;
}

std::string dump_diagram(const LossDiagram &diagram) {
    std::ostringstream out;
    for (std::size_t k = 0; k < diagram.elements.size(); k++) {
        const auto &e = diagram.elements[k];
        out << k << ' ';
        if (const auto *g = std::get_if<PlacedGate>(&e)) {
            out << "gate " << g->pair << ',' << g->pair + 1 << " - layer=" << g->layer;
        } else {
            const auto &a = std::get<Attenuator>(e);
            out << "atten " << a.mode << ' ' << format_real(a.factor) << ' ' << attenuator_kind_name(a.kind);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace loopmesh
