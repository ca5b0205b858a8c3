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

#ifndef LOOPMESH_ARCHITECTURES_H
#define LOOPMESH_ARCHITECTURES_H

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "loopmesh/mesh.h"

namespace loopmesh {

enum class ArchitectureKind { spatial, dual_loop, chain_loop };

std::string_view architecture_name(ArchitectureKind kind);
/// Accepts "spatial", "dual_loop"/"dl", "chain_loop"/"cl".
std::optional<ArchitectureKind> parse_architecture(std::string_view text);

struct ArchitectureConfig {
    ArchitectureKind kind = ArchitectureKind::chain_loop;
    double eta_gate = 1;
    double eta_switch = 1;
    double eta_inner = 1;
    /// Per-bin outer-loop transmission; an N-mode instance sees outer_base^N.
    double outer_base = 1;

    /// Throws invalid_input unless every field the kind uses lies in (0, 1].
    void validate() const;
};

enum class AttenuatorKind { gate, switch_, inner, outer, extra_gate };

std::string_view attenuator_kind_name(AttenuatorKind kind);

struct Attenuator {
    std::size_t mode = 1;  // 1-based
    double factor = 1;     // power transmission
    AttenuatorKind kind = AttenuatorKind::gate;
    /// Layer whose block emitted this loss; 0 for switch/outer screens outside any layer.
    std::size_t layer = 0;
};

using DiagramElement = std::variant<PlacedGate, Attenuator>;

/// Gates interleaved with single-mode power attenuators, in application order.
struct LossDiagram {
    std::size_t n = 0;
    std::vector<DiagramElement> elements;
};

LossDiagram build_diagram(const MeshDecomposition &mesh, const ArchitectureConfig &config);

/// Product of attenuator factors along each mode line.
std::vector<double> mode_line_transmissions(const LossDiagram &diagram);

struct AuditCounts {
    std::size_t gates = 0;
    std::size_t gate = 0;
    std::size_t extra_gate = 0;
    std::size_t inner = 0;
    std::size_t switch_ = 0;
    std::size_t outer = 0;

    bool operator==(const AuditCounts &) const = default;
};

AuditCounts audit_counts(const LossDiagram &diagram);

/// Closed-form counts a well-formed diagram of this kind must have.
AuditCounts expected_counts(ArchitectureKind kind, std::size_t n);

/// One element per line: "<index> gate <p>,<p+1> - layer=<l>" or "<index> atten <m> <factor> <kind>".
std::string dump_diagram(const LossDiagram &diagram);

}  // namespace loopmesh

#endif
