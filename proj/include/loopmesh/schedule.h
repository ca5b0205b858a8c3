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

#ifndef LOOPMESH_SCHEDULE_H
#define LOOPMESH_SCHEDULE_H

#include <cstddef>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "loopmesh/architectures.h"
#include "loopmesh/mesh.h"

namespace loopmesh {

enum class EventRole { push_in, interaction, push_out, route_in, route_out };
enum class Routing { from_input, from_outer, to_outer, to_output };

std::string_view event_role_name(EventRole role);
std::string_view routing_name(Routing routing);

/// Device ids: chain loop uses 1..N-1 (one MZI per layer). Dual loop uses 0 for the
/// MZI, 1 for the input switch and 2 for the output switch.
inline constexpr std::size_t kDualLoopMziDevice = 0;
inline constexpr std::size_t kDualLoopSwitchIn = 1;
inline constexpr std::size_t kDualLoopSwitchOut = 2;

struct ControlEvent {
    std::size_t device_id = 0;
    double time = 0;  // seconds
    EventRole role = EventRole::interaction;
    std::optional<GateParams> params;  // MZI events only
    std::optional<Routing> routing;    // switch events only
    /// Mesh coordinates of the gate an interaction event programs.
    std::size_t layer = 0;
    std::size_t pair = 0;
};

struct ControlSchedule {
    std::vector<ControlEvent> events;  // by time, then device_id
};

ControlSchedule control_schedule(const MeshDecomposition &mesh, ArchitectureKind architecture, double tau, double d);

/// CSV with header device,time,role,theta,phi,routing. Empty cells for absent fields.
void write_schedule_csv(const ControlSchedule &schedule, std::ostream &out);

}  // namespace loopmesh

#endif
