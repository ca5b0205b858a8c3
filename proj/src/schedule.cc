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

#include "loopmesh/schedule.h"

#include <algorithm>
#include <cmath>

#include "loopmesh/errors.h"
#include "loopmesh/format.h"

namespace loopmesh {

std::string_view event_role_name(EventRole role) {
    switch (role) {
        case EventRole::push_in:
            return "push_in";
        case EventRole::interaction:
            return "interaction";
        case EventRole::push_out:
            return "push_out";
        case EventRole::route_in:
            return "route_in";
        case EventRole::route_out:
            return "route_out";
    }
    return "?";
}

std::string_view routing_name(Routing routing) {
    switch (routing) {
        case Routing::from_input:
            return "from_input";
        case Routing::from_outer:
            return "from_outer";
        case Routing::to_outer:
            return "to_outer";
        case Routing::to_output:
            return "to_output";
    }
    return "?";
}

namespace {

/// One pass of all N bins through an MZI programmed for `layer`: push the first bin in,
/// N-1 interactions, push the last bin out.
void emit_layer_pass(
    std::vector<ControlEvent> &events,
    const MeshDecomposition &mesh,
    std::size_t device,
    std::size_t layer,
    double first_slot,
    double offset,
    double tau) {
    const std::size_t n = mesh.n;
    for (std::size_t s = 0; s <= n; s++) {
        ControlEvent e;
        e.device_id = device;
        e.time = (first_slot + static_cast<double>(s)) * tau + offset;
        if (s == 0 || s == n) {
            e.role = s == 0 ? EventRole::push_in : EventRole::push_out;
            e.params = GateParams::cross();
        } else {
            e.role = EventRole::interaction;
            e.params = mesh.gate_at(layer, s).params;
            e.layer = layer;
            e.pair = s;
        }
        events.push_back(e);
    }
}

}  // namespace

ControlSchedule control_schedule(const MeshDecomposition &mesh, ArchitectureKind architecture, double tau, double d) {
    if (!(tau > 0) || !std::isfinite(tau)) {
        throw Error(ErrorKind::invalid_timing, "tau must be positive");
    }
    if (!(d >= 0) || !std::isfinite(d)) {
        throw Error(ErrorKind::invalid_timing, "inter-device delay d must be non-negative");
    }
    const std::size_t n = mesh.n;
    if (n < 2 || mesh.gates.size() != (n - 1) * (n - 1)) {
        throw Error(ErrorKind::invalid_input, "schedule requires a padded mesh with (N-1)^2 gates");
    }

    ControlSchedule schedule;
    auto &events = schedule.events;
    switch (architecture) {
        case ArchitectureKind::chain_loop:
            for (std::size_t k = 1; k < n; k++) {
                emit_layer_pass(events, mesh, k, k, static_cast<double>(k), static_cast<double>(k - 1) * d, tau);
            }
            break;
        case ArchitectureKind::dual_loop:
            for (std::size_t layer = 1; layer < n; layer++) {
                const double slot0 = static_cast<double>((layer - 1) * (n + 1));
                emit_layer_pass(events, mesh, kDualLoopMziDevice, layer, slot0, 0.0, tau);
                for (std::size_t b = 1; b <= n; b++) {
                    ControlEvent in;
                    in.device_id = kDualLoopSwitchIn;
                    in.time = (slot0 + static_cast<double>(b - 1)) * tau;
                    in.role = EventRole::route_in;
                    in.routing = layer == 1 ? Routing::from_input : Routing::from_outer;
                    events.push_back(in);

                    ControlEvent out;
                    out.device_id = kDualLoopSwitchOut;
                    out.time = (slot0 + static_cast<double>(b)) * tau;
                    out.role = EventRole::route_out;
                    out.routing = layer + 1 < n ? Routing::to_outer : Routing::to_output;
                    events.push_back(out);
                }
            }
            break;
        case ArchitectureKind::spatial:
            throw Error(ErrorKind::unsupported_diagram, "spatial encoding has no time-bin control schedule");
    }
    std::stable_sort(events.begin(), events.end(), [](const ControlEvent &a, const ControlEvent &b) {
        if (a.time != b.time) {
            return a.time < b.time;
        }
        return a.device_id < b.device_id;
    });
    return schedule;
}

void write_schedule_csv(const ControlSchedule &schedule, std::ostream &out) {
    out << "device,time,role,theta,phi,routing\n";
    for (const auto &e : schedule.events) {
        out << e.device_id << ',' << format_real(e.time) << ',' << event_role_name(e.role) << ',';
        if (e.params) {
            out << format_real(e.params->theta()) << ',' << format_real(e.params->phi());
        } else {
            out << ',';
        }
        out << ',';
        if (e.routing) {
            out << routing_name(*e.routing);
        }
        out << '\n';
    }
}

}  // namespace loopmesh
