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

#ifndef LOOPMESH_IO_H
#define LOOPMESH_IO_H

#include <istream>
#include <ostream>
#include <string>

#include "loopmesh/mesh.h"
#include "loopmesh/runner.h"

namespace loopmesh {

/// Square complex matrix, one row per line, comma-separated "re+imj" cells.
ComplexMatrix read_matrix_csv(std::istream &in);
ComplexMatrix read_matrix_file(const std::string &path);

/// Columns layer,pair,theta,phi,is_padding in mesh order.
void write_gates_csv(const MeshDecomposition &mesh, std::ostream &out);
/// Columns mode,phase with the phase written as "re+imj".
void write_phases_csv(const MeshDecomposition &mesh, std::ostream &out);

/// JSON sweep description with keys architecture, transmissions {gate, switch, inner,
/// outer_base}, n_values, trials, seed and output. Unknown keys are rejected.
SweepConfig parse_sweep_config(const std::string &json_text);
SweepConfig load_sweep_config(const std::string &path);

}  // namespace loopmesh

#endif
