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

#ifndef LOOPMESH_MESH_H
#define LOOPMESH_MESH_H

#include <cstddef>
#include <vector>

#include "loopmesh/numerics.h"

namespace loopmesh {

/// MZI phases: theta is the internal phase (sets the splitting ratio), phi the input phase.
/// Both are reduced into [0, 2pi) on construction.
class GateParams {
   public:
    GateParams() = default;
    GateParams(double theta, double phi);

    static GateParams bar() noexcept;
    static GateParams cross() noexcept;

    double theta() const noexcept {
        return theta_;
    }
    double phi() const noexcept {
        return phi_;
    }
    bool operator==(const GateParams &) const = default;

   private:
    double theta_ = 0;
    double phi_ = 0;
};

double canonical_angle(double angle);

/// Gate at (layer, pair), both 1-based; acts on modes pair and pair + 1.
struct PlacedGate {
    std::size_t layer = 1;
    std::size_t pair = 1;
    GateParams params;
    bool is_padding = false;

    bool operator==(const PlacedGate &) const = default;
};

/// Padded triangular mesh. Gates are stored layer-major, pair ascending, (n-1)^2 of them.
struct MeshDecomposition {
    std::size_t n = 0;
    std::vector<PlacedGate> gates;
    std::vector<Complex> output_phases;

    const PlacedGate &gate_at(std::size_t layer, std::size_t pair) const;
    std::size_t real_gate_count() const;
};

/// B * P(theta) * B * P(phi) with B = [[1, i], [i, 1]] / sqrt(2) and P(a) = diag(e^{ia}, 1).
/// (pi, pi) is exactly the identity and (0, 0) exactly [[0, i], [i, 0]].
ComplexMatrix mzi_matrix(const GateParams &params);

/// Reck triangle: layer l holds real gates on pairs 1..n-l, padded with identity gates
/// on pairs n-l+1..n-1. U = diag(output_phases) * G_last * ... * G_first.
MeshDecomposition decompose_reck(const ComplexMatrix &u);

/// Gate product without the output phase screen.
ComplexMatrix mesh_product(const MeshDecomposition &mesh);
ComplexMatrix reconstruct(const MeshDecomposition &mesh);

}  // namespace loopmesh

#endif
