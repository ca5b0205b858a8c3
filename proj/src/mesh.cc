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

#include "loopmesh/mesh.h"

#include <cmath>
#include <numbers>

#include "loopmesh/errors.h"

namespace loopmesh {

namespace {

constexpr double kUnitaryTolerance = 1e-10;

/// Phases for the gate that, applied as U * T^dag on columns (p, p+1), zeroes the
/// entry a = U[r][p] and moves its weight into column p+1.
GateParams nulling_params(Complex a, Complex b) {
    if (a == Complex(0)) {
        return GateParams::bar();
    }
    if (b == Complex(0)) {
        return GateParams::cross();
    }
    double theta = 2 * std::atan2(std::abs(b), std::abs(a));
    double phi = std::arg(-a * std::conj(b));
    return GateParams(theta, phi);
}

void apply_adjoint_on_columns(ComplexMatrix &w, std::size_t p, const ComplexMatrix &t) {
    Complex c00 = std::conj(t(0, 0));
    Complex c01 = std::conj(t(0, 1));
    Complex c10 = std::conj(t(1, 0));
    Complex c11 = std::conj(t(1, 1));
    for (std::size_t i = 0; i < w.rows(); i++) {
        Complex x = w(i, p);
        Complex y = w(i, p + 1);
        w(i, p) = x * c00 + y * c01;
        w(i, p + 1) = x * c10 + y * c11;
    }
}

}  // namespace

double canonical_angle(double angle) {
    if (!std::isfinite(angle)) {
        throw Error(ErrorKind::invalid_input, "gate angle must be finite");
    }
    constexpr double two_pi = 2 * std::numbers::pi;
    double a = std::fmod(angle, two_pi);
    if (a < 0) {
        a += two_pi;
    }
    if (a >= two_pi) {
        a = 0;
    }
    return a;
}

GateParams::GateParams(double theta, double phi) : theta_(canonical_angle(theta)), phi_(canonical_angle(phi)) {
}

GateParams GateParams::bar() noexcept {
    GateParams p;
    p.theta_ = std::numbers::pi;
    p.phi_ = std::numbers::pi;
    return p;
}

GateParams GateParams::cross() noexcept {
    return GateParams();
}

const PlacedGate &MeshDecomposition::gate_at(std::size_t layer, std::size_t pair) const {
    if (n < 2 || layer < 1 || layer >= n || pair < 1 || pair >= n) {
        throw Error(ErrorKind::invalid_input, "gate coordinates out of range");
    }
    const PlacedGate &g = gates.at((layer - 1) * (n - 1) + (pair - 1));
    return g;
}

std::size_t MeshDecomposition::real_gate_count() const {
    std::size_t count = 0;
    for (const auto &g : gates) {
        count += !g.is_padding;
    }
    return count;
}

ComplexMatrix mzi_matrix(const GateParams &params) {
    Complex et = unit_phase(params.theta());
    Complex ep = unit_phase(params.phi());
    const Complex i(0, 1);
    // (1/2)[[e^{it} - 1, i(e^{it} + 1)], [i(e^{it} + 1), 1 - e^{it}]] * diag(e^{ip}, 1)
    Complex m00 = 0.5 * (et - 1.0);
    Complex m01 = 0.5 * i * (et + 1.0);
    Complex m11 = 0.5 * (1.0 - et);
    return ComplexMatrix{
        {m00 * ep, m01},
        {m01 * ep, m11},
    };
}

MeshDecomposition decompose_reck(const ComplexMatrix &u) {
    if (!u.is_square()) {
        throw Error(ErrorKind::invalid_dimension, "decomposition requires a square matrix");
    }
    const std::size_t n = u.rows();
    if (n < 2) {
        throw Error(ErrorKind::invalid_dimension, "decomposition requires n >= 2");
    }
    if (!u.all_finite()) {
        throw Error(ErrorKind::invalid_input, "matrix has non-finite entries");
    }
    double defect = unitarity_defect(u);
    if (!(defect < kUnitaryTolerance)) {
        throw NotUnitaryError(defect);
    }

    MeshDecomposition mesh;
    mesh.n = n;
    mesh.gates.reserve((n - 1) * (n - 1));
    ComplexMatrix w = u;
    for (std::size_t layer = 1; layer < n; layer++) {
        // Layer l clears row n-l (0-based) left of the diagonal, sweeping the pairs upward in index.
        const std::size_t row = n - layer;
        for (std::size_t pair = 1; pair < n; pair++) {
            if (pair > n - layer) {
                mesh.gates.push_back(PlacedGate{layer, pair, GateParams::bar(), true});
                continue;
            }
            std::size_t p = pair - 1;
            GateParams params = nulling_params(w(row, p), w(row, p + 1));
            apply_adjoint_on_columns(w, p, mzi_matrix(params));
            mesh.gates.push_back(PlacedGate{layer, pair, params, false});
        }
    }
    mesh.output_phases.reserve(n);
    for (std::size_t k = 0; k < n; k++) {
        Complex d = w(k, k);
        double mag = std::abs(d);
        mesh.output_phases.push_back(mag > 0 ? d / mag : Complex(1));
    }
    return mesh;
}

ComplexMatrix mesh_product(const MeshDecomposition &mesh) {
    ComplexMatrix m = ComplexMatrix::identity(mesh.n);
    for (const auto &g : mesh.gates) {
        m.apply_two_mode(g.pair - 1, mzi_matrix(g.params));
    }
    return m;
}

ComplexMatrix reconstruct(const MeshDecomposition &mesh) {
    ComplexMatrix m = mesh_product(mesh);
    for (std::size_t k = 0; k < mesh.n; k++) {
        m.scale_row(k, mesh.output_phases.at(k));
    }
    return m;
}

}  // namespace loopmesh
