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

#include "loopmesh/channel.h"

#include <algorithm>
#include <cmath>

#include "loopmesh/errors.h"
#include "loopmesh/format.h"

namespace loopmesh {

namespace {

constexpr double kPhysicalSlack = 1e-6;

}  // namespace

ComplexMatrix process_matrix(const LossDiagram &diagram) {
    ComplexMatrix a = ComplexMatrix::identity(diagram.n);
    for (const auto &e : diagram.elements) {
        if (const auto *g = std::get_if<PlacedGate>(&e)) {
            a.apply_two_mode(g->pair - 1, mzi_matrix(g->params));
        } else {
            const auto &att = std::get<Attenuator>(e);
            if (att.factor != 1.0) {
                a.scale_row(att.mode - 1, std::sqrt(att.factor));
            }
        }
    }
    return a;
}

LossMetrics loss_metrics(const ComplexMatrix &a) {
    std::vector<double> sigma = svd_values(a);
    LossMetrics m;
    m.etas.reserve(sigma.size());
    for (double s : sigma) {
        if (s > 1 + kPhysicalSlack) {
            throw Error(ErrorKind::physicality, "singular value " + format_real(s) + " exceeds 1; channel has gain");
        }
        m.etas.push_back(s * s);
    }
    const double count = static_cast<double>(m.etas.size());
    m.eta_max = m.etas.front();
    m.eta_min = m.etas.back();
    double sum = 0;
    for (double e : m.etas) {
        sum += e;
    }
    m.eta_bar = std::clamp(sum / count, m.eta_min, m.eta_max);
    double var = 0;
    for (double e : m.etas) {
        var += (e - m.eta_bar) * (e - m.eta_bar);
    }
    m.delta_eta = std::sqrt(var / count);
    return m;
}

}  // namespace loopmesh
