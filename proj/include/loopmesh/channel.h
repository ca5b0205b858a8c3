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

#ifndef LOOPMESH_CHANNEL_H
#define LOOPMESH_CHANNEL_H

#include <vector>

#include "loopmesh/architectures.h"
#include "loopmesh/numerics.h"

namespace loopmesh {

/// Effective transmissions of a lossy channel: the squared singular values of its
/// process matrix. delta_eta is the population standard deviation.
struct LossMetrics {
    std::vector<double> etas;  // descending
    double eta_max = 0;
    double eta_min = 0;
    double eta_bar = 0;
    double delta_eta = 0;
};

/// Transmission block A of the lossy channel: gates act as embedded MZI unitaries and each
/// attenuator scales its mode's amplitude by sqrt(factor).
ComplexMatrix process_matrix(const LossDiagram &diagram);

LossMetrics loss_metrics(const ComplexMatrix &a);

}  // namespace loopmesh

#endif
