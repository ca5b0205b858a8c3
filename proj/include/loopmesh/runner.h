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

#ifndef LOOPMESH_RUNNER_H
#define LOOPMESH_RUNNER_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "loopmesh/architectures.h"
#include "loopmesh/channel.h"

namespace loopmesh {

inline constexpr std::size_t kDefaultMaxModes = 64;

struct SweepConfig {
    ArchitectureConfig architecture;
    std::vector<std::size_t> n_values;
    std::size_t trials = 50;
    std::uint64_t base_seed = 0;
    std::string output_path;
    std::size_t max_n = kDefaultMaxModes;
    /// Worker threads for the trial loop; 0 picks hardware concurrency.
    std::size_t workers = 0;

    void validate() const;
};

struct SweepRow {
    std::size_t n = 0;
    double eta_heuristic = 0;
    double avg_eta_bar = 0;
    double avg_eta_max = 0;
    double avg_eta_min = 0;
    double avg_delta_eta = 0;
    std::size_t trials = 0;
    std::uint64_t base_seed = 0;

    bool operator==(const SweepRow &) const = default;
};

/// Closed-form mode-line transmission for an architecture configuration.
double heuristic_transmission(const ArchitectureConfig &config, std::size_t n);

/// Loss metrics of one Haar-random instance: trial t draws from stream t of base_seed.
LossMetrics haar_trial(const ArchitectureConfig &config, std::size_t n, std::uint64_t base_seed, std::size_t trial);

/// Averages loss metrics over Haar trials for each N. Output does not depend on the worker count.
std::vector<SweepRow> run_haar_sweep(const SweepConfig &config);

struct ComparisonRow {
    std::size_t n = 0;
    std::string name;
    double eta_heuristic = 0;
    std::optional<double> avg_eta_bar;
};

/// Heuristic (and optionally Haar-averaged) transmission of catalog platforms. Rows are
/// ordered by catalog name order as given, then N.
std::vector<ComparisonRow> run_comparison(
    const std::vector<std::size_t> &n_values,
    const std::vector<std::string> &include,
    bool with_haar,
    std::size_t trials,
    std::uint64_t base_seed,
    std::size_t workers = 0);

}  // namespace loopmesh

#endif
