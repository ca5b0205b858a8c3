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

#include "loopmesh/runner.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "loopmesh/errors.h"
#include "loopmesh/heuristics.h"
#include "loopmesh/mesh.h"
#include "loopmesh/numerics.h"

namespace loopmesh {

void SweepConfig::validate() const {
    if (architecture.kind == ArchitectureKind::spatial) {
        throw Error(ErrorKind::unsupported_diagram, "Haar sweeps need a loop architecture");
    }
    architecture.validate();
    if (trials < 1) {
        throw Error(ErrorKind::invalid_input, "trials must be at least 1");
    }
    if (n_values.empty()) {
        throw Error(ErrorKind::invalid_input, "n_values must not be empty");
    }
    for (auto n : n_values) {
        if (n < 2 || n > max_n) {
            throw Error(
                ErrorKind::invalid_dimension,
                "N=" + std::to_string(n) + " outside supported range [2, " + std::to_string(max_n) + "]");
        }
    }
}

double heuristic_transmission(const ArchitectureConfig &config, std::size_t n) {
    switch (config.kind) {
        case ArchitectureKind::spatial:
            return eta_spatial(config.eta_gate, n);
        case ArchitectureKind::dual_loop:
            return eta_dual_loop(config.eta_gate, config.eta_switch, config.eta_inner, config.outer_base, n);
        case ArchitectureKind::chain_loop:
            return eta_chain_loop(config.eta_gate, config.eta_inner, n);
    }
    return 0;
}

LossMetrics haar_trial(const ArchitectureConfig &config, std::size_t n, std::uint64_t base_seed, std::size_t trial) {
    ComplexMatrix u = haar_unitary(n, RandomSource{base_seed, trial});
    MeshDecomposition mesh = decompose_reck(u);
    LossDiagram diagram = build_diagram(mesh, config);
    return loss_metrics(process_matrix(diagram));
}

namespace {

struct TrialSummary {
    double eta_bar;
    double eta_max;
    double eta_min;
    double delta_eta;
};

std::size_t resolve_workers(std::size_t requested, std::size_t jobs) {
    std::size_t w = requested;
    if (w == 0) {
        w = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    }
    return std::min(w, jobs);
}

/// Runs every trial, each writing only its own slot; the first failure (by trial index) is rethrown.
std::vector<TrialSummary> run_trials(const SweepConfig &config, std::size_t n) {
    std::vector<TrialSummary> results(config.trials);
    std::vector<std::exception_ptr> failures(config.trials);
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (std::size_t t = next++; t < config.trials; t = next++) {
            try {
                LossMetrics m = haar_trial(config.architecture, n, config.base_seed, t);
                results[t] = TrialSummary{m.eta_bar, m.eta_max, m.eta_min, m.delta_eta};
            } catch (...) {
                failures[t] = std::current_exception();
            }
        }
    };
    std::size_t workers = resolve_workers(config.workers, config.trials);
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t k = 0; k < workers; k++) {
            pool.emplace_back(work);
        }
    }
    for (std::size_t t = 0; t < config.trials; t++) {
        if (failures[t]) {
            try {
                std::rethrow_exception(failures[t]);
            } catch (const std::exception &ex) {
                throw TrialError(n, t, ex.what());
            }
        }
    }
    return results;
}

}  // namespace

std::vector<SweepRow> run_haar_sweep(const SweepConfig &config) {
    config.validate();
    std::vector<SweepRow> rows;
    rows.reserve(config.n_values.size());
    for (std::size_t n : config.n_values) {
        auto trials = run_trials(config, n);
        SweepRow row;
        row.n = n;
        row.eta_heuristic = heuristic_transmission(config.architecture, n);
        row.trials = config.trials;
        row.base_seed = config.base_seed;
        // Sum in trial order so the result is independent of scheduling.
        for (const auto &t : trials) {
            row.avg_eta_bar += t.eta_bar;
            row.avg_eta_max += t.eta_max;
            row.avg_eta_min += t.eta_min;
            row.avg_delta_eta += t.delta_eta;
        }
        const double count = static_cast<double>(config.trials);
        row.avg_eta_bar /= count;
        row.avg_eta_max /= count;
        row.avg_eta_min /= count;
        row.avg_delta_eta /= count;
        row.avg_eta_bar = std::clamp(row.avg_eta_bar, row.avg_eta_min, row.avg_eta_max);
        rows.push_back(row);
    }
    return rows;
}

std::vector<ComparisonRow> run_comparison(
    const std::vector<std::size_t> &n_values,
    const std::vector<std::string> &include,
    bool with_haar,
    std::size_t trials,
    std::uint64_t base_seed,
    std::size_t workers) {
    if (n_values.empty() || include.empty()) {
        throw Error(ErrorKind::invalid_input, "comparison needs at least one N and one catalog entry");
    }
    std::vector<const ComponentCatalogEntry *> entries;
    for (const auto &name : include) {
        entries.push_back(&catalog_entry(name));
    }
    std::vector<ComparisonRow> rows;
    for (const auto *entry : entries) {
        std::vector<SweepRow> haar;
        const bool sample = with_haar && entry->kind != ArchitectureKind::spatial;
        if (sample) {
            SweepConfig sweep;
            sweep.architecture = entry->architecture_config();
            sweep.n_values = n_values;
            sweep.trials = trials;
            sweep.base_seed = base_seed;
            sweep.workers = workers;
            haar = run_haar_sweep(sweep);
        }
        for (std::size_t k = 0; k < n_values.size(); k++) {
            ComparisonRow row;
            row.n = n_values[k];
            row.name = entry->name;
            row.eta_heuristic = entry->heuristic(n_values[k]);
            if (sample) {
                row.avg_eta_bar = haar[k].avg_eta_bar;
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace loopmesh
