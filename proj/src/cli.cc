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

#include "loopmesh/cli.h"

#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "loopmesh/architectures.h"
#include "loopmesh/errors.h"
#include "loopmesh/heuristics.h"
#include "loopmesh/io.h"
#include "loopmesh/report.h"
#include "loopmesh/schedule.h"

namespace loopmesh {

namespace {

ArchitectureKind loop_kind(const std::string &text) {
    auto kind = parse_architecture(text);
    if (!kind || *kind == ArchitectureKind::spatial) {
        throw Error(ErrorKind::invalid_input, "--arch must be dl or cl, got '" + text + "'");
    }
    return *kind;
}

template <typename Fn>
void with_output(const std::string &path, std::ostream &fallback, Fn &&fn) {
    if (path.empty()) {
        fn(fallback);
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw Error(ErrorKind::io, "cannot open '" + path + "' for writing");
    }
    fn(file);
    if (!file.flush()) {
        throw Error(ErrorKind::io, "failed writing '" + path + "'");
    }
}

MeshDecomposition mesh_from(const std::string &matrix_path, std::size_t n, std::uint64_t seed) {
    if (!matrix_path.empty()) {
        return decompose_reck(read_matrix_file(matrix_path));
    }
    return decompose_reck(haar_unitary(n, RandomSource{seed, 0}));
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Time-bin interferometer loss simulator and control-sequence compiler", "loopmesh"};
    app.require_subcommand(1);

    std::string matrix_path;
    std::string gates_out;
    std::string phases_out;
    auto *decompose = app.add_subcommand("decompose", "Reck-decompose a unitary read from a CSV of re+imj entries");
    decompose->add_option("matrix-file", matrix_path, "Input matrix")->required();
    decompose->add_option("--gates-out", gates_out, "Write the gate table here instead of stdout");
    decompose->add_option("--phases-out", phases_out, "Write the output phases here instead of stdout");

    std::string arch;
    double tau = 0;
    double delay = 0;
    std::size_t modes = 4;
    std::uint64_t seed = 0;
    std::string schedule_out;
    auto *schedule = app.add_subcommand("schedule", "Emit the time-ordered MZI/switch control events");
    schedule->add_option("--arch", arch, "dl or cl")->required();
    schedule->add_option("--tau", tau, "Time-bin spacing in seconds")->required();
    schedule->add_option("--d", delay, "Delay between adjacent chain-loop devices in seconds");
    auto *schedule_matrix = schedule->add_option("--matrix", matrix_path, "Unitary to program (CSV)");
    schedule->add_option("--n", modes, "Mode count of a Haar-random unitary when no matrix is given")
        ->excludes(schedule_matrix)
        ->check(CLI::Range(2, 64));
    schedule->add_option("--seed", seed, "Seed of the Haar-random unitary");
    schedule->add_option("-o,--out", schedule_out, "Output CSV path (default stdout)");

    std::string config_path;
    std::size_t workers = 0;
    auto *sweep = app.add_subcommand("sweep", "Haar-averaged loss metrics from a JSON sweep description");
    sweep->add_option("--config", config_path, "Sweep description")->required();
    sweep->add_option("--workers", workers, "Worker threads (0 = all cores)");

    std::vector<std::size_t> n_values;
    std::vector<std::string> names;
    bool with_haar = false;
    std::size_t trials = 50;
    std::string svg_path;
    std::string compare_out;
    auto *compare = app.add_subcommand("compare", "Compare catalog platforms across mode counts");
    compare->add_option("--n", n_values, "Mode counts, comma separated")->required()->delimiter(',');
    compare->add_option("--configs", names, "Catalog names, comma separated")->required()->delimiter(',');
    compare->add_flag("--haar", with_haar, "Also average eta_bar over Haar-random unitaries");
    compare->add_option("--trials", trials, "Haar trials per point")->check(CLI::PositiveNumber);
    compare->add_option("--seed", seed, "Base seed for Haar trials");
    compare->add_option("--svg", svg_path, "Write a log-scale chart here");
    compare->add_option("-o,--out", compare_out, "Output CSV path (default stdout)");
    compare->add_option("--workers", workers, "Worker threads (0 = all cores)");

    auto *catalog_cmd = app.add_subcommand("catalog", "Print the platform transmission catalog as CSV");

    double eta = 0;
    std::size_t photons = 0;
    auto *feasibility = app.add_subcommand("feasibility", "Check a transmission against the sampling threshold");
    feasibility->add_option("--eta", eta, "Overall transmission")->required();
    feasibility->add_option("--n", photons, "Photon number")->required();

    ArchitectureConfig diagram_config;
    auto *diagram = app.add_subcommand("diagram", "Dump the loss diagram of a Haar-random or given unitary");
    diagram->add_option("--arch", arch, "dl or cl")->required();
    auto *diagram_matrix = diagram->add_option("--matrix", matrix_path, "Unitary (CSV)");
    diagram->add_option("--n", modes, "Mode count when no matrix is given")->excludes(diagram_matrix)->check(CLI::Range(2, 64));
    diagram->add_option("--seed", seed, "Seed of the Haar-random unitary");
    diagram->add_option("--gate", diagram_config.eta_gate, "MZI transmission");
    diagram->add_option("--switch", diagram_config.eta_switch, "Switch transmission");
    diagram->add_option("--inner", diagram_config.eta_inner, "Inner loop transmission");
    diagram->add_option("--outer-base", diagram_config.outer_base, "Per-bin outer loop transmission");

    std::vector<std::string> argv_storage{"loopmesh"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &a : argv_storage) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError &ex) {
        err << "error: " << ex.what() << '\n';
        return 2;
    }

    try {
        if (decompose->parsed()) {
            MeshDecomposition mesh = decompose_reck(read_matrix_file(matrix_path));
            with_output(gates_out, out, [&](std::ostream &o) {
                write_gates_csv(mesh, o);
            });
            if (gates_out.empty() && phases_out.empty()) {
                out << '\n';
            }
            with_output(phases_out, out, [&](std::ostream &o) {
                write_phases_csv(mesh, o);
            });
        } else if (schedule->parsed()) {
            ArchitectureKind kind = loop_kind(arch);
            MeshDecomposition mesh = mesh_from(matrix_path, modes, seed);
            ControlSchedule events = control_schedule(mesh, kind, tau, delay);
            with_output(schedule_out, out, [&](std::ostream &o) {
                write_schedule_csv(events, o);
            });
        } else if (sweep->parsed()) {
            SweepConfig config = load_sweep_config(config_path);
            config.workers = workers;
            auto rows = run_haar_sweep(config);
            if (config.output_path.empty()) {
                write_sweep_csv(rows, out);
            } else {
                emit_csv(rows, config.output_path);
            }
        } else if (compare->parsed()) {
            auto rows = run_comparison(n_values, names, with_haar, trials, seed, workers);
            if (compare_out.empty()) {
                write_comparison_csv(rows, out);
            } else {
                emit_csv(rows, compare_out);
            }
            if (!svg_path.empty()) {
                SvgOptions options;
                options.log_y = true;
                options.title = with_haar ? "Haar-averaged transmission" : "Heuristic transmission";
                emit_svg(comparison_series(rows), svg_path, options);
            }
        } else if (catalog_cmd->parsed()) {
            write_catalog_csv(out);
        } else if (feasibility->parsed()) {
            out << feasibility_name(bs_feasibility(eta, photons)) << '\n';
        } else if (diagram->parsed()) {
            diagram_config.kind = loop_kind(arch);
            MeshDecomposition mesh = mesh_from(matrix_path, modes, seed);
            out << dump_diagram(build_diagram(mesh, diagram_config));
        }
    } catch (const std::exception &ex) {
        err << "error: " << ex.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace loopmesh
