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

#ifndef LOOPMESH_REPORT_H
#define LOOPMESH_REPORT_H

#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "loopmesh/runner.h"

namespace loopmesh {

// Sweep CSV columns: N,eta_heuristic,avg_eta_bar,avg_eta_max,avg_eta_min,avg_delta_eta,trials,base_seed
// (avg_delta_eta is the trial mean of the population standard deviation).
void write_sweep_csv(const std::vector<SweepRow> &rows, std::ostream &out);
std::vector<SweepRow> read_sweep_csv(std::istream &in);

// Comparison CSV columns: N,name,eta_heuristic,avg_eta_bar (last cell empty without Haar data).
void write_comparison_csv(const std::vector<ComparisonRow> &rows, std::ostream &out);

/// Writes the file only when rows is non-empty; throws io on an unwritable path.
void emit_csv(const std::vector<SweepRow> &rows, const std::string &path);
void emit_csv(const std::vector<ComparisonRow> &rows, const std::string &path);

struct Series {
    std::string name;
    std::vector<std::pair<double, double>> points;
};

struct SvgOptions {
    bool log_y = false;
    std::string title;
    std::string x_label = "N";
    std::string y_label = "transmission";
    int width = 720;
    int height = 480;
};

std::string render_svg(const std::vector<Series> &series, const SvgOptions &options);
void emit_svg(const std::vector<Series> &series, const std::string &path, const SvgOptions &options);

/// One series per platform, in first-appearance order. Uses the Haar column where present.
std::vector<Series> comparison_series(const std::vector<ComparisonRow> &rows);

}  // namespace loopmesh

#endif
