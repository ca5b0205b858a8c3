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

#include "loopmesh/report.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>

#include "loopmesh/errors.h"
#include "loopmesh/format.h"

namespace loopmesh {

namespace {

constexpr const char *kSweepHeader = "N,eta_heuristic,avg_eta_bar,avg_eta_max,avg_eta_min,avg_delta_eta,trials,base_seed";

std::vector<std::string> split_csv_line(const std::string &line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) {
        cells.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        cells.emplace_back();
    }
    return cells;
}

double parse_cell(const std::string &cell, std::size_t line_no) {
    auto v = parse_real(cell);
    if (!v) {
        throw Error(ErrorKind::invalid_input, "line " + std::to_string(line_no) + ": bad number '" + cell + "'");
    }
    return *v;
}

std::uint64_t parse_count(const std::string &cell, std::size_t line_no) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(cell, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != cell.size() || cell.empty() || cell.front() == '-') {
        throw Error(ErrorKind::invalid_input, "line " + std::to_string(line_no) + ": bad integer '" + cell + "'");
    }
    return v;
}

template <typename Writer>
void write_file(const std::string &path, Writer &&writer) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorKind::io, "cannot open '" + path + "' for writing");
    }
    writer(out);
    out.flush();
    if (!out) {
        throw Error(ErrorKind::io, "failed writing '" + path + "'");
    }
}

std::string xml_escape(const std::string &text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&':
                out += "&amp;";
                break;
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            case '"':
                out += "&quot;";
                break;
            default:
                out += c;
        }
    }
    return out;
}

std::string fixed(double v, int digits = 2) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

std::string tick_label(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

constexpr const char *kPalette[] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
};

}  // namespace

void write_sweep_csv(const std::vector<SweepRow> &rows, std::ostream &out) {
    out << kSweepHeader << '\n';
    for (const auto &r : rows) {
        out << r.n << ',' << format_real(r.eta_heuristic) << ',' << format_real(r.avg_eta_bar) << ','
            << format_real(r.avg_eta_max) << ',' << format_real(r.avg_eta_min) << ',' << format_real(r.avg_delta_eta)
            << ',' << r.trials << ',' << r.base_seed << '\n';
    }
}

std::vector<SweepRow> read_sweep_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line) || line != kSweepHeader) {
        throw Error(ErrorKind::invalid_input, "missing or unexpected sweep CSV header");
    }
    std::vector<SweepRow> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        line_no++;
        if (line.empty()) {
            continue;
        }
        auto cells = split_csv_line(line);
        if (cells.size() != 8) {
            throw Error(ErrorKind::invalid_input, "line " + std::to_string(line_no) + ": expected 8 fields");
        }
        SweepRow r;
        r.n = parse_count(cells[0], line_no);
        r.eta_heuristic = parse_cell(cells[1], line_no);
        r.avg_eta_bar = parse_cell(cells[2], line_no);
        r.avg_eta_max = parse_cell(cells[3], line_no);
        r.avg_eta_min = parse_cell(cells[4], line_no);
        r.avg_delta_eta = parse_cell(cells[5], line_no);
        r.trials = parse_count(cells[6], line_no);
        r.base_seed = parse_count(cells[7], line_no);
        rows.push_back(r);
    }
    return rows;
}

void write_comparison_csv(const std::vector<ComparisonRow> &rows, std::ostream &out) {
    out << "N,name,eta_heuristic,avg_eta_bar\n";
    for (const auto &r : rows) {
        out << r.n << ',' << r.name << ',' << format_real(r.eta_heuristic) << ',';
        if (r.avg_eta_bar) {
            out << format_real(*r.avg_eta_bar);
        }
        out << '\n';
    }
}

void emit_csv(const std::vector<SweepRow> &rows, const std::string &path) {
    if (rows.empty()) {
        throw Error(ErrorKind::invalid_input, "refusing to write an empty sweep table to '" + path + "'");
    }
    write_file(path, [&](std::ostream &out) {
        write_sweep_csv(rows, out);
    });
}

void emit_csv(const std::vector<ComparisonRow> &rows, const std::string &path) {
    if (rows.empty()) {
        throw Error(ErrorKind::invalid_input, "refusing to write an empty comparison table to '" + path + "'");
    }
    write_file(path, [&](std::ostream &out) {
        write_comparison_csv(rows, out);
    });
}

std::string render_svg(const std::vector<Series> &series, const SvgOptions &options) {
    if (series.empty()) {
        throw Error(ErrorKind::invalid_input, "no series to plot");
    }
    double x_lo = std::numeric_limits<double>::infinity();
    double x_hi = -x_lo;
    double y_lo = x_lo;
    double y_hi = -x_lo;
    auto y_of = [&](double y) {
        return options.log_y ? std::log10(y) : y;
    };
    for (const auto &s : series) {
        for (auto [x, y] : s.points) {
            if (options.log_y && !(y > 0)) {
                throw Error(ErrorKind::invalid_input, "log-scale plot needs positive values in series " + s.name);
            }
            x_lo = std::min(x_lo, x);
            x_hi = std::max(x_hi, x);
            y_lo = std::min(y_lo, y_of(y));
            y_hi = std::max(y_hi, y_of(y));
        }
    }
    if (!std::isfinite(x_lo)) {
        throw Error(ErrorKind::invalid_input, "series contain no points");
    }
    if (options.log_y) {
        y_lo = std::floor(y_lo);
        y_hi = std::ceil(y_hi);
    }
    if (x_hi == x_lo) {
        x_hi = x_lo + 1;
    }
    if (y_hi == y_lo) {
        y_hi = y_lo + 1;
    }

    const double left = 80, right = 170, top = 40, bottom = 60;
    const double w = options.width, h = options.height;
    const double plot_w = w - left - right, plot_h = h - top - bottom;
    auto px = [&](double x) {
        return left + (x - x_lo) / (x_hi - x_lo) * plot_w;
    };
    auto py = [&](double y) {
        return top + (1 - (y_of(y) - y_lo) / (y_hi - y_lo)) * plot_h;
    };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\"" << options.height
        << "\" viewBox=\"0 0 " << options.width << ' ' << options.height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!options.title.empty()) {
        svg << "<text x=\"" << fixed(left + plot_w / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
            << xml_escape(options.title) << "</text>\n";
    }
    svg << "<g class=\"axes\" stroke=\"black\" fill=\"none\">\n";
    svg << "<line x1=\"" << fixed(left) << "\" y1=\"" << fixed(top + plot_h) << "\" x2=\"" << fixed(left + plot_w)
        << "\" y2=\"" << fixed(top + plot_h) << "\"/>\n";
    svg << "<line x1=\"" << fixed(left) << "\" y1=\"" << fixed(top) << "\" x2=\"" << fixed(left) << "\" y2=\""
        << fixed(top + plot_h) << "\"/>\n";
    svg << "</g>\n";

    svg << "<g class=\"ticks\" font-size=\"11\">\n";
    const int x_ticks = 5;
    for (int k = 0; k <= x_ticks; k++) {
        double x = x_lo + (x_hi - x_lo) * k / x_ticks;
        svg << "<text x=\"" << fixed(px(x)) << "\" y=\"" << fixed(top + plot_h + 16)
            << "\" text-anchor=\"middle\">" << tick_label(x) << "</text>\n";
    }
    if (options.log_y) {
        int decades = static_cast<int>(y_hi - y_lo);
        int step = std::max(1, decades / 8);
        for (int e = static_cast<int>(y_lo); e <= static_cast<int>(y_hi); e += step) {
            double y = std::pow(10.0, e);
            svg << "<text x=\"" << fixed(left - 6) << "\" y=\"" << fixed(py(y) + 4) << "\" text-anchor=\"end\">1e"
                << e << "</text>\n";
        }
    } else {
        const int y_ticks = 5;
        for (int k = 0; k <= y_ticks; k++) {
            double y = y_lo + (y_hi - y_lo) * k / y_ticks;
            svg << "<text x=\"" << fixed(left - 6) << "\" y=\"" << fixed(py(y) + 4) << "\" text-anchor=\"end\">"
                << tick_label(y) << "</text>\n";
        }
    }
    svg << "</g>\n";
    svg << "<text class=\"x-label\" x=\"" << fixed(left + plot_w / 2) << "\" y=\"" << fixed(h - 16)
        << "\" text-anchor=\"middle\" font-size=\"13\">" << xml_escape(options.x_label) << "</text>\n";
    svg << "<text class=\"y-label\" x=\"18\" y=\"" << fixed(top + plot_h / 2)
        << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18 " << fixed(top + plot_h / 2)
        << ")\">" << xml_escape(options.y_label) << (options.log_y ? " (log)" : "") << "</text>\n";

    for (std::size_t k = 0; k < series.size(); k++) {
        const auto &s = series[k];
        const char *color = kPalette[k % std::size(kPalette)];
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t p = 0; p < s.points.size(); p++) {
            svg << (p ? " " : "") << fixed(px(s.points[p].first)) << ',' << fixed(py(s.points[p].second));
        }
        svg << "\"><title>" << xml_escape(s.name) << "</title></polyline>\n";
        double ly = top + 14 + 18 * static_cast<double>(k);
        svg << "<line x1=\"" << fixed(left + plot_w + 12) << "\" y1=\"" << fixed(ly) << "\" x2=\""
            << fixed(left + plot_w + 32) << "\" y2=\"" << fixed(ly) << "\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << fixed(left + plot_w + 36) << "\" y=\"" << fixed(ly + 4) << "\" font-size=\"11\">"
            << xml_escape(s.name) << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void emit_svg(const std::vector<Series> &series, const std::string &path, const SvgOptions &options) {
    std::string doc = render_svg(series, options);
    write_file(path, [&](std::ostream &out) {
        out << doc;
    });
}

std::vector<Series> comparison_series(const std::vector<ComparisonRow> &rows) {
    std::vector<Series> out;
    for (const auto &r : rows) {
        auto it = std::find_if(out.begin(), out.end(), [&](const Series &s) {
            return s.name == r.name;
        });
        if (it == out.end()) {
            out.push_back(Series{r.name, {}});
            it = std::prev(out.end());
        }
        it->points.emplace_back(static_cast<double>(r.n), r.avg_eta_bar.value_or(r.eta_heuristic));
    }
    return out;
}

}  // namespace loopmesh
