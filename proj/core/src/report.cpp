#include "decpoisson/report.hpp"

#include "decpoisson/errors.hpp"
#include "decpoisson/format.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace decp {

namespace {

std::string optional_number(const std::optional<double>& value) {
    return value ? format_double(*value) : std::string();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out << contents;
    out.flush();
    if (!out) {
        throw IoError("failed writing " + path.string());
    }
}

struct Series {
    std::string label;
    std::string color;
    std::vector<std::pair<double, double>> points;  // (h, error)
};

}  // namespace

void write_convergence_csv(std::ostream& out, std::span<const ConvergenceRow> rows) {
    out << kConvergenceCsvHeader << '\n';
    for (const ConvergenceRow& r : rows) {
        out << r.level << ',' << r.n << ',' << format_double(r.h) << ',' << r.n_vertices << ','
            << r.n_interior << ',' << format_double(r.dec.energy) << ','
            << format_double(r.dec.l2) << ',' << format_double(r.dec.max_nodal) << ','
            << format_double(r.fem.energy) << ',' << format_double(r.fem.l2) << ','
            << format_double(r.fem.max_nodal) << ',' << optional_number(r.order_energy) << ','
            << optional_number(r.order_l2) << '\n';
    }
}

void emit_csv(std::span<const ConvergenceRow> rows, const std::filesystem::path& path) {
    if (rows.empty()) {
        throw ValidationError("no convergence rows to write to " + path.string());
    }
    std::ostringstream buffer;
    write_convergence_csv(buffer, rows);
    write_file(path, buffer.str());
}

void write_svg_plot(std::ostream& out, std::span<const ConvergenceRow> rows) {
    if (rows.empty()) {
        throw ValidationError("no convergence rows to plot");
    }
    std::vector<Series> series{
        {"energy (DEC)", "#1f77b4", {}},
        {"L2 (DEC)", "#d62728", {}},
        {"energy (FEM+box)", "#2ca02c", {}},
        {"L2 (FEM+box)", "#ff7f0e", {}},
    };
    for (const ConvergenceRow& r : rows) {
        series[0].points.emplace_back(r.h, r.dec.energy);
        series[1].points.emplace_back(r.h, r.dec.l2);
        series[2].points.emplace_back(r.h, r.fem.energy);
        series[3].points.emplace_back(r.h, r.fem.l2);
    }

    // Reference slopes through the coarsest DEC errors.
    const double h0 = rows.front().h;
    const double h1 = rows.back().h == h0 ? h0 / 2.0 : rows.back().h;
    const std::vector<std::pair<int, double>> references{{1, rows.front().dec.energy},
                                                         {2, rows.front().dec.l2}};

    double min_x = std::log10(std::min(h0, h1));
    double max_x = std::log10(std::max(h0, h1));
    double min_y = std::numeric_limits<double>::infinity();
    double max_y = -std::numeric_limits<double>::infinity();
    auto include_y = [&](double value) {
        if (value > 0.0 && std::isfinite(value)) {
            min_y = std::min(min_y, std::log10(value));
            max_y = std::max(max_y, std::log10(value));
        }
    };
    for (const Series& s : series) {
        for (const auto& [h, e] : s.points) {
            include_y(e);
        }
    }
    for (const auto& [slope, anchor] : references) {
        include_y(anchor);
        include_y(anchor * std::pow(h1 / h0, slope));
    }
    if (!std::isfinite(min_y)) {
        min_y = -1.0;
        max_y = 0.0;
    }
    const double pad_x = 0.05 * std::max(max_x - min_x, 0.1);
    const double pad_y = 0.05 * std::max(max_y - min_y, 0.1);
    min_x -= pad_x;
    max_x += pad_x;
    min_y -= pad_y;
    max_y += pad_y;

    constexpr double width = 640.0;
    constexpr double height = 480.0;
    constexpr double left = 70.0;
    constexpr double right = 180.0;
    constexpr double top = 20.0;
    constexpr double bottom = 50.0;
    auto px = [&](double h) {
        return left + (std::log10(h) - min_x) / (max_x - min_x) * (width - left - right);
    };
    auto py = [&](double e) {
        return top + (max_y - std::log10(e)) / (max_y - min_y) * (height - top - bottom);
    };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
        << "\" fill=\"white\"/>\n";
    out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << width - left - right
        << "\" height=\"" << height - top - bottom << "\" fill=\"none\" stroke=\"black\"/>\n";
    out << "<text x=\"" << left + (width - left - right) / 2 << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\" font-size=\"13\">h (log scale)</text>\n";
    out << "<text x=\"16\" y=\"" << top + (height - top - bottom) / 2
        << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 "
        << top + (height - top - bottom) / 2 << ")\">error (log scale)</text>\n";

    for (const auto& [slope, anchor] : references) {
        if (!(anchor > 0.0)) {
            continue;
        }
        out << "<polyline class=\"reference-slope\" data-slope=\"" << slope
            << "\" fill=\"none\" stroke=\"gray\" stroke-dasharray=\"6 4\" points=\"" << px(h0)
            << ',' << py(anchor) << ' ' << px(h1) << ',' << py(anchor * std::pow(h1 / h0, slope))
            << "\"/>\n";
        out << "<text x=\"" << px(h1) + 4 << "\" y=\"" << py(anchor * std::pow(h1 / h0, slope))
            << "\" font-size=\"11\" fill=\"gray\">slope " << slope << "</text>\n";
    }

    double legend_y = top + 16.0;
    for (const Series& s : series) {
        out << "<polyline class=\"series\" fill=\"none\" stroke=\"" << s.color
            << "\" stroke-width=\"2\" points=\"";
        bool first = true;
        for (const auto& [h, e] : s.points) {
            if (e > 0.0) {
                out << (first ? "" : " ") << px(h) << ',' << py(e);
                first = false;
            }
        }
        out << "\"/>\n";
        for (const auto& [h, e] : s.points) {
            if (e > 0.0) {
                out << "<circle cx=\"" << px(h) << "\" cy=\"" << py(e) << "\" r=\"3\" fill=\""
                    << s.color << "\"/>\n";
            }
        }
        out << "<line x1=\"" << width - right + 10 << "\" y1=\"" << legend_y << "\" x2=\""
            << width - right + 30 << "\" y2=\"" << legend_y << "\" stroke=\"" << s.color
            << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << width - right + 35 << "\" y=\"" << legend_y + 4
            << "\" font-size=\"12\">" << s.label << "</text>\n";
        legend_y += 20.0;
    }
    out << "</svg>\n";
}

void emit_svg_plot(std::span<const ConvergenceRow> rows, const std::filesystem::path& path) {
    if (rows.empty()) {
        throw ValidationError("no convergence rows to plot to " + path.string());
    }
    std::ostringstream buffer;
    write_svg_plot(buffer, rows);
    write_file(path, buffer.str());
}

void write_fleet_report(std::ostream& out, const FleetReport& report) {
    for (const EquivalenceResult& r : report.results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.label << ": vertices=" << r.n_vertices
            << " triangles=" << r.n_triangles << " obtuse=" << r.obtuse
            << " stiffness_rel=" << format_double(r.matrix.max_rel)
            << " rhs_abs=" << format_double(r.rhs.max_abs) << '\n';
    }
    out << "meshes = " << report.results.size() << '\n';
    out << "obtuse_triangles = " << report.obtuse_triangles << '\n';
    out << "worst_stiffness_rel = " << format_double(report.worst_matrix_rel) << '\n';
    out << "worst_rhs_abs = " << format_double(report.worst_rhs_abs) << '\n';
}

}  // namespace decp
