#pragma once

#include "decpoisson/harness.hpp"

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>

namespace decp {

/// CSV column order of convergence output.
inline constexpr std::string_view kConvergenceCsvHeader =
    "level,n,h,n_vertices,n_interior,energy_err_dec,l2_err_dec,max_err_dec,"
    "energy_err_fem,l2_err_fem,max_err_fem,order_energy,order_l2";

/// Header plus one line per row. Orders are left empty on the first level.
/// Numbers use shortest round-trip formatting, so output is reproducible.
void write_convergence_csv(std::ostream& out, std::span<const ConvergenceRow> rows);

/// Writes the CSV file. Throws ValidationError for empty rows (no file is
/// created) and IoError with the path on write failure.
void emit_csv(std::span<const ConvergenceRow> rows, const std::filesystem::path& path);

/// Log-log plot of h against DEC and FEM errors, with slope-1 and slope-2
/// reference lines anchored at the coarsest energy and L2 errors.
void write_svg_plot(std::ostream& out, std::span<const ConvergenceRow> rows);
void emit_svg_plot(std::span<const ConvergenceRow> rows, const std::filesystem::path& path);

/// Human-readable summary of an equivalence fleet run.
void write_fleet_report(std::ostream& out, const FleetReport& report);

}  // namespace decp
