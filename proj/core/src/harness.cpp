#include "decpoisson/harness.hpp"

#include "decpoisson/calculus.hpp"
#include "decpoisson/dual.hpp"
#include "decpoisson/fields.hpp"
#include "decpoisson/mesh_io.hpp"
#include "decpoisson/quadrature.hpp"
#include "decpoisson/solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <string>

namespace decp {

std::string_view to_string(BoxRhs rhs) {
    return rhs == BoxRhs::piecewise_constant ? "piecewise-constant" : "quadrature";
}

std::optional<BoxRhs> parse_box_rhs(std::string_view name) {
    if (name == "piecewise-constant") {
        return BoxRhs::piecewise_constant;
    }
    if (name == "quadrature") {
        return BoxRhs::quadrature;
    }
    return std::nullopt;
}

void validate(const ExperimentConfig& config) {
    if (config.levels < 2) {
        throw ValidationError("a convergence study needs at least two levels to estimate an order");
    }
    if (config.base_n < 2) {
        throw ValidationError("base n must be at least 2 so that every level has interior vertices");
    }
    if (config.perturb_amplitude != 0.0 && config.pattern != SquarePattern::diagonal) {
        throw ValidationError("perturbation is only defined for the diagonal pattern");
    }
    if (!(config.perturb_amplitude >= 0.0 && config.perturb_amplitude < kMaxPerturbationAmplitude)) {
        throw ValidationError("perturbation amplitude must lie in [0, 0.49)");
    }
    if (!find_manufactured_solution(config.solution)) {
        throw ValidationError("unknown manufactured solution '" + config.solution + "'");
    }
    (void)triangle_rule(config.quadrature_degree);
    if (!(config.solver_tolerance > 0.0)) {
        throw ValidationError("solver tolerance must be positive");
    }
}

double observed_order(double coarse_error, double fine_error) {
    return std::log2(coarse_error / fine_error);
}

TriangleMesh level_mesh(const ExperimentConfig& config, std::size_t n) {
    if (config.perturb_amplitude > 0.0) {
        return generate_perturbed_mesh(n, config.perturb_amplitude, config.seed);
    }
    return generate_square_mesh(n, config.pattern);
}

namespace {

MethodErrors solve_and_measure(const LinearSystem& system, const TriangleMesh& mesh,
                               const ManufacturedSolution& exact, const ExperimentConfig& config) {
    SolverOptions options;
    options.tolerance = config.solver_tolerance;
    options.max_iterations = config.max_iterations;
    SolveReport report = solve_cg(system, options);
    attach_errors(report, mesh, exact, config.quadrature_degree);
    return {*report.energy_error, *report.l2_error, *report.max_nodal_error, report.iterations};
}

ConvergenceRow run_level(const ExperimentConfig& config, const ManufacturedSolution& exact,
                         std::size_t level, std::size_t n) {
    const TriangleMesh mesh = level_mesh(config, n);
    const DualComplex dual = build_dual(mesh);
    const WellCenteredReport audit = well_centered_report(mesh, dual);

    ConvergenceRow row;
    row.level = level;
    row.n = n;
    row.h = 1.0 / static_cast<double>(n);
    row.n_vertices = mesh.num_vertices();
    row.n_interior = mesh.num_interior_vertices();
    row.not_well_centered = audit.offenders.size();
    row.obtuse = audit.num_obtuse;

    const RealMatrix dec_matrix = assemble_dec(mesh, dual);
    const std::vector<double> dec_rhs = assemble_rhs_dec(mesh, dual, exact.f);
    row.dec = solve_and_measure(apply_dirichlet(dec_matrix, dec_rhs, mesh, Method::dec), mesh,
                                exact, config);

    const RealMatrix fem_matrix = assemble_fem(mesh);
    std::vector<double> box_rhs;
    if (config.box_rhs == BoxRhs::piecewise_constant) {
        box_rhs = assemble_rhs_box(
            mesh, dual, [&](Index v, Point) { return exact.f(mesh.position(v)); },
            config.quadrature_degree);
    } else {
        box_rhs = assemble_rhs_box(mesh, dual, exact.f, config.quadrature_degree);
    }
    row.fem = solve_and_measure(apply_dirichlet(fem_matrix, box_rhs, mesh, Method::box), mesh,
                                exact, config);
    return row;
}

}  // namespace

std::vector<ConvergenceRow> run_convergence(const ExperimentConfig& config) {
    validate(config);
    const ManufacturedSolution exact = *find_manufactured_solution(config.solution);
    std::vector<ConvergenceRow> rows;
    rows.reserve(config.levels);
    for (std::size_t level = 0; level < config.levels; ++level) {
        const std::size_t n = config.base_n << level;
        ConvergenceRow row;
        try {
            row = run_level(config, exact, level + 1, n);
        } catch (const Error& e) {
            throw ConvergenceFailure("level " + std::to_string(level + 1) + " (n = " +
                                         std::to_string(n) + ") failed: " + e.what(),
                                     std::move(rows));
        }
        if (!rows.empty()) {
            row.order_energy = observed_order(rows.back().dec.energy, row.dec.energy);
            row.order_l2 = observed_order(rows.back().dec.l2, row.dec.l2);
        }
        rows.push_back(row);
    }
    return rows;
}

EquivalenceResult check_equivalence(const TriangleMesh& mesh, std::string label,
                                    const EquivalenceOptions& options) {
    const DualComplex dual = build_dual(mesh);
    EquivalenceResult result;
    result.label = std::move(label);
    result.n_vertices = mesh.num_vertices();
    result.n_triangles = mesh.num_triangles();
    result.obtuse = well_centered_report(mesh, dual).num_obtuse;

    std::vector<double> star_entries = dual.edge_ratio;
    if (options.fault_edge) {
        star_entries.at(*options.fault_edge) = -star_entries.at(*options.fault_edge);
    }
    const RealMatrix dec = assemble_dec(mesh, RealMatrix::diagonal(star_entries));
    const RealMatrix fem = assemble_fem(mesh);
    result.matrix = compare_matrices(dec, fem);
    for (Index e = 0; e < mesh.num_edges(); ++e) {
        const auto& v = mesh.edge(e).vertices;
        const double delta = std::abs(dec.at(v[0], v[1]) - fem.at(v[0], v[1]));
        if (delta > result.worst_edge_difference) {
            result.worst_edge_difference = delta;
            result.worst_edge = e;
        }
    }

    std::mt19937_64 rng(options.data_seed);
    std::vector<double> box_values(mesh.num_vertices());
    for (double& value : box_values) {
        value = 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0;
    }
    const std::vector<double> rhs_dec = assemble_rhs_dec(mesh, dual, box_values);
    const std::vector<double> rhs_box = assemble_rhs_box(
        mesh, dual, [&](Index v, Point) { return box_values[v]; }, options.quadrature_degree);
    result.rhs = compare_vectors(rhs_dec, rhs_box);

    result.passed = result.matrix.max_rel <= options.matrix_tolerance &&
                    result.rhs.max_abs <= options.rhs_tolerance;
    return result;
}

EquivalenceResult require_equivalence(const TriangleMesh& mesh, std::string label,
                                      const EquivalenceOptions& options) {
    EquivalenceResult result = check_equivalence(mesh, std::move(label), options);
    if (result.passed) {
        return result;
    }
    std::string what = "equivalence violated on " + result.label + ": ";
    if (result.matrix.max_rel > options.matrix_tolerance) {
        const auto& v = mesh.edge(result.worst_edge).vertices;
        what += "stiffness differs by " + std::to_string(result.matrix.max_rel) +
                " (relative) at (" + std::to_string(result.matrix.row) + ", " +
                std::to_string(result.matrix.col) + "); worst edge " +
                std::to_string(result.worst_edge) + " (" + std::to_string(v[0]) + ", " +
                std::to_string(v[1]) + ")";
    } else {
        what += "right-hand sides differ by " + std::to_string(result.rhs.max_abs) +
                " at vertex " + std::to_string(result.rhs.index);
    }
    throw EquivalenceViolation(what, std::move(result), mesh_to_json(mesh));
}

std::vector<FleetMesh> equivalence_fleet(std::uint64_t seed, std::size_t count) {
    constexpr std::array<std::size_t, 5> sizes{2, 4, 8, 16, 32};
    std::vector<FleetMesh> fleet;
    fleet.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t n = sizes[(k / 4) % sizes.size()];
        const std::uint64_t mesh_seed = seed + k;
        switch (k % 4) {
            case 0:
                fleet.push_back({"diagonal n=" + std::to_string(n),
                                 generate_square_mesh(n, SquarePattern::diagonal)});
                break;
            case 1:
                fleet.push_back({"crisscross n=" + std::to_string(n),
                                 generate_square_mesh(n, SquarePattern::crisscross)});
                break;
            case 2:
                fleet.push_back({"perturbed n=" + std::to_string(n) + " amplitude=0.25 seed=" +
                                     std::to_string(mesh_seed),
                                 generate_perturbed_mesh(n, 0.25, mesh_seed)});
                break;
            default:
                fleet.push_back({"perturbed n=" + std::to_string(n) + " amplitude=0.45 seed=" +
                                     std::to_string(mesh_seed),
                                 generate_perturbed_mesh(n, 0.45, mesh_seed)});
                break;
        }
    }
    return fleet;
}

FleetReport run_equivalence_fleet(std::uint64_t seed, std::size_t count,
                                  const EquivalenceOptions& options) {
    if (count < 1) {
        throw ValidationError("equivalence fleet needs at least one mesh");
    }
    FleetReport report;
    std::size_t k = 0;
    for (FleetMesh& entry : equivalence_fleet(seed, count)) {
        EquivalenceOptions per_mesh = options;
        per_mesh.data_seed = seed + k++;
        EquivalenceResult result = require_equivalence(entry.mesh, entry.label, per_mesh);
        report.worst_matrix_rel = std::max(report.worst_matrix_rel, result.matrix.max_rel);
        report.worst_rhs_abs = std::max(report.worst_rhs_abs, result.rhs.max_abs);
        report.obtuse_triangles += result.obtuse;
        report.results.push_back(std::move(result));
    }
    return report;
}

}  // namespace decp
