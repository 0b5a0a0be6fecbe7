// dec_poisson: mesh generation, audits, solves, DEC/FEM comparison and
// convergence studies for the Poisson problem on triangle meshes.

#include "decpoisson/assembly.hpp"
#include "decpoisson/calculus.hpp"
#include "decpoisson/dual.hpp"
#include "decpoisson/errors.hpp"
#include "decpoisson/format.hpp"
#include "decpoisson/harness.hpp"
#include "decpoisson/mesh_generators.hpp"
#include "decpoisson/mesh_io.hpp"
#include "decpoisson/report.hpp"
#include "decpoisson/solver.hpp"

#include "CLI11.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace decp;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path + " for writing");
    }
    return out;
}

template <typename T>
void write_triplets_file(const std::string& path, const SparseMatrix<T>& m) {
    std::ofstream out = open_output(path);
    write_triplets(out, m);
}

void write_vector_file(const std::string& path, std::span<const double> v) {
    std::ofstream out = open_output(path);
    write_vector_triplets(out, v);
}

void print_audit(const TriangleMesh& mesh, const DualComplex& dual) {
    const WellCenteredReport wc = well_centered_report(mesh, dual);
    double kites = 0.0;
    for (const auto& k : dual.kite_areas) {
        kites += k[0] + k[1] + k[2];
    }
    double boxes = 0.0;
    for (double b : dual.box_areas) {
        boxes += b;
    }
    const double area = mesh.total_area();
    std::cout << "vertices = " << mesh.num_vertices() << '\n'
              << "edges = " << mesh.num_edges() << '\n'
              << "triangles = " << mesh.num_triangles() << '\n'
              << "interior_vertices = " << mesh.num_interior_vertices() << '\n'
              << "euler_characteristic = " << mesh.euler_characteristic() << '\n'
              << "flipped_on_input = " << mesh.flipped_triangles().size() << '\n'
              << "area = " << format_double(area) << '\n'
              << "kite_area_defect = " << format_double(kites - area) << '\n'
              << "box_area_defect = " << format_double(boxes - area) << '\n'
              << "well_centered = " << wc.num_well_centered << '\n'
              << "not_well_centered = " << wc.offenders.size() << '\n'
              << "right = " << wc.num_right << '\n'
              << "obtuse = " << wc.num_obtuse << '\n'
              << "min_ratio = " << format_double(wc.min_ratio) << '\n'
              << "min_ratio_triangle = " << wc.min_ratio_triangle << '\n';
}

void print_row_audit(const ConvergenceRow& row) {
    std::cerr << "level " << row.level << ": n = " << row.n << ", " << row.not_well_centered
              << " triangles not well-centered (" << row.obtuse << " obtuse)"
              << ", cg iterations " << row.dec.iterations << '\n';
}

std::optional<double> parse_constant(const std::string& text) {
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"DEC / FEM / box-method Poisson solver on 2D triangle meshes"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a structured mesh of the unit square");
    std::string shape = "square";
    std::size_t gen_n = 4;
    std::string gen_pattern = "diagonal";
    double gen_perturb = 0.0;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    gen->add_option("--shape", shape, "Domain shape")->check(CLI::IsMember({"square"}));
    gen->add_option("--n", gen_n, "Cells per side")->required()->check(CLI::PositiveNumber);
    gen->add_option("--pattern", gen_pattern, "diagonal or crisscross")
        ->check(CLI::IsMember({"diagonal", "crisscross"}));
    gen->add_option("--perturb", gen_perturb, "Interior vertex jitter as a fraction of h");
    gen->add_option("--seed", gen_seed, "Perturbation seed");
    gen->add_option("-o,--out", gen_out, "Output mesh file (JSON)")->required();

    // check
    auto* check = app.add_subcommand("check", "Audit a mesh and its circumcentric dual");
    std::string check_mesh;
    std::string check_table;
    check->add_option("mesh", check_mesh, "Mesh file")->required();
    check->add_option("--dual-table", check_table, "Write the dual complex as a text table");

    // solve
    auto* solve = app.add_subcommand("solve", "Solve -Laplace(u) = f with u = 0 on the boundary");
    std::string solve_mesh;
    std::string solve_f = "sine";
    std::string solve_method = "dec";
    double solve_tol = 1e-10;
    int solve_quadrature = 2;
    std::string solve_dump;
    solve->add_option("mesh", solve_mesh, "Mesh file")->required();
    solve->add_option("--f", solve_f,
                      "Manufactured solution name (sine, poly) or a constant source value");
    solve->add_option("--method", solve_method, "dec, fem or box")
        ->check(CLI::IsMember({"dec", "fem", "box"}));
    std::size_t solve_max_iter = 0;
    solve->add_option("--tol", solve_tol, "Relative residual tolerance");
    solve->add_option("--max-iter", solve_max_iter, "CG iteration cap (default 10 * unknowns)")
        ->check(CLI::PositiveNumber);
    solve->add_option("--quadrature", solve_quadrature, "Kite quadrature degree for --method box")
        ->check(CLI::IsMember({1, 2, 5}));
    solve->add_option("--dump-solution", solve_dump, "Write vertex,x,y,value CSV");

    // compare
    auto* compare = app.add_subcommand("compare", "Compare DEC and FEM/box matrices and rhs");
    std::string compare_mesh;
    std::string compare_export;
    std::uint64_t compare_seed = 1;
    compare->add_option("mesh", compare_mesh, "Mesh file")->required();
    compare->add_option("--export", compare_export,
                        "Prefix for triplet files of both matrices and right-hand sides");
    compare->add_option("--seed", compare_seed, "Seed of the box-wise constant rhs data");

    // converge
    auto* converge = app.add_subcommand("converge", "Convergence study on refined square meshes");
    ExperimentConfig config;
    std::string converge_pattern = "crisscross";
    std::string converge_rhs = "piecewise-constant";
    std::string converge_out;
    std::string converge_plot;
    converge->add_option("--pattern", converge_pattern, "diagonal or crisscross")
        ->check(CLI::IsMember({"diagonal", "crisscross"}));
    converge->add_option("--levels", config.levels, "Number of levels")->check(CLI::PositiveNumber);
    converge->add_option("--base-n", config.base_n, "Cells per side on the first level");
    converge->add_option("--perturb", config.perturb_amplitude, "Jitter amplitude (diagonal only)");
    converge->add_option("--seed", config.seed, "Perturbation seed");
    converge->add_option("--solution", config.solution, "sine or poly");
    converge->add_option("--quadrature", config.quadrature_degree, "Quadrature degree (1, 2, 5)");
    converge->add_option("--tol", config.solver_tolerance, "CG tolerance");
    converge->add_option("--box-rhs", converge_rhs, "piecewise-constant or quadrature")
        ->check(CLI::IsMember({"piecewise-constant", "quadrature"}));
    converge->add_option("--out", converge_out, "CSV output")->required();
    converge->add_option("--plot", converge_plot, "SVG log-log plot");

    // fleet
    auto* fleet = app.add_subcommand("fleet", "DEC/FEM/box equivalence over a seeded mesh fleet");
    std::uint64_t fleet_seed = 1;
    std::size_t fleet_count = 20;
    fleet->add_option("--seed", fleet_seed, "Fleet seed");
    fleet->add_option("--count", fleet_count, "Number of meshes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    try {
        if (*gen) {
            const SquarePattern pattern = *parse_square_pattern(gen_pattern);
            if (gen_perturb != 0.0 && pattern != SquarePattern::diagonal) {
                throw ValidationError("--perturb is only supported with --pattern diagonal");
            }
            const TriangleMesh mesh = gen_perturb != 0.0
                                          ? generate_perturbed_mesh(gen_n, gen_perturb, gen_seed)
                                          : generate_square_mesh(gen_n, pattern);
            save_mesh(mesh, gen_out);
            std::cout << "wrote " << gen_out << ": " << mesh.num_vertices() << " vertices, "
                      << mesh.num_triangles() << " triangles\n";
        } else if (*check) {
            const TriangleMesh mesh = load_mesh(check_mesh);
            const DualComplex dual = build_dual(mesh);
            print_audit(mesh, dual);
            if (!check_table.empty()) {
                std::ofstream out = open_output(check_table);
                write_dual_table(out, mesh, dual);
            }
        } else if (*solve) {
            const TriangleMesh mesh = load_mesh(solve_mesh);
            const DualComplex dual = build_dual(mesh);
            const Method method = *parse_method(solve_method);
            const auto exact = find_manufactured_solution(solve_f);
            ScalarField f;
            if (exact) {
                f = exact->f;
            } else if (const auto value = parse_constant(solve_f)) {
                f = constant_field(*value);
            } else {
                throw ValidationError("--f must be one of sine, poly or a number, got '" + solve_f +
                                      "'");
            }
            const RealMatrix matrix =
                method == Method::dec ? assemble_dec(mesh, dual) : assemble_fem(mesh);
            const std::vector<double> rhs = method == Method::box
                                                ? assemble_rhs_box(mesh, dual, f, solve_quadrature)
                                                : assemble_rhs_dec(mesh, dual, f);
            SolverOptions options;
            options.tolerance = solve_tol;
            if (solve_max_iter > 0) {
                options.max_iterations = solve_max_iter;
            }
            SolveReport report = solve_cg(apply_dirichlet(matrix, rhs, mesh, method), options);
            if (exact) {
                attach_errors(report, mesh, *exact, 5);
            }
            write_report(std::cout, report);
            if (!solve_dump.empty()) {
                std::ofstream out = open_output(solve_dump);
                write_solution_csv(out, mesh, report.solution);
            }
        } else if (*compare) {
            const TriangleMesh mesh = load_mesh(compare_mesh);
            EquivalenceOptions options;
            options.data_seed = compare_seed;
            const EquivalenceResult r = check_equivalence(mesh, compare_mesh, options);
            std::cout << "vertices = " << r.n_vertices << '\n'
                      << "triangles = " << r.n_triangles << '\n'
                      << "obtuse = " << r.obtuse << '\n'
                      << "stiffness_max_abs = " << format_double(r.matrix.max_abs) << '\n'
                      << "stiffness_max_rel = " << format_double(r.matrix.max_rel) << '\n'
                      << "stiffness_worst_entry = " << r.matrix.row << ' ' << r.matrix.col << '\n'
                      << "rhs_max_abs = " << format_double(r.rhs.max_abs) << '\n'
                      << "rhs_worst_vertex = " << r.rhs.index << '\n'
                      << "equivalent = " << (r.passed ? "yes" : "no") << '\n';
            if (!compare_export.empty()) {
                const DualComplex dual = build_dual(mesh);
                write_triplets_file(compare_export + "_dec.txt", assemble_dec(mesh, dual));
                write_triplets_file(compare_export + "_fem.txt", assemble_fem(mesh));
                write_triplets_file(compare_export + "_d0.txt", derivative_0(mesh));
                write_triplets_file(compare_export + "_star1.txt", hodge_star_1(mesh, dual));
                write_vector_file(compare_export + "_rhs_dec.txt",
                                  assemble_rhs_dec(mesh, dual, constant_field(1.0)));
                write_vector_file(compare_export + "_rhs_box.txt",
                                  assemble_rhs_box(mesh, dual, constant_field(1.0)));
            }
            if (!r.passed) {
                return kExitNumerical;
            }
        } else if (*converge) {
            config.pattern = *parse_square_pattern(converge_pattern);
            config.box_rhs = *parse_box_rhs(converge_rhs);
            std::vector<ConvergenceRow> rows;
            try {
                rows = run_convergence(config);
            } catch (const ConvergenceFailure& e) {
                if (!e.rows().empty()) {
                    emit_csv(e.rows(), converge_out);
                    std::cerr << "partial results (" << e.rows().size() << " levels) written to "
                              << converge_out << '\n';
                }
                throw;
            }
            for (const ConvergenceRow& row : rows) {
                print_row_audit(row);
            }
            emit_csv(rows, converge_out);
            if (!converge_plot.empty()) {
                emit_svg_plot(rows, converge_plot);
            }
            write_convergence_csv(std::cout, rows);
        } else if (*fleet) {
            const FleetReport report = run_equivalence_fleet(fleet_seed, fleet_count);
            write_fleet_report(std::cout, report);
        }
    } catch (const EquivalenceViolation& e) {
        std::cerr << "error: " << e.what() << '\n';
        const std::string dump = "equivalence_violation_mesh.json";
        if (std::ofstream out(dump); out) {
            out << e.mesh_json();
            std::cerr << "offending mesh written to " << dump << '\n';
        }
        return kExitNumerical;
    } catch (const NumericalError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return 0;
}
