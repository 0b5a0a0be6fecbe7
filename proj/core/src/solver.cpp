#include "decpoisson/solver.hpp"

#include "decpoisson/errors.hpp"
#include "decpoisson/format.hpp"
#include "decpoisson/quadrature.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <string>

namespace decp {

namespace {

double dot_product(std::span<const double> a, std::span<const double> b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sum += a[i] * b[i];
    }
    return sum;
}

double residual_norm(const RealMatrix& a, std::span<const double> x, std::span<const double> b) {
    const std::vector<double> ax = a.multiply(x);
    double sum = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        const double r = b[i] - ax[i];
        sum += r * r;
    }
    return std::sqrt(sum);
}

void check_nodal(const TriangleMesh& mesh, std::span<const double> nodal) {
    if (nodal.size() != mesh.num_vertices()) {
        throw DimensionMismatch("nodal vector has " + std::to_string(nodal.size()) +
                                " entries, mesh has " + std::to_string(mesh.num_vertices()) +
                                " vertices");
    }
}

}  // namespace

SolveReport solve_cg(const LinearSystem& system, const SolverOptions& options) {
    if (!(options.tolerance > 0.0)) {
        throw ValidationError("solver tolerance must be positive");
    }
    const auto start = std::chrono::steady_clock::now();
    const RealMatrix& a = system.matrix;
    const std::span<const double> b = system.rhs;
    const std::size_t n = system.size();
    if (a.rows() != n || a.cols() != n) {
        throw DimensionMismatch("solve_cg: matrix and rhs sizes differ");
    }
    const std::size_t max_iter = options.max_iterations.value_or(10 * n);

    SolveReport report;
    report.method = system.method;
    std::vector<double> x(n, 0.0);
    const double b_norm = std::sqrt(dot_product(b, b));

    if (b_norm == 0.0) {
        report.solution = expand_to_global(system, x);
        report.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report;
    }

    std::vector<double> r(b.begin(), b.end());
    std::vector<double> p = r;
    double rr = dot_product(r, r);
    const double target = options.tolerance * b_norm;
    std::size_t it = 0;
    while (std::sqrt(rr) > target) {
        if (it == max_iter) {
            throw MaxIterations("conjugate gradients did not reach relative residual " +
                                std::to_string(options.tolerance) + " in " +
                                std::to_string(max_iter) + " iterations (at " +
                                std::to_string(std::sqrt(rr) / b_norm) + ")");
        }
        const std::vector<double> ap = a.multiply(std::span<const double>(p));
        const double curvature = dot_product(p, ap);
        if (!(curvature > 0.0)) {
            throw NotPositiveDefinite("conjugate gradients met p^T A p = " +
                                          std::to_string(curvature) + " at iteration " +
                                          std::to_string(it + 1),
                                      it + 1);
        }
        const double alpha = rr / curvature;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        const double rr_next = dot_product(r, r);
        const double beta = rr_next / rr;
        rr = rr_next;
        for (std::size_t i = 0; i < n; ++i) {
            p[i] = r[i] + beta * p[i];
        }
        ++it;
    }

    report.iterations = it;
    report.relative_residual = residual_norm(a, x, b) / b_norm;
    report.solution = expand_to_global(system, x);
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

Point interpolant_gradient(const TriangleMesh& mesh, Index t, std::span<const double> nodal) {
    const auto& v = mesh.triangle(t).vertices;
    const Point e1 = mesh.position(v[1]) - mesh.position(v[0]);
    const Point e2 = mesh.position(v[2]) - mesh.position(v[0]);
    const double du1 = nodal[v[1]] - nodal[v[0]];
    const double du2 = nodal[v[2]] - nodal[v[0]];
    // Solve [e1; e2] g = [du1; du2] by Cramer's rule.
    const double det = cross(e1, e2);
    return {(du1 * e2.y - du2 * e1.y) / det, (e1.x * du2 - e2.x * du1) / det};
}

double energy_norm(const TriangleMesh& mesh, std::span<const double> nodal) {
    check_nodal(mesh, nodal);
    double sum = 0.0;
    for (Index t = 0; t < mesh.num_triangles(); ++t) {
        const Point g = interpolant_gradient(mesh, t, nodal);
        sum += mesh.triangle(t).area * dot(g, g);
    }
    return std::sqrt(sum);
}

double l2_error(const TriangleMesh& mesh, std::span<const double> nodal,
                const ScalarField& reference, int quadrature_degree) {
    check_nodal(mesh, nodal);
    double sum = 0.0;
    for (Index t = 0; t < mesh.num_triangles(); ++t) {
        const auto& v = mesh.triangle(t).vertices;
        const Point x0 = mesh.position(v[0]);
        const Point g = interpolant_gradient(mesh, t, nodal);
        auto sq_error = [&](Point x) {
            const double interpolant = nodal[v[0]] + dot(g, x - x0);
            const double e = interpolant - reference(x);
            return e * e;
        };
        sum += integrate_triangle(x0, mesh.position(v[1]), mesh.position(v[2]), quadrature_degree,
                                  sq_error);
    }
    return std::sqrt(sum);
}

double energy_error(const TriangleMesh& mesh, std::span<const double> nodal,
                    const VectorField& reference_gradient, int quadrature_degree) {
    check_nodal(mesh, nodal);
    double sum = 0.0;
    for (Index t = 0; t < mesh.num_triangles(); ++t) {
        const auto& v = mesh.triangle(t).vertices;
        const Point g = interpolant_gradient(mesh, t, nodal);
        auto sq_error = [&](Point x) {
            const Point e = g - reference_gradient(x);
            return dot(e, e);
        };
        sum += integrate_triangle(mesh.position(v[0]), mesh.position(v[1]), mesh.position(v[2]),
                                  quadrature_degree, sq_error);
    }
    return std::sqrt(sum);
}

double max_nodal_error(const TriangleMesh& mesh, std::span<const double> nodal,
                       const ScalarField& reference) {
    check_nodal(mesh, nodal);
    double worst = 0.0;
    for (Index v = 0; v < mesh.num_vertices(); ++v) {
        worst = std::max(worst, std::abs(nodal[v] - reference(mesh.position(v))));
    }
    return worst;
}

void attach_errors(SolveReport& report, const TriangleMesh& mesh,
                   const ManufacturedSolution& exact, int quadrature_degree) {
    report.energy_error = energy_error(mesh, report.solution, exact.grad_u, quadrature_degree);
    report.l2_error = l2_error(mesh, report.solution, exact.u, quadrature_degree);
    report.max_nodal_error = max_nodal_error(mesh, report.solution, exact.u);
}

void write_report(std::ostream& out, const SolveReport& report) {
    out << "method = " << to_string(report.method) << '\n';
    out << "unknowns = " << report.solution.size() << '\n';
    out << "iterations = " << report.iterations << '\n';
    out << "relative_residual = " << format_double(report.relative_residual) << '\n';
    out << "seconds = " << format_double(report.seconds) << '\n';
    if (report.energy_error) {
        out << "energy_error = " << format_double(*report.energy_error) << '\n';
    }
    if (report.l2_error) {
        out << "l2_error = " << format_double(*report.l2_error) << '\n';
    }
    if (report.max_nodal_error) {
        out << "max_nodal_error = " << format_double(*report.max_nodal_error) << '\n';
    }
}

void write_solution_csv(std::ostream& out, const TriangleMesh& mesh,
                        std::span<const double> nodal) {
    check_nodal(mesh, nodal);
    out << "vertex,x,y,value\n";
    for (Index v = 0; v < mesh.num_vertices(); ++v) {
        const Point p = mesh.position(v);
        out << v << ',' << format_double(p.x) << ',' << format_double(p.y) << ','
            << format_double(nodal[v]) << '\n';
    }
}

}  // namespace decp
