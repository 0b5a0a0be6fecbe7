#pragma once

#include "decpoisson/assembly.hpp"
#include "decpoisson/fields.hpp"
#include "decpoisson/mesh.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace decp {

struct SolverOptions {
    double tolerance = 1e-10;                ///< on ||b - Ax|| / ||b||
    std::optional<std::size_t> max_iterations;  ///< default 10 * n_int
};

struct SolveReport {
    Method method = Method::dec;
    std::vector<double> solution;   ///< per vertex, exactly 0 on the boundary
    std::size_t iterations = 0;
    double relative_residual = 0.0; ///< recomputed from the final iterate
    double seconds = 0.0;
    // Filled by attach_errors when a reference solution is known.
    std::optional<double> energy_error;
    std::optional<double> l2_error;
    std::optional<double> max_nodal_error;
};

/// Unpreconditioned conjugate gradients from x = 0.
///
/// Throws MaxIterations when the tolerance is not met and NotPositiveDefinite
/// when a search direction has p^T A p <= 0.
[[nodiscard]] SolveReport solve_cg(const LinearSystem& system, const SolverOptions& options = {});

/// Square root of the Dirichlet integral of the piecewise-linear interpolant,
/// sqrt(sum_t |t| |grad v|_t^2).
[[nodiscard]] double energy_norm(const TriangleMesh& mesh, std::span<const double> nodal);

/// Constant gradient of the linear interpolant on triangle t.
[[nodiscard]] Point interpolant_gradient(const TriangleMesh& mesh, Index t,
                                         std::span<const double> nodal);

/// ||v_lin - reference||_{L2}, integrated triangle by triangle.
[[nodiscard]] double l2_error(const TriangleMesh& mesh, std::span<const double> nodal,
                              const ScalarField& reference, int quadrature_degree = 2);

/// ||grad v_lin - reference_gradient||_{L2}.
[[nodiscard]] double energy_error(const TriangleMesh& mesh, std::span<const double> nodal,
                                  const VectorField& reference_gradient,
                                  int quadrature_degree = 2);

/// max_v |v_v - reference(x_v)|.
[[nodiscard]] double max_nodal_error(const TriangleMesh& mesh, std::span<const double> nodal,
                                     const ScalarField& reference);

void attach_errors(SolveReport& report, const TriangleMesh& mesh,
                   const ManufacturedSolution& exact, int quadrature_degree = 2);

/// Flat "key = value" block.
void write_report(std::ostream& out, const SolveReport& report);

/// CSV "vertex,x,y,value" with a header line.
void write_solution_csv(std::ostream& out, const TriangleMesh& mesh,
                        std::span<const double> nodal);

}  // namespace decp
