#pragma once

#include "decpoisson/assembly.hpp"
#include "decpoisson/errors.hpp"
#include "decpoisson/mesh.hpp"
#include "decpoisson/mesh_generators.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace decp {

/// Right-hand side of the FEM-stiffness solve in a convergence study.
enum class BoxRhs {
    /// Box integrals of the box-wise constant data f(x_v) on b_v. The FEM and
    /// DEC systems are then identical, and so are their errors.
    piecewise_constant,
    /// Box integrals of f itself by kite quadrature.
    quadrature,
};

[[nodiscard]] std::string_view to_string(BoxRhs rhs);
[[nodiscard]] std::optional<BoxRhs> parse_box_rhs(std::string_view name);

struct ExperimentConfig {
    SquarePattern pattern = SquarePattern::crisscross;
    std::size_t levels = 4;          ///< meshes with n = base_n * 2^level
    std::size_t base_n = 4;
    double perturb_amplitude = 0.0;  ///< > 0 selects perturbed diagonal meshes
    std::uint64_t seed = 1;
    std::string solution = "sine";
    int quadrature_degree = 2;
    double solver_tolerance = 1e-10;
    std::optional<std::size_t> max_iterations;  ///< CG cap, default 10 * n_int
    BoxRhs box_rhs = BoxRhs::piecewise_constant;
};

/// Throws ValidationError when the configuration cannot run.
void validate(const ExperimentConfig& config);

struct MethodErrors {
    double energy = 0.0;
    double l2 = 0.0;
    double max_nodal = 0.0;
    std::size_t iterations = 0;
};

struct ConvergenceRow {
    std::size_t level = 0;  ///< 1-based
    std::size_t n = 0;
    double h = 0.0;
    std::size_t n_vertices = 0;
    std::size_t n_interior = 0;
    MethodErrors dec;
    MethodErrors fem;
    /// log2(e_{k-1} / e_k) of the DEC errors; empty on the first level.
    std::optional<double> order_energy;
    std::optional<double> order_l2;
    std::size_t not_well_centered = 0;
    std::size_t obtuse = 0;
};

/// A level failed; rows holds the levels completed before it.
class ConvergenceFailure : public NumericalError {
public:
    ConvergenceFailure(const std::string& what, std::vector<ConvergenceRow> rows)
        : NumericalError(what), rows_(std::move(rows)) {}

    [[nodiscard]] const std::vector<ConvergenceRow>& rows() const noexcept { return rows_; }

private:
    std::vector<ConvergenceRow> rows_;
};

/// Mesh of one level of the study.
[[nodiscard]] TriangleMesh level_mesh(const ExperimentConfig& config, std::size_t n);

/// Solves the manufactured problem on each level with the DEC system
/// (-D1_dual star1 D0, rhs |b_v| f(x_v)) and with the cotangent FEM stiffness
/// plus box rhs, and records errors against the exact solution.
[[nodiscard]] std::vector<ConvergenceRow> run_convergence(const ExperimentConfig& config);

/// Order between two successive errors of a halving sequence.
[[nodiscard]] double observed_order(double coarse_error, double fine_error);

// ---------------------------------------------------------------------------
// DEC / FEM / box equivalence

struct EquivalenceOptions {
    double matrix_tolerance = 1e-12;  ///< relative to max |A|
    double rhs_tolerance = 1e-13;     ///< absolute
    int quadrature_degree = 2;
    std::uint64_t data_seed = 0;      ///< box-wise constant rhs data
    /// Negates this edge's Hodge star entry before DEC assembly (self-test).
    std::optional<Index> fault_edge;
};

struct EquivalenceResult {
    std::string label;
    std::size_t n_vertices = 0;
    std::size_t n_triangles = 0;
    std::size_t obtuse = 0;
    MatrixDifference matrix;
    VectorDifference rhs;
    /// Edge with the largest off-diagonal stiffness discrepancy.
    Index worst_edge = 0;
    double worst_edge_difference = 0.0;
    bool passed = false;
};

class EquivalenceViolation : public NumericalError {
public:
    EquivalenceViolation(const std::string& what, EquivalenceResult result, std::string mesh_json)
        : NumericalError(what), result_(std::move(result)), mesh_json_(std::move(mesh_json)) {}

    [[nodiscard]] const EquivalenceResult& result() const noexcept { return result_; }
    /// The offending mesh as a JSON mesh document.
    [[nodiscard]] const std::string& mesh_json() const noexcept { return mesh_json_; }

private:
    EquivalenceResult result_;
    std::string mesh_json_;
};

/// Compares the DEC and FEM stiffness matrices and the DEC and box right-hand
/// sides for seeded box-wise constant data on one mesh. Never throws on a mismatch.
[[nodiscard]] EquivalenceResult check_equivalence(const TriangleMesh& mesh, std::string label,
                                                  const EquivalenceOptions& options = {});

/// check_equivalence that throws EquivalenceViolation naming the worst edge.
EquivalenceResult require_equivalence(const TriangleMesh& mesh, std::string label,
                                      const EquivalenceOptions& options = {});

struct FleetMesh {
    std::string label;
    TriangleMesh mesh;
};

/// count meshes cycling through diagonal, crisscross and two perturbation
/// strengths, with n in {2, 4, 8, 16, 32}.
[[nodiscard]] std::vector<FleetMesh> equivalence_fleet(std::uint64_t seed, std::size_t count);

struct FleetReport {
    std::vector<EquivalenceResult> results;
    double worst_matrix_rel = 0.0;
    double worst_rhs_abs = 0.0;
    std::size_t obtuse_triangles = 0;
};

/// Runs require_equivalence over equivalence_fleet(seed, count).
[[nodiscard]] FleetReport run_equivalence_fleet(std::uint64_t seed, std::size_t count,
                                                const EquivalenceOptions& options = {});

}  // namespace decp
