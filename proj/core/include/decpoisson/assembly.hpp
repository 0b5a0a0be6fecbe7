#pragma once

#include "decpoisson/dual.hpp"
#include "decpoisson/fields.hpp"
#include "decpoisson/mesh.hpp"
#include "decpoisson/sparse.hpp"

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace decp {

enum class Method { dec, fem, box };

[[nodiscard]] std::string_view to_string(Method method);
[[nodiscard]] std::optional<Method> parse_method(std::string_view name);

/// Interior-only system after homogeneous Dirichlet elimination.
struct LinearSystem {
    RealMatrix matrix;                     ///< n_int x n_int, symmetric
    std::vector<double> rhs;
    std::vector<Index> interior_to_global;
    std::vector<Index> global_to_interior; ///< TriangleMesh::npos on the boundary
    Method method = Method::dec;

    [[nodiscard]] std::size_t size() const noexcept { return rhs.size(); }
    [[nodiscard]] std::size_t num_global() const noexcept { return global_to_interior.size(); }
};

/// Linear-element weights d_p = l_q l_r cos(theta_p) / (4 |t|), with (p, q, r)
/// a cyclic permutation of (0, 1, 2) and l_q, l_r the two edges at corner p.
[[nodiscard]] std::array<double, 3> fem_local_weights(const TriangleMesh& mesh, Index t);

/// Full N0 x N0 linear-element stiffness from the per-triangle weights: edge
/// (q, r) opposite corner p receives -d_p off the diagonal.
[[nodiscard]] RealMatrix assemble_fem(const TriangleMesh& mesh);

/// Full DEC Laplacian -D1_dual * star1 * D0 by sparse composition.
[[nodiscard]] RealMatrix assemble_dec(const TriangleMesh& mesh, const DualComplex& dual);

/// Same composition with a caller-supplied 1-form Hodge star.
[[nodiscard]] RealMatrix assemble_dec(const TriangleMesh& mesh, const RealMatrix& star1);

/// Entry v = |b_v| f(x_v).
[[nodiscard]] std::vector<double> assemble_rhs_dec(const TriangleMesh& mesh,
                                                   const DualComplex& dual,
                                                   const ScalarField& f);

/// Entry v = |b_v| f_v for nodal data f.
[[nodiscard]] std::vector<double> assemble_rhs_dec(const TriangleMesh& mesh,
                                                   const DualComplex& dual,
                                                   std::span<const double> nodal_f);

/// Integrand that knows which box a point is integrated for. Lets box-wise
/// constant data be sampled without point location on box boundaries.
using BoxIntegrand = std::function<double(Index box_vertex, Point)>;

/// Entry v = integral of f over box b_v. Each kite is split into the triangles
/// (x_v, m, C) and (x_v, C, m') and integrated with a rule of the given degree;
/// signed kite pieces of obtuse triangles carry their sign.
[[nodiscard]] std::vector<double> assemble_rhs_box(const TriangleMesh& mesh,
                                                   const DualComplex& dual,
                                                   const BoxIntegrand& f,
                                                   int quadrature_degree = 2);
[[nodiscard]] std::vector<double> assemble_rhs_box(const TriangleMesh& mesh,
                                                   const DualComplex& dual,
                                                   const ScalarField& f,
                                                   int quadrature_degree = 2);

/// Removes boundary rows and columns. Throws NoInteriorVertices when nothing is left.
[[nodiscard]] LinearSystem apply_dirichlet(const RealMatrix& full, std::span<const double> rhs,
                                           const TriangleMesh& mesh, Method method);

/// Scatters interior values into a global vector with zero boundary entries.
[[nodiscard]] std::vector<double> expand_to_global(const LinearSystem& system,
                                                   std::span<const double> interior);

struct MatrixDifference {
    double max_abs = 0.0;
    double max_rel = 0.0;  ///< max_abs / max(max|A|, max|B|), 0 when both are empty
    Index row = 0;
    Index col = 0;
    double a_value = 0.0;
    double b_value = 0.0;
};

/// Entrywise comparison over the union of both sparsity patterns.
[[nodiscard]] MatrixDifference compare_matrices(const RealMatrix& a, const RealMatrix& b);

struct VectorDifference {
    double max_abs = 0.0;
    Index index = 0;
    double l2 = 0.0;
};

[[nodiscard]] VectorDifference compare_vectors(std::span<const double> a,
                                               std::span<const double> b);

struct MatrixChecks {
    double max_row_sum = 0.0;     ///< max |sum_j A_ij|
    double max_asymmetry = 0.0;   ///< max |A_ij - A_ji| / max|A|
    bool m_matrix = false;        ///< positive diagonal, nonpositive off-diagonal
};

[[nodiscard]] MatrixChecks check_stiffness(const RealMatrix& a);

}  // namespace decp
