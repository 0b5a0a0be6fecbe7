#pragma once

#include "decpoisson/dual.hpp"
#include "decpoisson/mesh.hpp"
#include "decpoisson/sparse.hpp"

#include <vector>

namespace decp {

enum class Complex { primal, dual };

/// Number of k-cells of the given complex. Dual k-cells are indexed by their
/// primal (2 - k)-simplex, so dual 0-cells are triangles and dual 2-cells are
/// vertices.
[[nodiscard]] std::size_t cell_count(const TriangleMesh& mesh, int degree, Complex complex);

/// Real-valued k-cochain (discrete k-form).
struct Cochain {
    int degree = 0;
    Complex complex = Complex::primal;
    std::vector<double> values;
};

/// Integer k-chain.
struct Chain {
    int degree = 0;
    Complex complex = Complex::primal;
    std::vector<int> coefficients;
};

/// Checks the length against the mesh; throws DimensionMismatch.
[[nodiscard]] Cochain make_cochain(const TriangleMesh& mesh, int degree, Complex complex,
                                   std::vector<double> values);
[[nodiscard]] Chain make_chain(const TriangleMesh& mesh, int degree, Complex complex,
                               std::vector<int> coefficients);

/// Pairing <w, c> = sum_j c_j w(sigma_j). Degrees and complexes must match.
[[nodiscard]] double evaluate(const Cochain& cochain, const Chain& chain);

/// del_2 : C_2 -> C_1. Column t has +1 on an edge whose canonical (low -> high)
/// orientation agrees with the one induced by triangle t, -1 otherwise.
[[nodiscard]] IncidenceMatrix boundary_2(const TriangleMesh& mesh);

/// del_1 : C_1 -> C_0. Column e has -1 at its low vertex and +1 at its high vertex.
[[nodiscard]] IncidenceMatrix boundary_1(const TriangleMesh& mesh);

/// D_0 = del_1^T, N1 x N0.
[[nodiscard]] IncidenceMatrix derivative_0(const TriangleMesh& mesh);

/// D_1 = del_2^T, N2 x N1.
[[nodiscard]] IncidenceMatrix derivative_1(const TriangleMesh& mesh);

/// Dual derivative from dual 1-cochains (indexed by primal edges) to dual
/// 2-cochains (indexed by primal vertices): -(D_0)^T, N0 x N1.
[[nodiscard]] IncidenceMatrix dual_derivative_1(const TriangleMesh& mesh);

/// Diagonal Hodge star on primal 1-cochains: entry e is the signed dual/primal
/// length ratio summed over the triangles adjacent to e.
[[nodiscard]] RealMatrix hodge_star_1(const TriangleMesh& mesh, const DualComplex& dual);

/// Diagonal Hodge star on primal 0-cochains: entry v is the box area |b_v|.
[[nodiscard]] RealMatrix hodge_star_0(const TriangleMesh& mesh, const DualComplex& dual);

/// Inverse of a diagonal star; throws DimensionMismatch when an entry is zero
/// or the matrix is not diagonal.
[[nodiscard]] RealMatrix inverse_diagonal(const RealMatrix& star);

/// Primal boundary of a 1- or 2-chain.
[[nodiscard]] Chain boundary(const TriangleMesh& mesh, const Chain& chain);

/// Primal exterior derivative of a 0- or 1-cochain.
[[nodiscard]] Cochain derivative(const TriangleMesh& mesh, const Cochain& cochain);

}  // namespace decp
