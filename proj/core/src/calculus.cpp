#include "decpoisson/calculus.hpp"

#include "decpoisson/errors.hpp"

#include <cmath>
#include <string>

namespace decp {

namespace {

const char* complex_name(Complex c) { return c == Complex::primal ? "primal" : "dual"; }

void check_degree(int degree) {
    if (degree < 0 || degree > 2) {
        throw DimensionMismatch("degree must be 0, 1 or 2, got " + std::to_string(degree));
    }
}

}  // namespace

std::size_t cell_count(const TriangleMesh& mesh, int degree, Complex complex) {
    check_degree(degree);
    const int simplex_dim = complex == Complex::primal ? degree : 2 - degree;
    switch (simplex_dim) {
        case 0:
            return mesh.num_vertices();
        case 1:
            return mesh.num_edges();
        default:
            return mesh.num_triangles();
    }
}

Cochain make_cochain(const TriangleMesh& mesh, int degree, Complex complex,
                     std::vector<double> values) {
    const std::size_t expected = cell_count(mesh, degree, complex);
    if (values.size() != expected) {
        throw DimensionMismatch(std::string(complex_name(complex)) + " " +
                                std::to_string(degree) + "-cochain needs " +
                                std::to_string(expected) + " values, got " +
                                std::to_string(values.size()));
    }
    return {degree, complex, std::move(values)};
}

Chain make_chain(const TriangleMesh& mesh, int degree, Complex complex,
                 std::vector<int> coefficients) {
    const std::size_t expected = cell_count(mesh, degree, complex);
    if (coefficients.size() != expected) {
        throw DimensionMismatch(std::string(complex_name(complex)) + " " +
                                std::to_string(degree) + "-chain needs " +
                                std::to_string(expected) + " coefficients, got " +
                                std::to_string(coefficients.size()));
    }
    return {degree, complex, std::move(coefficients)};
}

double evaluate(const Cochain& cochain, const Chain& chain) {
    if (cochain.degree != chain.degree || cochain.complex != chain.complex) {
        throw DimensionMismatch("cannot pair a " + std::string(complex_name(cochain.complex)) +
                                " " + std::to_string(cochain.degree) + "-cochain with a " +
                                complex_name(chain.complex) + " " +
                                std::to_string(chain.degree) + "-chain");
    }
    if (cochain.values.size() != chain.coefficients.size()) {
        throw DimensionMismatch("cochain and chain lengths differ");
    }
    // Neumaier summation: pairings of long chains should not depend on term order.
    double sum = 0.0;
    double compensation = 0.0;
    for (std::size_t j = 0; j < chain.coefficients.size(); ++j) {
        const double term = chain.coefficients[j] * cochain.values[j];
        const double next = sum + term;
        compensation += std::abs(sum) >= std::abs(term) ? (sum - next) + term : (term - next) + sum;
        sum = next;
    }
    return sum + compensation;
}

IncidenceMatrix boundary_2(const TriangleMesh& mesh) {
    std::vector<Triplet<int>> entries;
    entries.reserve(3 * mesh.num_triangles());
    for (Index t = 0; t < mesh.num_triangles(); ++t) {
        const Triangle& tri = mesh.triangle(t);
        // del [x0, x1, x2] = [x1, x2] - [x0, x2] + [x0, x1]; the face omitting x_p
        // is traversed x_{p+1} -> x_{p+2} in the induced orientation.
        for (int p = 0; p < 3; ++p) {
            const Index tail = tri.vertices[(p + 1) % 3];
            const Index head = tri.vertices[(p + 2) % 3];
            entries.push_back({tri.edges[p], t, tail < head ? 1 : -1});
        }
    }
    return IncidenceMatrix::from_triplets(mesh.num_edges(), mesh.num_triangles(),
                                          std::move(entries));
}

IncidenceMatrix boundary_1(const TriangleMesh& mesh) {
    std::vector<Triplet<int>> entries;
    entries.reserve(2 * mesh.num_edges());
    for (Index e = 0; e < mesh.num_edges(); ++e) {
        const Edge& edge = mesh.edge(e);
        entries.push_back({edge.vertices[0], e, -1});
        entries.push_back({edge.vertices[1], e, 1});
    }
    return IncidenceMatrix::from_triplets(mesh.num_vertices(), mesh.num_edges(),
                                          std::move(entries));
}

IncidenceMatrix derivative_0(const TriangleMesh& mesh) { return boundary_1(mesh).transpose(); }

IncidenceMatrix derivative_1(const TriangleMesh& mesh) { return boundary_2(mesh).transpose(); }

IncidenceMatrix dual_derivative_1(const TriangleMesh& mesh) {
    // (-1)^k (D_{k-1})^T with k = 1.
    return -derivative_0(mesh).transpose();
}

RealMatrix hodge_star_1(const TriangleMesh& mesh, const DualComplex& dual) {
    if (dual.edge_ratio.size() != mesh.num_edges()) {
        throw DimensionMismatch("dual complex does not match mesh edges");
    }
    return RealMatrix::diagonal(dual.edge_ratio);
}

RealMatrix hodge_star_0(const TriangleMesh& mesh, const DualComplex& dual) {
    if (dual.box_areas.size() != mesh.num_vertices()) {
        throw DimensionMismatch("dual complex does not match mesh vertices");
    }
    return RealMatrix::diagonal(dual.box_areas);
}

RealMatrix inverse_diagonal(const RealMatrix& star) {
    if (star.rows() != star.cols()) {
        throw DimensionMismatch("Hodge star must be square");
    }
    std::vector<double> inverse(star.rows(), 0.0);
    for (const auto& t : star.triplets()) {
        if (t.row != t.col) {
            throw DimensionMismatch("Hodge star is not diagonal");
        }
        inverse[t.row] = 1.0 / t.value;
    }
    for (Index i = 0; i < inverse.size(); ++i) {
        if (inverse[i] == 0.0) {
            throw DimensionMismatch("Hodge star has a zero diagonal entry at " +
                                    std::to_string(i));
        }
    }
    return RealMatrix::diagonal(inverse);
}

Chain boundary(const TriangleMesh& mesh, const Chain& chain) {
    if (chain.complex != Complex::primal || (chain.degree != 1 && chain.degree != 2)) {
        throw DimensionMismatch("boundary is defined here for primal 1- and 2-chains");
    }
    const IncidenceMatrix op = chain.degree == 2 ? boundary_2(mesh) : boundary_1(mesh);
    return make_chain(mesh, chain.degree - 1, Complex::primal, op.multiply(chain.coefficients));
}

Cochain derivative(const TriangleMesh& mesh, const Cochain& cochain) {
    if (cochain.complex != Complex::primal || (cochain.degree != 0 && cochain.degree != 1)) {
        throw DimensionMismatch("derivative is defined here for primal 0- and 1-cochains");
    }
    const IncidenceMatrix op = cochain.degree == 0 ? derivative_0(mesh) : derivative_1(mesh);
    return make_cochain(mesh, cochain.degree + 1, Complex::primal, op.multiply(cochain.values));
}

}  // namespace decp
