#include "decpoisson/assembly.hpp"

#include "decpoisson/calculus.hpp"
#include "decpoisson/errors.hpp"
#include "decpoisson/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace decp {

std::string_view to_string(Method method) {
    switch (method) {
        case Method::dec:
            return "dec";
        case Method::fem:
            return "fem";
        case Method::box:
            return "box";
    }
    return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
    if (name == "dec") {
        return Method::dec;
    }
    if (name == "fem") {
        return Method::fem;
    }
    if (name == "box") {
        return Method::box;
    }
    return std::nullopt;
}

std::array<double, 3> fem_local_weights(const TriangleMesh& mesh, Index t) {
    const Triangle& tri = mesh.triangle(t);
    const std::array<Point, 3> x{mesh.position(tri.vertices[0]), mesh.position(tri.vertices[1]),
                                 mesh.position(tri.vertices[2])};
    if (is_degenerate(x[0], x[1], x[2])) {
        throw DegenerateTriangle("fem_local_weights: triangle " + std::to_string(t) +
                                 " is degenerate");
    }
    const double area = 0.5 * std::abs(twice_signed_area(x[0], x[1], x[2]));
    std::array<double, 3> d{};
    for (int p = 0; p < 3; ++p) {
        const Point to_next = x[(p + 1) % 3] - x[p];
        const Point to_prev = x[(p + 2) % 3] - x[p];
        const double l_next = norm(to_next);
        const double l_prev = norm(to_prev);
        const double cos_theta = dot(to_next, to_prev) / (l_next * l_prev);
        d[p] = l_next * l_prev * cos_theta / (4.0 * area);
    }
    return d;
}

RealMatrix assemble_fem(const TriangleMesh& mesh) {
    std::vector<Triplet<double>> entries;
    entries.reserve(9 * mesh.num_triangles());
    for (Index t = 0; t < mesh.num_triangles(); ++t) {
        const auto& v = mesh.triangle(t).vertices;
        const auto d = fem_local_weights(mesh, t);
        for (int p = 0; p < 3; ++p) {
            const Index q = v[(p + 1) % 3];
            const Index r = v[(p + 2) % 3];
            entries.push_back({q, r, -d[p]});
            entries.push_back({r, q, -d[p]});
            entries.push_back({q, q, d[p]});
            entries.push_back({r, r, d[p]});
        }
    }
    return RealMatrix::from_triplets(mesh.num_vertices(), mesh.num_vertices(), std::move(entries));
}

RealMatrix assemble_dec(const TriangleMesh& mesh, const RealMatrix& star1) {
    const RealMatrix d0 = derivative_0(mesh).cast<double>();
    const RealMatrix dual_d1 = dual_derivative_1(mesh).cast<double>();
    return -(dual_d1 * (star1 * d0));
}

RealMatrix assemble_dec(const TriangleMesh& mesh, const DualComplex& dual) {
    return assemble_dec(mesh, hodge_star_1(mesh, dual));
}

std::vector<double> assemble_rhs_dec(const TriangleMesh& mesh, const DualComplex& dual,
                                     std::span<const double> nodal_f) {
    if (nodal_f.size() != mesh.num_vertices() || dual.box_areas.size() != mesh.num_vertices()) {
        throw DimensionMismatch("assemble_rhs_dec: nodal data does not match mesh vertices");
    }
    std::vector<double> rhs(mesh.num_vertices());
    for (Index v = 0; v < mesh.num_vertices(); ++v) {
        rhs[v] = dual.box_areas[v] * nodal_f[v];
    }
    return rhs;
}

std::vector<double> assemble_rhs_dec(const TriangleMesh& mesh, const DualComplex& dual,
                                     const ScalarField& f) {
    std::vector<double> nodal(mesh.num_vertices());
    for (Index v = 0; v < mesh.num_vertices(); ++v) {
        nodal[v] = f(mesh.position(v));
    }
    return assemble_rhs_dec(mesh, dual, nodal);
}

std::vector<double> assemble_rhs_box(const TriangleMesh& mesh, const DualComplex& dual,
                                     const BoxIntegrand& f, int quadrature_degree) {
    std::vector<double> rhs(mesh.num_vertices(), 0.0);
    for (Index t = 0; t < mesh.num_triangles(); ++t) {
        const Triangle& tri = mesh.triangle(t);
        const Point center = dual.circumcenters.at(t);
        for (int p = 0; p < 3; ++p) {
            const Index owner = tri.vertices[p];
            const Point corner = mesh.position(owner);
            const Point mid_next = dual.midpoints[tri.edges[(p + 2) % 3]];
            const Point mid_prev = dual.midpoints[tri.edges[(p + 1) % 3]];
            auto integrand = [&](Point x) { return f(owner, x); };
            rhs[owner] += integrate_triangle(corner, mid_next, center, quadrature_degree, integrand);
            rhs[owner] += integrate_triangle(corner, center, mid_prev, quadrature_degree, integrand);
        }
    }
    return rhs;
}

std::vector<double> assemble_rhs_box(const TriangleMesh& mesh, const DualComplex& dual,
                                     const ScalarField& f, int quadrature_degree) {
    return assemble_rhs_box(
        mesh, dual, [&f](Index, Point x) { return f(x); }, quadrature_degree);
}

LinearSystem apply_dirichlet(const RealMatrix& full, std::span<const double> rhs,
                             const TriangleMesh& mesh, Method method) {
    const std::size_t n = mesh.num_vertices();
    if (full.rows() != n || full.cols() != n || rhs.size() != n) {
        throw DimensionMismatch("apply_dirichlet: system does not match mesh with " +
                                std::to_string(n) + " vertices");
    }
    LinearSystem system;
    system.method = method;
    system.global_to_interior.assign(n, TriangleMesh::npos);
    for (Index v = 0; v < n; ++v) {
        if (!mesh.is_boundary_vertex(v)) {
            system.global_to_interior[v] = system.interior_to_global.size();
            system.interior_to_global.push_back(v);
        }
    }
    if (system.interior_to_global.empty()) {
        throw NoInteriorVertices("mesh has no interior vertices; the Dirichlet system is empty");
    }
    std::vector<Triplet<double>> entries;
    for (const auto& t : full.triplets()) {
        const Index r = system.global_to_interior[t.row];
        const Index c = system.global_to_interior[t.col];
        if (r != TriangleMesh::npos && c != TriangleMesh::npos) {
            entries.push_back({r, c, t.value});
        }
    }
    const std::size_t m = system.interior_to_global.size();
    system.matrix = RealMatrix::from_triplets(m, m, std::move(entries));
    system.rhs.resize(m);
    for (Index i = 0; i < m; ++i) {
        system.rhs[i] = rhs[system.interior_to_global[i]];
    }
    return system;
}

std::vector<double> expand_to_global(const LinearSystem& system, std::span<const double> interior) {
    if (interior.size() != system.size()) {
        throw DimensionMismatch("interior vector has the wrong length");
    }
    std::vector<double> global(system.num_global(), 0.0);
    for (Index i = 0; i < interior.size(); ++i) {
        global[system.interior_to_global[i]] = interior[i];
    }
    return global;
}

MatrixDifference compare_matrices(const RealMatrix& a, const RealMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch("compare_matrices: " + std::to_string(a.rows()) + " x " +
                                std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                                " x " + std::to_string(b.cols()));
    }
    MatrixDifference diff;
    bool first = true;
    auto consider = [&](Index r, Index c, double va, double vb) {
        const double delta = std::abs(va - vb);
        if (first || delta > diff.max_abs) {
            diff = {delta, 0.0, r, c, va, vb};
            first = false;
        }
    };
    const auto ap = a.row_ptr();
    const auto bp = b.row_ptr();
    const auto ac = a.col_idx();
    const auto bc = b.col_idx();
    const auto av = a.values();
    const auto bv = b.values();
    for (Index r = 0; r < a.rows(); ++r) {
        Index i = ap[r];
        Index j = bp[r];
        while (i < ap[r + 1] || j < bp[r + 1]) {
            if (j == bp[r + 1] || (i < ap[r + 1] && ac[i] < bc[j])) {
                consider(r, ac[i], av[i], 0.0);
                ++i;
            } else if (i == ap[r + 1] || bc[j] < ac[i]) {
                consider(r, bc[j], 0.0, bv[j]);
                ++j;
            } else {
                consider(r, ac[i], av[i], bv[j]);
                ++i;
                ++j;
            }
        }
    }
    const double scale = std::max(a.max_abs(), b.max_abs());
    diff.max_rel = scale > 0.0 ? diff.max_abs / scale : 0.0;
    return diff;
}

VectorDifference compare_vectors(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("compare_vectors: lengths " + std::to_string(a.size()) + " and " +
                                std::to_string(b.size()));
    }
    VectorDifference diff;
    double sum_sq = 0.0;
    for (Index i = 0; i < a.size(); ++i) {
        const double delta = std::abs(a[i] - b[i]);
        sum_sq += delta * delta;
        if (delta > diff.max_abs) {
            diff.max_abs = delta;
            diff.index = i;
        }
    }
    diff.l2 = std::sqrt(sum_sq);
    return diff;
}

MatrixChecks check_stiffness(const RealMatrix& a) {
    MatrixChecks checks;
    const double scale = a.max_abs();
    checks.m_matrix = true;
    for (Index r = 0; r < a.rows(); ++r) {
        double row_sum = 0.0;
        bool has_positive_diagonal = false;
        for (Index k = a.row_ptr()[r]; k < a.row_ptr()[r + 1]; ++k) {
            const Index c = a.col_idx()[k];
            const double v = a.values()[k];
            row_sum += v;
            if (c == r) {
                has_positive_diagonal = v > 0.0;
            } else if (v > 1e-14 * scale) {
                // Right angles leave roundoff-sized entries where the weight is zero.
                checks.m_matrix = false;
            }
            if (scale > 0.0) {
                checks.max_asymmetry =
                    std::max(checks.max_asymmetry, std::abs(v - a.at(c, r)) / scale);
            }
        }
        checks.m_matrix = checks.m_matrix && has_positive_diagonal;
        checks.max_row_sum = std::max(checks.max_row_sum, std::abs(row_sum));
    }
    return checks;
}

}  // namespace decp
