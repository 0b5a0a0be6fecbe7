#pragma once

// Test-only oracles. Nothing here calls the library's dual/assembly code paths;
// they recompute geometry from vertex positions with different formulas.

#include "decpoisson/mesh.hpp"
#include "decpoisson/sparse.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace decp::oracle {

/// Dense row-major matrix.
struct Dense {
    std::size_t n = 0;
    std::vector<double> a;

    explicit Dense(std::size_t size) : n(size), a(size * size, 0.0) {}
    double& operator()(std::size_t r, std::size_t c) { return a[r * n + c]; }
    double operator()(std::size_t r, std::size_t c) const { return a[r * n + c]; }
};

inline Dense to_dense(const RealMatrix& m) {
    Dense d(m.rows());
    for (const auto& t : m.triplets()) {
        d(t.row, t.col) = t.value;
    }
    return d;
}

/// Gaussian elimination with partial pivoting.
inline std::vector<double> dense_solve(Dense m, std::vector<double> b) {
    const std::size_t n = m.n;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        for (std::size_t r = k + 1; r < n; ++r) {
            if (std::abs(m(r, k)) > std::abs(m(pivot, k))) {
                pivot = r;
            }
        }
        if (m(pivot, k) == 0.0) {
            throw std::runtime_error("dense_solve: singular matrix");
        }
        if (pivot != k) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(m(k, c), m(pivot, c));
            }
            std::swap(b[k], b[pivot]);
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            const double factor = m(r, k) / m(k, k);
            for (std::size_t c = k; c < n; ++c) {
                m(r, c) -= factor * m(k, c);
            }
            b[r] -= factor * b[k];
        }
    }
    std::vector<double> x(n);
    for (std::size_t k = n; k-- > 0;) {
        double sum = b[k];
        for (std::size_t c = k + 1; c < n; ++c) {
            sum -= m(k, c) * x[c];
        }
        x[k] = sum / m(k, k);
    }
    return x;
}

/// Circumcenter from barycentric weights a^2 (b^2 + c^2 - a^2) etc.
inline Point barycentric_circumcenter(Point pa, Point pb, Point pc) {
    auto sq = [](Point u, Point v) { return (u.x - v.x) * (u.x - v.x) + (u.y - v.y) * (u.y - v.y); };
    const double a2 = sq(pb, pc);
    const double b2 = sq(pa, pc);
    const double c2 = sq(pa, pb);
    const double wa = a2 * (b2 + c2 - a2);
    const double wb = b2 * (a2 + c2 - b2);
    const double wc = c2 * (a2 + b2 - c2);
    const double w = wa + wb + wc;
    return {(wa * pa.x + wb * pb.x + wc * pc.x) / w, (wa * pa.y + wb * pb.y + wc * pc.y) / w};
}

/// Signed distance from p to the line through a, b; positive on the side of `toward`.
inline double signed_distance(Point p, Point a, Point b, Point toward) {
    const double nx = -(b.y - a.y);
    const double ny = b.x - a.x;
    const double len = std::hypot(nx, ny);
    const double side = nx * (toward.x - a.x) + ny * (toward.y - a.y);
    const double s = nx * (p.x - a.x) + ny * (p.y - a.y);
    return (side > 0 ? 1.0 : -1.0) * s / len;
}

/// Signed e/l for the edge opposite local vertex p of triangle t.
inline double oracle_ratio(const TriangleMesh& mesh, Index t, int p) {
    const auto& v = mesh.triangle(t).vertices;
    const Point x0 = mesh.position(v[0]);
    const Point x1 = mesh.position(v[1]);
    const Point x2 = mesh.position(v[2]);
    const std::array<Point, 3> x{x0, x1, x2};
    const Point c = barycentric_circumcenter(x0, x1, x2);
    const Point a = x[(p + 1) % 3];
    const Point b = x[(p + 2) % 3];
    return signed_distance(c, a, b, x[p]) / std::hypot(b.x - a.x, b.y - a.y);
}

/// Interior angle at local vertex p by the law of cosines.
inline double law_of_cosines_angle(const TriangleMesh& mesh, Index t, int p) {
    const auto& v = mesh.triangle(t).vertices;
    const Point a = mesh.position(v[p]);
    const Point b = mesh.position(v[(p + 1) % 3]);
    const Point c = mesh.position(v[(p + 2) % 3]);
    auto len = [](Point u, Point w) { return std::hypot(u.x - w.x, u.y - w.y); };
    const double opposite = len(b, c);
    const double s1 = len(a, b);
    const double s2 = len(a, c);
    return std::acos((s1 * s1 + s2 * s2 - opposite * opposite) / (2.0 * s1 * s2));
}

/// Vertex-by-vertex stencil: for each triangle [x0, xj, xk] (counterclockwise)
/// in the star of x0, row x0 gets
///   -(e_k/l_k) u_j + (e_j/l_j + e_k/l_k) u_0 - (e_j/l_j) u_k,
/// where e_k/l_k belongs to edge [x0, xj] (opposite xk).
inline Dense stencil_oracle(const TriangleMesh& mesh) {
    Dense a(mesh.num_vertices());
    for (Index x0 = 0; x0 < mesh.num_vertices(); ++x0) {
        for (Index t : mesh.vertex_star(x0)) {
            const auto& v = mesh.triangle(t).vertices;
            const int p0 = v[0] == x0 ? 0 : (v[1] == x0 ? 1 : 2);
            const int pj = (p0 + 1) % 3;
            const int pk = (p0 + 2) % 3;
            const double ratio_k = oracle_ratio(mesh, t, pk);  // edge [x0, xj]
            const double ratio_j = oracle_ratio(mesh, t, pj);  // edge [x0, xk]
            a(x0, v[pj]) += -ratio_k;
            a(x0, x0) += ratio_j + ratio_k;
            a(x0, v[pk]) += -ratio_j;
        }
    }
    return a;
}

inline std::vector<double> random_vector(std::size_t n, std::mt19937_64& rng,
                                         double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> v(n);
    for (double& x : v) {
        x = dist(rng);
    }
    return v;
}

inline std::vector<int> random_chain(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(-3, 3);
    std::vector<int> v(n);
    for (int& x : v) {
        x = dist(rng);
    }
    return v;
}

/// Two equilateral triangles of side 1 sharing the edge (0,0)-(1,0).
inline TriangleMesh equilateral_rhombus() {
    const double h = std::sqrt(3.0) / 2.0;
    return build_mesh({{0.0, 0.0}, {1.0, 0.0}, {0.5, h}, {0.5, -h}}, {{0, 1, 2}, {0, 3, 1}});
}

inline TriangleMesh single_equilateral() {
    return build_mesh({{0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0}}, {{0, 1, 2}});
}

inline TriangleMesh single_right_isoceles() {
    return build_mesh({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}}, {{0, 1, 2}});
}

inline TriangleMesh single_obtuse() {
    return build_mesh({{0.0, 0.0}, {1.0, 0.0}, {0.5, 0.2}}, {{0, 1, 2}});
}

}  // namespace decp::oracle
