#include "decpoisson/dual.hpp"

#include "decpoisson/errors.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <ostream>
#include <string>

namespace decp {

namespace {

// det [[a.x, a.y, 1], [b.x, b.y, 1], [c.x, c.y, 1]]
double det3(Point a, Point b, Point c) { return twice_signed_area(a, b, c); }

std::array<Point, 3> corners(const TriangleMesh& mesh, Index t) {
    const auto& v = mesh.triangle(t).vertices;
    return {mesh.position(v[0]), mesh.position(v[1]), mesh.position(v[2])};
}

}  // namespace

std::array<double, 3> signed_dual_ratios(const TriangleMesh& mesh, Index t, Point center) {
    const auto x = corners(mesh, t);
    const Triangle& tri = mesh.triangle(t);
    std::array<double, 3> ratio{};
    for (int p = 0; p < 3; ++p) {
        // Rows (x_{p+1}, C, x_{p+2}). That determinant is positive for a
        // clockwise corner order; stored triangles are counterclockwise, hence
        // the minus sign.
        const Point tail = x[(p + 1) % 3];
        const Point head = x[(p + 2) % 3];
        const double l = mesh.edge(tri.edges[p]).length;
        ratio[p] = -det3(tail, center, head) / (l * l);
    }
    return ratio;
}

std::array<double, 3> signed_dual_ratios(const TriangleMesh& mesh, Index t) {
    const auto x = corners(mesh, t);
    return signed_dual_ratios(mesh, t, circumcenter(x[0], x[1], x[2]));
}

std::array<double, 3> kite_areas(const TriangleMesh& mesh, Index t, Point center) {
    const auto x = corners(mesh, t);
    std::array<double, 3> area{};
    for (int p = 0; p < 3; ++p) {
        const Point corner = x[p];
        const Point next = x[(p + 1) % 3];
        const Point prev = x[(p + 2) % 3];
        const std::array<Point, 4> kite{corner, midpoint(corner, next), center,
                                        midpoint(prev, corner)};
        area[p] = shoelace_area(kite);
    }
    return area;
}

std::vector<double> box_areas(const TriangleMesh& mesh, const DualComplex& dual) {
    std::vector<double> boxes(mesh.num_vertices(), 0.0);
    for (Index t = 0; t < mesh.num_triangles(); ++t) {
        const auto& v = mesh.triangle(t).vertices;
        for (int p = 0; p < 3; ++p) {
            boxes[v[p]] += dual.kite_areas[t][p];
        }
    }
    return boxes;
}

DualComplex build_dual(const TriangleMesh& mesh) {
    const std::size_t nt = mesh.num_triangles();
    const std::size_t ne = mesh.num_edges();
    DualComplex dual;
    dual.circumcenters.resize(nt);
    dual.dual_lengths.resize(nt);
    dual.ratios.resize(nt);
    dual.kite_areas.resize(nt);
    dual.well_centered.resize(nt);
    dual.midpoints.resize(ne);
    dual.edge_ratio.assign(ne, 0.0);

    for (Index e = 0; e < ne; ++e) {
        const Edge& edge = mesh.edge(e);
        dual.midpoints[e] = midpoint(mesh.position(edge.vertices[0]),
                                     mesh.position(edge.vertices[1]));
    }
    for (Index t = 0; t < nt; ++t) {
        const auto x = corners(mesh, t);
        const Point center = circumcenter(x[0], x[1], x[2]);
        dual.circumcenters[t] = center;
        dual.ratios[t] = signed_dual_ratios(mesh, t, center);
        dual.kite_areas[t] = kite_areas(mesh, t, center);
        const Triangle& tri = mesh.triangle(t);
        bool acute = true;
        for (int p = 0; p < 3; ++p) {
            dual.dual_lengths[t][p] = dual.ratios[t][p] * mesh.edge(tri.edges[p]).length;
            dual.edge_ratio[tri.edges[p]] += dual.ratios[t][p];
            acute = acute && dual.ratios[t][p] > kWellCenteredTolerance;
        }
        dual.well_centered[t] = acute ? 1 : 0;
    }
    dual.box_areas = box_areas(mesh, dual);
    return dual;
}

WellCenteredReport well_centered_report(const TriangleMesh& mesh, const DualComplex& dual) {
    WellCenteredReport report;
    report.num_triangles = mesh.num_triangles();
    report.min_ratio = std::numeric_limits<double>::infinity();
    for (Index t = 0; t < mesh.num_triangles(); ++t) {
        const auto& r = dual.ratios[t];
        const double worst = std::min({r[0], r[1], r[2]});
        if (worst < report.min_ratio) {
            report.min_ratio = worst;
            report.min_ratio_triangle = t;
        }
        if (dual.well_centered[t] != 0) {
            ++report.num_well_centered;
            continue;
        }
        report.offenders.push_back(t);
        if (worst < -kWellCenteredTolerance) {
            ++report.num_obtuse;
        } else {
            ++report.num_right;
        }
    }
    return report;
}

CircumcentricSubdivision circumcentric_subdivision(const TriangleMesh& mesh) {
    const std::size_t nv = mesh.num_vertices();
    const std::size_t ne = mesh.num_edges();
    const std::size_t nt = mesh.num_triangles();
    const DualComplex dual = build_dual(mesh);

    CircumcentricSubdivision csd;
    csd.vertices.reserve(nv + ne + nt);
    csd.vertices.assign(mesh.positions().begin(), mesh.positions().end());
    csd.vertices.insert(csd.vertices.end(), dual.midpoints.begin(), dual.midpoints.end());
    csd.vertices.insert(csd.vertices.end(), dual.circumcenters.begin(), dual.circumcenters.end());

    csd.triangles.reserve(6 * nt);
    for (Index t = 0; t < nt; ++t) {
        const Triangle& tri = mesh.triangle(t);
        const Index center = nv + ne + t;
        for (int p = 0; p < 3; ++p) {
            // Edge to the next corner is opposite the previous one, and vice versa.
            const Index corner = tri.vertices[p];
            const Index mid_next = nv + tri.edges[(p + 2) % 3];
            const Index mid_prev = nv + tri.edges[(p + 1) % 3];
            for (const TriangleIndices& sub :
                 {TriangleIndices{corner, mid_next, center}, TriangleIndices{corner, center, mid_prev}}) {
                const Point a = csd.vertices[sub[0]];
                const Point b = csd.vertices[sub[1]];
                const Point c = csd.vertices[sub[2]];
                if (is_degenerate(a, b, c)) {
                    throw DegenerateSubdivisionSimplex(
                        "circumcenter of triangle " + std::to_string(t) +
                        " lies on an edge midpoint; subdivision simplex is degenerate");
                }
                csd.triangles.push_back(sub);
                csd.signed_areas.push_back(0.5 * twice_signed_area(a, b, c));
                csd.parent.push_back(t);
            }
        }
    }
    return csd;
}

TriangleMesh CircumcentricSubdivision::to_mesh() const {
    for (std::size_t k = 0; k < triangles.size(); ++k) {
        if (signed_areas[k] <= 0.0) {
            throw DegenerateSubdivisionSimplex(
                "subdivision triangle " + std::to_string(k) + " of parent " +
                std::to_string(parent[k]) + " is inverted; parent is not well-centered");
        }
    }
    return build_mesh(vertices, triangles);
}

void write_dual_table(std::ostream& out, const TriangleMesh& mesh, const DualComplex& dual) {
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << std::setprecision(17);
    out << "# triangles: id circumcenter_x circumcenter_y ratio0 ratio1 ratio2 "
           "kite0 kite1 kite2 well_centered\n";
    for (Index t = 0; t < mesh.num_triangles(); ++t) {
        const Point c = dual.circumcenters[t];
        out << t << ' ' << c.x << ' ' << c.y;
        for (double r : dual.ratios[t]) {
            out << ' ' << r;
        }
        for (double k : dual.kite_areas[t]) {
            out << ' ' << k;
        }
        out << ' ' << (dual.well_centered[t] != 0 ? 1 : 0) << '\n';
    }
    out << "# edges: id v0 v1 midpoint_x midpoint_y hodge1 boundary\n";
    for (Index e = 0; e < mesh.num_edges(); ++e) {
        const Edge& edge = mesh.edge(e);
        out << e << ' ' << edge.vertices[0] << ' ' << edge.vertices[1] << ' '
            << dual.midpoints[e].x << ' ' << dual.midpoints[e].y << ' ' << dual.edge_ratio[e]
            << ' ' << (edge.boundary ? 1 : 0) << '\n';
    }
    out << "# vertices: id x y box_area boundary\n";
    for (Index v = 0; v < mesh.num_vertices(); ++v) {
        const Point p = mesh.position(v);
        out << v << ' ' << p.x << ' ' << p.y << ' ' << dual.box_areas[v] << ' '
            << (mesh.is_boundary_vertex(v) ? 1 : 0) << '\n';
    }
    out.flags(flags);
    out.precision(precision);
}

}  // namespace decp
