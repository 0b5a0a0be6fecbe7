#pragma once

#include "decpoisson/mesh.hpp"

#include <array>
#include <iosfwd>
#include <vector>

namespace decp {

/// Circumcentric dual of a triangle mesh.
///
/// Per-triangle arrays are indexed by the local position p of Triangle, so
/// `ratios[t][p]` belongs to the edge opposite vertex p. Dual edge lengths are
/// signed: negative when the circumcenter lies across the edge from the
/// opposite vertex, which happens exactly for the edge facing an obtuse angle.
/// Kites are the quadrilaterals (x_p, m, C, m') cut from a triangle by its
/// circumcenter C and the midpoints of the two edges at x_p; their signed areas
/// partition the triangle whether or not C lies inside it.
struct DualComplex {
    std::vector<Point> circumcenters;                    ///< per triangle
    std::vector<Point> midpoints;                        ///< per edge
    std::vector<std::array<double, 3>> dual_lengths;     ///< signed e, per triangle edge
    std::vector<std::array<double, 3>> ratios;           ///< signed e / l, per triangle edge
    std::vector<std::array<double, 3>> kite_areas;       ///< signed, per triangle corner
    std::vector<double> edge_ratio;                      ///< sum of e / l over adjacent triangles
    std::vector<double> box_areas;                       ///< per vertex
    std::vector<char> well_centered;                     ///< per triangle
};

/// Ratios at or below this are treated as non-positive when auditing
/// well-centeredness; right triangles give a hypotenuse ratio of roundoff size.
inline constexpr double kWellCenteredTolerance = 1e-12;

[[nodiscard]] DualComplex build_dual(const TriangleMesh& mesh);

/// Signed ratios (e0/l0, e1/l1, e2/l2) of triangle t from the determinant of
/// the opposite edge's endpoints and the circumcenter.
[[nodiscard]] std::array<double, 3> signed_dual_ratios(const TriangleMesh& mesh, Index t,
                                                       Point center);
[[nodiscard]] std::array<double, 3> signed_dual_ratios(const TriangleMesh& mesh, Index t);

/// Signed kite areas of triangle t at its three corners (shoelace formula).
[[nodiscard]] std::array<double, 3> kite_areas(const TriangleMesh& mesh, Index t, Point center);

/// Box (dual cell) area per vertex, summed from kites.
[[nodiscard]] std::vector<double> box_areas(const TriangleMesh& mesh, const DualComplex& dual);

struct WellCenteredReport {
    std::size_t num_triangles = 0;
    std::size_t num_well_centered = 0;
    std::vector<Index> offenders;          ///< triangles with some ratio <= tolerance
    std::size_t num_obtuse = 0;            ///< offenders with a strictly negative ratio
    std::size_t num_right = 0;             ///< offenders whose worst ratio is ~0
    double min_ratio = 0.0;
    Index min_ratio_triangle = 0;
};

[[nodiscard]] WellCenteredReport well_centered_report(const TriangleMesh& mesh,
                                                      const DualComplex& dual);

/// Circumcentric subdivision: corners, edge midpoints and circumcenters as
/// vertices (ids N0 + e for midpoints, N0 + N1 + t for circumcenters) and six
/// triangles per parent, ordered by parent then corner.
///
/// Sub-triangles keep the orientation induced by their counterclockwise
/// parent, so `signed_areas` is negative for the pieces that fall outside an
/// obtuse parent. A sub-triangle of zero area (circumcenter on a midpoint,
/// i.e. a right triangle) throws DegenerateSubdivisionSimplex.
struct CircumcentricSubdivision {
    std::vector<Point> vertices;
    std::vector<TriangleIndices> triangles;
    std::vector<double> signed_areas;
    std::vector<Index> parent;

    /// The subdivision as a validated mesh. Only well-centered parents give a
    /// valid complex; otherwise the build_mesh error propagates.
    [[nodiscard]] TriangleMesh to_mesh() const;
};

[[nodiscard]] CircumcentricSubdivision circumcentric_subdivision(const TriangleMesh& mesh);

/// Text table of the dual complex: one section per entity kind.
void write_dual_table(std::ostream& out, const TriangleMesh& mesh, const DualComplex& dual);

}  // namespace decp
