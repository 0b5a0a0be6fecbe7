#include "decpoisson/dual.hpp"
#include "decpoisson/errors.hpp"
#include "decpoisson/mesh_generators.hpp"

#include "support/test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

using namespace decp;

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

std::vector<TriangleMesh> sample_meshes() {
    std::vector<TriangleMesh> meshes;
    meshes.push_back(oracle::single_equilateral());
    meshes.push_back(oracle::single_obtuse());
    meshes.push_back(oracle::equilateral_rhombus());
    meshes.push_back(generate_square_mesh(4, SquarePattern::diagonal));
    meshes.push_back(generate_square_mesh(3, SquarePattern::crisscross));
    meshes.push_back(generate_perturbed_mesh(8, 0.3, 1));
    meshes.push_back(generate_perturbed_mesh(6, 0.45, 21));
    return meshes;
}

}  // namespace

TEST(Circumcenter, Examples) {
    const Point right = circumcenter({0, 0}, {1, 0}, {0, 1});
    EXPECT_NEAR(right.x, 0.5, 1e-15);
    EXPECT_NEAR(right.y, 0.5, 1e-15);

    const Point eq = circumcenter({0, 0}, {1, 0}, {0.5, kSqrt3 / 2});
    EXPECT_NEAR(eq.x, 0.5, 1e-15);
    EXPECT_NEAR(eq.y, 0.28867513459481288, 1e-15);

    const Point flat = circumcenter({0, 0}, {2, 0}, {1, 1});
    EXPECT_NEAR(flat.x, 1.0, 1e-15);
    EXPECT_NEAR(flat.y, 0.0, 1e-15);

    const Point obtuse = circumcenter({0, 0}, {1, 0}, {0.5, 0.2});
    EXPECT_NEAR(obtuse.x, 0.5, 1e-15);
    EXPECT_NEAR(obtuse.y, -21.0 / 40.0, 1e-14);

    EXPECT_THROW((void)circumcenter({0, 0}, {1, 1}, {2, 2}), DegenerateTriangle);
}

TEST(Circumcenter, EquidistantAndMatchesBarycentricFormula) {
    const TriangleMesh mesh = generate_perturbed_mesh(6, 0.45, 2);
    for (const Triangle& t : mesh.triangles()) {
        const Point a = mesh.position(t.vertices[0]);
        const Point b = mesh.position(t.vertices[1]);
        const Point c = mesh.position(t.vertices[2]);
        const Point center = circumcenter(a, b, c);
        const Point expected = oracle::barycentric_circumcenter(a, b, c);
        EXPECT_NEAR(center.x, expected.x, 1e-13);
        EXPECT_NEAR(center.y, expected.y, 1e-13);
        EXPECT_NEAR(distance(center, a), distance(center, b), 1e-13);
        EXPECT_NEAR(distance(center, a), distance(center, c), 1e-13);
    }
}

TEST(SignedDualRatios, Equilateral) {
    const auto r = signed_dual_ratios(oracle::single_equilateral(), 0);
    for (double value : r) {
        EXPECT_NEAR(value, kSqrt3 / 6, 1e-15);
    }
}

TEST(SignedDualRatios, RightIsoscelesHypotenuseIsZero) {
    const TriangleMesh mesh = oracle::single_right_isoceles();
    const auto r = signed_dual_ratios(mesh, 0);
    // Vertex 0 is the right angle; its opposite edge is the hypotenuse.
    EXPECT_EQ(mesh.triangle(0).vertices[0], 0u);
    EXPECT_NEAR(r[0], 0.0, 1e-16);
    EXPECT_NEAR(r[1], 0.5, 1e-15);
    EXPECT_NEAR(r[2], 0.5, 1e-15);
}

TEST(SignedDualRatios, ObtuseCarriesSign) {
    const TriangleMesh mesh = oracle::single_obtuse();
    const auto r = signed_dual_ratios(mesh, 0);
    EXPECT_NEAR(r[0], 1.25, 1e-14);
    EXPECT_NEAR(r[1], 1.25, 1e-14);
    EXPECT_NEAR(r[2], -21.0 / 40.0, 1e-14);
}

TEST(SignedDualRatios, SignLawAgainstLawOfCosines) {
    // Ratio negative exactly when the opposite angle is obtuse; equal to cot/2.
    for (const TriangleMesh& mesh : sample_meshes()) {
        for (Index t = 0; t < mesh.num_triangles(); ++t) {
            const auto r = signed_dual_ratios(mesh, t);
            for (int p = 0; p < 3; ++p) {
                const double angle = oracle::law_of_cosines_angle(mesh, t, p);
                EXPECT_NEAR(r[p], 0.5 / std::tan(angle), 1e-12);
                EXPECT_NEAR(r[p], oracle::oracle_ratio(mesh, t, p), 1e-12);
                if (angle > std::numbers::pi / 2 + 1e-9) {
                    EXPECT_LT(r[p], 0.0);
                } else if (angle < std::numbers::pi / 2 - 1e-9) {
                    EXPECT_GT(r[p], 0.0);
                }
            }
        }
    }
}

TEST(SignedDualRatios, ScaleAndTranslationInvariant) {
    const TriangleMesh mesh = generate_perturbed_mesh(4, 0.4, 8);
    std::vector<Point> moved;
    for (Point p : mesh.positions()) {
        moved.push_back({3.5 * p.x - 7.0, 3.5 * p.y + 2.0});
    }
    std::vector<TriangleIndices> tris;
    for (const Triangle& t : mesh.triangles()) {
        tris.push_back(t.vertices);
    }
    const TriangleMesh scaled = build_mesh(moved, tris);
    const DualComplex a = build_dual(mesh);
    const DualComplex b = build_dual(scaled);
    for (Index t = 0; t < mesh.num_triangles(); ++t) {
        for (int p = 0; p < 3; ++p) {
            EXPECT_NEAR(a.ratios[t][p], b.ratios[t][p], 1e-12);
            EXPECT_NEAR(3.5 * a.dual_lengths[t][p], b.dual_lengths[t][p], 1e-12);
            EXPECT_NEAR(3.5 * 3.5 * a.kite_areas[t][p], b.kite_areas[t][p], 1e-12);
        }
    }
}

TEST(BoxAreas, Examples) {
    const TriangleMesh eq = oracle::single_equilateral();
    const DualComplex dual = build_dual(eq);
    for (double area : dual.box_areas) {
        EXPECT_NEAR(area, 0.14433756729740644, 1e-15);
    }

    const TriangleMesh cc1 = generate_square_mesh(1, SquarePattern::crisscross);
    EXPECT_NEAR(build_dual(cc1).box_areas[4], 0.5, 1e-15);
}

TEST(BoxAreas, KitesPartitionTrianglesAndBoxesPartitionDomain) {
    for (const TriangleMesh& mesh : sample_meshes()) {
        const DualComplex dual = build_dual(mesh);
        double kite_total = 0.0;
        for (Index t = 0; t < mesh.num_triangles(); ++t) {
            const auto& k = dual.kite_areas[t];
            EXPECT_NEAR(k[0] + k[1] + k[2], mesh.triangle(t).area, 1e-15);
            kite_total += k[0] + k[1] + k[2];
        }
        double box_total = 0.0;
        for (double b : dual.box_areas) {
            box_total += b;
        }
        EXPECT_NEAR(kite_total, mesh.total_area(), 1e-12);
        EXPECT_NEAR(box_total, mesh.total_area(), 1e-12);
    }
    for (std::size_t n : {2u, 7u, 16u}) {
        for (SquarePattern p : {SquarePattern::diagonal, SquarePattern::crisscross}) {
            const TriangleMesh mesh = generate_square_mesh(n, p);
            double total = 0.0;
            for (double b : build_dual(mesh).box_areas) {
                total += b;
            }
            EXPECT_NEAR(total, 1.0, 1e-12);
        }
    }
}

TEST(BoxAreas, KiteMatchesPerpendicularFootConstruction) {
    // Kite at corner p = two right triangles (x_p, m, C) and (x_p, C, m'), each
    // with legs |x_p m| = l/2 and the signed dual length e.
    const TriangleMesh mesh = generate_perturbed_mesh(6, 0.45, 4);
    const DualComplex dual = build_dual(mesh);
    for (Index t = 0; t < mesh.num_triangles(); ++t) {
        const Triangle& tri = mesh.triangle(t);
        for (int p = 0; p < 3; ++p) {
            const int q = (p + 1) % 3;
            const int r = (p + 2) % 3;
            const double l_r = mesh.edge(tri.edges[r]).length;  // edge (p, q)
            const double l_q = mesh.edge(tri.edges[q]).length;  // edge (r, p)
            const double expected = 0.5 * (0.5 * l_r) * (oracle::oracle_ratio(mesh, t, r) * l_r) +
                                    0.5 * (0.5 * l_q) * (oracle::oracle_ratio(mesh, t, q) * l_q);
            EXPECT_NEAR(dual.kite_areas[t][p], expected, 1e-14);
        }
    }
}

TEST(WellCentered, Reports) {
    const TriangleMesh rhombus = oracle::equilateral_rhombus();
    const auto eq = well_centered_report(rhombus, build_dual(rhombus));
    EXPECT_EQ(eq.offenders.size(), 0u);
    EXPECT_EQ(eq.num_well_centered, 2u);
    EXPECT_NEAR(eq.min_ratio, kSqrt3 / 6, 1e-15);

    const TriangleMesh diag = generate_square_mesh(4, SquarePattern::diagonal);
    const auto d = well_centered_report(diag, build_dual(diag));
    EXPECT_EQ(d.offenders.size(), diag.num_triangles());
    EXPECT_EQ(d.num_right, diag.num_triangles());
    EXPECT_EQ(d.num_obtuse, 0u);

    const TriangleMesh perturbed = generate_perturbed_mesh(8, 0.3, 1);
    const DualComplex dual = build_dual(perturbed);
    const auto p = well_centered_report(perturbed, dual);
    EXPECT_GT(p.num_obtuse, 0u);
    for (Index t : p.offenders) {
        int negatives = 0;
        for (double r : dual.ratios[t]) {
            negatives += r < -kWellCenteredTolerance ? 1 : 0;
        }
        EXPECT_LE(negatives, 1);
    }
    EXPECT_LT(p.min_ratio, 0.0);
}

TEST(Subdivision, SingleTriangle) {
    const auto csd = circumcentric_subdivision(oracle::single_equilateral());
    EXPECT_EQ(csd.vertices.size(), 7u);
    EXPECT_EQ(csd.triangles.size(), 6u);
    const TriangleMesh sub = csd.to_mesh();
    EXPECT_EQ(sub.num_vertices(), 7u);
    EXPECT_EQ(sub.num_triangles(), 6u);
    EXPECT_NEAR(sub.total_area(), kSqrt3 / 4, 1e-15);
}

TEST(Subdivision, TwoTriangleCounts) {
    // 4 vertices + 5 edges + 2 triangles = 11 vertices, 12 triangles.
    const TriangleMesh rhombus = oracle::equilateral_rhombus();
    const auto csd = circumcentric_subdivision(rhombus);
    EXPECT_EQ(csd.vertices.size(), 11u);
    EXPECT_EQ(csd.triangles.size(), 12u);
    const TriangleMesh sub = csd.to_mesh();
    EXPECT_EQ(sub.euler_characteristic(), 1);
    EXPECT_NEAR(sub.total_area(), rhombus.total_area(), 1e-15);
}

TEST(Subdivision, RightTrianglesHaveDegeneratePieces) {
    // The circumcenter of a right triangle is the hypotenuse midpoint.
    EXPECT_THROW((void)circumcentric_subdivision(generate_square_mesh(1, SquarePattern::diagonal)),
                 DegenerateSubdivisionSimplex);
}

TEST(Subdivision, ObtuseParentsCarryNegativePieces) {
    const TriangleMesh mesh = oracle::single_obtuse();
    const auto csd = circumcentric_subdivision(mesh);
    double total = 0.0;
    int negative = 0;
    for (double a : csd.signed_areas) {
        total += a;
        negative += a < 0.0 ? 1 : 0;
    }
    EXPECT_NEAR(total, mesh.total_area(), 1e-15);
    EXPECT_EQ(negative, 2);
    EXPECT_THROW((void)csd.to_mesh(), DegenerateSubdivisionSimplex);
}

TEST(DualTable, MentionsEveryTriangle) {
    const TriangleMesh mesh = oracle::equilateral_rhombus();
    std::ostringstream out;
    write_dual_table(out, mesh, build_dual(mesh));
    const std::string text = out.str();
    EXPECT_NE(text.find("circumcenter"), std::string::npos);
    EXPECT_NE(text.find("box"), std::string::npos);
}
