#include "decpoisson/dual.hpp"
#include "decpoisson/errors.hpp"
#include "decpoisson/mesh.hpp"
#include "decpoisson/mesh_generators.hpp"
#include "decpoisson/mesh_io.hpp"

#include "support/test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>

using namespace decp;

namespace {

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("decpoisson_test_" + name);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

}  // namespace

TEST(BuildMesh, SingleTriangleHasAllBoundaryEdges) {
    const TriangleMesh mesh = oracle::single_right_isoceles();
    EXPECT_EQ(mesh.num_vertices(), 3u);
    EXPECT_EQ(mesh.num_edges(), 3u);
    EXPECT_EQ(mesh.num_triangles(), 1u);
    for (const Edge& e : mesh.edges()) {
        EXPECT_TRUE(e.boundary);
    }
    EXPECT_EQ(mesh.num_interior_vertices(), 0u);
}

TEST(BuildMesh, SquareSplitByDiagonal) {
    const TriangleMesh mesh =
        build_mesh({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{0, 1, 2}, {0, 2, 3}});
    EXPECT_EQ(mesh.num_edges(), 5u);
    EXPECT_EQ(mesh.euler_characteristic(), 1);
    const Index diagonal = mesh.find_edge(0, 2);
    ASSERT_NE(diagonal, TriangleMesh::npos);
    EXPECT_FALSE(mesh.edge(diagonal).boundary);
    EXPECT_EQ(mesh.edge_triangles(diagonal).size(), 2u);
    EXPECT_EQ(mesh.find_edge(1, 3), TriangleMesh::npos);
}

TEST(BuildMesh, ClockwiseInputIsFlipped) {
    const TriangleMesh mesh = build_mesh({{0, 0}, {0, 1}, {1, 0}}, {{0, 1, 2}});
    EXPECT_DOUBLE_EQ(mesh.triangle(0).area, 0.5);
    EXPECT_GT(twice_signed_area(mesh.position(mesh.triangle(0).vertices[0]),
                                mesh.position(mesh.triangle(0).vertices[1]),
                                mesh.position(mesh.triangle(0).vertices[2])),
              0.0);
    ASSERT_EQ(mesh.flipped_triangles().size(), 1u);
    EXPECT_EQ(mesh.flipped_triangles()[0], 0u);
}

TEST(BuildMesh, EdgesAreCanonicalAndSorted) {
    const TriangleMesh mesh = generate_square_mesh(3, SquarePattern::crisscross);
    for (std::size_t e = 0; e < mesh.num_edges(); ++e) {
        EXPECT_LT(mesh.edge(e).vertices[0], mesh.edge(e).vertices[1]);
        EXPECT_NEAR(mesh.edge(e).length,
                    distance(mesh.position(mesh.edge(e).vertices[0]),
                             mesh.position(mesh.edge(e).vertices[1])),
                    1e-15);
        if (e > 0) {
            EXPECT_LT(mesh.edge(e - 1).vertices, mesh.edge(e).vertices);
        }
    }
}

TEST(BuildMesh, EdgesOppositeLocalVertices) {
    const TriangleMesh mesh = generate_perturbed_mesh(4, 0.3, 7);
    for (const Triangle& t : mesh.triangles()) {
        for (int p = 0; p < 3; ++p) {
            const auto& ev = mesh.edge(t.edges[p]).vertices;
            EXPECT_TRUE(std::find(ev.begin(), ev.end(), t.vertices[p]) == ev.end());
        }
    }
}

TEST(BuildMesh, RebuildIsIdempotent) {
    const TriangleMesh mesh = generate_perturbed_mesh(5, 0.4, 3);
    std::vector<Point> positions(mesh.positions().begin(), mesh.positions().end());
    std::vector<TriangleIndices> tris;
    for (const Triangle& t : mesh.triangles()) {
        tris.push_back(t.vertices);
    }
    const TriangleMesh again = build_mesh(positions, tris);
    EXPECT_TRUE(canonically_equal(mesh, again));
    EXPECT_TRUE(again.flipped_triangles().empty());
}

TEST(BuildMesh, Rejections) {
    EXPECT_THROW((void)build_mesh({{0, 0}, {1, 0}, {2, 0}}, {{0, 1, 2}}), DegenerateTriangle);
    EXPECT_THROW((void)build_mesh({{0, 0}, {1, 0}, {0, 1}}, {{0, 1, 1}}), DegenerateTriangle);
    EXPECT_THROW((void)build_mesh({{0, 0}, {1, 0}, {0, 1}}, {{0, 1, 2}, {1, 2, 0}}),
                 DuplicateTriangle);
    EXPECT_THROW((void)build_mesh({{0, 0}, {1, 0}, {0, 1}, {5, 5}}, {{0, 1, 2}}),
                 DanglingVertex);
    EXPECT_THROW((void)build_mesh({{0, 0}, {1, 0}, {0, 1}}, {{0, 1, 3}}), ValidationError);
    // Three triangles on one edge.
    EXPECT_THROW((void)build_mesh({{0, 0}, {1, 0}, {0.5, 1}, {0.5, -1}, {0.5, 2}},
                                  {{0, 1, 2}, {0, 3, 1}, {0, 1, 4}}),
                 NonManifoldEdge);
    // Two triangles touching only at a vertex.
    EXPECT_THROW((void)build_mesh({{0, 0}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}},
                                  {{0, 1, 2}, {0, 3, 4}}),
                 NonManifoldVertex);
}

TEST(BuildMesh, EulerCharacteristicOfGenerators) {
    for (std::size_t n : {1u, 2u, 5u}) {
        for (SquarePattern p : {SquarePattern::diagonal, SquarePattern::crisscross}) {
            const TriangleMesh mesh = generate_square_mesh(n, p);
            EXPECT_EQ(mesh.euler_characteristic(), 1);
            EXPECT_NEAR(mesh.total_area(), 1.0, 1e-14);
        }
    }
}

TEST(Generators, Counts) {
    const TriangleMesh cc1 = generate_square_mesh(1, SquarePattern::crisscross);
    EXPECT_EQ(cc1.num_vertices(), 5u);
    EXPECT_EQ(cc1.num_triangles(), 4u);
    EXPECT_FALSE(cc1.is_boundary_vertex(4));
    EXPECT_EQ(cc1.num_interior_vertices(), 1u);

    const TriangleMesh d2 = generate_square_mesh(2, SquarePattern::diagonal);
    EXPECT_EQ(d2.num_vertices(), 9u);
    EXPECT_EQ(d2.num_triangles(), 8u);

    const TriangleMesh d1 = generate_square_mesh(1, SquarePattern::diagonal);
    for (Index v = 0; v < 4; ++v) {
        EXPECT_TRUE(d1.is_boundary_vertex(v));
    }
    EXPECT_EQ(d1.num_interior_vertices(), 0u);
    EXPECT_THROW((void)generate_square_mesh(0, SquarePattern::diagonal), ValidationError);
}

TEST(Generators, PatternNames) {
    EXPECT_EQ(parse_square_pattern("diagonal"), SquarePattern::diagonal);
    EXPECT_EQ(parse_square_pattern(to_string(SquarePattern::crisscross)),
              SquarePattern::crisscross);
    EXPECT_FALSE(parse_square_pattern("hexagonal"));
}

TEST(Generators, ZeroAmplitudeEqualsDiagonal) {
    EXPECT_TRUE(canonically_equal(generate_perturbed_mesh(6, 0.0, 42),
                                  generate_square_mesh(6, SquarePattern::diagonal), 0.0));
}

TEST(Generators, SameSeedIsBitwiseIdentical) {
    const TriangleMesh a = generate_perturbed_mesh(8, 0.45, 99);
    const TriangleMesh b = generate_perturbed_mesh(8, 0.45, 99);
    EXPECT_TRUE(canonically_equal(a, b, 0.0));
    EXPECT_EQ(mesh_to_json(a), mesh_to_json(b));
    const TriangleMesh c = generate_perturbed_mesh(8, 0.45, 100);
    EXPECT_FALSE(canonically_equal(a, c, 0.0));
}

TEST(Generators, PerturbationStaysWithinAmplitude) {
    const std::size_t n = 8;
    const double amplitude = 0.3;
    const TriangleMesh base = generate_square_mesh(n, SquarePattern::diagonal);
    const TriangleMesh moved = generate_perturbed_mesh(n, amplitude, 5);
    for (Index v = 0; v < base.num_vertices(); ++v) {
        const double d = distance(base.position(v), moved.position(v));
        if (base.is_boundary_vertex(v)) {
            EXPECT_EQ(d, 0.0);
        } else {
            EXPECT_LE(d, amplitude / static_cast<double>(n) + 1e-15);
        }
    }
    EXPECT_NEAR(moved.total_area(), 1.0, 1e-13);
}

TEST(Generators, PerturbedMeshHasObtuseTriangles) {
    const TriangleMesh mesh = generate_perturbed_mesh(8, 0.3, 1);
    const WellCenteredReport report = well_centered_report(mesh, build_dual(mesh));
    EXPECT_GT(report.offenders.size(), 0u);
    EXPECT_GT(report.num_obtuse, 0u);
}

TEST(Generators, AmplitudeOutOfRange) {
    EXPECT_THROW((void)generate_perturbed_mesh(4, 0.49, 1), ValidationError);
    EXPECT_THROW((void)generate_perturbed_mesh(4, -0.1, 1), ValidationError);
}

TEST(VertexStar, Examples) {
    const TriangleMesh cc1 = generate_square_mesh(1, SquarePattern::crisscross);
    EXPECT_EQ(cc1.vertex_star(4).size(), 4u);

    const TriangleMesh single = oracle::single_right_isoceles();
    ASSERT_EQ(single.vertex_star(0).size(), 1u);
    EXPECT_EQ(single.vertex_star(0)[0], 0u);

    const TriangleMesh d2 = generate_square_mesh(2, SquarePattern::diagonal);
    EXPECT_EQ(d2.vertex_star(4).size(), 6u);
}

TEST(VertexStar, FansAreConsecutive) {
    // Consecutive triangles of a fan share an edge through the center vertex.
    const TriangleMesh mesh = generate_perturbed_mesh(6, 0.4, 11);
    for (Index v = 0; v < mesh.num_vertices(); ++v) {
        const auto star = mesh.vertex_star(v);
        std::set<Index> unique(star.begin(), star.end());
        EXPECT_EQ(unique.size(), star.size());
        for (std::size_t k = 0; k + 1 < star.size(); ++k) {
            const auto& a = mesh.triangle(star[k]).vertices;
            const auto& b = mesh.triangle(star[k + 1]).vertices;
            int shared = 0;
            for (Index x : a) {
                shared += std::count(b.begin(), b.end(), x);
            }
            EXPECT_EQ(shared, 2) << "vertex " << v;
        }
    }
}

TEST(MeshIo, JsonRoundTrip) {
    const TriangleMesh mesh = generate_square_mesh(2, SquarePattern::crisscross);
    const auto path = temp_path("roundtrip.json");
    save_mesh(mesh, path);
    EXPECT_TRUE(canonically_equal(mesh, load_mesh(path), 0.0));
    std::filesystem::remove(path);

    const TriangleMesh perturbed = generate_perturbed_mesh(5, 0.4, 17);
    EXPECT_TRUE(canonically_equal(perturbed, mesh_from_json(mesh_to_json(perturbed)), 0.0));
}

TEST(MeshIo, IndexOutOfRangeIsParseError) {
    const std::string text =
        "{\n \"vertices\": [[0, 0], [1, 0], [0, 1]],\n \"triangles\": [[0, 1, 7]]\n}\n";
    EXPECT_THROW((void)mesh_from_json(text), ParseError);
}

TEST(MeshIo, MalformedJsonReportsLine) {
    const std::string text = "{\n \"vertices\": [[0, 0], [1, 0]\n \"triangles\": []\n}\n";
    try {
        (void)mesh_from_json(text, "broken.json");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_NE(std::string(e.what()).find("broken.json"), std::string::npos);
    }
    EXPECT_THROW((void)mesh_from_json("{\"vertices\": [[0, 0]]}"), ParseError);
}

TEST(MeshIo, RepeatedTriangleInFile) {
    const auto path = temp_path("duplicate.json");
    write_text(path,
               "{\"vertices\": [[0, 0], [1, 0], [0, 1]], \"triangles\": [[0, 1, 2], [2, 0, 1]]}");
    EXPECT_THROW((void)load_mesh(path), DuplicateTriangle);
    std::filesystem::remove(path);
}

TEST(MeshIo, MissingFile) {
    EXPECT_THROW((void)load_mesh(temp_path("does_not_exist.json")), IoError);
}

TEST(MeshIo, TriangleFormatOneBased) {
    const auto node = temp_path("square.node");
    const auto ele = temp_path("square.ele");
    write_text(node,
               "# unit square\n4 2 0 0\n1 0 0\n2 1 0\n3 0 1\n4 1 1\n");
    write_text(ele, "2 3 0\n1 1 2 4\n2 1 4 3  # second\n");
    const TriangleMesh mesh = load_triangle_format(node, ele);
    EXPECT_TRUE(canonically_equal(mesh, generate_square_mesh(1, SquarePattern::diagonal)));
    std::filesystem::remove(node);
    std::filesystem::remove(ele);
}

TEST(MeshIo, TriangleFormatZeroBased) {
    const auto node = temp_path("tri.node");
    const auto ele = temp_path("tri.ele");
    write_text(node, "3 2 0 0\n0 0 0\n1 1 0\n2 0 1\n");
    write_text(ele, "1 3 0\n0 0 1 2\n");
    const TriangleMesh mesh = load_triangle_format(node, ele);
    EXPECT_EQ(mesh.num_triangles(), 1u);
    EXPECT_DOUBLE_EQ(mesh.total_area(), 0.5);
    std::filesystem::remove(node);
    std::filesystem::remove(ele);
}
