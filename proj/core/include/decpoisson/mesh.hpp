#pragma once

#include "decpoisson/geometry.hpp"

#include <array>
#include <span>
#include <vector>

namespace decp {

using TriangleIndices = std::array<Index, 3>;

/// Undirected edge stored with canonical orientation vertices[0] < vertices[1].
struct Edge {
    std::array<Index, 2> vertices{};
    bool boundary = false;
    double length = 0.0;
};

/// Counterclockwise triangle. edges[p] is the edge opposite vertices[p].
struct Triangle {
    TriangleIndices vertices{};
    std::array<Index, 3> edges{};
    double area = 0.0;
};

/// Oriented, manifold-like 2D simplicial complex. Immutable once built.
///
/// Construction derives the edge table from the triangles, normalizes every
/// triangle to counterclockwise order and validates the complex:
///   - no zero-area or repeated triangles, no vertex outside every triangle;
///   - every edge lies in one or two triangles, and the two triangles of an
///     interior edge induce opposite orientations on it;
///   - the triangles around each vertex form a single fan (disk or half-disk).
/// Edges are numbered in lexicographic order of their (low, high) endpoints.
class TriangleMesh {
public:
    TriangleMesh() = default;

    [[nodiscard]] static TriangleMesh build(std::vector<Point> positions,
                                            std::vector<TriangleIndices> triangles);

    [[nodiscard]] std::size_t num_vertices() const noexcept { return positions_.size(); }
    [[nodiscard]] std::size_t num_edges() const noexcept { return edges_.size(); }
    [[nodiscard]] std::size_t num_triangles() const noexcept { return triangles_.size(); }
    [[nodiscard]] std::size_t num_interior_vertices() const noexcept;
    [[nodiscard]] long euler_characteristic() const noexcept;

    [[nodiscard]] std::span<const Point> positions() const noexcept { return positions_; }
    [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }
    [[nodiscard]] std::span<const Triangle> triangles() const noexcept { return triangles_; }

    [[nodiscard]] Point position(Index v) const { return positions_.at(v); }
    [[nodiscard]] const Edge& edge(Index e) const { return edges_.at(e); }
    [[nodiscard]] const Triangle& triangle(Index t) const { return triangles_.at(t); }
    [[nodiscard]] bool is_boundary_vertex(Index v) const { return boundary_vertex_.at(v) != 0; }

    /// Triangles containing vertex v, in counterclockwise fan order. For a
    /// boundary vertex the fan starts at the triangle touching the boundary
    /// edge that leaves v clockwise-first.
    [[nodiscard]] std::span<const Index> vertex_star(Index v) const;

    /// The one or two triangles containing edge e, ascending by id.
    [[nodiscard]] std::span<const Index> edge_triangles(Index e) const;

    /// Edge id joining a and b, or npos when they are not adjacent.
    [[nodiscard]] Index find_edge(Index a, Index b) const;

    /// Ids of input triangles whose vertex order was reversed during build.
    [[nodiscard]] std::span<const Index> flipped_triangles() const noexcept { return flipped_; }

    [[nodiscard]] double total_area() const noexcept;

    static constexpr Index npos = static_cast<Index>(-1);

private:
    std::vector<Point> positions_;
    std::vector<Edge> edges_;
    std::vector<Triangle> triangles_;
    std::vector<char> boundary_vertex_;
    std::vector<Index> flipped_;

    // CSR-style adjacency.
    std::vector<Index> star_offsets_;
    std::vector<Index> star_;
    std::vector<Index> edge_tri_offsets_;
    std::vector<Index> edge_tri_;
    std::vector<Index> vertex_edge_offsets_;
    std::vector<Index> vertex_edges_;
};

/// Shorthand for TriangleMesh::build.
[[nodiscard]] TriangleMesh build_mesh(std::vector<Point> positions,
                                      std::vector<TriangleIndices> triangles);

/// Canonical comparison: same triangle triples and positions within `tol` per coordinate.
[[nodiscard]] bool canonically_equal(const TriangleMesh& a, const TriangleMesh& b,
                                     double tol = 1e-15);

}  // namespace decp
