#include "decpoisson/mesh.hpp"

#include "decpoisson/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace decp {

namespace {

using EdgeKey = std::pair<Index, Index>;

EdgeKey edge_key(Index a, Index b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }

std::string triangle_label(Index t, const TriangleIndices& v) {
    return "triangle " + std::to_string(t) + " (" + std::to_string(v[0]) + ", " +
           std::to_string(v[1]) + ", " + std::to_string(v[2]) + ")";
}

// Builds CSR offsets from per-row counts.
std::vector<Index> offsets_from_counts(const std::vector<Index>& counts) {
    std::vector<Index> offsets(counts.size() + 1, 0);
    for (std::size_t i = 0; i < counts.size(); ++i) {
        offsets[i + 1] = offsets[i] + counts[i];
    }
    return offsets;
}

}  // namespace

TriangleMesh TriangleMesh::build(std::vector<Point> positions,
                                 std::vector<TriangleIndices> triangles) {
    if (positions.size() < 3) {
        throw ValidationError("mesh needs at least 3 vertices, got " +
                              std::to_string(positions.size()));
    }
    if (triangles.empty()) {
        throw ValidationError("mesh needs at least 1 triangle");
    }
    for (std::size_t v = 0; v < positions.size(); ++v) {
        if (!std::isfinite(positions[v].x) || !std::isfinite(positions[v].y)) {
            throw ValidationError("vertex " + std::to_string(v) + " has a non-finite coordinate");
        }
    }

    TriangleMesh mesh;
    mesh.positions_ = std::move(positions);
    const std::size_t nv = mesh.positions_.size();
    const std::size_t nt = triangles.size();

    // Orientation and degeneracy.
    mesh.triangles_.resize(nt);
    for (Index t = 0; t < nt; ++t) {
        TriangleIndices v = triangles[t];
        for (Index id : v) {
            if (id >= nv) {
                throw ValidationError(triangle_label(t, v) + " references vertex " +
                                      std::to_string(id) + " but the mesh has " +
                                      std::to_string(nv) + " vertices");
            }
        }
        if (v[0] == v[1] || v[1] == v[2] || v[0] == v[2]) {
            throw DegenerateTriangle(triangle_label(t, v) + " repeats a vertex");
        }
        const Point a = mesh.positions_[v[0]];
        const Point b = mesh.positions_[v[1]];
        const Point c = mesh.positions_[v[2]];
        if (is_degenerate(a, b, c)) {
            throw DegenerateTriangle(triangle_label(t, v) + " has zero area");
        }
        double twice_area = twice_signed_area(a, b, c);
        if (twice_area < 0.0) {
            std::swap(v[1], v[2]);
            twice_area = -twice_area;
            mesh.flipped_.push_back(t);
        }
        mesh.triangles_[t].vertices = v;
        mesh.triangles_[t].area = 0.5 * twice_area;
    }

    // Duplicates.
    {
        std::vector<std::pair<TriangleIndices, Index>> sorted(nt);
        for (Index t = 0; t < nt; ++t) {
            TriangleIndices key = mesh.triangles_[t].vertices;
            std::sort(key.begin(), key.end());
            sorted[t] = {key, t};
        }
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 1; i < sorted.size(); ++i) {
            if (sorted[i].first == sorted[i - 1].first) {
                throw DuplicateTriangle("triangles " + std::to_string(sorted[i - 1].second) +
                                        " and " + std::to_string(sorted[i].second) +
                                        " have the same vertices");
            }
        }
    }

    // Every vertex must be a face of some triangle.
    std::vector<Index> star_counts(nv, 0);
    for (const Triangle& tri : mesh.triangles_) {
        for (Index v : tri.vertices) {
            ++star_counts[v];
        }
    }
    for (Index v = 0; v < nv; ++v) {
        if (star_counts[v] == 0) {
            throw DanglingVertex("vertex " + std::to_string(v) + " belongs to no triangle");
        }
    }

    // Edge table, lexicographic on (low, high).
    std::vector<EdgeKey> keys;
    keys.reserve(3 * nt);
    for (const Triangle& tri : mesh.triangles_) {
        const auto& v = tri.vertices;
        for (int p = 0; p < 3; ++p) {
            keys.push_back(edge_key(v[(p + 1) % 3], v[(p + 2) % 3]));
        }
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

    const std::size_t ne = keys.size();
    mesh.edges_.resize(ne);
    for (Index e = 0; e < ne; ++e) {
        mesh.edges_[e].vertices = {keys[e].first, keys[e].second};
        mesh.edges_[e].length = distance(mesh.positions_[keys[e].first],
                                         mesh.positions_[keys[e].second]);
    }

    // Triangle-edge incidence with orientation check. +1 when the triangle
    // traverses the edge low->high.
    std::vector<Index> edge_counts(ne, 0);
    std::vector<int> first_direction(ne, 0);
    for (Index t = 0; t < nt; ++t) {
        Triangle& tri = mesh.triangles_[t];
        const auto& v = tri.vertices;
        for (int p = 0; p < 3; ++p) {
            const Index tail = v[(p + 1) % 3];
            const Index head = v[(p + 2) % 3];
            const EdgeKey key = edge_key(tail, head);
            const auto it = std::lower_bound(keys.begin(), keys.end(), key);
            const Index e = static_cast<Index>(it - keys.begin());
            tri.edges[p] = e;
            const int direction = tail < head ? 1 : -1;
            if (++edge_counts[e] > 2) {
                throw NonManifoldEdge("edge (" + std::to_string(key.first) + ", " +
                                      std::to_string(key.second) +
                                      ") belongs to more than two triangles");
            }
            if (edge_counts[e] == 1) {
                first_direction[e] = direction;
            } else if (first_direction[e] == direction) {
                throw InconsistentOrientation(
                    "edge (" + std::to_string(key.first) + ", " + std::to_string(key.second) +
                    ") receives the same orientation from both adjacent triangles");
            }
        }
    }

    mesh.edge_tri_offsets_ = offsets_from_counts(edge_counts);
    mesh.edge_tri_.assign(mesh.edge_tri_offsets_.back(), 0);
    {
        std::vector<Index> fill(mesh.edge_tri_offsets_.begin(), mesh.edge_tri_offsets_.end() - 1);
        for (Index t = 0; t < nt; ++t) {
            for (Index e : mesh.triangles_[t].edges) {
                mesh.edge_tri_[fill[e]++] = t;
            }
        }
    }

    mesh.boundary_vertex_.assign(nv, 0);
    for (Index e = 0; e < ne; ++e) {
        if (edge_counts[e] == 1) {
            mesh.edges_[e].boundary = true;
            mesh.boundary_vertex_[mesh.edges_[e].vertices[0]] = 1;
            mesh.boundary_vertex_[mesh.edges_[e].vertices[1]] = 1;
        }
    }

    std::vector<Index> vertex_edge_counts(nv, 0);
    for (const Edge& edge : mesh.edges_) {
        ++vertex_edge_counts[edge.vertices[0]];
        ++vertex_edge_counts[edge.vertices[1]];
    }
    mesh.vertex_edge_offsets_ = offsets_from_counts(vertex_edge_counts);
    mesh.vertex_edges_.assign(mesh.vertex_edge_offsets_.back(), 0);
    {
        std::vector<Index> fill(mesh.vertex_edge_offsets_.begin(),
                                mesh.vertex_edge_offsets_.end() - 1);
        for (Index e = 0; e < ne; ++e) {
            mesh.vertex_edges_[fill[mesh.edges_[e].vertices[0]]++] = e;
            mesh.vertex_edges_[fill[mesh.edges_[e].vertices[1]]++] = e;
        }
    }

    // Vertex stars: each must be one fan. In triangle (v, a, b) counterclockwise,
    // the link of v contains the directed segment a -> b; a fan is a single chain
    // (boundary vertex) or a single cycle (interior vertex) of such segments.
    std::vector<std::vector<Index>> incident(nv);
    for (Index t = 0; t < nt; ++t) {
        for (Index v : mesh.triangles_[t].vertices) {
            incident[v].push_back(t);
        }
    }
    mesh.star_offsets_ = offsets_from_counts(star_counts);
    mesh.star_.assign(mesh.star_offsets_.back(), 0);
    for (Index v = 0; v < nv; ++v) {
        const auto& around = incident[v];
        auto link_of = [&](Index t) {
            const auto& tv = mesh.triangles_[t].vertices;
            const int p = tv[0] == v ? 0 : (tv[1] == v ? 1 : 2);
            return EdgeKey{tv[(p + 1) % 3], tv[(p + 2) % 3]};
        };
        Index start = around.front();
        for (Index t : around) {
            const Index tail = link_of(t).first;
            const bool has_predecessor = std::any_of(around.begin(), around.end(), [&](Index s) {
                return link_of(s).second == tail;
            });
            if (!has_predecessor) {
                start = t;
                break;
            }
        }
        Index* out = mesh.star_.data() + mesh.star_offsets_[v];
        std::size_t visited = 0;
        Index current = start;
        while (visited < around.size()) {
            out[visited++] = current;
            const Index head = link_of(current).second;
            const auto next = std::find_if(around.begin(), around.end(), [&](Index s) {
                return link_of(s).first == head;
            });
            if (next == around.end() || *next == start) {
                break;
            }
            current = *next;
        }
        if (visited != around.size()) {
            throw NonManifoldVertex("triangles around vertex " + std::to_string(v) +
                                    " do not form a single fan");
        }
    }

    return mesh;
}

std::size_t TriangleMesh::num_interior_vertices() const noexcept {
    return static_cast<std::size_t>(
        std::count(boundary_vertex_.begin(), boundary_vertex_.end(), char{0}));
}

long TriangleMesh::euler_characteristic() const noexcept {
    return static_cast<long>(num_vertices()) - static_cast<long>(num_edges()) +
           static_cast<long>(num_triangles());
}

std::span<const Index> TriangleMesh::vertex_star(Index v) const {
    const Index begin = star_offsets_.at(v);
    return {star_.data() + begin, star_offsets_[v + 1] - begin};
}

std::span<const Index> TriangleMesh::edge_triangles(Index e) const {
    const Index begin = edge_tri_offsets_.at(e);
    return {edge_tri_.data() + begin, edge_tri_offsets_[e + 1] - begin};
}

Index TriangleMesh::find_edge(Index a, Index b) const {
    if (a >= num_vertices() || b >= num_vertices()) {
        return npos;
    }
    for (Index k = vertex_edge_offsets_[a]; k < vertex_edge_offsets_[a + 1]; ++k) {
        const Edge& edge = edges_[vertex_edges_[k]];
        if (edge.vertices == std::array<Index, 2>{std::min(a, b), std::max(a, b)}) {
            return vertex_edges_[k];
        }
    }
    return npos;
}

double TriangleMesh::total_area() const noexcept {
    double sum = 0.0;
    for (const Triangle& t : triangles_) {
        sum += t.area;
    }
    return sum;
}

TriangleMesh build_mesh(std::vector<Point> positions, std::vector<TriangleIndices> triangles) {
    return TriangleMesh::build(std::move(positions), std::move(triangles));
}

bool canonically_equal(const TriangleMesh& a, const TriangleMesh& b, double tol) {
    if (a.num_vertices() != b.num_vertices() || a.num_triangles() != b.num_triangles()) {
        return false;
    }
    for (Index v = 0; v < a.num_vertices(); ++v) {
        const Point p = a.position(v);
        const Point q = b.position(v);
        if (std::abs(p.x - q.x) > tol || std::abs(p.y - q.y) > tol) {
            return false;
        }
    }
    for (Index t = 0; t < a.num_triangles(); ++t) {
        if (a.triangle(t).vertices != b.triangle(t).vertices) {
            return false;
        }
    }
    return true;
}

}  // namespace decp
