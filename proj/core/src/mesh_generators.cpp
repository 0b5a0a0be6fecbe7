#include "decpoisson/mesh_generators.hpp"

#include "decpoisson/errors.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace decp {

namespace {

Index grid_id(std::size_t n, std::size_t i, std::size_t j) { return j * (n + 1) + i; }

std::vector<Point> grid_points(std::size_t n) {
    std::vector<Point> points;
    points.reserve((n + 1) * (n + 1));
    const double scale = static_cast<double>(n);
    for (std::size_t j = 0; j <= n; ++j) {
        for (std::size_t i = 0; i <= n; ++i) {
            points.push_back({static_cast<double>(i) / scale, static_cast<double>(j) / scale});
        }
    }
    return points;
}

std::vector<TriangleIndices> diagonal_triangles(std::size_t n) {
    std::vector<TriangleIndices> triangles;
    triangles.reserve(2 * n * n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            const Index v00 = grid_id(n, i, j);
            const Index v10 = grid_id(n, i + 1, j);
            const Index v11 = grid_id(n, i + 1, j + 1);
            const Index v01 = grid_id(n, i, j + 1);
            triangles.push_back({v00, v10, v11});
            triangles.push_back({v00, v11, v01});
        }
    }
    return triangles;
}

// Uniform double in [0, 1) from the top 53 bits.
double unit_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::string_view to_string(SquarePattern pattern) {
    switch (pattern) {
        case SquarePattern::diagonal:
            return "diagonal";
        case SquarePattern::crisscross:
            return "crisscross";
    }
    return "unknown";
}

std::optional<SquarePattern> parse_square_pattern(std::string_view name) {
    if (name == "diagonal") {
        return SquarePattern::diagonal;
    }
    if (name == "crisscross") {
        return SquarePattern::crisscross;
    }
    return std::nullopt;
}

TriangleMesh generate_square_mesh(std::size_t n, SquarePattern pattern) {
    if (n < 1) {
        throw ValidationError("square mesh needs n >= 1");
    }
    std::vector<Point> points = grid_points(n);
    if (pattern == SquarePattern::diagonal) {
        return build_mesh(std::move(points), diagonal_triangles(n));
    }

    const double scale = static_cast<double>(n);
    const Index first_center = points.size();
    std::vector<TriangleIndices> triangles;
    triangles.reserve(4 * n * n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            points.push_back({(static_cast<double>(i) + 0.5) / scale,
                              (static_cast<double>(j) + 0.5) / scale});
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            const Index c = first_center + j * n + i;
            const Index v00 = grid_id(n, i, j);
            const Index v10 = grid_id(n, i + 1, j);
            const Index v11 = grid_id(n, i + 1, j + 1);
            const Index v01 = grid_id(n, i, j + 1);
            triangles.push_back({v00, v10, c});
            triangles.push_back({v10, v11, c});
            triangles.push_back({v11, v01, c});
            triangles.push_back({v01, v00, c});
        }
    }
    return build_mesh(std::move(points), std::move(triangles));
}

TriangleMesh generate_perturbed_mesh(std::size_t n, double amplitude, std::uint64_t seed) {
    if (n < 1) {
        throw ValidationError("perturbed mesh needs n >= 1");
    }
    if (!(amplitude >= 0.0 && amplitude < kMaxPerturbationAmplitude)) {
        throw ValidationError("perturbation amplitude must lie in [0, 0.49), got " +
                              std::to_string(amplitude));
    }
    const std::vector<Point> grid = grid_points(n);
    const std::vector<TriangleIndices> triangles = diagonal_triangles(n);
    const double radius = amplitude / static_cast<double>(n);

    std::mt19937_64 rng(seed);
    std::vector<Point> points = grid;
    auto displace = [&](Index v) {
        const std::size_t i = v % (n + 1);
        const std::size_t j = v / (n + 1);
        if (i == 0 || j == 0 || i == n || j == n) {
            return;
        }
        const double r = radius * unit_uniform(rng);
        const double angle = 2.0 * std::numbers::pi * unit_uniform(rng);
        points[v] = {grid[v].x + r * std::cos(angle), grid[v].y + r * std::sin(angle)};
    };
    for (Index v = 0; v < points.size(); ++v) {
        displace(v);
    }

    constexpr int kMaxRounds = 64;
    for (int round = 0;; ++round) {
        std::vector<char> redraw(points.size(), 0);
        bool ok = true;
        for (const TriangleIndices& t : triangles) {
            const Point a = points[t[0]];
            const Point b = points[t[1]];
            const Point c = points[t[2]];
            if (is_degenerate(a, b, c) || twice_signed_area(a, b, c) <= 0.0) {
                ok = false;
                for (Index v : t) {
                    redraw[v] = 1;
                }
            }
        }
        if (ok) {
            break;
        }
        if (round + 1 == kMaxRounds) {
            throw PerturbationFailed("could not perturb mesh without inverting a triangle after " +
                                     std::to_string(kMaxRounds) + " rounds");
        }
        for (Index v = 0; v < points.size(); ++v) {
            if (redraw[v] != 0) {
                displace(v);
            }
        }
    }
    return build_mesh(std::move(points), triangles);
}

}  // namespace decp
