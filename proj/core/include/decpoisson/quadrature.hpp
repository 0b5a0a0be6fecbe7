#pragma once

#include "decpoisson/geometry.hpp"

#include <array>
#include <span>

namespace decp {

struct QuadraturePoint {
    std::array<double, 3> barycentric;
    double weight;  ///< weights of a rule sum to 1
};

/// Triangle rule exact for polynomials of the given degree:
///   1: centroid, 2: three edge midpoints, 5: seven-point Radon rule.
/// Other degrees throw ValidationError.
[[nodiscard]] std::span<const QuadraturePoint> triangle_rule(int degree);

/// Signed integral over (a, b, c): negative for clockwise triangles.
template <typename F>
auto integrate_triangle(Point a, Point b, Point c, int degree, F&& integrand) {
    const double area = 0.5 * twice_signed_area(a, b, c);
    decltype(integrand(a)) sum{};
    for (const QuadraturePoint& q : triangle_rule(degree)) {
        const Point x{q.barycentric[0] * a.x + q.barycentric[1] * b.x + q.barycentric[2] * c.x,
                      q.barycentric[0] * a.y + q.barycentric[1] * b.y + q.barycentric[2] * c.y};
        sum += q.weight * integrand(x);
    }
    return area * sum;
}

}  // namespace decp
