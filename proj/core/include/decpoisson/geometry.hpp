#pragma once

#include <cmath>
#include <cstddef>
#include <iterator>

namespace decp {

using Index = std::size_t;

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
    friend constexpr bool operator==(Point, Point) = default;
};

constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(b - a); }
constexpr Point midpoint(Point a, Point b) { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }

/// Twice the signed area of (a, b, c); positive when counterclockwise.
constexpr double twice_signed_area(Point a, Point b, Point c) { return cross(b - a, c - a); }

/// Signed polygon area by the shoelace formula.
template <typename Range>
double shoelace_area(const Range& polygon) {
    double sum = 0.0;
    const std::size_t n = std::size(polygon);
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = polygon[i];
        const Point& q = polygon[(i + 1) % n];
        sum += p.x * q.y - q.x * p.y;
    }
    return 0.5 * sum;
}

/// Relative tolerance on twice the signed area below which a triangle is degenerate.
inline constexpr double kDegeneracyTolerance = 1e-14;

/// True when |2A| < kDegeneracyTolerance * (longest edge)^2.
bool is_degenerate(Point a, Point b, Point c);

/// Center of the circle through three points. Throws DegenerateTriangle for collinear input.
Point circumcenter(Point p0, Point p1, Point p2);

}  // namespace decp
