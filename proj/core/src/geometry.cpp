#include "decpoisson/geometry.hpp"

#include "decpoisson/errors.hpp"

#include <algorithm>
#include <string>

namespace decp {

bool is_degenerate(Point a, Point b, Point c) {
    const double longest = std::max({distance(a, b), distance(b, c), distance(c, a)});
    return !(std::abs(twice_signed_area(a, b, c)) >= kDegeneracyTolerance * longest * longest);
}

Point circumcenter(Point p0, Point p1, Point p2) {
    if (is_degenerate(p0, p1, p2)) {
        throw DegenerateTriangle("circumcenter: triangle is degenerate");
    }
    // Work relative to p0 to limit cancellation.
    const Point b = p1 - p0;
    const Point c = p2 - p0;
    const double d = 2.0 * cross(b, c);
    const double bb = dot(b, b);
    const double cc = dot(c, c);
    return {p0.x + (c.y * bb - b.y * cc) / d, p0.y + (b.x * cc - c.x * bb) / d};
}

}  // namespace decp
