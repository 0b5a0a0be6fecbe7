#include "decpoisson/quadrature.hpp"

#include "decpoisson/errors.hpp"

#include <cmath>
#include <string>

namespace decp {

namespace {

constexpr std::array<QuadraturePoint, 1> kCentroid{{{{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}, 1.0}}};

constexpr std::array<QuadraturePoint, 3> kMidEdge{{
    {{0.5, 0.5, 0.0}, 1.0 / 3.0},
    {{0.0, 0.5, 0.5}, 1.0 / 3.0},
    {{0.5, 0.0, 0.5}, 1.0 / 3.0},
}};

std::array<QuadraturePoint, 7> make_degree5() {
    const double s = std::sqrt(15.0);
    const double a1 = (6.0 - s) / 21.0;
    const double a2 = (6.0 + s) / 21.0;
    const double w1 = (155.0 - s) / 1200.0;
    const double w2 = (155.0 + s) / 1200.0;
    return {{
        {{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}, 9.0 / 40.0},
        {{a1, a1, 1.0 - 2.0 * a1}, w1},
        {{a1, 1.0 - 2.0 * a1, a1}, w1},
        {{1.0 - 2.0 * a1, a1, a1}, w1},
        {{a2, a2, 1.0 - 2.0 * a2}, w2},
        {{a2, 1.0 - 2.0 * a2, a2}, w2},
        {{1.0 - 2.0 * a2, a2, a2}, w2},
    }};
}

}  // namespace

std::span<const QuadraturePoint> triangle_rule(int degree) {
    static const std::array<QuadraturePoint, 7> degree5 = make_degree5();
    switch (degree) {
        case 1:
            return kCentroid;
        case 2:
            return kMidEdge;
        case 5:
            return degree5;
        default:
            throw ValidationError("no triangle rule of degree " + std::to_string(degree) +
                                  " (available: 1, 2, 5)");
    }
}

}  // namespace decp
