#pragma once

#include "decpoisson/geometry.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace decp {

struct ScalarField {
    std::string name;
    std::function<double(Point)> eval;

    double operator()(Point p) const { return eval(p); }
};

struct VectorField {
    std::string name;
    std::function<Point(Point)> eval;

    Point operator()(Point p) const { return eval(p); }
};

[[nodiscard]] ScalarField constant_field(double value);

/// Exact solution u of -Laplace(u) = f on the unit square with u = 0 on its boundary.
struct ManufacturedSolution {
    std::string name;
    ScalarField u;
    VectorField grad_u;
    ScalarField f;
};

/// u = sin(pi x) sin(pi y), f = 2 pi^2 sin(pi x) sin(pi y).
[[nodiscard]] ManufacturedSolution sine_solution();

/// u = x(1 - x) y(1 - y), f = 2 (x(1 - x) + y(1 - y)).
[[nodiscard]] ManufacturedSolution polynomial_solution();

/// "sine" or "poly".
[[nodiscard]] std::optional<ManufacturedSolution> find_manufactured_solution(std::string_view name);
[[nodiscard]] std::vector<std::string> manufactured_solution_names();

}  // namespace decp
