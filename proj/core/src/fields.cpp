#include "decpoisson/fields.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace decp {

ScalarField constant_field(double value) {
    std::ostringstream name;
    name << value;
    return {name.str(), [value](Point) { return value; }};
}

ManufacturedSolution sine_solution() {
    using std::numbers::pi;
    return {
        "sine",
        {"sin(pi x) sin(pi y)", [](Point p) { return std::sin(pi * p.x) * std::sin(pi * p.y); }},
        {"grad sin(pi x) sin(pi y)",
         [](Point p) {
             return Point{pi * std::cos(pi * p.x) * std::sin(pi * p.y),
                          pi * std::sin(pi * p.x) * std::cos(pi * p.y)};
         }},
        {"2 pi^2 sin(pi x) sin(pi y)",
         [](Point p) { return 2.0 * pi * pi * std::sin(pi * p.x) * std::sin(pi * p.y); }},
    };
}

ManufacturedSolution polynomial_solution() {
    return {
        "poly",
        {"x(1-x) y(1-y)", [](Point p) { return p.x * (1.0 - p.x) * p.y * (1.0 - p.y); }},
        {"grad x(1-x) y(1-y)",
         [](Point p) {
             return Point{(1.0 - 2.0 * p.x) * p.y * (1.0 - p.y),
                          p.x * (1.0 - p.x) * (1.0 - 2.0 * p.y)};
         }},
        {"2 (x(1-x) + y(1-y))",
         [](Point p) { return 2.0 * (p.x * (1.0 - p.x) + p.y * (1.0 - p.y)); }},
    };
}

std::optional<ManufacturedSolution> find_manufactured_solution(std::string_view name) {
    if (name == "sine") {
        return sine_solution();
    }
    if (name == "poly") {
        return polynomial_solution();
    }
    return std::nullopt;
}

std::vector<std::string> manufactured_solution_names() { return {"sine", "poly"}; }

}  // namespace decp
