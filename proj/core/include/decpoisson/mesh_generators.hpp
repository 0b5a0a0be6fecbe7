#pragma once

#include "decpoisson/mesh.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace decp {

enum class SquarePattern {
    diagonal,    ///< each cell split by its (+1, +1) diagonal
    crisscross,  ///< each cell split into four triangles through its center
};

[[nodiscard]] std::string_view to_string(SquarePattern pattern);
[[nodiscard]] std::optional<SquarePattern> parse_square_pattern(std::string_view name);

/// Structured mesh of the unit square with n x n cells.
///
/// Grid vertex (i, j) has id j * (n + 1) + i and position (i / n, j / n);
/// crisscross cell centers follow in row-major cell order.
[[nodiscard]] TriangleMesh generate_square_mesh(std::size_t n, SquarePattern pattern);

/// Diagonal-pattern mesh whose interior grid vertices are moved by a seeded
/// pseudorandom offset of length at most amplitude * h (h = 1 / n).
///
/// Offsets come from a 64-bit Mersenne twister converted to doubles by bit
/// manipulation (no std distributions), so equal seeds give bitwise-equal
/// meshes for a given toolchain. Vertices of
/// triangles that would become degenerate or inverted are redrawn; after 64
/// rounds without success PerturbationFailed is thrown.
[[nodiscard]] TriangleMesh generate_perturbed_mesh(std::size_t n, double amplitude,
                                                   std::uint64_t seed);

inline constexpr double kMaxPerturbationAmplitude = 0.49;

}  // namespace decp
