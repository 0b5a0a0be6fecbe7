#pragma once

#include "decpoisson/mesh.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace decp {

// JSON mesh document:
//   {"vertices": [[x, y], ...], "triangles": [[i, j, k], ...]}
// with 0-based vertex indices. Doubles are written with round-trip precision.

[[nodiscard]] std::string mesh_to_json(const TriangleMesh& mesh);

/// Parses a JSON mesh document. `source` names the input in diagnostics.
/// Throws ParseError for malformed documents and out-of-range indices, and
/// any build_mesh error for invalid complexes.
[[nodiscard]] TriangleMesh mesh_from_json(std::string_view text,
                                          std::string_view source = "<memory>");

void save_mesh(const TriangleMesh& mesh, const std::filesystem::path& path);
[[nodiscard]] TriangleMesh load_mesh(const std::filesystem::path& path);

/// Imports a Triangle-format .node/.ele pair. Node numbering may start at 0 or
/// 1; the first node id decides, and element indices are shifted to 0-based.
[[nodiscard]] TriangleMesh load_triangle_format(const std::filesystem::path& node_path,
                                                const std::filesystem::path& ele_path);

}  // namespace decp
