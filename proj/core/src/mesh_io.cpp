#include "decpoisson/mesh_io.hpp"

#include "decpoisson/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

namespace decp {

namespace {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string() + " for reading");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

[[noreturn]] void field_error(std::string_view source, const std::string& field,
                              const std::string& what) {
    throw ParseError(std::string(source) + ": " + field + ": " + what);
}

// Non-comment, non-blank lines of a Triangle-format file with their line numbers.
std::vector<std::pair<std::size_t, std::vector<std::string>>> tokenized_lines(
    const std::string& text) {
    std::vector<std::pair<std::size_t, std::vector<std::string>>> lines;
    std::istringstream in(text);
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream tokens(line);
        std::vector<std::string> fields;
        for (std::string token; tokens >> token;) {
            fields.push_back(token);
        }
        if (!fields.empty()) {
            lines.emplace_back(number, std::move(fields));
        }
    }
    return lines;
}

template <typename T>
T parse_number(const std::string& token, const std::string& source, std::size_t line,
               const std::string& field) {
    std::istringstream in(token);
    T value{};
    in >> value;
    if (!in || !in.eof()) {
        throw ParseError(source, line, field + ": cannot parse '" + token + "'");
    }
    return value;
}

}  // namespace

std::string mesh_to_json(const TriangleMesh& mesh) {
    json doc;
    json vertices = json::array();
    for (const Point& p : mesh.positions()) {
        vertices.push_back({p.x, p.y});
    }
    json triangles = json::array();
    for (const Triangle& t : mesh.triangles()) {
        triangles.push_back({t.vertices[0], t.vertices[1], t.vertices[2]});
    }
    doc["vertices"] = std::move(vertices);
    doc["triangles"] = std::move(triangles);
    return doc.dump(1) + "\n";
}

TriangleMesh mesh_from_json(std::string_view text, std::string_view source) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string(source), line_of_offset(text, e.byte), e.what());
    }
    if (!doc.is_object()) {
        field_error(source, "<root>", "expected an object");
    }
    for (const char* key : {"vertices", "triangles"}) {
        if (!doc.contains(key) || !doc[key].is_array()) {
            field_error(source, key, "missing or not an array");
        }
    }

    std::vector<Point> positions;
    const json& vertices = doc["vertices"];
    positions.reserve(vertices.size());
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        const json& entry = vertices[v];
        const std::string field = "vertices[" + std::to_string(v) + "]";
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_number()) {
            field_error(source, field, "expected [x, y] with numeric coordinates");
        }
        positions.push_back({entry[0].get<double>(), entry[1].get<double>()});
    }

    std::vector<TriangleIndices> triangles;
    const json& faces = doc["triangles"];
    triangles.reserve(faces.size());
    for (std::size_t t = 0; t < faces.size(); ++t) {
        const json& entry = faces[t];
        const std::string field = "triangles[" + std::to_string(t) + "]";
        if (!entry.is_array() || entry.size() != 3) {
            field_error(source, field, "expected [i, j, k]");
        }
        TriangleIndices tri{};
        for (std::size_t p = 0; p < 3; ++p) {
            if (!entry[p].is_number_integer()) {
                field_error(source, field + "[" + std::to_string(p) + "]",
                            "expected an integer vertex index");
            }
            const auto id = entry[p].get<long long>();
            if (id < 0 || static_cast<std::size_t>(id) >= positions.size()) {
                field_error(source, field + "[" + std::to_string(p) + "]",
                            "vertex index " + std::to_string(id) + " out of range [0, " +
                                std::to_string(positions.size()) + ")");
            }
            tri[p] = static_cast<Index>(id);
        }
        triangles.push_back(tri);
    }
    return build_mesh(std::move(positions), std::move(triangles));
}

void save_mesh(const TriangleMesh& mesh, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out << mesh_to_json(mesh);
    if (!out) {
        throw IoError("failed writing " + path.string());
    }
}

TriangleMesh load_mesh(const std::filesystem::path& path) {
    return mesh_from_json(read_file(path), path.string());
}

TriangleMesh load_triangle_format(const std::filesystem::path& node_path,
                                  const std::filesystem::path& ele_path) {
    const std::string node_source = node_path.string();
    const std::string ele_source = ele_path.string();
    const auto node_lines = tokenized_lines(read_file(node_path));
    const auto ele_lines = tokenized_lines(read_file(ele_path));
    if (node_lines.empty()) {
        throw ParseError(node_source, 0, "empty node file");
    }
    if (ele_lines.empty()) {
        throw ParseError(ele_source, 0, "empty element file");
    }

    const auto& [node_header_line, node_header] = node_lines.front();
    const auto n_nodes =
        parse_number<long long>(node_header[0], node_source, node_header_line, "node count");
    if (node_header.size() > 1 &&
        parse_number<int>(node_header[1], node_source, node_header_line, "dimension") != 2) {
        throw ParseError(node_source, node_header_line, "only 2D node files are supported");
    }
    if (n_nodes < 3 || static_cast<std::size_t>(n_nodes) + 1 > node_lines.size()) {
        throw ParseError(node_source, node_header_line, "node count does not match file");
    }

    std::vector<Point> positions(static_cast<std::size_t>(n_nodes));
    long long first_id = 0;
    for (std::size_t k = 0; k < positions.size(); ++k) {
        const auto& [line, fields] = node_lines[k + 1];
        if (fields.size() < 3) {
            throw ParseError(node_source, line, "expected '<id> <x> <y> ...'");
        }
        const auto id = parse_number<long long>(fields[0], node_source, line, "node id");
        if (k == 0) {
            first_id = id;
            if (first_id != 0 && first_id != 1) {
                throw ParseError(node_source, line, "node numbering must start at 0 or 1");
            }
        }
        if (id != first_id + static_cast<long long>(k)) {
            throw ParseError(node_source, line, "node ids must be consecutive");
        }
        positions[k] = {parse_number<double>(fields[1], node_source, line, "x"),
                        parse_number<double>(fields[2], node_source, line, "y")};
    }

    const auto& [ele_header_line, ele_header] = ele_lines.front();
    const auto n_ele =
        parse_number<long long>(ele_header[0], ele_source, ele_header_line, "element count");
    if (ele_header.size() > 1 &&
        parse_number<int>(ele_header[1], ele_source, ele_header_line, "nodes per element") != 3) {
        throw ParseError(ele_source, ele_header_line, "only linear triangles are supported");
    }
    if (n_ele < 1 || static_cast<std::size_t>(n_ele) + 1 > ele_lines.size()) {
        throw ParseError(ele_source, ele_header_line, "element count does not match file");
    }
    std::vector<TriangleIndices> triangles(static_cast<std::size_t>(n_ele));
    for (std::size_t k = 0; k < triangles.size(); ++k) {
        const auto& [line, fields] = ele_lines[k + 1];
        if (fields.size() < 4) {
            throw ParseError(ele_source, line, "expected '<id> <a> <b> <c> ...'");
        }
        for (std::size_t p = 0; p < 3; ++p) {
            const auto id = parse_number<long long>(fields[p + 1], ele_source, line, "vertex") -
                            first_id;
            if (id < 0 || id >= n_nodes) {
                throw ParseError(ele_source, line,
                                 "vertex index " + fields[p + 1] + " out of range");
            }
            triangles[k][p] = static_cast<Index>(id);
        }
    }
    return build_mesh(std::move(positions), std::move(triangles));
}

}  // namespace decp
