#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "dfm/linalg.hpp"

namespace dfm {

using Json = nlohmann::ordered_json;

/// Matrix file: {"n": 3, "entries": [["t^2", "t^3", ...], ...]}.
/// A bare array of rows is also accepted. Throws ParseError (with the
/// line/column of the offending character in the file) or ShapeError.
MatF parse_matrix_json(std::string_view text);

/// Reads and parses a matrix file; throws IoError if it cannot be read.
MatF parse_matrix_file(const std::filesystem::path& path);

Json matrix_to_json(const MatF& m);
Json matrix_to_json(const MatK& m);

/// Matrix file text; parse_matrix_json(serialize_matrix(m)) == m.
std::string serialize_matrix(const MatF& m);

std::string read_file(const std::filesystem::path& path);

}  // namespace dfm
