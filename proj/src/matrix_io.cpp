#include "dfm/matrix_io.hpp"

#include <fstream>
#include <sstream>

namespace dfm {

namespace {

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

MatF parse_matrix_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    auto [line, col] = line_col(text, at);
    std::string token = at < text.size() ? std::string(1, text[at]) : "<end>";
    throw ParseError(line, col, token, "malformed JSON");
  }

  const nlohmann::json* rows = &doc;
  if (doc.is_object()) {
    if (!doc.contains("entries")) throw ShapeError("missing \"entries\"");
    rows = &doc["entries"];
  }
  if (!rows->is_array() || rows->empty()) throw ShapeError("entries must be a non-empty array of rows");
  const std::size_t n = rows->size();
  if (doc.is_object() && doc.contains("n")) {
    if (!doc["n"].is_number_unsigned() || doc["n"].get<std::size_t>() != n) {
      throw ShapeError("\"n\" does not match the number of rows");
    }
  }

  MatF m(n, n);
  std::size_t search_from = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = (*rows)[i];
    if (!row.is_array() || row.size() != n) {
      throw ShapeError("row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const auto& cell = row[j];
      std::string expr;
      if (cell.is_string()) {
        expr = cell.get<std::string>();
      } else if (cell.is_number_integer()) {
        expr = cell.dump();
      } else {
        throw ShapeError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") must be a string");
      }
      // Locate the literal in the file so errors point at the source text.
      std::size_t found = text.find(cell.dump(), search_from);
      std::size_t origin = found == std::string_view::npos ? 0 : found + (cell.is_string() ? 1 : 0);
      if (found != std::string_view::npos) search_from = found + cell.dump().size();
      try {
        m(i, j) = parse_ratfunc(expr);
      } catch (const ParseError& e) {
        auto [line, col] = found == std::string_view::npos ? std::pair<std::size_t, std::size_t>{1, e.column()}
                                                           : line_col(text, origin + e.column() - 1);
        throw ParseError(line, col, e.token(),
                         "entry (" + std::to_string(i) + "," + std::to_string(j) + ") \"" + expr + "\"");
      }
    }
  }
  return m;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return ss.str();
}

MatF parse_matrix_file(const std::filesystem::path& path) { return parse_matrix_json(read_file(path)); }

Json matrix_to_json(const MatF& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json matrix_to_json(const MatK& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string serialize_matrix(const MatF& m) {
  Json doc;
  doc["n"] = m.rows();
  doc["entries"] = matrix_to_json(m);
  return doc.dump(2) + "\n";
}

}  // namespace dfm
