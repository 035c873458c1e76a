#include "cellrook/shape_io.hpp"

#include <cctype>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cellrook/errors.hpp"

namespace cellrook {

namespace {

bool ignorable(const std::string& line) {
  for (char ch : line) {
    if (ch == ';') return true;
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;  // blank
}

std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!ignorable(line)) out.push_back(line);
  }
  return out;
}

std::vector<Cell> parse_grid(const std::vector<std::string>& lines) {
  std::vector<Cell> cells;
  const int height = static_cast<int>(lines.size());
  for (int row = 0; row < height; ++row) {
    const std::string& line = lines[row];
    const int y = height - row;  // first line is the top row
    for (int col = 0; col < static_cast<int>(line.size()); ++col) {
      const char ch = line[col];
      if (ch == '#')
        cells.push_back({col + 1, y});
      else if (ch != '.')
        throw ParseError("unexpected character '" + std::string(1, ch) +
                         "' in grid line " + std::to_string(row + 1));
    }
  }
  return cells;
}

std::vector<Cell> parse_coords(const std::vector<std::string>& lines) {
  std::vector<Cell> cells;
  for (const std::string& line : lines) {
    std::istringstream in(line);
    Cell c;
    if (!(in >> c.x >> c.y))
      throw ParseError("expected \"x y\" pair, got: " + line);
    std::string rest;
    if (in >> rest)
      throw ParseError("trailing content after coordinate pair: " + line);
    cells.push_back(c);
  }
  return cells;
}

std::vector<Cell> parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("cells") || !j["cells"].is_array())
    throw ParseError("expected a JSON object with a \"cells\" array");
  std::vector<Cell> cells;
  for (const auto& item : j["cells"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer())
      throw ParseError("each cell must be an [x, y] integer pair");
    cells.push_back({item[0].get<int>(), item[1].get<int>()});
  }
  return cells;
}

}  // namespace

ShapeFormat detect_format(const std::string& text) {
  for (const std::string& line : content_lines(text)) {
    for (char ch : line) {
      if (std::isspace(static_cast<unsigned char>(ch))) continue;
      if (ch == '#' || ch == '.') return ShapeFormat::Grid;
      if (ch == '{') return ShapeFormat::Json;
      if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-')
        return ShapeFormat::Coords;
      throw ParseError("cannot detect shape format from character '" +
                       std::string(1, ch) + "'");
    }
  }
  throw ParseError("empty shape input");
}

ShapeFormat format_from_path(const std::string& path) {
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos) return ShapeFormat::Auto;
  const std::string ext = path.substr(dot + 1);
  if (ext == "json") return ShapeFormat::Json;
  if (ext == "xy" || ext == "coords") return ShapeFormat::Coords;
  if (ext == "grid") return ShapeFormat::Grid;
  return ShapeFormat::Auto;
}

std::vector<Cell> parse_cells(const std::string& text, ShapeFormat format) {
  if (format == ShapeFormat::Auto) format = detect_format(text);
  switch (format) {
    case ShapeFormat::Grid:
      return parse_grid(content_lines(text));
    case ShapeFormat::Coords:
      return parse_coords(content_lines(text));
    case ShapeFormat::Json:
      return parse_json(text);
    default:
      throw ParseError("unresolved shape format");
  }
}

CellCollection parse_collection(const std::string& text, ShapeFormat format) {
  auto cells = parse_cells(text, format);
  if (cells.empty()) throw ParseError("shape has no cells");
  return CellCollection(std::move(cells));
}

std::string to_grid_text(const CellCollection& P) {
  std::string out;
  out.reserve(static_cast<size_t>(P.height()) * (P.width() + 1));
  for (int y = P.height(); y >= 1; --y) {
    for (int x = 1; x <= P.width(); ++x)
      out.push_back(P.contains(x, y) ? '#' : '.');
    out.push_back('\n');
  }
  return out;
}

std::string to_coord_text(const CellCollection& P) {
  std::string out;
  for (const Cell& c : P.cells())
    out += std::to_string(c.x) + " " + std::to_string(c.y) + "\n";
  return out;
}

std::string to_json_text(const CellCollection& P) {
  nlohmann::json cells = nlohmann::json::array();
  for (const Cell& c : P.cells()) cells.push_back({c.x, c.y});
  return nlohmann::json{{"cells", cells}}.dump();
}

}  // namespace cellrook
