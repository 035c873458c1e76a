#pragma once

#include <string>
#include <vector>

#include "cellrook/collection.hpp"

namespace cellrook {

enum class ShapeFormat { Auto, Grid, Coords, Json };

/// Detect a shape format from the first non-comment, non-blank character:
/// '#' or '.' -> Grid, digit or '-' -> Coords, '{' -> Json.
ShapeFormat detect_format(const std::string& text);

/// Format hint from a file extension (".json", ".xy"/".coords", else Auto).
ShapeFormat format_from_path(const std::string& path);

/// Parse a shape in any of the three formats. Grid: lines of '#'/'.' listed
/// top row first, trailing '.' optional, blank lines and ';' comments
/// ignored. Coords: one "x y" pair per line. Json: {"cells": [[x,y], ...]}.
std::vector<Cell> parse_cells(const std::string& text,
                              ShapeFormat format = ShapeFormat::Auto);

CellCollection parse_collection(const std::string& text,
                                ShapeFormat format = ShapeFormat::Auto);

/// Grid text of a normalized collection: height lines, top row first, no
/// trailing-dot elision, '\n' after every line.
std::string to_grid_text(const CellCollection& P);
std::string to_coord_text(const CellCollection& P);
std::string to_json_text(const CellCollection& P);

}  // namespace cellrook
