#include <doctest.h>

#include "cellrook/enumerate.hpp"
#include "cellrook/errors.hpp"
#include "cellrook/shape_io.hpp"
#include "helpers.hpp"

using namespace cellrook;
using test::C;

TEST_CASE("grid parsing: top row first, trailing dots optional") {
  const CellCollection P = parse_collection("#\n##\n");
  // Line 1 is the top row, so the single '#' sits above the pair.
  CHECK(P.cells() == std::vector<Cell>{{1, 1}, {1, 2}, {2, 1}});

  const CellCollection same = parse_collection("#.\n##\n");
  CHECK(P == same);
}

TEST_CASE("grid parsing ignores comments and blank lines") {
  const CellCollection P = parse_collection(
      "; a comment\n"
      "\n"
      "##\n"
      ";; another\n"
      "##\n"
      "\n");
  CHECK(P.rank() == 4);
}

TEST_CASE("grid parsing handles CRLF and rejects stray characters") {
  CHECK(parse_collection("##\r\n##\r\n").rank() == 4);
  CHECK_THROWS_AS(parse_collection("#x\n", ShapeFormat::Grid), ParseError);
}

TEST_CASE("coordinate and JSON parsing") {
  const CellCollection coords = parse_collection("2 3\n3 3\n");
  CHECK(coords.cells() == std::vector<Cell>{{1, 1}, {2, 1}});

  const CellCollection json =
      parse_collection(R"({"cells": [[2, 3], [3, 3]]})");
  CHECK(json == coords);

  CHECK_THROWS_AS(parse_collection("1\n", ShapeFormat::Coords), ParseError);
  CHECK_THROWS_AS(parse_collection("1 2 3\n", ShapeFormat::Coords),
                  ParseError);
  CHECK_THROWS_AS(parse_collection("{\"cells\": 5}"), ParseError);
  CHECK_THROWS_AS(parse_collection("{oops"), ParseError);
  CHECK_THROWS_AS(parse_collection(""), ParseError);
  CHECK_THROWS_AS(parse_collection("; only a comment\n"), ParseError);
}

TEST_CASE("format detection from the first significant character") {
  CHECK(detect_format("..#\n") == ShapeFormat::Grid);
  CHECK(detect_format("#\n") == ShapeFormat::Grid);
  CHECK(detect_format("3 4\n") == ShapeFormat::Coords);
  CHECK(detect_format("-1 0\n") == ShapeFormat::Coords);
  CHECK(detect_format("{\"cells\": []}") == ShapeFormat::Json);
  CHECK(detect_format("; note\n12 5\n") == ShapeFormat::Coords);
}

TEST_CASE("format hints from file extensions") {
  CHECK(format_from_path("shape.json") == ShapeFormat::Json);
  CHECK(format_from_path("shape.xy") == ShapeFormat::Coords);
  CHECK(format_from_path("shape.coords") == ShapeFormat::Coords);
  CHECK(format_from_path("shape.grid") == ShapeFormat::Grid);
  CHECK(format_from_path("shape.txt") == ShapeFormat::Auto);
  CHECK(format_from_path("shape") == ShapeFormat::Auto);
}

TEST_CASE("grid emission is bit-exact") {
  const CellCollection plus = parse_collection(".#.\n###\n.#.\n");
  CHECK(to_grid_text(plus) == ".#.\n###\n.#.\n");
  const CellCollection pair = parse_collection("#.\n.#\n");
  CHECK(to_grid_text(pair) == "#.\n.#\n");
}

TEST_CASE("every emitted format round-trips over the rank-5 corpus") {
  for (const Universe u : {Universe::Polyomino, Universe::Collection}) {
    enumerate_shapes(5, u, [](CellCollection&& P) {
      CHECK(parse_collection(to_grid_text(P)) == P);
      CHECK(parse_collection(to_coord_text(P)) == P);
      CHECK(parse_collection(to_json_text(P)) == P);
    });
  }
}
