#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cellrook/analysis.hpp"
#include "cellrook/enumerate.hpp"
#include "cellrook/errors.hpp"
#include "cellrook/geometry.hpp"
#include "cellrook/rook.hpp"
#include "cellrook/shape_io.hpp"

namespace py = pybind11;
using namespace cellrook;

namespace {

std::vector<std::pair<int, int>> to_pairs(const std::vector<Cell>& cells) {
  std::vector<std::pair<int, int>> out;
  out.reserve(cells.size());
  for (const Cell& c : cells) out.emplace_back(c.x, c.y);
  return out;
}

std::vector<Cell> to_cells(const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Cell> out;
  out.reserve(pairs.size());
  for (const auto& [x, y] : pairs) out.push_back({x, y});
  return out;
}

AlignmentMode mode_from(const std::string& name) {
  if (name == "run") return AlignmentMode::Run;
  if (name == "coordinate") return AlignmentMode::Coordinate;
  throw py::value_error("alignment must be 'run' or 'coordinate'");
}

Universe universe_from(const std::string& name) {
  if (name == "poly" || name == "polyomino") return Universe::Polyomino;
  if (name == "collection") return Universe::Collection;
  throw py::value_error("universe must be 'poly' or 'collection'");
}

py::dict report_to_dict(const VerificationReport& r) {
  py::dict checks;
  for (const auto& [name, check] : r.checks) {
    const char* status = check.status == CheckStatus::Pass   ? "pass"
                         : check.status == CheckStatus::Fail ? "fail"
                                                             : "skipped";
    checks[py::str(name)] = status;
  }
  using namespace py::literals;
  return py::dict("id"_a = r.id, "rank"_a = r.rank, "poly"_a = r.poly.coeffs,
                  "stable"_a = r.domino_stable,
                  "palindromic"_a = r.palindromic, "checks"_a = checks,
                  "all_passed"_a = r.all_passed());
}

}  // namespace

PYBIND11_MODULE(_cellrook, m) {
  m.doc() = "switching rook polynomials and domino-stability of collections "
            "of cells";

  py::register_exception<Error>(m, "CellRookError", PyExc_ValueError);

  py::class_<CellCollection>(m, "Collection")
      .def(py::init([](const std::vector<std::pair<int, int>>& cells) {
             return CellCollection(to_cells(cells));
           }),
           py::arg("cells"))
      .def_property_readonly("rank", &CellCollection::rank)
      .def_property_readonly("width", &CellCollection::width)
      .def_property_readonly("height", &CellCollection::height)
      .def_property_readonly(
          "cells",
          [](const CellCollection& P) { return to_pairs(P.cells()); })
      .def_property_readonly("id",
                             [](const CellCollection& P) { return shape_id(P); })
      .def("grid_text", [](const CellCollection& P) { return to_grid_text(P); })
      .def("__eq__",
           [](const CellCollection& a, const CellCollection& b) {
             return a == b;
           })
      .def("__len__", &CellCollection::rank)
      .def("__repr__", [](const CellCollection& P) {
        return "Collection(rank=" + std::to_string(P.rank()) + ", " +
               std::to_string(P.width()) + "x" + std::to_string(P.height()) +
               ")";
      });

  m.def(
      "parse",
      [](const std::string& text) { return parse_collection(text); },
      py::arg("text"),
      "Parse a shape from grid, coordinate or JSON text (auto-detected).");

  m.def(
      "rook_number",
      [](const CellCollection& P) { return rook_number(P); }, py::arg("shape"));

  m.def(
      "switching_polynomial",
      [](const CellCollection& P) { return switching_polynomial(P).coeffs; },
      py::arg("shape"),
      "Coefficients [r0, ..., rd] of the switching rook polynomial.");

  m.def(
      "class_count",
      [](const CellCollection& P, int k) { return class_count(P, k); },
      py::arg("shape"), py::arg("k"));

  m.def(
      "is_domino_stable",
      [](const CellCollection& P, const std::string& alignment) {
        const StabilityResult st = is_domino_stable(P, mode_from(alignment));
        return py::make_tuple(st.stable, st.detail);
      },
      py::arg("shape"), py::arg("alignment") = "run",
      "Returns (stable, witness_detail).");

  m.def(
      "is_palindromic",
      [](const std::vector<std::uint64_t>& coeffs) {
        return is_palindromic(SwitchingPolynomial{coeffs});
      },
      py::arg("coeffs"));

  m.def(
      "verify",
      [](const CellCollection& P, const std::string& alignment) {
        return report_to_dict(verify(P, mode_from(alignment)));
      },
      py::arg("shape"), py::arg("alignment") = "run",
      "Run all structural checks; returns a report dict.");

  m.def(
      "canonical_form",
      [](const CellCollection& P) { return canonical_form(P); },
      py::arg("shape"),
      "Representative of the symmetry class under rotation/reflection.");

  m.def(
      "maximal_rectangles",
      [](const CellCollection& P) {
        std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> out;
        for (const CellRect& r : maximal_rectangles(P))
          out.push_back({{r.lo.x, r.lo.y}, {r.hi.x, r.hi.y}});
        return out;
      },
      py::arg("shape"), "List of ((lo_x, lo_y), (hi_x, hi_y)) pairs.");

  m.def(
      "top_config",
      [](const CellCollection& P) { return to_pairs(top_config(P)); },
      py::arg("shape"));

  m.def(
      "enumerate_shapes",
      [](int rank, const std::string& universe) {
        std::vector<CellCollection> out;
        enumerate_shapes(rank, universe_from(universe),
                         [&](CellCollection&& P) { out.push_back(std::move(P)); });
        return out;
      },
      py::arg("rank"), py::arg("universe") = "poly",
      "All free shapes of the rank, one per symmetry class.");

  m.def(
      "count_shapes",
      [](int rank, const std::string& universe, int jobs) {
        return count_shapes(rank, universe_from(universe), jobs);
      },
      py::arg("rank"), py::arg("universe") = "poly", py::arg("jobs") = 1);
}
