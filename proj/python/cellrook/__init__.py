"""Switching rook polynomials and domino-stability of collections of cells."""

from cellrook._cellrook import (
    CellRookError,
    Collection,
    canonical_form,
    class_count,
    count_shapes,
    enumerate_shapes,
    is_domino_stable,
    is_palindromic,
    maximal_rectangles,
    parse,
    rook_number,
    switching_polynomial,
    top_config,
    verify,
)

__all__ = [
    "CellRookError",
    "Collection",
    "canonical_form",
    "class_count",
    "count_shapes",
    "enumerate_shapes",
    "is_domino_stable",
    "is_palindromic",
    "maximal_rectangles",
    "parse",
    "rook_number",
    "switching_polynomial",
    "top_config",
    "verify",
]

__version__ = "0.1.0"
