#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cellrook/collection.hpp"
#include "cellrook/geometry.hpp"

namespace cellrook {

/// A set of cells carrying pairwise non-attacking rooks, sorted by (x, y).
/// Rooks are unlabeled; equality is set equality.
using RookConfig = std::vector<Cell>;

/// True iff a and b lie in a common row or column run of P. Cells in the
/// same coordinate row but separated by a gap of P do not attack.
bool attacking(const CellCollection& P, Cell a, Cell b);

/// Cells in P, pairwise non-attacking.
bool is_valid_config(const CellCollection& P, const RookConfig& f);

/// Maximum number of non-attacking rooks, via maximum matching between the
/// horizontal-run and vertical-run ids (one edge per cell).
int rook_number(const CellCollection& P);

/// All k-rook configurations, in lexicographic order of their sorted cell
/// lists, each passed to fn exactly once.
void for_each_config(const CellCollection& P, int k,
                     const std::function<void(const RookConfig&)>& fn);
std::vector<RookConfig> configs(const CellCollection& P, int k);

/// Configurations reachable from f by one switch: two rooks on diagonal
/// corner cells of an inner interval move to the opposite corners.
std::vector<RookConfig> switch_neighbors(const CellCollection& P,
                                         const RookConfig& f);

/// Number of switch-equivalence classes of k-rook configurations.
std::uint64_t class_count(const CellCollection& P, int k);

/// Coefficients [r0, ..., rd] of the switching rook polynomial; rk counts
/// switch classes of k-rook configurations and d is the rook number.
struct SwitchingPolynomial {
  std::vector<std::uint64_t> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  friend bool operator==(const SwitchingPolynomial&,
                         const SwitchingPolynomial&) = default;
};

SwitchingPolynomial switching_polynomial(const CellCollection& P);

/// "1 + 4t + t^2" style rendering, ascending degree.
std::string to_string(const SwitchingPolynomial& poly);

/// The unique switch-equivalent of f inside the rectangle r: occupied
/// column and row offsets sorted ascending and paired positionally.
RookConfig canonical_in_rectangle(const CellRect& r, const RookConfig& f);

/// Canonical representative of [f]: for each maximal rectangle in canonical
/// order, the rooks currently inside it are replaced by their canonical
/// in-rectangle form.
RookConfig canonicalize(const CellCollection& P, const RookConfig& f);

/// Complement map on canonical configurations of the n x n square: the
/// (n-k) rooks on the unused rows and columns, paired positionally; the
/// empty configuration maps to the main diagonal.
RookConfig square_complement(int n, const RookConfig& f);

/// For a domino-stable collection, the maximum configuration placing rooks
/// on the residue cells corresponding to the diagonals of the stable
/// squares under their gluings.
RookConfig top_config(const CellCollection& P);

}  // namespace cellrook
