#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cellrook/collection.hpp"

namespace cellrook {

/// Which shapes a rank-n enumeration ranges over: polyominoes are
/// edge-connected, collections are weakly (king-) connected.
enum class Universe { Polyomino, Collection };

/// Lexicographically least normalized cell list over the 8 dihedral images
/// of P. Two shapes share a canonical form iff they coincide up to
/// translation, rotation and reflection.
std::vector<Cell> canonical_cells(const CellCollection& P);
CellCollection canonical_form(const CellCollection& P);

/// Stable 16-hex-digit identifier of the symmetry class of P.
std::string shape_id(const CellCollection& P);

/// Every free shape of the given rank exactly once, as its canonical form,
/// in a deterministic order. Shapes are generated by cell augmentation
/// (each translation class exactly once) and one representative per
/// symmetry class is kept: the shape equal to its own canonical form.
/// That filter needs no shared state, so subtrees enumerate independently.
void enumerate_shapes(int rank, Universe universe,
                      const std::function<void(CellCollection&&)>& emit);

/// Parallel variant: the augmentation tree is split at depth 2 and subtrees
/// are distributed over `jobs` threads. emit is called concurrently and
/// must be thread-safe; emission order is schedule-dependent.
void enumerate_shapes_parallel(int rank, Universe universe, int jobs,
                               const std::function<void(CellCollection&&)>& emit);

/// Number of free shapes of the given rank.
std::uint64_t count_shapes(int rank, Universe universe, int jobs = 1);

}  // namespace cellrook
