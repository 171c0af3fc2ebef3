#pragma once

#include <array>
#include <string>

#include "catan/topology.hpp"

namespace catanrl {

enum class CellType : std::uint8_t { Empty = 0, Hex, Path, Intersection };

// The 11x21 brick-coordinate grid: every hex, path and intersection of the
// board occupies one cell, so a 3-row x 5-column convolution window centred
// on a hex covers exactly its 6 intersections and 6 paths.
struct BrickGrid {
    std::array<CellType, kGridCells> cell_type{};
    std::array<std::int16_t, kGridCells> cell_id{}; // element id, -1 on Empty

    std::array<Cell, kNumHexes> hex_cell;
    std::array<Cell, kNumPaths> path_cell;
    std::array<Cell, kNumIntersections> intersection_cell;

    CellType type_at(int row, int col) const { return cell_type[row * kGridCols + col]; }
    int id_at(int row, int col) const { return cell_id[row * kGridCols + col]; }

    int count(CellType t) const;
};

const BrickGrid& build_brick_grid();

// ASCII rendering of the grid (one character per cell) used by the
// `inspect board` command and debugging.
std::string render_grid(const BrickGrid& grid);

// Brute-force check of the kernel coverage property: the 3-row x 5-column
// window centred on each hex cell contains exactly that hex's 6
// intersections, 6 paths, the hex itself and 2 empty cells; the window
// centred on each intersection covers all its incident paths and adjacent
// hexes. Returns false and fills `error` on the first violation.
bool verify_kernel_property(const BrickGrid& grid, std::string* error = nullptr);

} // namespace catanrl
