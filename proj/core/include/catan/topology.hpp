#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace catanrl {

inline constexpr int kNumHexes = 19;
inline constexpr int kNumPaths = 72;
inline constexpr int kNumIntersections = 54;
inline constexpr int kNumHarbors = 9;

inline constexpr int kGridRows = 11;
inline constexpr int kGridCols = 21;
inline constexpr int kGridCells = kGridRows * kGridCols;

// Position on the 11x21 fine grid.
struct Cell {
    std::int8_t row = -1;
    std::int8_t col = -1;
    bool operator==(const Cell&) const = default;
};
inline int cell_index(Cell c) { return c.row * kGridCols + c.col; }

// Fixed adjacency of the standard board, derived from the brick-wall
// embedding of the hex tiling: hex k of brick-row R is a 2-wide brick
// spanning wall columns [off(R)+2k, off(R)+2k+2], rows [R, R+1], with
// off = (2,1,0,1,2). Intersections are the brick corner points, paths the
// unit wall segments. Doubling coordinates places everything on one
// 11x21 grid: intersection (x,y) -> cell(2y,2x), horizontal segment ->
// cell(2y,2x+1), vertical segment -> cell(2y+1,2x), hex -> the brick
// center cell. Element ids are assigned in grid scan order.
struct BoardTopology {
    // Element -> grid cell.
    std::array<Cell, kNumHexes> hex_cell;
    std::array<Cell, kNumPaths> path_cell;
    std::array<Cell, kNumIntersections> intersection_cell;

    // Hex boundary, each in a fixed scan order.
    std::array<std::array<std::int8_t, 6>, kNumHexes> hex_intersections;
    std::array<std::array<std::int8_t, 6>, kNumHexes> hex_paths;

    // Path endpoints.
    std::array<std::array<std::int8_t, 2>, kNumPaths> path_intersections;

    // Incidence lists, -1 padded.
    std::array<std::array<std::int8_t, 3>, kNumIntersections> intersection_paths;
    std::array<std::array<std::int8_t, 3>, kNumIntersections> intersection_hexes;

    // Coastal harbor slots in ring order; each covers the two intersections
    // of one coastal path.
    std::array<std::int8_t, kNumHarbors> harbor_path;
    std::array<std::array<std::int8_t, 2>, kNumHarbors> harbor_intersections;

    // Neighbour intersection across each incident path (parallel to
    // intersection_paths).
    std::array<std::array<std::int8_t, 3>, kNumIntersections> intersection_neighbors;

    int path_between(int a, int b) const; // -1 if not adjacent
};

// The unique standard-board topology (built once, immutable).
const BoardTopology& board_topology();

} // namespace catanrl
