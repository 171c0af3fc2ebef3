#include "catan/brick_grid.hpp"

#include <vector>

namespace catanrl {

namespace {

BrickGrid build() {
    const BoardTopology& topo = board_topology();
    BrickGrid g;
    g.cell_type.fill(CellType::Empty);
    g.cell_id.fill(-1);
    g.hex_cell = topo.hex_cell;
    g.path_cell = topo.path_cell;
    g.intersection_cell = topo.intersection_cell;

    auto mark = [&g](Cell c, CellType t, int id) {
        const int i = cell_index(c);
        g.cell_type[i] = t;
        g.cell_id[i] = static_cast<std::int16_t>(id);
    };
    for (int h = 0; h < kNumHexes; ++h) mark(topo.hex_cell[h], CellType::Hex, h);
    for (int p = 0; p < kNumPaths; ++p) mark(topo.path_cell[p], CellType::Path, p);
    for (int v = 0; v < kNumIntersections; ++v)
        mark(topo.intersection_cell[v], CellType::Intersection, v);
    return g;
}

} // namespace

int BrickGrid::count(CellType t) const {
    int n = 0;
    for (CellType c : cell_type)
        if (c == t) ++n;
    return n;
}

const BrickGrid& build_brick_grid() {
    static const BrickGrid g = build();
    return g;
}

bool verify_kernel_property(const BrickGrid& grid, std::string* error) {
    const BoardTopology& topo = board_topology();
    auto fail = [error](const std::string& why) {
        if (error) *error = why;
        return false;
    };
    auto window_cells = [](Cell center) {
        std::vector<Cell> cells;
        for (int dr = -1; dr <= 1; ++dr)
            for (int dc = -2; dc <= 2; ++dc) {
                const int r = center.row + dr, c = center.col + dc;
                if (r >= 0 && r < kGridRows && c >= 0 && c < kGridCols)
                    cells.push_back(Cell{static_cast<std::int8_t>(r),
                                         static_cast<std::int8_t>(c)});
            }
        return cells;
    };

    for (int h = 0; h < kNumHexes; ++h) {
        std::array<bool, kNumPaths> want_path{};
        std::array<bool, kNumIntersections> want_inter{};
        for (std::int8_t p : topo.hex_paths[h]) want_path[p] = true;
        for (std::int8_t v : topo.hex_intersections[h]) want_inter[v] = true;
        int paths = 0, inters = 0, hexes = 0, empty = 0;
        for (Cell c : window_cells(grid.hex_cell[h])) {
            const CellType t = grid.type_at(c.row, c.col);
            const int id = grid.id_at(c.row, c.col);
            switch (t) {
                case CellType::Empty: ++empty; break;
                case CellType::Hex:
                    ++hexes;
                    if (id != h) return fail("foreign hex in window of hex " + std::to_string(h));
                    break;
                case CellType::Path:
                    ++paths;
                    if (!want_path[id])
                        return fail("foreign path in window of hex " + std::to_string(h));
                    break;
                case CellType::Intersection:
                    ++inters;
                    if (!want_inter[id])
                        return fail("foreign intersection in window of hex " + std::to_string(h));
                    break;
            }
        }
        if (paths != 6 || inters != 6 || hexes != 1 || empty != 2)
            return fail("window of hex " + std::to_string(h) + " has counts " +
                        std::to_string(paths) + "/" + std::to_string(inters) + "/" +
                        std::to_string(hexes) + "/" + std::to_string(empty));
    }

    for (int v = 0; v < kNumIntersections; ++v) {
        std::array<bool, kNumPaths> seen_path{};
        std::array<bool, kNumHexes> seen_hex{};
        for (Cell c : window_cells(grid.intersection_cell[v])) {
            const CellType t = grid.type_at(c.row, c.col);
            const int id = grid.id_at(c.row, c.col);
            if (t == CellType::Path) seen_path[id] = true;
            if (t == CellType::Hex) seen_hex[id] = true;
        }
        for (std::int8_t p : topo.intersection_paths[v])
            if (p >= 0 && !seen_path[p])
                return fail("window of intersection " + std::to_string(v) +
                            " misses incident path " + std::to_string(p));
        for (std::int8_t h : topo.intersection_hexes[v])
            if (h >= 0 && !seen_hex[h])
                return fail("window of intersection " + std::to_string(v) +
                            " misses adjacent hex " + std::to_string(h));
    }
    return true;
}

std::string render_grid(const BrickGrid& grid) {
    std::string out;
    out.reserve((kGridCols + 1) * kGridRows);
    for (int r = 0; r < kGridRows; ++r) {
        for (int c = 0; c < kGridCols; ++c) {
            switch (grid.type_at(r, c)) {
                case CellType::Empty: out += '.'; break;
                case CellType::Hex: out += 'H'; break;
                case CellType::Path: out += (r % 2 == 0) ? '-' : '|'; break;
                case CellType::Intersection: out += '*'; break;
            }
        }
        out += '\n';
    }
    return out;
}

} // namespace catanrl
