#include "catan/topology.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace catanrl {

namespace {

constexpr int kBrickRows = 5;
constexpr std::array<int, kBrickRows> kRowWidth = {3, 4, 5, 4, 3};
constexpr std::array<int, kBrickRows> kRowOffset = {2, 1, 0, 1, 2};

struct Point {
    int x, y;
    auto operator<=>(const Point&) const = default;
};
struct Segment {
    Point a, b; // a < b
    auto operator<=>(const Segment&) const = default;
};

Segment make_segment(Point p, Point q) {
    if (q < p) std::swap(p, q);
    return {p, q};
}

Cell point_cell(Point p) {
    return Cell{static_cast<std::int8_t>(2 * p.y), static_cast<std::int8_t>(2 * p.x)};
}

Cell segment_cell(const Segment& s) {
    if (s.a.y == s.b.y) // horizontal
        return Cell{static_cast<std::int8_t>(2 * s.a.y), static_cast<std::int8_t>(2 * s.a.x + 1)};
    return Cell{static_cast<std::int8_t>(2 * s.a.y + 1), static_cast<std::int8_t>(2 * s.a.x)};
}

BoardTopology build() {
    BoardTopology t{};

    struct Brick {
        int row, k, x0;
        std::array<Point, 6> corners;   // clockwise from top-left
        std::array<Segment, 6> sides;
    };
    std::vector<Brick> bricks;
    for (int r = 0; r < kBrickRows; ++r) {
        for (int k = 0; k < kRowWidth[r]; ++k) {
            Brick b;
            b.row = r;
            b.k = k;
            b.x0 = kRowOffset[r] + 2 * k;
            const int x0 = b.x0;
            b.corners = {Point{x0, r},     Point{x0 + 1, r},     Point{x0 + 2, r},
                         Point{x0 + 2, r + 1}, Point{x0 + 1, r + 1}, Point{x0, r + 1}};
            b.sides = {make_segment({x0, r}, {x0 + 1, r}),
                       make_segment({x0 + 1, r}, {x0 + 2, r}),
                       make_segment({x0 + 2, r}, {x0 + 2, r + 1}),
                       make_segment({x0 + 1, r + 1}, {x0 + 2, r + 1}),
                       make_segment({x0, r + 1}, {x0 + 1, r + 1}),
                       make_segment({x0, r}, {x0, r + 1})};
            bricks.push_back(b);
        }
    }
    assert(bricks.size() == kNumHexes);

    // Assign ids in fine-grid scan order; std::map on (row,col) gives it.
    std::map<std::pair<int, int>, int> point_id, segment_id;
    auto key = [](Cell c) { return std::pair<int, int>(c.row, c.col); };
    for (const Brick& b : bricks) {
        for (const Point& p : b.corners) point_id.emplace(key(point_cell(p)), 0);
        for (const Segment& s : b.sides) segment_id.emplace(key(segment_cell(s)), 0);
    }
    assert(point_id.size() == kNumIntersections);
    assert(segment_id.size() == kNumPaths);
    {
        int next = 0;
        for (auto& [k_, v] : point_id) v = next++;
        next = 0;
        for (auto& [k_, v] : segment_id) v = next++;
    }
    auto pid = [&](Point p) { return point_id.at(key(point_cell(p))); };
    auto sid = [&](const Segment& s) { return segment_id.at(key(segment_cell(s))); };

    for (auto& row : t.intersection_paths) row.fill(-1);
    for (auto& row : t.intersection_hexes) row.fill(-1);
    for (auto& row : t.intersection_neighbors) row.fill(-1);

    std::map<std::pair<int, int>, Segment> segment_by_cell;
    for (const Brick& b : bricks)
        for (const Segment& s : b.sides) segment_by_cell.emplace(key(segment_cell(s)), s);

    for (std::size_t h = 0; h < bricks.size(); ++h) {
        const Brick& b = bricks[h];
        t.hex_cell[h] = Cell{static_cast<std::int8_t>(2 * b.row + 1),
                             static_cast<std::int8_t>(2 * b.x0 + 2)};
        for (int i = 0; i < 6; ++i) {
            t.hex_intersections[h][i] = static_cast<std::int8_t>(pid(b.corners[i]));
            t.hex_paths[h][i] = static_cast<std::int8_t>(sid(b.sides[i]));
        }
        std::sort(t.hex_intersections[h].begin(), t.hex_intersections[h].end());
        std::sort(t.hex_paths[h].begin(), t.hex_paths[h].end());
        for (std::int8_t v : t.hex_intersections[h]) {
            auto& hs = t.intersection_hexes[v];
            *std::find(hs.begin(), hs.end(), -1) = static_cast<std::int8_t>(h);
        }
    }

    for (const auto& [cell_key, seg] : segment_by_cell) {
        const int id = segment_id.at(cell_key);
        t.path_cell[id] = Cell{static_cast<std::int8_t>(cell_key.first),
                               static_cast<std::int8_t>(cell_key.second)};
        const int va = pid(seg.a), vb = pid(seg.b);
        t.path_intersections[id] = {static_cast<std::int8_t>(va), static_cast<std::int8_t>(vb)};
        for (int v : {va, vb}) {
            auto& ps = t.intersection_paths[v];
            *std::find(ps.begin(), ps.end(), -1) = static_cast<std::int8_t>(id);
            auto& ns = t.intersection_neighbors[v];
            *std::find(ns.begin(), ns.end(), -1) =
                static_cast<std::int8_t>(v == va ? vb : va);
        }
    }

    for (const auto& [k_, v] : point_id) {
        t.intersection_cell[v] = Cell{static_cast<std::int8_t>(k_.first),
                                      static_cast<std::int8_t>(k_.second)};
    }

    // Harbors: walk the coastal ring (paths bordering exactly one hex) and
    // drop a harbor every (3,3,4) steps; 9 slots on the 30-path coast.
    std::array<int, kNumPaths> hex_count{};
    for (int h = 0; h < kNumHexes; ++h)
        for (std::int8_t p : t.hex_paths[h]) hex_count[p] += 1;
    std::vector<int> ring;
    {
        int start = -1;
        for (int p = 0; p < kNumPaths && start < 0; ++p)
            if (hex_count[p] == 1) start = p;
        int prev_vertex = t.path_intersections[start][0];
        int cur = start;
        int cur_vertex = t.path_intersections[start][1];
        ring.push_back(start);
        while (true) {
            int next = -1;
            for (std::int8_t p : t.intersection_paths[cur_vertex]) {
                if (p >= 0 && p != cur && hex_count[p] == 1) next = p;
            }
            if (next == start) break;
            ring.push_back(next);
            const auto& ends = t.path_intersections[next];
            prev_vertex = cur_vertex;
            cur_vertex = (ends[0] == cur_vertex) ? ends[1] : ends[0];
            cur = next;
        }
        (void)prev_vertex;
    }
    assert(ring.size() == 30);
    constexpr std::array<int, kNumHarbors> kStep = {3, 3, 4, 3, 3, 4, 3, 3, 4};
    int pos = 0;
    for (int h = 0; h < kNumHarbors; ++h) {
        const int p = ring[pos];
        t.harbor_path[h] = static_cast<std::int8_t>(p);
        t.harbor_intersections[h] = t.path_intersections[p];
        pos += kStep[h];
    }

    return t;
}

} // namespace

int BoardTopology::path_between(int a, int b) const {
    for (int i = 0; i < 3; ++i) {
        if (intersection_neighbors[a][i] == b) return intersection_paths[a][i];
    }
    return -1;
}

const BoardTopology& board_topology() {
    static const BoardTopology t = build();
    return t;
}

} // namespace catanrl
