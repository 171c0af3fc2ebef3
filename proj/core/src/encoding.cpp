#include "catan/encoding.hpp"

#include <algorithm>
#include <cstdio>

namespace catanrl {

namespace {

inline float norm(int count, int max) {
    // Scalars are clamped into [0,1]; a few counts (e.g. 14 Knights) can
    // exceed their nominal divisor.
    return std::min(1.0f, static_cast<float>(count) / static_cast<float>(max));
}

} // namespace

StateEncoding encode_state(const Observation& obs, const BrickGrid& grid) {
    StateEncoding enc{};
    const BoardLayout& layout = *obs.layout;

    auto set = [&enc](int channel, Cell cell, float value) {
        enc.channels[channel * kGridCells + cell_index(cell)] = value;
    };

    for (int h = 0; h < kNumHexes; ++h) {
        const Cell cell = grid.hex_cell[h];
        if (!layout.hex_resource[h]) {
            set(kChanIsDesert, cell, 1.0f);
        } else {
            const int r = static_cast<int>(*layout.hex_resource[h]);
            set(kChanProduction + r, cell,
                static_cast<float>(token_combinations(layout.number_token[h])) / 36.0f);
        }
        if (h == obs.robber_hex) set(kChanThief, cell, 1.0f);
    }

    for (int p = 0; p < kNumPaths; ++p) {
        if (obs.road_owner[p] < 0) continue;
        set(obs.road_owner[p] == obs.seat ? kChanSelfRoad : kChanOppRoad, grid.path_cell[p],
            1.0f);
    }

    const BoardTopology& topo = board_topology();
    for (int h = 0; h < kNumHarbors; ++h) {
        const int channel = kChanHarbor + static_cast<int>(layout.harbor_kind[h]);
        for (std::int8_t v : topo.harbor_intersections[h])
            set(channel, grid.intersection_cell[v], 1.0f);
    }

    for (int v = 0; v < kNumIntersections; ++v) {
        const Building& b = obs.buildings[v];
        if (b.kind == BuildingKind::None) continue;
        const int channel = (b.owner == obs.seat) ? kChanSelfBuilding : kChanOppBuilding;
        set(channel, grid.intersection_cell[v], b.kind == BuildingKind::City ? 1.0f : 0.5f);
    }

    // Scalar block: Self 27, Opponent 8, General 6, Phase 4.
    int i = 0;
    auto& sc = enc.scalars;
    for (int r = 0; r < kNumResources; ++r) sc[i++] = norm(obs.self_resources.at(r), 19);
    sc[i++] = norm(obs.self_roads_left, kInitialRoads);
    sc[i++] = norm(obs.self_settlements_left, kInitialSettlements);
    sc[i++] = norm(obs.self_cities_left, kInitialCities);
    sc[i++] = norm(obs.self_army, 14);
    for (int d = 0; d < kNumDevCards; ++d) sc[i++] = norm(obs.self_dev_new[d], 5);
    for (int d = 0; d < kNumDevCards; ++d) sc[i++] = norm(obs.self_dev_old[d], 5);
    for (int h = 0; h < kNumHarborKinds; ++h) sc[i++] = obs.self_harbor_access[h] ? 1.0f : 0.0f;
    sc[i++] = obs.self_largest_army ? 1.0f : 0.0f;
    sc[i++] = obs.self_longest_road ? 1.0f : 0.0f;

    sc[i++] = norm(obs.opp_resource_total, 19);
    sc[i++] = norm(obs.opp_dev_total, kDevDeckSize);
    sc[i++] = norm(obs.opp_roads_left, kInitialRoads);
    sc[i++] = norm(obs.opp_settlements_left, kInitialSettlements);
    sc[i++] = norm(obs.opp_cities_left, kInitialCities);
    sc[i++] = norm(obs.opp_army, 14);
    sc[i++] = obs.opp_largest_army ? 1.0f : 0.0f;
    sc[i++] = obs.opp_longest_road ? 1.0f : 0.0f;

    for (int r = 0; r < kNumResources; ++r) sc[i++] = norm(obs.bank.at(r), kBankPerResource);
    sc[i++] = norm(obs.dev_deck_size, kDevDeckSize);

    sc[i++] = obs.has_rolled ? 1.0f : 0.0f;
    sc[i++] = obs.dev_played ? 1.0f : 0.0f;
    sc[i++] = obs.using_road_building ? 1.0f : 0.0f;
    sc[i++] = obs.using_year_of_plenty ? 1.0f : 0.0f;
    return enc;
}

std::string dump_encoding(const StateEncoding& enc) {
    std::string out;
    out.reserve(1 << 16);
    char buf[64];
    for (int c = 0; c < kStateChannels; ++c)
        for (int r = 0; r < kGridRows; ++r)
            for (int col = 0; col < kGridCols; ++col) {
                std::snprintf(buf, sizeof(buf), "%d,%d,%d,%.9g\n", c, r, col,
                              static_cast<double>(enc.channel(c, r, col)));
                out += buf;
            }
    for (int s = 0; s < kStateScalars; ++s) {
        std::snprintf(buf, sizeof(buf), "%d,%.9g\n", s, static_cast<double>(enc.scalars[s]));
        out += buf;
    }
    return out;
}

} // namespace catanrl
