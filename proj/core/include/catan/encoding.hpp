#pragma once

#include <array>
#include <vector>

#include "catan/brick_grid.hpp"
#include "catan/engine.hpp"

namespace catanrl {

// Board channels, in schema order.
inline constexpr int kChanIsDesert = 0;
inline constexpr int kChanProduction = 1; // 5 channels, resource order
inline constexpr int kChanThief = 6;
inline constexpr int kChanSelfRoad = 7;
inline constexpr int kChanOppRoad = 8;
inline constexpr int kChanHarbor = 9; // 6 channels, HarborKind order
inline constexpr int kChanSelfBuilding = 15;
inline constexpr int kChanOppBuilding = 16;
inline constexpr int kStateChannels = 17;
inline constexpr int kStateScalars = 45;

// Network input: 17 brick-grid channels plus 45 scalars, all in [0,1].
// Always expressed from the acting player's seat, so one network serves
// both players.
struct StateEncoding {
    std::array<float, kStateChannels * kGridCells> channels{};
    std::array<float, kStateScalars> scalars{};

    float channel(int c, int row, int col) const {
        return channels[c * kGridCells + row * kGridCols + col];
    }
    bool operator==(const StateEncoding&) const = default;
};

StateEncoding encode_state(const Observation& obs, const BrickGrid& grid);

// Stable dump used by golden tests and `inspect encoding`:
// `channel,row,col,value` lines for the board block then
// `scalar_index,value` lines.
std::string dump_encoding(const StateEncoding& enc);

} // namespace catanrl
