#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "catan/resources.hpp"
#include "catan/rng.hpp"
#include "catan/topology.hpp"

namespace catanrl {

// Harbor kinds; generic trades 3:1, resource harbors 2:1 for their type.
enum class HarborKind : std::uint8_t {
    Generic = 0, // 3:1
    Brick, Lumber, Ore, Grain, Wool
};
inline constexpr int kNumHarborKinds = 6;
const char* harbor_kind_name(HarborKind k);

// Per-game board: fixed topology plus randomized hex kinds, number tokens
// and harbor kinds.
struct BoardLayout {
    // nullopt = desert.
    std::array<std::optional<Resource>, kNumHexes> hex_resource;
    // 0 on the desert, otherwise 2..12.
    std::array<std::uint8_t, kNumHexes> number_token;
    std::array<HarborKind, kNumHarbors> harbor_kind;
    std::int8_t desert_hex = -1;

    const BoardTopology& topology() const { return board_topology(); }

    bool operator==(const BoardLayout&) const = default;
};

// Uniformly shuffled hex kinds and tokens over the standard inventory
// (1 desert, 4 lumber, 4 wool, 4 grain, 3 brick, 3 ore; tokens 2 and 12
// once, 3,4,5,6,8,9,10,11 twice); harbor kinds (4 generic plus one 2:1 per
// resource) shuffled over the 9 coastal slots.
BoardLayout generate_board(Rng& rng);

// Dice-sum combinations for a number token: 6 - |token - 7| out of 36.
inline int token_combinations(int token) { return token == 0 ? 0 : 6 - std::abs(token - 7); }

} // namespace catanrl
