#pragma once

#include <array>
#include <cstdint>

#include "catan/board.hpp"
#include "catan/resources.hpp"

namespace catanrl {

inline constexpr int kNumPlayers = 2;
inline constexpr int kBankPerResource = 19;
inline constexpr int kDevDeckSize = 25;
inline constexpr int kInitialRoads = 15;
inline constexpr int kInitialSettlements = 5;
inline constexpr int kInitialCities = 4;
inline constexpr int kWinVictoryPoints = 10;
inline constexpr int kLongestRoadMin = 5;
inline constexpr int kLargestArmyMin = 3;
inline constexpr int kDiscardHandSize = 7; // hand >= 7 triggers discard
inline constexpr int kDefaultTurnCap = 500;

struct PlayerState {
    ResourceVec resources{};
    int roads_left = kInitialRoads;
    int settlements_left = kInitialSettlements;
    int cities_left = kInitialCities;
    int army_size = 0;
    std::array<int, kNumDevCards> dev_new{}; // bought this turn, not yet playable
    std::array<int, kNumDevCards> dev_old{};
    bool has_longest_road = false;
    bool has_largest_army = false;

    int dev_total() const {
        int t = 0;
        for (int i = 0; i < kNumDevCards; ++i) t += dev_new[i] + dev_old[i];
        return t;
    }
    bool operator==(const PlayerState&) const = default;
};

enum class PhaseKind : std::uint8_t {
    Setup,         // initial placements, steps 0..3 (A, B, B, A)
    PreRoll,       // current player must roll (dev card play allowed)
    Main,          // build / trade / play / end turn
    Discard,       // acting player picks the 4 cards to keep
    MoveRobber,    // current player relocates the robber
    FreeRoads,     // road-building placements remaining
    FreeResources, // year-of-plenty picks remaining
    Terminal,
};
const char* phase_kind_name(PhaseKind k);

struct Phase {
    PhaseKind kind = PhaseKind::Setup;
    std::int8_t setup_step = 0;        // 0..3
    bool setup_road = false;           // false: place settlement, true: its road
    std::int8_t setup_settlement = -1; // settlement just placed this step
    std::int8_t acting_player = -1;    // Discard only
    std::int8_t keep_count = 0;        // Discard only, ceil(hand/2) at entry
    std::int8_t remaining = 0;         // FreeRoads / FreeResources, 1..2
    std::int8_t winner = -1;           // Terminal: 0 | 1 | -1 for a cap draw

    bool operator==(const Phase&) const = default;
};

enum class BuildingKind : std::uint8_t { None = 0, Settlement, City };

struct Building {
    BuildingKind kind = BuildingKind::None;
    std::int8_t owner = -1;
    bool operator==(const Building&) const = default;
};

// Complete authoritative game situation.
struct GameState {
    BoardLayout layout;
    std::array<std::int8_t, kNumPaths> road_owner; // -1 = empty
    std::array<Building, kNumIntersections> buildings;
    std::int8_t robber_hex = -1;
    std::array<PlayerState, kNumPlayers> players;
    ResourceVec bank;
    std::array<DevCard, kDevDeckSize> dev_deck; // draw from dev_deck[dev_deck_size-1]
    std::int8_t dev_deck_size = kDevDeckSize;
    Phase phase;
    std::int8_t current_player = 0;
    int turn_counter = 0;
    int turn_cap = kDefaultTurnCap;
    bool dev_played_this_turn = false;
    bool has_rolled = false;

    bool is_terminal() const { return phase.kind == PhaseKind::Terminal; }
    const PlayerState& player(int p) const { return players[p]; }
    PlayerState& player(int p) { return players[p]; }

    bool operator==(const GameState&) const = default;
};

// Fresh game: shuffled board and development deck, setup phase, robber on
// the desert, full bank.
GameState new_game(Rng& rng, int turn_cap = kDefaultTurnCap);

// The player who must act in the current phase (the discard phase may hand
// control to the non-current player).
int acting_player(const GameState& state);

} // namespace catanrl
