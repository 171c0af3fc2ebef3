#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "catan/action.hpp"
#include "catan/state.hpp"

namespace catanrl {

// What one player is allowed to see (the input schema of the encoder):
// full public board, the player's own hand in detail, the opponent
// summarized to totals, bank and deck sizes, and the phase flags. Never
// contains the opponent's per-resource counts, their dev-card kinds, or
// the deck order.
struct Observation {
    const BoardLayout* layout = nullptr;
    std::array<std::int8_t, kNumPaths> road_owner;
    std::array<Building, kNumIntersections> buildings;
    std::int8_t robber_hex = -1;
    std::int8_t seat = 0; // the player this observation belongs to

    ResourceVec self_resources;
    int self_roads_left = 0, self_settlements_left = 0, self_cities_left = 0;
    int self_army = 0;
    std::array<int, kNumDevCards> self_dev_new{}, self_dev_old{};
    std::array<bool, kNumHarborKinds> self_harbor_access{};
    bool self_largest_army = false, self_longest_road = false;

    int opp_resource_total = 0;
    int opp_dev_total = 0;
    int opp_roads_left = 0, opp_settlements_left = 0, opp_cities_left = 0;
    int opp_army = 0;
    bool opp_largest_army = false, opp_longest_road = false;

    ResourceVec bank;
    int dev_deck_size = 0;

    bool has_rolled = false;
    bool dev_played = false;
    bool using_road_building = false;
    bool using_year_of_plenty = false;

    // Engine-internal phase, carried for legality-related tooling.
    Phase phase;

    bool operator==(const Observation& o) const;
};

// Everything that happened in one apply(), sufficient to replay a game
// deterministically given the same seed.
struct TransitionRecord {
    int turn = 0;
    int player = 0; // the acting player
    Action action;
    std::optional<int> dice;
    std::array<ResourceVec, kNumPlayers> produced{};  // gains from bank/opponent
    std::array<ResourceVec, kNumPlayers> discarded{}; // returned to bank / monopoly losses
    std::optional<Resource> stolen;                   // robber steal
    PhaseKind phase_after = PhaseKind::Setup;

    bool operator==(const TransitionRecord&) const = default;
};

// Exactly the rule-legal actions in `state`. Never empty outside Terminal.
std::vector<Action> legal_actions(const GameState& state);

bool is_legal(const GameState& state, const Action& action);

// Applies `action` to `state` under the full rule set. Throws IllegalAction
// if the action is not in legal_actions(state).
std::pair<GameState, TransitionRecord> apply(const GameState& state, const Action& action,
                                             Rng& rng);

// Length of the longest edge-simple trail in the player's road subgraph.
// An opponent building on an intersection disconnects trails through it.
int longest_road(const GameState& state, int player);

// settlements + 2*cities + 2*longest-road + 2*largest-army
// (+ VictoryPoint development cards when include_hidden).
int victory_points(const GameState& state, int player, bool include_hidden);

Observation observable(const GameState& state, int player);

// Harbor access flags for a player (index by HarborKind).
std::array<bool, kNumHarborKinds> harbor_access(const GameState& state, int player);

// Best bank-trade rate for giving away `give`: 2 with the matching 2:1
// harbor, else 3 with any generic harbor, else 4.
int bank_trade_rate(const GameState& state, int player, Resource give);

} // namespace catanrl
