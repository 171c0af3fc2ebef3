#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "catan/action.hpp"
#include "catan/brick_grid.hpp"
#include "catan/engine.hpp"

namespace catanrl {

// Flat policy layout: 5 spatial channels over the 11x21 grid followed by a
// block of scalar action slots.
//
// Spatial channels: MoveRobberSteal, MoveRobberNoSteal, PlaceRoad,
// PlaceSettlement, PlaceCity; index = channel*231 + row*21 + col.
//
// Scalar slots (base 1155): RollDice; EndTurn; 70 DiscardKeep multisets in
// canonical order; 20 BankTrade pairs give-major; BuyDevCard; PlayKnight;
// PlayRoadBuilding; PlayYearOfPlenty; 5 ChooseFreeResource; 5 PlayMonopoly.
// An opt-in compatibility mode pads the scalar block to 117 slots; padded
// slots decode to nothing and are always masked.
inline constexpr int kActionChannels = 5;
inline constexpr int kSpatialActions = kActionChannels * kGridCells; // 1155
inline constexpr int kScalarActions = 106;
inline constexpr int kScalarActionsCompat = 117;
inline constexpr int kFlatActions = kSpatialActions + kScalarActions; // 1261
inline constexpr int kFlatActionsCompat = kSpatialActions + kScalarActionsCompat;

inline constexpr int kChanMoveRobberSteal = 0;
inline constexpr int kChanMoveRobberNoSteal = 1;
inline constexpr int kChanPlaceRoad = 2;
inline constexpr int kChanPlaceSettlement = 3;
inline constexpr int kChanPlaceCity = 4;

inline constexpr int kSlotRollDice = 0;
inline constexpr int kSlotEndTurn = 1;
inline constexpr int kSlotDiscardBase = 2;   // 70 slots
inline constexpr int kSlotBankTradeBase = 72; // 20 slots
inline constexpr int kSlotBuyDevCard = 92;
inline constexpr int kSlotPlayKnight = 93;
inline constexpr int kSlotPlayRoadBuilding = 94;
inline constexpr int kSlotPlayYearOfPlenty = 95;
inline constexpr int kSlotChooseFreeResourceBase = 96; // 5 slots
inline constexpr int kSlotPlayMonopolyBase = 101;      // 5 slots

inline int flat_action_size(bool compat117) {
    return compat117 ? kFlatActionsCompat : kFlatActions;
}

// All 70 keep-4 multisets over the five resource types, canonical order:
// (4,0,0,0,0) first, (0,0,0,0,4) last.
const std::vector<std::array<std::uint8_t, kNumResources>>& discard_keep_actions();

// Number of raw (unabstracted) discard actions: 5-tuples over 0..19 with
// total between 3 and 47, counted by brute force.
long raw_discard_action_count();

int encode_action(const Action& action, const BrickGrid& grid);
// Throws InvalidIndex on empty cells, mismatched cell types, padded slots
// or out-of-range indices.
Action decode_action(int index, const BrickGrid& grid, bool compat117 = false);

// Bit per flat action index.
struct Mask {
    std::vector<std::uint8_t> bits;

    explicit Mask(int size = kFlatActions) : bits(size, 0) {}
    int size() const { return static_cast<int>(bits.size()); }
    bool test(int i) const { return bits[i] != 0; }
    void set(int i) { bits[i] = 1; }
    int count() const;
    bool operator==(const Mask&) const = default;
};

// Bit set exactly for the flat indices of legal_actions(state).
Mask legal_mask(const GameState& state, const BrickGrid& grid, bool compat117 = false);

} // namespace catanrl
