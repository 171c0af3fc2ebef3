#include "catan/action_codec.hpp"

#include <algorithm>
#include <map>

#include "catan/errors.hpp"

namespace catanrl {

namespace {

std::vector<std::array<std::uint8_t, kNumResources>> build_discard_keeps() {
    std::vector<std::array<std::uint8_t, kNumResources>> keeps;
    keeps.reserve(70);
    for (int b = 4; b >= 0; --b)
        for (int l = 4 - b; l >= 0; --l)
            for (int o = 4 - b - l; o >= 0; --o)
                for (int g = 4 - b - l - o; g >= 0; --g) {
                    const int w = 4 - b - l - o - g;
                    keeps.push_back({static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(l),
                                     static_cast<std::uint8_t>(o), static_cast<std::uint8_t>(g),
                                     static_cast<std::uint8_t>(w)});
                }
    return keeps;
}

int discard_keep_slot(const std::array<std::uint8_t, kNumResources>& keep) {
    const auto& keeps = discard_keep_actions();
    auto it = std::find(keeps.begin(), keeps.end(), keep);
    if (it == keeps.end()) throw InvalidIndex("keep multiset does not sum to 4");
    return static_cast<int>(it - keeps.begin());
}

int bank_trade_slot(Resource give, Resource receive) {
    const int g = static_cast<int>(give);
    int r = static_cast<int>(receive);
    if (r > g) r -= 1;
    return g * 4 + r;
}

int spatial_index(int channel, Cell cell) {
    return channel * kGridCells + cell_index(cell);
}

} // namespace

const std::vector<std::array<std::uint8_t, kNumResources>>& discard_keep_actions() {
    static const auto keeps = build_discard_keeps();
    return keeps;
}

long raw_discard_action_count() {
    long n = 0;
    for (int b = 0; b <= 19; ++b)
        for (int l = 0; l <= 19; ++l)
            for (int o = 0; o <= 19; ++o)
                for (int g = 0; g <= 19; ++g)
                    for (int w = 0; w <= 19; ++w) {
                        const int sum = b + l + o + g + w;
                        if (sum >= 3 && sum <= 47) ++n;
                    }
    return n;
}

int encode_action(const Action& action, const BrickGrid& grid) {
    switch (action.type) {
        case ActionType::MoveRobberSteal:
            return spatial_index(kChanMoveRobberSteal, grid.hex_cell[action.target]);
        case ActionType::MoveRobberNoSteal:
            return spatial_index(kChanMoveRobberNoSteal, grid.hex_cell[action.target]);
        case ActionType::PlaceRoad:
            return spatial_index(kChanPlaceRoad, grid.path_cell[action.target]);
        case ActionType::PlaceSettlement:
            return spatial_index(kChanPlaceSettlement, grid.intersection_cell[action.target]);
        case ActionType::PlaceCity:
            return spatial_index(kChanPlaceCity, grid.intersection_cell[action.target]);
        case ActionType::RollDice:
            return kSpatialActions + kSlotRollDice;
        case ActionType::EndTurn:
            return kSpatialActions + kSlotEndTurn;
        case ActionType::DiscardKeep:
            return kSpatialActions + kSlotDiscardBase + discard_keep_slot(action.keep);
        case ActionType::BankTrade:
            return kSpatialActions + kSlotBankTradeBase +
                   bank_trade_slot(action.give, action.receive);
        case ActionType::BuyDevCard:
            return kSpatialActions + kSlotBuyDevCard;
        case ActionType::PlayKnight:
            return kSpatialActions + kSlotPlayKnight;
        case ActionType::PlayRoadBuilding:
            return kSpatialActions + kSlotPlayRoadBuilding;
        case ActionType::PlayYearOfPlenty:
            return kSpatialActions + kSlotPlayYearOfPlenty;
        case ActionType::ChooseFreeResource:
            return kSpatialActions + kSlotChooseFreeResourceBase +
                   static_cast<int>(action.resource);
        case ActionType::PlayMonopoly:
            return kSpatialActions + kSlotPlayMonopolyBase + static_cast<int>(action.resource);
    }
    throw InvalidIndex("unknown action type");
}

Action decode_action(int index, const BrickGrid& grid, bool compat117) {
    if (index < 0 || index >= flat_action_size(compat117))
        throw InvalidIndex("flat index out of range: " + std::to_string(index));

    if (index < kSpatialActions) {
        const int channel = index / kGridCells;
        const int cell = index % kGridCells;
        const CellType type = grid.cell_type[cell];
        const int id = grid.cell_id[cell];
        switch (channel) {
            case kChanMoveRobberSteal:
            case kChanMoveRobberNoSteal:
                if (type != CellType::Hex) throw InvalidIndex("not a hex cell");
                return channel == kChanMoveRobberSteal ? Action::move_robber_steal(id)
                                                       : Action::move_robber_no_steal(id);
            case kChanPlaceRoad:
                if (type != CellType::Path) throw InvalidIndex("not a path cell");
                return Action::place_road(id);
            case kChanPlaceSettlement:
            case kChanPlaceCity:
                if (type != CellType::Intersection)
                    throw InvalidIndex("not an intersection cell");
                return channel == kChanPlaceSettlement ? Action::place_settlement(id)
                                                       : Action::place_city(id);
        }
    }

    const int slot = index - kSpatialActions;
    if (slot >= kScalarActions) throw InvalidIndex("compatibility padding slot");
    if (slot == kSlotRollDice) return Action::roll_dice();
    if (slot == kSlotEndTurn) return Action::end_turn();
    if (slot >= kSlotDiscardBase && slot < kSlotBankTradeBase)
        return Action::discard_keep(discard_keep_actions()[slot - kSlotDiscardBase]);
    if (slot >= kSlotBankTradeBase && slot < kSlotBuyDevCard) {
        const int t = slot - kSlotBankTradeBase;
        const int g = t / 4;
        int r = t % 4;
        if (r >= g) r += 1;
        return Action::bank_trade(static_cast<Resource>(g), static_cast<Resource>(r));
    }
    if (slot == kSlotBuyDevCard) return Action::buy_dev_card();
    if (slot == kSlotPlayKnight) return Action::play_knight();
    if (slot == kSlotPlayRoadBuilding) return Action::play_road_building();
    if (slot == kSlotPlayYearOfPlenty) return Action::play_year_of_plenty();
    if (slot >= kSlotChooseFreeResourceBase && slot < kSlotPlayMonopolyBase)
        return Action::choose_free_resource(
            static_cast<Resource>(slot - kSlotChooseFreeResourceBase));
    return Action::play_monopoly(static_cast<Resource>(slot - kSlotPlayMonopolyBase));
}

int Mask::count() const {
    int n = 0;
    for (std::uint8_t b : bits) n += b;
    return n;
}

Mask legal_mask(const GameState& state, const BrickGrid& grid, bool compat117) {
    Mask mask(flat_action_size(compat117));
    for (const Action& a : legal_actions(state)) mask.set(encode_action(a, grid));
    return mask;
}

} // namespace catanrl
