#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "catan/resources.hpp"

namespace catanrl {

enum class ActionType : std::uint8_t {
    PlaceSettlement = 0,
    PlaceRoad,
    PlaceCity,
    MoveRobberSteal,
    MoveRobberNoSteal,
    RollDice,
    EndTurn,
    DiscardKeep,
    BankTrade,
    BuyDevCard,
    PlayKnight,
    PlayRoadBuilding,
    PlayYearOfPlenty,
    ChooseFreeResource,
    PlayMonopoly,
};
const char* action_type_name(ActionType t);

// One move. `target` is an intersection, path or hex id depending on type;
// `keep` is the 4-card keep multiset for DiscardKeep; `give`/`receive` are
// used by BankTrade and `resource` by ChooseFreeResource / PlayMonopoly.
struct Action {
    ActionType type = ActionType::EndTurn;
    std::int16_t target = -1;
    Resource give = Resource::Brick;
    Resource receive = Resource::Brick;
    Resource resource = Resource::Brick;
    std::array<std::uint8_t, kNumResources> keep{};

    bool operator==(const Action&) const = default;

    static Action place_settlement(int intersection);
    static Action place_road(int path);
    static Action place_city(int intersection);
    static Action move_robber_steal(int hex);
    static Action move_robber_no_steal(int hex);
    static Action roll_dice();
    static Action end_turn();
    static Action discard_keep(const std::array<std::uint8_t, kNumResources>& keep);
    static Action bank_trade(Resource give, Resource receive);
    static Action buy_dev_card();
    static Action play_knight();
    static Action play_road_building();
    static Action play_year_of_plenty();
    static Action choose_free_resource(Resource r);
    static Action play_monopoly(Resource r);
};

// Human/transcript-facing one-line description, e.g. "BankTrade Brick->Ore".
std::string action_to_string(const Action& a);

} // namespace catanrl
