#include "catan/action.hpp"

namespace catanrl {

const char* action_type_name(ActionType t) {
    switch (t) {
        case ActionType::PlaceSettlement: return "PlaceSettlement";
        case ActionType::PlaceRoad: return "PlaceRoad";
        case ActionType::PlaceCity: return "PlaceCity";
        case ActionType::MoveRobberSteal: return "MoveRobberSteal";
        case ActionType::MoveRobberNoSteal: return "MoveRobberNoSteal";
        case ActionType::RollDice: return "RollDice";
        case ActionType::EndTurn: return "EndTurn";
        case ActionType::DiscardKeep: return "DiscardKeep";
        case ActionType::BankTrade: return "BankTrade";
        case ActionType::BuyDevCard: return "BuyDevCard";
        case ActionType::PlayKnight: return "PlayKnight";
        case ActionType::PlayRoadBuilding: return "PlayRoadBuilding";
        case ActionType::PlayYearOfPlenty: return "PlayYearOfPlenty";
        case ActionType::ChooseFreeResource: return "ChooseFreeResource";
        case ActionType::PlayMonopoly: return "PlayMonopoly";
    }
    return "?";
}

Action Action::place_settlement(int intersection) {
    Action a;
    a.type = ActionType::PlaceSettlement;
    a.target = static_cast<std::int16_t>(intersection);
    return a;
}
Action Action::place_road(int path) {
    Action a;
    a.type = ActionType::PlaceRoad;
    a.target = static_cast<std::int16_t>(path);
    return a;
}
Action Action::place_city(int intersection) {
    Action a;
    a.type = ActionType::PlaceCity;
    a.target = static_cast<std::int16_t>(intersection);
    return a;
}
Action Action::move_robber_steal(int hex) {
    Action a;
    a.type = ActionType::MoveRobberSteal;
    a.target = static_cast<std::int16_t>(hex);
    return a;
}
Action Action::move_robber_no_steal(int hex) {
    Action a;
    a.type = ActionType::MoveRobberNoSteal;
    a.target = static_cast<std::int16_t>(hex);
    return a;
}
Action Action::roll_dice() {
    Action a;
    a.type = ActionType::RollDice;
    return a;
}
Action Action::end_turn() {
    Action a;
    a.type = ActionType::EndTurn;
    return a;
}
Action Action::discard_keep(const std::array<std::uint8_t, kNumResources>& keep) {
    Action a;
    a.type = ActionType::DiscardKeep;
    a.keep = keep;
    return a;
}
Action Action::bank_trade(Resource give, Resource receive) {
    Action a;
    a.type = ActionType::BankTrade;
    a.give = give;
    a.receive = receive;
    return a;
}
Action Action::buy_dev_card() {
    Action a;
    a.type = ActionType::BuyDevCard;
    return a;
}
Action Action::play_knight() {
    Action a;
    a.type = ActionType::PlayKnight;
    return a;
}
Action Action::play_road_building() {
    Action a;
    a.type = ActionType::PlayRoadBuilding;
    return a;
}
Action Action::play_year_of_plenty() {
    Action a;
    a.type = ActionType::PlayYearOfPlenty;
    return a;
}
Action Action::choose_free_resource(Resource r) {
    Action a;
    a.type = ActionType::ChooseFreeResource;
    a.resource = r;
    return a;
}
Action Action::play_monopoly(Resource r) {
    Action a;
    a.type = ActionType::PlayMonopoly;
    a.resource = r;
    return a;
}

std::string action_to_string(const Action& a) {
    std::string s = action_type_name(a.type);
    switch (a.type) {
        case ActionType::PlaceSettlement:
        case ActionType::PlaceRoad:
        case ActionType::PlaceCity:
        case ActionType::MoveRobberSteal:
        case ActionType::MoveRobberNoSteal:
            s += " " + std::to_string(a.target);
            break;
        case ActionType::DiscardKeep: {
            s += " (";
            for (int i = 0; i < kNumResources; ++i) {
                if (i) s += ",";
                s += std::to_string(static_cast<int>(a.keep[i]));
            }
            s += ")";
            break;
        }
        case ActionType::BankTrade:
            s += std::string(" ") + resource_name(a.give) + "->" + resource_name(a.receive);
            break;
        case ActionType::ChooseFreeResource:
        case ActionType::PlayMonopoly:
            s += std::string(" ") + resource_name(a.resource);
            break;
        default:
            break;
    }
    return s;
}

} // namespace catanrl
