#include "catan/state.hpp"

namespace catanrl {

const char* phase_kind_name(PhaseKind k) {
    switch (k) {
        case PhaseKind::Setup: return "Setup";
        case PhaseKind::PreRoll: return "PreRoll";
        case PhaseKind::Main: return "Main";
        case PhaseKind::Discard: return "Discard";
        case PhaseKind::MoveRobber: return "MoveRobber";
        case PhaseKind::FreeRoads: return "FreeRoads";
        case PhaseKind::FreeResources: return "FreeResources";
        case PhaseKind::Terminal: return "Terminal";
    }
    return "?";
}

GameState new_game(Rng& rng, int turn_cap) {
    GameState s{};
    s.layout = generate_board(rng);
    s.road_owner.fill(-1);
    s.buildings.fill(Building{});
    s.robber_hex = s.layout.desert_hex;
    s.bank = make_resources(kBankPerResource, kBankPerResource, kBankPerResource,
                            kBankPerResource, kBankPerResource);

    // 14 Knights, 2 RoadBuilding, 2 YearOfPlenty, 2 Monopoly, 5 VictoryPoint.
    int i = 0;
    for (int k = 0; k < 14; ++k) s.dev_deck[i++] = DevCard::Knight;
    for (int k = 0; k < 2; ++k) s.dev_deck[i++] = DevCard::RoadBuilding;
    for (int k = 0; k < 2; ++k) s.dev_deck[i++] = DevCard::YearOfPlenty;
    for (int k = 0; k < 2; ++k) s.dev_deck[i++] = DevCard::Monopoly;
    for (int k = 0; k < 5; ++k) s.dev_deck[i++] = DevCard::VictoryPoint;
    for (int j = kDevDeckSize - 1; j > 0; --j) {
        int r = rng.uniform_int(0, j);
        std::swap(s.dev_deck[j], s.dev_deck[r]);
    }
    s.dev_deck_size = kDevDeckSize;

    s.phase = Phase{};
    s.phase.kind = PhaseKind::Setup;
    s.phase.setup_step = 0;
    s.phase.setup_road = false;
    s.current_player = 0;
    s.turn_counter = 0;
    s.turn_cap = turn_cap;
    return s;
}

int acting_player(const GameState& state) {
    if (state.phase.kind == PhaseKind::Discard) return state.phase.acting_player;
    return state.current_player;
}

} // namespace catanrl
