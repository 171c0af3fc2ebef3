#include "catan/engine.hpp"

#include <algorithm>
#include <cassert>

#include "catan/errors.hpp"

namespace catanrl {

namespace {

const ResourceVec kRoadCost = make_resources(1, 1, 0, 0, 0);
const ResourceVec kSettlementCost = make_resources(1, 1, 0, 1, 1);
const ResourceVec kCityCost = make_resources(0, 0, 3, 2, 0);
const ResourceVec kDevCardCost = make_resources(0, 0, 1, 1, 1);

// Setup placement order: player A, B, B, A.
constexpr std::array<int, 4> kSetupPlayer = {0, 1, 1, 0};

bool distance_rule_ok(const GameState& s, int intersection) {
    const auto& topo = board_topology();
    if (s.buildings[intersection].kind != BuildingKind::None) return false;
    for (std::int8_t n : topo.intersection_neighbors[intersection]) {
        if (n >= 0 && s.buildings[n].kind != BuildingKind::None) return false;
    }
    return true;
}

// A new road must touch one of the player's buildings, or continue one of
// their roads through an endpoint not blocked by an opponent building.
bool road_connects(const GameState& s, int player, int path) {
    const auto& topo = board_topology();
    for (std::int8_t endpoint : topo.path_intersections[path]) {
        const Building& b = s.buildings[endpoint];
        if (b.kind != BuildingKind::None) {
            if (b.owner == player) return true;
            continue;
        }
        for (std::int8_t p2 : topo.intersection_paths[endpoint]) {
            if (p2 >= 0 && p2 != path && s.road_owner[p2] == player) return true;
        }
    }
    return false;
}

bool has_adjacent_own_road(const GameState& s, int player, int intersection) {
    const auto& topo = board_topology();
    for (std::int8_t p : topo.intersection_paths[intersection]) {
        if (p >= 0 && s.road_owner[p] == player) return true;
    }
    return false;
}

bool can_place_road_now(const GameState& s, int player, int path) {
    return s.road_owner[path] == -1 && road_connects(s, player, path);
}

bool any_legal_road_placement(const GameState& s, int player) {
    for (int p = 0; p < kNumPaths; ++p)
        if (can_place_road_now(s, player, p)) return true;
    return false;
}

bool opponent_adjacent_to_hex(const GameState& s, int opponent, int hex) {
    const auto& topo = board_topology();
    for (std::int8_t v : topo.hex_intersections[hex]) {
        const Building& b = s.buildings[v];
        if (b.kind != BuildingKind::None && b.owner == opponent) return true;
    }
    return false;
}

void append_dev_card_plays(const GameState& s, int player, std::vector<Action>& out) {
    if (s.dev_played_this_turn) return;
    const PlayerState& ps = s.players[player];
    if (ps.dev_old[static_cast<int>(DevCard::Knight)] > 0) out.push_back(Action::play_knight());
    if (ps.dev_old[static_cast<int>(DevCard::RoadBuilding)] > 0)
        out.push_back(Action::play_road_building());
    if (ps.dev_old[static_cast<int>(DevCard::YearOfPlenty)] > 0 && s.bank.total() >= 1)
        out.push_back(Action::play_year_of_plenty());
    if (ps.dev_old[static_cast<int>(DevCard::Monopoly)] > 0) {
        for (Resource r : kAllResources) out.push_back(Action::play_monopoly(r));
    }
}

void append_robber_moves(const GameState& s, std::vector<Action>& out) {
    const int player = s.current_player;
    const int opponent = 1 - player;
    const bool opp_has_cards = s.players[opponent].resources.total() > 0;
    for (int h = 0; h < kNumHexes; ++h) {
        if (h == s.robber_hex) continue;
        if (opp_has_cards && opponent_adjacent_to_hex(s, opponent, h))
            out.push_back(Action::move_robber_steal(h));
        else
            out.push_back(Action::move_robber_no_steal(h));
    }
}

// --- resource movement helpers (all bank-conserving) ------------------

void grant_from_bank(GameState& s, int player, Resource r, int n,
                     std::array<ResourceVec, kNumPlayers>& produced) {
    n = std::min(n, s.bank[r]);
    if (n <= 0) return;
    s.bank[r] -= n;
    s.players[player].resources[r] += n;
    produced[player][r] += n;
}

void pay_to_bank(GameState& s, int player, const ResourceVec& cost) {
    s.players[player].resources.subtract(cost);
    s.bank.add(cost);
}

// --- longest road ------------------------------------------------------

struct TrailSearch {
    const GameState* state;
    int player;
    int n_edges;
    std::array<int, kInitialRoads> edge_path;                       // local -> path id
    std::array<std::array<std::int8_t, 3>, kNumIntersections> incident; // local edge ids

    bool blocked(int v) const {
        const Building& b = state->buildings[v];
        return b.kind != BuildingKind::None && b.owner != player;
    }

    int dfs(int v, std::uint32_t used) const {
        if (used != 0 && blocked(v)) return 0;
        const auto& topo = board_topology();
        int best = 0;
        for (std::int8_t i : incident[v]) {
            if (i < 0 || (used >> i) & 1u) continue;
            const auto& ends = topo.path_intersections[edge_path[i]];
            const int u = (ends[0] == v) ? ends[1] : ends[0];
            best = std::max(best, 1 + dfs(u, used | (1u << i)));
        }
        return best;
    }
};

// --- award recomputation -------------------------------------------------

void update_longest_road_award(GameState& s) {
    const int len0 = longest_road(s, 0);
    const int len1 = longest_road(s, 1);
    const std::array<int, 2> len = {len0, len1};
    int holder = s.players[0].has_longest_road ? 0 : (s.players[1].has_longest_road ? 1 : -1);
    int new_holder = holder;
    if (holder >= 0) {
        const int other = 1 - holder;
        if (len[holder] < kLongestRoadMin)
            new_holder = (len[other] >= kLongestRoadMin) ? other : -1;
        else if (len[other] > len[holder]) // ties retained by the holder
            new_holder = other;
    } else {
        if (len[0] >= kLongestRoadMin && len[0] > len[1]) new_holder = 0;
        else if (len[1] >= kLongestRoadMin && len[1] > len[0]) new_holder = 1;
    }
    s.players[0].has_longest_road = (new_holder == 0);
    s.players[1].has_longest_road = (new_holder == 1);
}

void update_largest_army_award(GameState& s, int player) {
    const int holder =
        s.players[0].has_largest_army ? 0 : (s.players[1].has_largest_army ? 1 : -1);
    if (holder == player) return;
    const int army = s.players[player].army_size;
    if (army < kLargestArmyMin) return;
    if (holder >= 0 && army <= s.players[holder].army_size) return; // holder keeps ties
    if (holder >= 0) s.players[holder].has_largest_army = false;
    s.players[player].has_largest_army = true;
}

// --- phase plumbing ------------------------------------------------------

Phase make_phase(PhaseKind kind) {
    Phase p{};
    p.kind = kind;
    return p;
}

// Where play resumes once a robber/free-placement interlude finishes.
Phase resume_phase(const GameState& s) {
    return make_phase(s.has_rolled ? PhaseKind::Main : PhaseKind::PreRoll);
}

int discard_keep_count(const GameState& s, int player) {
    const int hand = s.players[player].resources.total();
    return hand - hand / 2; // keep ceil(h/2), discard floor(h/2)
}

// After a 7: current player discards first, then the opponent, then the
// robber moves.
void enter_seven_resolution(GameState& s) {
    const int cur = s.current_player;
    const int opp = 1 - cur;
    for (int p : {cur, opp}) {
        if (s.players[p].resources.total() >= kDiscardHandSize) {
            Phase ph = make_phase(PhaseKind::Discard);
            ph.acting_player = static_cast<std::int8_t>(p);
            ph.keep_count = static_cast<std::int8_t>(discard_keep_count(s, p));
            s.phase = ph;
            return;
        }
    }
    s.phase = make_phase(PhaseKind::MoveRobber);
}

void after_discard(GameState& s, int who_discarded) {
    const int opp = 1 - s.current_player;
    if (who_discarded == s.current_player &&
        s.players[opp].resources.total() >= kDiscardHandSize) {
        Phase ph = make_phase(PhaseKind::Discard);
        ph.acting_player = static_cast<std::int8_t>(opp);
        ph.keep_count = static_cast<std::int8_t>(discard_keep_count(s, opp));
        s.phase = ph;
        return;
    }
    s.phase = make_phase(PhaseKind::MoveRobber);
}

void produce_for_roll(GameState& s, int roll, std::array<ResourceVec, kNumPlayers>& produced) {
    const auto& topo = board_topology();
    int claims[kNumPlayers][kNumResources] = {};
    for (int h = 0; h < kNumHexes; ++h) {
        if (s.layout.number_token[h] != roll || h == s.robber_hex) continue;
        if (!s.layout.hex_resource[h]) continue;
        const int r = static_cast<int>(*s.layout.hex_resource[h]);
        for (std::int8_t v : topo.hex_intersections[h]) {
            const Building& b = s.buildings[v];
            if (b.kind == BuildingKind::Settlement) claims[b.owner][r] += 1;
            else if (b.kind == BuildingKind::City) claims[b.owner][r] += 2;
        }
    }
    for (int r = 0; r < kNumResources; ++r) {
        const int total = claims[0][r] + claims[1][r];
        if (total == 0) continue;
        const Resource res = static_cast<Resource>(r);
        if (s.bank.at(r) >= total) {
            for (int p = 0; p < kNumPlayers; ++p)
                grant_from_bank(s, p, res, claims[p][r], produced);
        } else if (claims[0][r] > 0 && claims[1][r] > 0) {
            // Shortage claimed by both: nobody receives this type.
        } else {
            const int p = claims[0][r] > 0 ? 0 : 1;
            grant_from_bank(s, p, res, std::min(claims[p][r], s.bank.at(r)), produced);
        }
    }
}

void migrate_new_dev_cards(PlayerState& p) {
    for (int i = 0; i < kNumDevCards; ++i) {
        p.dev_old[i] += p.dev_new[i];
        p.dev_new[i] = 0;
    }
}

} // namespace

int longest_road(const GameState& state, int player) {
    const auto& topo = board_topology();
    TrailSearch ts;
    ts.state = &state;
    ts.player = player;
    ts.n_edges = 0;
    for (auto& row : ts.incident) row.fill(-1);
    for (int p = 0; p < kNumPaths; ++p) {
        if (state.road_owner[p] != player) continue;
        const int i = ts.n_edges++;
        ts.edge_path[i] = p;
        for (std::int8_t v : topo.path_intersections[p]) {
            auto& lst = ts.incident[v];
            *std::find(lst.begin(), lst.end(), -1) = static_cast<std::int8_t>(i);
        }
    }
    if (ts.n_edges == 0) return 0;
    int best = 0;
    for (int v = 0; v < kNumIntersections; ++v) {
        if (ts.incident[v][0] < 0) continue;
        best = std::max(best, ts.dfs(v, 0));
    }
    return best;
}

int victory_points(const GameState& state, int player, bool include_hidden) {
    int settlements = 0, cities = 0;
    for (const Building& b : state.buildings) {
        if (b.owner != player) continue;
        if (b.kind == BuildingKind::Settlement) ++settlements;
        else if (b.kind == BuildingKind::City) ++cities;
    }
    const PlayerState& ps = state.players[player];
    int vp = settlements + 2 * cities;
    if (ps.has_longest_road) vp += 2;
    if (ps.has_largest_army) vp += 2;
    if (include_hidden) {
        const int v = static_cast<int>(DevCard::VictoryPoint);
        vp += ps.dev_new[v] + ps.dev_old[v];
    }
    return vp;
}

std::array<bool, kNumHarborKinds> harbor_access(const GameState& state, int player) {
    const auto& topo = board_topology();
    std::array<bool, kNumHarborKinds> access{};
    for (int h = 0; h < kNumHarbors; ++h) {
        for (std::int8_t v : topo.harbor_intersections[h]) {
            const Building& b = state.buildings[v];
            if (b.kind != BuildingKind::None && b.owner == player)
                access[static_cast<int>(state.layout.harbor_kind[h])] = true;
        }
    }
    return access;
}

int bank_trade_rate(const GameState& state, int player, Resource give) {
    const auto access = harbor_access(state, player);
    if (access[static_cast<int>(give) + 1]) return 2; // resource harbors follow Generic
    if (access[static_cast<int>(HarborKind::Generic)]) return 3;
    return 4;
}

std::vector<Action> legal_actions(const GameState& state) {
    std::vector<Action> out;
    const int player = acting_player(state);
    const PlayerState& ps = state.players[player];
    const auto& topo = board_topology();

    switch (state.phase.kind) {
        case PhaseKind::Terminal:
            break;

        case PhaseKind::Setup: {
            if (!state.phase.setup_road) {
                for (int v = 0; v < kNumIntersections; ++v)
                    if (distance_rule_ok(state, v)) out.push_back(Action::place_settlement(v));
            } else {
                const int v = state.phase.setup_settlement;
                for (std::int8_t p : topo.intersection_paths[v])
                    if (p >= 0 && state.road_owner[p] == -1)
                        out.push_back(Action::place_road(p));
            }
            break;
        }

        case PhaseKind::PreRoll: {
            out.push_back(Action::roll_dice());
            append_dev_card_plays(state, player, out);
            break;
        }

        case PhaseKind::Main: {
            out.push_back(Action::end_turn());
            if (ps.roads_left > 0 && ps.resources.contains(kRoadCost)) {
                for (int p = 0; p < kNumPaths; ++p)
                    if (can_place_road_now(state, player, p))
                        out.push_back(Action::place_road(p));
            }
            if (ps.settlements_left > 0 && ps.resources.contains(kSettlementCost)) {
                for (int v = 0; v < kNumIntersections; ++v)
                    if (distance_rule_ok(state, v) && has_adjacent_own_road(state, player, v))
                        out.push_back(Action::place_settlement(v));
            }
            if (ps.cities_left > 0 && ps.resources.contains(kCityCost)) {
                for (int v = 0; v < kNumIntersections; ++v) {
                    const Building& b = state.buildings[v];
                    if (b.kind == BuildingKind::Settlement && b.owner == player)
                        out.push_back(Action::place_city(v));
                }
            }
            if (state.dev_deck_size > 0 && ps.resources.contains(kDevCardCost))
                out.push_back(Action::buy_dev_card());
            for (Resource give : kAllResources) {
                const int rate = bank_trade_rate(state, player, give);
                if (ps.resources[give] < rate) continue;
                for (Resource recv : kAllResources) {
                    if (recv == give || state.bank[recv] < 1) continue;
                    out.push_back(Action::bank_trade(give, recv));
                }
            }
            append_dev_card_plays(state, player, out);
            break;
        }

        case PhaseKind::Discard: {
            // All keep-4 sub-multisets of the acting hand, canonical order.
            const ResourceVec& hand = ps.resources;
            for (int b = std::min(4, hand.at(0)); b >= 0; --b)
                for (int l = std::min(4 - b, hand.at(1)); l >= 0; --l)
                    for (int o = std::min(4 - b - l, hand.at(2)); o >= 0; --o)
                        for (int g = std::min(4 - b - l - o, hand.at(3)); g >= 0; --g) {
                            const int w = 4 - b - l - o - g;
                            if (w > hand.at(4)) continue;
                            out.push_back(Action::discard_keep(
                                {static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(l),
                                 static_cast<std::uint8_t>(o), static_cast<std::uint8_t>(g),
                                 static_cast<std::uint8_t>(w)}));
                        }
            break;
        }

        case PhaseKind::MoveRobber:
            append_robber_moves(state, out);
            break;

        case PhaseKind::FreeRoads: {
            for (int p = 0; p < kNumPaths; ++p)
                if (can_place_road_now(state, player, p)) out.push_back(Action::place_road(p));
            break;
        }

        case PhaseKind::FreeResources: {
            for (Resource r : kAllResources)
                if (state.bank[r] > 0) out.push_back(Action::choose_free_resource(r));
            break;
        }
    }
    return out;
}

bool is_legal(const GameState& state, const Action& action) {
    const auto legal = legal_actions(state);
    return std::find(legal.begin(), legal.end(), action) != legal.end();
}

std::pair<GameState, TransitionRecord> apply(const GameState& state, const Action& action,
                                             Rng& rng) {
    if (state.phase.kind == PhaseKind::Terminal)
        throw IllegalAction("apply on a terminal state");
    if (!is_legal(state, action))
        throw IllegalAction("illegal action: " + action_to_string(action));

    GameState s = state;
    TransitionRecord rec;
    rec.turn = state.turn_counter;
    rec.player = acting_player(state);
    rec.action = action;
    const int player = rec.player;
    PlayerState& ps = s.players[player];

    switch (action.type) {
        case ActionType::RollDice: {
            const int roll = rng.d6() + rng.d6();
            rec.dice = roll;
            s.has_rolled = true;
            if (roll == 7) {
                enter_seven_resolution(s);
            } else {
                produce_for_roll(s, roll, rec.produced);
                s.phase = make_phase(PhaseKind::Main);
            }
            break;
        }

        case ActionType::PlaceSettlement: {
            const int v = action.target;
            if (s.phase.kind == PhaseKind::Setup) {
                s.buildings[v] = Building{BuildingKind::Settlement,
                                          static_cast<std::int8_t>(player)};
                ps.settlements_left -= 1;
                if (s.phase.setup_step >= 2) {
                    // Second settlement: one card per adjacent producing hex.
                    const auto& topo = board_topology();
                    for (std::int8_t h : topo.intersection_hexes[v]) {
                        if (h < 0 || !s.layout.hex_resource[h]) continue;
                        grant_from_bank(s, player, *s.layout.hex_resource[h], 1, rec.produced);
                    }
                }
                s.phase.setup_road = true;
                s.phase.setup_settlement = static_cast<std::int8_t>(v);
            } else {
                pay_to_bank(s, player, kSettlementCost);
                s.buildings[v] = Building{BuildingKind::Settlement,
                                          static_cast<std::int8_t>(player)};
                ps.settlements_left -= 1;
                update_longest_road_award(s); // may break the opponent's road
            }
            break;
        }

        case ActionType::PlaceRoad: {
            const int p = action.target;
            if (s.phase.kind == PhaseKind::Setup) {
                s.road_owner[p] = static_cast<std::int8_t>(player);
                ps.roads_left -= 1;
                const int step = s.phase.setup_step;
                if (step == 3) {
                    s.phase = make_phase(PhaseKind::PreRoll);
                    s.current_player = 0;
                } else {
                    s.phase = make_phase(PhaseKind::Setup);
                    s.phase.setup_step = static_cast<std::int8_t>(step + 1);
                    s.phase.setup_road = false;
                    s.current_player = static_cast<std::int8_t>(kSetupPlayer[step + 1]);
                }
            } else if (s.phase.kind == PhaseKind::FreeRoads) {
                s.road_owner[p] = static_cast<std::int8_t>(player);
                ps.roads_left -= 1;
                update_longest_road_award(s);
                const int remaining = s.phase.remaining - 1;
                if (remaining > 0 && ps.roads_left > 0 && any_legal_road_placement(s, player)) {
                    s.phase.remaining = static_cast<std::int8_t>(remaining);
                } else {
                    s.phase = resume_phase(s); // unused grants lapse
                }
            } else {
                pay_to_bank(s, player, kRoadCost);
                s.road_owner[p] = static_cast<std::int8_t>(player);
                ps.roads_left -= 1;
                update_longest_road_award(s);
            }
            break;
        }

        case ActionType::PlaceCity: {
            pay_to_bank(s, player, kCityCost);
            s.buildings[action.target].kind = BuildingKind::City;
            ps.settlements_left += 1; // the settlement piece returns to stock
            ps.cities_left -= 1;
            break;
        }

        case ActionType::MoveRobberSteal: {
            s.robber_hex = static_cast<std::int8_t>(action.target);
            const int opp = 1 - player;
            const Resource r = draw_random_card(s.players[opp].resources, rng);
            s.players[opp].resources[r] -= 1;
            ps.resources[r] += 1;
            rec.stolen = r;
            s.phase = resume_phase(s);
            break;
        }

        case ActionType::MoveRobberNoSteal: {
            s.robber_hex = static_cast<std::int8_t>(action.target);
            s.phase = resume_phase(s);
            break;
        }

        case ActionType::DiscardKeep: {
            ResourceVec keep{};
            for (int i = 0; i < kNumResources; ++i) keep.at(i) = action.keep[i];
            const ResourceVec discarded =
                resolve_discard(ps.resources, keep, s.phase.keep_count, rng);
            ps.resources.subtract(discarded);
            s.bank.add(discarded);
            rec.discarded[player] = discarded;
            after_discard(s, player);
            break;
        }

        case ActionType::BankTrade: {
            const int rate = bank_trade_rate(s, player, action.give);
            ps.resources[action.give] -= rate;
            s.bank[action.give] += rate;
            s.bank[action.receive] -= 1;
            ps.resources[action.receive] += 1;
            rec.produced[player][action.receive] += 1;
            break;
        }

        case ActionType::BuyDevCard: {
            pay_to_bank(s, player, kDevCardCost);
            const DevCard card = s.dev_deck[--s.dev_deck_size];
            ps.dev_new[static_cast<int>(card)] += 1;
            break;
        }

        case ActionType::PlayKnight: {
            ps.dev_old[static_cast<int>(DevCard::Knight)] -= 1;
            ps.army_size += 1;
            s.dev_played_this_turn = true;
            update_largest_army_award(s, player);
            s.phase = make_phase(PhaseKind::MoveRobber);
            break;
        }

        case ActionType::PlayRoadBuilding: {
            ps.dev_old[static_cast<int>(DevCard::RoadBuilding)] -= 1;
            s.dev_played_this_turn = true;
            const int grants = std::min(2, ps.roads_left);
            if (grants > 0 && any_legal_road_placement(s, player)) {
                s.phase = make_phase(PhaseKind::FreeRoads);
                s.phase.remaining = static_cast<std::int8_t>(grants);
            }
            // else: nothing placeable, the card is spent and play continues
            break;
        }

        case ActionType::PlayYearOfPlenty: {
            ps.dev_old[static_cast<int>(DevCard::YearOfPlenty)] -= 1;
            s.dev_played_this_turn = true;
            s.phase = make_phase(PhaseKind::FreeResources);
            s.phase.remaining = 2;
            break;
        }

        case ActionType::ChooseFreeResource: {
            grant_from_bank(s, player, action.resource, 1, rec.produced);
            const int remaining = s.phase.remaining - 1;
            if (remaining > 0 && s.bank.total() > 0)
                s.phase.remaining = static_cast<std::int8_t>(remaining);
            else
                s.phase = resume_phase(s); // second pick lapses on an empty bank
            break;
        }

        case ActionType::PlayMonopoly: {
            ps.dev_old[static_cast<int>(DevCard::Monopoly)] -= 1;
            s.dev_played_this_turn = true;
            const int opp = 1 - player;
            const Resource r = action.resource;
            const int n = s.players[opp].resources[r];
            s.players[opp].resources[r] -= n;
            ps.resources[r] += n;
            rec.produced[player][r] += n;
            rec.discarded[opp][r] += n;
            break;
        }

        case ActionType::EndTurn: {
            migrate_new_dev_cards(ps);
            s.dev_played_this_turn = false;
            s.has_rolled = false;
            s.current_player = static_cast<std::int8_t>(1 - player);
            s.turn_counter += 1;
            if (s.turn_counter >= s.turn_cap) {
                s.phase = make_phase(PhaseKind::Terminal);
                s.phase.winner = -1;
            } else {
                s.phase = make_phase(PhaseKind::PreRoll);
            }
            break;
        }
    }

    if (!s.is_terminal() && victory_points(s, player, true) >= kWinVictoryPoints) {
        s.phase = make_phase(PhaseKind::Terminal);
        s.phase.winner = static_cast<std::int8_t>(player);
    }
    rec.phase_after = s.phase.kind;
    return {s, rec};
}

Observation observable(const GameState& state, int player) {
    Observation o;
    o.layout = &state.layout;
    o.road_owner = state.road_owner;
    o.buildings = state.buildings;
    o.robber_hex = state.robber_hex;
    o.seat = static_cast<std::int8_t>(player);

    const PlayerState& self = state.players[player];
    const PlayerState& opp = state.players[1 - player];
    o.self_resources = self.resources;
    o.self_roads_left = self.roads_left;
    o.self_settlements_left = self.settlements_left;
    o.self_cities_left = self.cities_left;
    o.self_army = self.army_size;
    o.self_dev_new = self.dev_new;
    o.self_dev_old = self.dev_old;
    o.self_harbor_access = harbor_access(state, player);
    o.self_largest_army = self.has_largest_army;
    o.self_longest_road = self.has_longest_road;

    o.opp_resource_total = opp.resources.total();
    o.opp_dev_total = opp.dev_total();
    o.opp_roads_left = opp.roads_left;
    o.opp_settlements_left = opp.settlements_left;
    o.opp_cities_left = opp.cities_left;
    o.opp_army = opp.army_size;
    o.opp_largest_army = opp.has_largest_army;
    o.opp_longest_road = opp.has_longest_road;

    o.bank = state.bank;
    o.dev_deck_size = state.dev_deck_size;

    o.has_rolled = state.has_rolled;
    o.dev_played = state.dev_played_this_turn;
    o.using_road_building = state.phase.kind == PhaseKind::FreeRoads;
    o.using_year_of_plenty = state.phase.kind == PhaseKind::FreeResources;
    o.phase = state.phase;
    return o;
}

bool Observation::operator==(const Observation& o) const {
    if ((layout == nullptr) != (o.layout == nullptr)) return false;
    if (layout && !(*layout == *o.layout)) return false;
    return road_owner == o.road_owner && buildings == o.buildings &&
           robber_hex == o.robber_hex && seat == o.seat &&
           self_resources == o.self_resources && self_roads_left == o.self_roads_left &&
           self_settlements_left == o.self_settlements_left &&
           self_cities_left == o.self_cities_left && self_army == o.self_army &&
           self_dev_new == o.self_dev_new && self_dev_old == o.self_dev_old &&
           self_harbor_access == o.self_harbor_access &&
           self_largest_army == o.self_largest_army &&
           self_longest_road == o.self_longest_road &&
           opp_resource_total == o.opp_resource_total && opp_dev_total == o.opp_dev_total &&
           opp_roads_left == o.opp_roads_left &&
           opp_settlements_left == o.opp_settlements_left &&
           opp_cities_left == o.opp_cities_left && opp_army == o.opp_army &&
           opp_largest_army == o.opp_largest_army && opp_longest_road == o.opp_longest_road &&
           bank == o.bank && dev_deck_size == o.dev_deck_size && has_rolled == o.has_rolled &&
           dev_played == o.dev_played && using_road_building == o.using_road_building &&
           using_year_of_plenty == o.using_year_of_plenty && phase == o.phase;
}

} // namespace catanrl
