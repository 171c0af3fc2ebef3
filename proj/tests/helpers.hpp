#pragma once

#include <cstdint>

#include "catan/engine.hpp"

namespace catanrl::test {

// Plays the four setup placements with the first legal action each time.
inline GameState setup_done_state(std::uint64_t seed, Rng& rng, int turn_cap = kDefaultTurnCap) {
    rng.reseed(seed);
    GameState s = new_game(rng, turn_cap);
    while (s.phase.kind == PhaseKind::Setup) {
        const auto legal = legal_actions(s);
        s = apply(s, legal.front(), rng).first;
    }
    return s;
}

// Moves n cards of r from the bank into a player's hand (keeps the
// conservation invariant intact).
inline void give(GameState& s, int player, Resource r, int n) {
    s.bank[r] -= n;
    s.players[player].resources[r] += n;
}

// A seed whose first two d6 draws sum to `target`.
inline std::uint64_t seed_for_roll(int target) {
    for (std::uint64_t seed = 0;; ++seed) {
        Rng rng(seed);
        if (rng.d6() + rng.d6() == target) return seed;
    }
}

// Random legal playout until Terminal; returns the final state.
inline GameState random_playout(GameState s, Rng& rng) {
    while (!s.is_terminal()) {
        const auto legal = legal_actions(s);
        const Action& a = legal[rng.uniform_int(0, static_cast<int>(legal.size()) - 1)];
        s = apply(s, a, rng).first;
    }
    return s;
}

} // namespace catanrl::test
