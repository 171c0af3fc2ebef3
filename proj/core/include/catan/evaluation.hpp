#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "catan/engine.hpp"
#include "catan/network.hpp"

namespace catanrl {

// Uniform choice over the set bits of a legality mask, decoded to an action.
Action random_policy(const Observation& obs, const Mask& mask, Rng& rng);

// A policy that always returns a legal action for any non-terminal state.
class Agent {
public:
    virtual ~Agent() = default;
    virtual Action choose(const GameState& state, Rng& rng) = 0;
    virtual std::string name() const = 0;
};

class RandomAgent : public Agent {
public:
    Action choose(const GameState& state, Rng& rng) override;
    std::string name() const override { return "random"; }
};

// Checkpoint-backed policy; samples from the masked distribution by
// default, or plays the argmax in greedy mode.
class NetworkAgent : public Agent {
public:
    NetworkAgent(std::shared_ptr<const NetworkParams> params, bool greedy = false,
                 std::string label = "network");
    Action choose(const GameState& state, Rng& rng) override;
    std::string name() const override { return label_; }

private:
    std::shared_ptr<const NetworkParams> params_;
    bool greedy_;
    std::string label_;
};

struct GameResult {
    int winner = -1; // seat 0 | seat 1 | -1 draw
    std::array<int, kNumPlayers> vp{};
    int turns = 0;
    std::vector<TransitionRecord> transcript; // filled only when requested

    bool operator==(const GameResult& o) const {
        return winner == o.winner && vp == o.vp && turns == o.turns &&
               transcript == o.transcript;
    }
};

// One full game under engine rules; `first` plays seat 0.
GameResult play_game(Agent& first, Agent& second, std::uint64_t seed,
                     int turn_cap = kDefaultTurnCap, bool keep_transcript = false);

inline constexpr int kVpHistMin = 2;
inline constexpr int kVpHistMax = 12;
inline constexpr int kVpHistBuckets = kVpHistMax - kVpHistMin + 1;

struct ArenaStats {
    int games = 0;
    int wins_a = 0, wins_b = 0, draws = 0;
    double win_rate = 0.0; // agent A, draws worth half
    double ci_low = 0.0, ci_high = 0.0;
    double mean_turns = 0.0;
    // Final-VP buckets 2..12 per agent plus one draw bucket.
    std::array<int, kVpHistBuckets> vp_hist_a{}, vp_hist_b{};
    int draw_bucket = 0;

    std::string report_csv() const;    // winrate,ci_low,ci_high,draws,mean_turns
    std::string histogram_csv() const; // vp,count_a,count_b
};

// n games with alternating seats (ceil(n/2) with A first) and per-game
// seeds derived from `seed`. Games may run on `threads` threads; stats are
// independent of scheduling.
ArenaStats arena(Agent& agent_a, Agent& agent_b, int n, std::uint64_t seed,
                 int turn_cap = kDefaultTurnCap, int threads = 1);

} // namespace catanrl
