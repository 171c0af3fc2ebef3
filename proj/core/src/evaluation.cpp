#include "catan/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <thread>

#include "catan/errors.hpp"

namespace catanrl {

Action random_policy(const Observation& obs, const Mask& mask, Rng& rng) {
    (void)obs;
    const int n = mask.count();
    if (n == 0) throw EmptyMask("random_policy with no legal actions");
    int pick = rng.uniform_int(0, n - 1);
    for (int i = 0; i < mask.size(); ++i) {
        if (!mask.test(i)) continue;
        if (pick-- == 0) return decode_action(i, build_brick_grid());
    }
    throw EmptyMask("unreachable");
}

Action RandomAgent::choose(const GameState& state, Rng& rng) {
    const int seat = acting_player(state);
    const Mask mask = legal_mask(state, build_brick_grid());
    return random_policy(observable(state, seat), mask, rng);
}

NetworkAgent::NetworkAgent(std::shared_ptr<const NetworkParams> params, bool greedy,
                           std::string label)
    : params_(std::move(params)), greedy_(greedy), label_(std::move(label)) {}

Action NetworkAgent::choose(const GameState& state, Rng& rng) {
    const BrickGrid& grid = build_brick_grid();
    const int seat = acting_player(state);
    const StateEncoding enc = encode_state(observable(state, seat), grid);
    const Mask mask = legal_mask(state, grid, params_->config.compat117);
    const NetworkOutput out = forward(*params_, enc);
    const PolicyDistribution dist = masked_policy(out, mask);
    const int index = greedy_ ? dist.argmax() : dist.sample(rng);
    return decode_action(index, grid, params_->config.compat117);
}

GameResult play_game(Agent& first, Agent& second, std::uint64_t seed, int turn_cap,
                     bool keep_transcript) {
    Rng rng(seed);
    GameState state = new_game(rng, turn_cap);
    GameResult result;
    while (!state.is_terminal()) {
        Agent& actor = (acting_player(state) == 0) ? first : second;
        const Action action = actor.choose(state, rng);
        auto [next, rec] = apply(state, action, rng);
        state = std::move(next);
        if (keep_transcript) result.transcript.push_back(rec);
    }
    result.winner = state.phase.winner;
    result.vp = {victory_points(state, 0, true), victory_points(state, 1, true)};
    result.turns = state.turn_counter;
    return result;
}

std::string ArenaStats::report_csv() const {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "winrate,ci_low,ci_high,draws,mean_turns\n%.6f,%.6f,%.6f,%d,%.2f\n",
                  win_rate, ci_low, ci_high, draws, mean_turns);
    return buf;
}

std::string ArenaStats::histogram_csv() const {
    std::string out = "vp,count_a,count_b\n";
    for (int i = 0; i < kVpHistBuckets; ++i) {
        out += std::to_string(kVpHistMin + i) + "," + std::to_string(vp_hist_a[i]) + "," +
               std::to_string(vp_hist_b[i]) + "\n";
    }
    out += "draw," + std::to_string(draw_bucket) + "," + std::to_string(draw_bucket) + "\n";
    return out;
}

ArenaStats arena(Agent& agent_a, Agent& agent_b, int n, std::uint64_t seed, int turn_cap,
                 int threads) {
    struct PerGame {
        int winner_agent; // 0 = A, 1 = B, -1 draw
        int vp_a, vp_b, turns;
    };
    std::vector<PerGame> results(n);

    std::uint64_t seed_state = seed;
    std::vector<std::uint64_t> game_seeds(n);
    for (int i = 0; i < n; ++i) game_seeds[i] = splitmix64(seed_state);

    auto run_range = [&](int begin, int end) {
        for (int i = begin; i < end; ++i) {
            const bool a_first = (i % 2 == 0);
            GameResult r = a_first ? play_game(agent_a, agent_b, game_seeds[i], turn_cap)
                                   : play_game(agent_b, agent_a, game_seeds[i], turn_cap);
            PerGame pg;
            pg.turns = r.turns;
            const int seat_a = a_first ? 0 : 1;
            pg.vp_a = r.vp[seat_a];
            pg.vp_b = r.vp[1 - seat_a];
            pg.winner_agent = r.winner < 0 ? -1 : (r.winner == seat_a ? 0 : 1);
            results[i] = pg;
        }
    };

    threads = std::max(1, std::min(threads, n));
    if (threads == 1) {
        run_range(0, n);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (n + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const int begin = t * chunk;
            const int end = std::min(n, begin + chunk);
            if (begin < end) pool.emplace_back(run_range, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    ArenaStats stats;
    stats.games = n;
    double score_sum = 0.0, turns_sum = 0.0;
    for (const PerGame& pg : results) {
        turns_sum += pg.turns;
        if (pg.winner_agent == 0) {
            stats.wins_a += 1;
            score_sum += 1.0;
        } else if (pg.winner_agent == 1) {
            stats.wins_b += 1;
        } else {
            stats.draws += 1;
            score_sum += 0.5;
            stats.draw_bucket += 1;
        }
        if (pg.winner_agent >= 0) {
            auto bucket = [](int vp) {
                return std::clamp(vp, kVpHistMin, kVpHistMax) - kVpHistMin;
            };
            stats.vp_hist_a[bucket(pg.vp_a)] += 1;
            stats.vp_hist_b[bucket(pg.vp_b)] += 1;
        }
    }
    stats.win_rate = score_sum / n;
    stats.mean_turns = turns_sum / n;

    // Normal-approximation interval on the mean per-game score (1, 1/2, 0).
    double var = 0.0;
    for (const PerGame& pg : results) {
        const double x =
            pg.winner_agent == 0 ? 1.0 : (pg.winner_agent == -1 ? 0.5 : 0.0);
        var += (x - stats.win_rate) * (x - stats.win_rate);
    }
    var = n > 1 ? var / (n - 1) : 0.0;
    const double half = 1.959963985 * std::sqrt(var / n);
    stats.ci_low = stats.win_rate - half;
    stats.ci_high = stats.win_rate + half;
    return stats;
}

} // namespace catanrl
