#pragma once

#include <memory>
#include <string>
#include <vector>

#include "catan/evaluation.hpp"
#include "catan/experience.hpp"
#include "catan/loss.hpp"
#include "catan/network.hpp"
#include "catan/state.hpp"

namespace catanrl {

struct TrainerConfig {
    int workers = 16;
    int games_per_worker = 8;
    int batch_size = 64;
    int batches_per_step = 1000; // one training step = this many updates
    int opponent_refresh_steps = 50;
    double lr0 = 3e-3;
    double lr_decay = 2e-3; // inverse decay per training step
    LossCoeffs coeffs{};    // alpha_* and gamma
    double win_reward = 0.75;
    double vp_reward = 0.02;
    int turn_cap = kDefaultTurnCap;
    std::uint64_t seed = 1;

    int train_steps = 10;
    long train_updates = 0; // overrides train_steps * batches_per_step when > 0

    int staleness_bound = 100; // max updates a consumed batch may lag
    int checkpoint_period_steps = 1;
    int eval_games = 50; // arena size for winrate_vs_random (0 disables)
    int eval_period_steps = 1;
    int threads = 0; // 0: workers+1 (capped by CATAN_XDIM_THREADS); 1: deterministic inline
    int queue_capacity = 0; // 0: 2*workers

    bool no_activity_loss = false; // ablation: alpha_p = 0
    bool fixed_opponent = false;   // ablation: pool never refreshed
    std::string fixed_opponent_path; // checkpoint for the frozen opponent
    std::string resume_path;

    std::string checkpoint_dir = "runs/default";
    std::string metrics_path; // default: <checkpoint_dir>/metrics.csv

    long total_updates() const {
        return train_updates > 0 ? train_updates
                                 : static_cast<long>(train_steps) * batches_per_step;
    }
};

// lr(T) = lr0 / (1 + decay * T), T counted in completed training steps.
double lr_schedule(const TrainerConfig& cfg, long completed_steps);

// Terminal reward: +-win_reward for win/loss plus +-vp_reward per VP of
// difference; a turn-cap draw keeps only the VP term.
double compute_reward(const GameState& final_state, int player, double win_reward = 0.75,
                      double vp_reward = 0.02);

// Frozen past checkpoints, one slot per worker. A refresh replaces the
// slot with the oldest stamp, so warmed-up slot ages span
// (workers-1) * refresh_period steps.
struct OpponentPool {
    struct Slot {
        std::shared_ptr<const NetworkParams> params;
        long stamp = 0;
    };
    std::vector<Slot> slots;

    void init(std::shared_ptr<const NetworkParams> params, int n_slots);
    int refresh(std::shared_ptr<const NetworkParams> params, long step); // replaced slot
    int oldest_slot() const;
};

// Experience source: cycles its games round-robin, one learner move per
// visit; opponent moves come from the frozen pool snapshot and produce no
// experiences. Learner seats alternate across game slots.
class WorkerState {
public:
    WorkerState(int id, const TrainerConfig& cfg, std::uint64_t seed);

    void adopt(std::shared_ptr<const NetworkParams> learner, long version,
               std::shared_ptr<const NetworkParams> opponent);
    Batch generate_batch();

    int id() const { return id_; }
    long games_started() const { return games_started_; }
    int learner_seat(int slot) const { return games_[slot].learner_seat; }

private:
    struct PendingExp {
        StateEncoding enc;
        Mask mask{0};
        int action_index = -1;
    };
    struct GameSlot {
        GameState state;
        Rng rng;
        int learner_seat = 0;
        bool pending_valid = false;
        PendingExp pending;
    };

    void reset_game(GameSlot& slot, int slot_index);
    void advance_to_learner(GameSlot& slot);
    void visit(GameSlot& slot, int slot_index, Batch& batch);

    int id_;
    TrainerConfig cfg_;
    Rng seed_rng_;
    std::vector<GameSlot> games_;
    int cursor_ = 0;
    long games_started_ = 0;
    std::shared_ptr<const NetworkParams> learner_;
    std::shared_ptr<const NetworkParams> opponent_;
    long learner_version_ = 0;
};

struct TrainResult {
    long updates = 0;
    long steps = 0;
    std::string final_checkpoint;
    double final_winrate_vs_random = -1.0;
    long stale_batches = 0;
    long pool_refreshes = 0;
    std::vector<long> final_pool_stamps;
};

// Orchestration: workers feed fixed-size batches over a bounded queue to a
// single updater, which descends the combined objective, publishes a fresh
// snapshot after every update, counts training steps, refreshes the
// opponent pool, emits one metrics row per update and periodic checkpoints.
// threads == 1 runs workers and updater interleaved deterministically.
TrainResult train(const TrainerConfig& trainer_cfg, const NetworkConfig& net_cfg);

// Worker-thread cap from the environment (CATAN_XDIM_THREADS), or
// `fallback` when unset/invalid.
int env_thread_cap(int fallback);

} // namespace catanrl
