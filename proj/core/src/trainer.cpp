#include "catan/trainer.hpp"

#include <atomic>
#include <cmath>
#include <condition_variable>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <thread>

#include "catan/checkpoint.hpp"
#include "catan/errors.hpp"

namespace catanrl {

double lr_schedule(const TrainerConfig& cfg, long completed_steps) {
    return cfg.lr0 / (1.0 + cfg.lr_decay * static_cast<double>(completed_steps));
}

double compute_reward(const GameState& final_state, int player, double win_reward,
                      double vp_reward) {
    const int vp_self = victory_points(final_state, player, true);
    const int vp_opp = victory_points(final_state, 1 - player, true);
    double r = vp_reward * (vp_self - vp_opp);
    if (final_state.phase.winner == player) r += win_reward;
    else if (final_state.phase.winner == 1 - player) r -= win_reward;
    return r;
}

void OpponentPool::init(std::shared_ptr<const NetworkParams> params, int n_slots) {
    slots.assign(n_slots, Slot{std::move(params), 0});
}

int OpponentPool::oldest_slot() const {
    int best = 0;
    for (int i = 1; i < static_cast<int>(slots.size()); ++i)
        if (slots[i].stamp < slots[best].stamp) best = i;
    return best;
}

int OpponentPool::refresh(std::shared_ptr<const NetworkParams> params, long step) {
    const int slot = oldest_slot();
    slots[slot].params = std::move(params);
    slots[slot].stamp = step;
    return slot;
}

// --- worker --------------------------------------------------------------

WorkerState::WorkerState(int id, const TrainerConfig& cfg, std::uint64_t seed)
    : id_(id), cfg_(cfg), seed_rng_(seed) {
    games_.resize(cfg.games_per_worker);
    for (int g = 0; g < cfg.games_per_worker; ++g) reset_game(games_[g], g);
}

void WorkerState::adopt(std::shared_ptr<const NetworkParams> learner, long version,
                        std::shared_ptr<const NetworkParams> opponent) {
    learner_ = std::move(learner);
    learner_version_ = version;
    opponent_ = std::move(opponent);
}

void WorkerState::reset_game(GameSlot& slot, int slot_index) {
    slot.rng.reseed(seed_rng_.next_u64());
    slot.state = new_game(slot.rng, cfg_.turn_cap);
    slot.learner_seat = slot_index % 2; // seats alternate across a worker's games
    slot.pending_valid = false;
    ++games_started_;
}

void WorkerState::advance_to_learner(GameSlot& slot) {
    const BrickGrid& grid = build_brick_grid();
    const bool compat = opponent_->config.compat117;
    while (!slot.state.is_terminal() && acting_player(slot.state) != slot.learner_seat) {
        const int seat = acting_player(slot.state);
        const StateEncoding enc = encode_state(observable(slot.state, seat), grid);
        const Mask mask = legal_mask(slot.state, grid, compat);
        const PolicyDistribution dist = masked_policy(forward(*opponent_, enc), mask);
        const Action action = decode_action(dist.sample(slot.rng), grid, compat);
        slot.state = apply(slot.state, action, slot.rng).first;
    }
}

void WorkerState::visit(GameSlot& slot, int slot_index, Batch& batch) {
    const BrickGrid& grid = build_brick_grid();
    const bool compat = learner_->config.compat117;
    advance_to_learner(slot);

    if (slot.pending_valid) {
        Experience exp;
        exp.state = slot.pending.enc;
        exp.mask = slot.pending.mask;
        exp.action_index = slot.pending.action_index;
        if (slot.state.is_terminal()) {
            exp.terminal = true;
            exp.reward =
                compute_reward(slot.state, slot.learner_seat, cfg_.win_reward, cfg_.vp_reward);
        } else {
            exp.successor = encode_state(observable(slot.state, slot.learner_seat), grid);
            exp.successor_mask = legal_mask(slot.state, grid, compat);
        }
        batch.items.push_back(std::move(exp));
        slot.pending_valid = false;
    }

    if (slot.state.is_terminal()) {
        reset_game(slot, slot_index);
        advance_to_learner(slot);
    }

    StateEncoding enc = encode_state(observable(slot.state, slot.learner_seat), grid);
    Mask mask = legal_mask(slot.state, grid, compat);
    const PolicyDistribution dist = masked_policy(forward(*learner_, enc), mask);
    const int index = dist.sample(slot.rng);
    const Action action = decode_action(index, grid, compat);
    slot.pending.enc = std::move(enc);
    slot.pending.mask = std::move(mask);
    slot.pending.action_index = index;
    slot.pending_valid = true;
    slot.state = apply(slot.state, action, slot.rng).first;
}

Batch WorkerState::generate_batch() {
    if (!learner_ || !opponent_)
        throw std::logic_error("worker has no adopted snapshots");
    Batch batch;
    batch.worker_id = id_;
    batch.policy_version = learner_version_;
    batch.items.reserve(cfg_.batch_size);
    while (batch.size() < cfg_.batch_size) {
        visit(games_[cursor_], cursor_, batch);
        cursor_ = (cursor_ + 1) % static_cast<int>(games_.size());
    }
    return batch;
}

// --- orchestration -------------------------------------------------------

int env_thread_cap(int fallback) {
    const char* env = std::getenv("CATAN_XDIM_THREADS");
    if (!env) return fallback;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || v <= 0) return fallback;
    return static_cast<int>(v);
}

namespace {

class BoundedQueue {
public:
    explicit BoundedQueue(std::size_t cap) : cap_(cap) {}

    bool push(Batch&& b) {
        std::unique_lock lk(m_);
        cv_push_.wait(lk, [&] { return closed_ || q_.size() < cap_; });
        if (closed_) return false;
        q_.push_back(std::move(b));
        cv_pop_.notify_one();
        return true;
    }

    std::optional<Batch> pop() {
        std::unique_lock lk(m_);
        cv_pop_.wait(lk, [&] { return closed_ || !q_.empty(); });
        if (q_.empty()) return std::nullopt;
        Batch b = std::move(q_.front());
        q_.pop_front();
        cv_push_.notify_one();
        return b;
    }

    void close() {
        {
            std::lock_guard lk(m_);
            closed_ = true;
        }
        cv_push_.notify_all();
        cv_pop_.notify_all();
    }

private:
    std::mutex m_;
    std::condition_variable cv_push_, cv_pop_;
    std::deque<Batch> q_;
    std::size_t cap_;
    bool closed_ = false;
};

struct SnapshotBox {
    std::mutex m;
    std::shared_ptr<const NetworkParams> params;
    long version = 0;

    void publish(std::shared_ptr<const NetworkParams> p, long v) {
        std::lock_guard lk(m);
        params = std::move(p);
        version = v;
    }
    std::pair<std::shared_ptr<const NetworkParams>, long> get() {
        std::lock_guard lk(m);
        return {params, version};
    }
};

struct PoolBox {
    std::mutex m;
    OpponentPool pool;

    std::shared_ptr<const NetworkParams> slot(int i) {
        std::lock_guard lk(m);
        return pool.slots[i % pool.slots.size()].params;
    }
    void refresh(std::shared_ptr<const NetworkParams> p, long step) {
        std::lock_guard lk(m);
        pool.refresh(std::move(p), step);
        ++refreshes;
    }
    long refreshes = 0;
};

std::uint64_t derive_seed(std::uint64_t base, long tag) {
    std::uint64_t x = base + 0x632be59bd9b4e019ULL * static_cast<std::uint64_t>(tag + 1);
    return splitmix64(x);
}

} // namespace

TrainResult train(const TrainerConfig& trainer_cfg, const NetworkConfig& net_cfg) {
    namespace fs = std::filesystem;
    TrainerConfig cfg = trainer_cfg;
    if (cfg.no_activity_loss) cfg.coeffs.alpha_activity = 0.0;
    if (cfg.metrics_path.empty()) cfg.metrics_path = cfg.checkpoint_dir + "/metrics.csv";
    fs::create_directories(cfg.checkpoint_dir);
    fs::path metrics_parent = fs::path(cfg.metrics_path).parent_path();
    if (!metrics_parent.empty()) fs::create_directories(metrics_parent);

    Rng master(cfg.seed);
    const std::uint64_t init_seed = master.next_u64();
    const std::uint64_t eval_seed_base = master.next_u64();

    NetworkParams params;
    if (!cfg.resume_path.empty()) {
        params = load_checkpoint(cfg.resume_path);
    } else {
        Rng init_rng(init_seed);
        params = init_network(net_cfg, init_rng);
    }

    auto snapshot = std::make_shared<const NetworkParams>(params);
    SnapshotBox snap;
    snap.publish(snapshot, 0);

    PoolBox poolbox;
    {
        std::shared_ptr<const NetworkParams> opponent0 = snapshot;
        if (cfg.fixed_opponent && !cfg.fixed_opponent_path.empty())
            opponent0 = std::make_shared<const NetworkParams>(
                load_checkpoint(cfg.fixed_opponent_path));
        poolbox.pool.init(std::move(opponent0), cfg.workers);
    }

    std::vector<std::unique_ptr<WorkerState>> workers;
    workers.reserve(cfg.workers);
    for (int w = 0; w < cfg.workers; ++w)
        workers.push_back(std::make_unique<WorkerState>(w, cfg, master.derive(1000 + w)));

    std::ofstream metrics(cfg.metrics_path, std::ios::trunc);
    if (!metrics) throw ConfigError("cannot open metrics file: " + cfg.metrics_path);
    metrics << "step,updates,lr,policy_loss,value_loss,entropy,logit_l2,avg_reward,"
               "winrate_vs_random\n";

    double winrate = std::nan("");
    auto evaluate = [&](const std::shared_ptr<const NetworkParams>& p, long tag) {
        if (cfg.eval_games <= 0) return;
        NetworkAgent net_agent(p);
        RandomAgent random_agent;
        const ArenaStats stats = arena(net_agent, random_agent, cfg.eval_games,
                                       derive_seed(eval_seed_base, tag), cfg.turn_cap);
        winrate = stats.win_rate;
    };
    evaluate(snapshot, 0);

    const long total = cfg.total_updates();
    long updates = 0;
    long steps = 0;
    long stale_batches = 0;
    NetworkGrads grads = NetworkGrads::zeros_like(params);

    auto checkpoint_path = [&](long step) {
        return (fs::path(cfg.checkpoint_dir) / ("ckpt_step" + std::to_string(step) + ".xdim"))
            .string();
    };

    auto process_batch = [&](Batch&& batch) {
        if (batch.size() != cfg.batch_size)
            throw ShapeMismatch("batch size " + std::to_string(batch.size()) +
                                " != " + std::to_string(cfg.batch_size));
        if (updates - batch.policy_version > cfg.staleness_bound) {
            ++stale_batches;
            std::fprintf(stderr,
                         "[trainer] stale batch from worker %d: version %ld at update %ld "
                         "(bound %d)\n",
                         batch.worker_id, batch.policy_version, updates, cfg.staleness_bound);
        }
        const double lr = lr_schedule(cfg, steps);
        const LossDiagnostics diag = loss_and_gradients(params, batch, cfg.coeffs, grads);
        apply_update(params, grads, lr);
        ++updates;
        snapshot = std::make_shared<const NetworkParams>(params);
        snap.publish(snapshot, updates);

        if (updates % cfg.batches_per_step == 0) {
            ++steps;
            if (!cfg.fixed_opponent && cfg.opponent_refresh_steps > 0 &&
                steps % cfg.opponent_refresh_steps == 0)
                poolbox.refresh(snapshot, steps);
            if (cfg.eval_games > 0 && cfg.eval_period_steps > 0 &&
                steps % cfg.eval_period_steps == 0)
                evaluate(snapshot, steps);
            if (cfg.checkpoint_period_steps > 0 && steps % cfg.checkpoint_period_steps == 0)
                save_checkpoint(params, checkpoint_path(steps));
        }

        char row[256];
        std::snprintf(row, sizeof(row), "%ld,%ld,%.8g,%.8g,%.8g,%.8g,%.8g,%.8g,%.6g\n", steps,
                      updates, lr, diag.policy_loss, diag.value_loss, diag.entropy,
                      cfg.coeffs.alpha_activity * diag.logit_l2, diag.avg_reward, winrate);
        metrics << row;
        metrics.flush();
    };

    const int requested_threads =
        cfg.threads > 0 ? cfg.threads : env_thread_cap(cfg.workers + 1);

    if (requested_threads <= 1) {
        // Deterministic inline mode: workers round-robin, immediate updates.
        while (updates < total) {
            for (int w = 0; w < cfg.workers && updates < total; ++w) {
                auto [p, v] = snap.get();
                workers[w]->adopt(std::move(p), v, poolbox.slot(w));
                process_batch(workers[w]->generate_batch());
            }
        }
    } else {
        const int n_threads = std::max(1, std::min(cfg.workers, requested_threads - 1));
        BoundedQueue queue(cfg.queue_capacity > 0 ? cfg.queue_capacity : 2 * cfg.workers);
        std::atomic<bool> stop{false};

        auto worker_loop = [&](int thread_id) {
            while (!stop.load(std::memory_order_relaxed)) {
                for (int w = thread_id; w < cfg.workers; w += n_threads) {
                    if (stop.load(std::memory_order_relaxed)) return;
                    auto [p, v] = snap.get();
                    workers[w]->adopt(std::move(p), v, poolbox.slot(w));
                    if (!queue.push(workers[w]->generate_batch())) return;
                }
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker_loop, t);

        while (updates < total) {
            auto batch = queue.pop();
            if (!batch) break;
            process_batch(std::move(*batch));
        }
        stop.store(true);
        queue.close();
        for (auto& t : pool) t.join();
    }

    const std::string final_path = checkpoint_path(steps);
    save_checkpoint(params, final_path);

    TrainResult result;
    result.updates = updates;
    result.steps = steps;
    result.final_checkpoint = final_path;
    result.final_winrate_vs_random = winrate;
    result.stale_batches = stale_batches;
    result.pool_refreshes = poolbox.refreshes;
    for (const auto& slot : poolbox.pool.slots) result.final_pool_stamps.push_back(slot.stamp);
    return result;
}

} // namespace catanrl
