#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "catan/checkpoint.hpp"
#include "catan/trainer.hpp"
#include "helpers.hpp"

using namespace catanrl;
using namespace catanrl::test;

namespace {

namespace fs = std::filesystem;

TrainerConfig smoke_trainer(const std::string& dir) {
    TrainerConfig cfg;
    cfg.workers = 2;
    cfg.games_per_worker = 2;
    cfg.batch_size = 8;
    cfg.batches_per_step = 5;
    cfg.train_updates = 10;
    cfg.opponent_refresh_steps = 1;
    cfg.eval_games = 0;
    cfg.threads = 1;
    cfg.turn_cap = 80;
    cfg.seed = 42;
    cfg.checkpoint_dir = dir;
    return cfg;
}

NetworkConfig smoke_net() {
    NetworkConfig cfg;
    cfg.layers = 2;
    cfg.channels = 2;
    cfg.scalars = 4;
    return cfg;
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream is(path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(is, line)) lines.push_back(line);
    return lines;
}

std::string scratch_dir(const char* name) {
    const fs::path p = fs::temp_directory_path() / name;
    fs::remove_all(p);
    fs::create_directories(p);
    return p.string();
}

std::string file_bytes(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(is)), {});
}

} // namespace

TEST_CASE("learning rate follows the inverse-decay schedule") {
    TrainerConfig cfg;
    CHECK(lr_schedule(cfg, 0) == doctest::Approx(3e-3));
    CHECK(lr_schedule(cfg, 500) == doctest::Approx(1.5e-3));
    double prev = lr_schedule(cfg, 0);
    for (long t = 1; t <= 100; ++t) {
        const double lr = lr_schedule(cfg, t);
        CHECK(lr < prev);
        prev = lr;
    }
}

TEST_CASE("terminal rewards shape win margin and draws") {
    Rng rng(0);
    GameState s = setup_done_state(211, rng);

    // Winner with 10 VP against 6.
    s.phase = Phase{};
    s.phase.kind = PhaseKind::Terminal;
    s.phase.winner = 0;
    // Build VP surgically: clear and install counted pieces.
    s.buildings.fill(Building{});
    for (int v = 0, placed = 0; v < kNumIntersections && placed < 5; ++v) {
        if (board_topology().intersection_paths[v][0] < 0) continue;
        s.buildings[v] = Building{BuildingKind::City, 0}; // 5 cities = 10 VP
        ++placed;
    }
    for (int v = kNumIntersections - 1, placed = 0; v >= 0 && placed < 3; --v) {
        if (s.buildings[v].kind != BuildingKind::None) continue;
        s.buildings[v] = Building{BuildingKind::City, 1}; // 6 VP
        ++placed;
    }
    REQUIRE(victory_points(s, 0, true) == 10);
    REQUIRE(victory_points(s, 1, true) == 6);

    CHECK(compute_reward(s, 0) == doctest::Approx(0.75 + 0.02 * 4));
    CHECK(compute_reward(s, 1) == doctest::Approx(-(0.75 + 0.02 * 4)));

    SUBCASE("cap draw keeps only the VP term") {
        s.phase.winner = -1;
        // 7 vs 5: drop buildings to get there.
        s.buildings.fill(Building{});
        int placed = 0;
        for (int v = 0; v < kNumIntersections && placed < 7; ++v) {
            s.buildings[v] = Building{placed < 3 ? BuildingKind::City : BuildingKind::Settlement,
                                      static_cast<std::int8_t>(placed < 5 ? 0 : 1)};
            ++placed;
        }
        // p0: 3 cities + 2 settlements = 8... adjust to the spec's 7 vs 5.
        s.buildings.fill(Building{});
        auto place = [&](int owner, BuildingKind kind, int& cursor) {
            while (s.buildings[cursor].kind != BuildingKind::None) ++cursor;
            s.buildings[cursor] = Building{kind, static_cast<std::int8_t>(owner)};
        };
        int cur = 0;
        for (int i = 0; i < 2; ++i) place(0, BuildingKind::City, cur);   // 4
        for (int i = 0; i < 3; ++i) place(0, BuildingKind::Settlement, cur); // 7
        for (int i = 0; i < 2; ++i) place(1, BuildingKind::City, cur);   // 4
        for (int i = 0; i < 1; ++i) place(1, BuildingKind::Settlement, cur); // 5
        REQUIRE(victory_points(s, 0, true) == 7);
        REQUIRE(victory_points(s, 1, true) == 5);
        CHECK(compute_reward(s, 0) == doctest::Approx(0.04));
        CHECK(compute_reward(s, 1) == doctest::Approx(-0.04));
    }
}

TEST_CASE("reward is antisymmetric on real terminal states") {
    Rng rng(999);
    for (int g = 0; g < 3; ++g) {
        Rng game_rng(rng.next_u64());
        GameState s = new_game(game_rng, /*turn_cap=*/120);
        s = random_playout(std::move(s), game_rng);
        REQUIRE(s.is_terminal());
        CHECK(compute_reward(s, 0) == doctest::Approx(-compute_reward(s, 1)));
    }
}

TEST_CASE("opponent pool replaces the oldest slot and spans the refresh period") {
    Rng rng(1);
    auto params = std::make_shared<const NetworkParams>(init_network(smoke_net(), rng));
    OpponentPool pool;
    pool.init(params, 16);
    REQUIRE(pool.slots.size() == 16);
    for (const auto& slot : pool.slots) CHECK(slot.stamp == 0);

    // Refresh every 50 steps: after warm-up the ages span 750.
    long step = 0;
    for (int i = 0; i < 16; ++i) {
        step += 50;
        const int replaced = pool.refresh(params, step);
        CHECK(replaced == i); // cold slots replaced in index order
    }
    std::set<long> stamps;
    for (const auto& slot : pool.slots) stamps.insert(slot.stamp);
    CHECK(stamps.size() == 16); // unique after warm-up
    CHECK(*stamps.rbegin() - *stamps.begin() == 750);

    step += 50;
    const int replaced = pool.refresh(params, step);
    CHECK(replaced == 0); // oldest again
    CHECK(pool.slots[0].stamp == step);
}

TEST_CASE("workers emit fixed-size batches of legal learner moves") {
    TrainerConfig cfg;
    cfg.batch_size = 64;
    cfg.games_per_worker = 8;
    cfg.turn_cap = 100;
    Rng rng(3);
    auto params = std::make_shared<const NetworkParams>(init_network(smoke_net(), rng));

    WorkerState worker(0, cfg, 777);
    // Learner seats alternate across the worker's games.
    for (int g = 0; g < cfg.games_per_worker; ++g) CHECK(worker.learner_seat(g) == g % 2);

    worker.adopt(params, 0, params);
    const Batch batch = worker.generate_batch();
    CHECK(batch.size() == 64);
    CHECK(batch.worker_id == 0);
    int terminals = 0;
    for (const Experience& exp : batch.items) {
        REQUIRE(exp.action_index >= 0);
        REQUIRE(exp.mask.test(exp.action_index)); // the chosen action was legal
        if (exp.terminal) {
            ++terminals;
            CHECK(exp.reward != 0.0);
        } else {
            CHECK(exp.reward == 0.0);
            CHECK(exp.successor_mask.count() >= 1);
        }
    }
    // A second batch continues the same games deterministically.
    const Batch batch2 = worker.generate_batch();
    CHECK(batch2.size() == 64);
}

TEST_CASE("training smoke run: one metrics row per update, checkpoint loads") {
    const std::string dir = scratch_dir("catan_train_smoke");
    TrainerConfig cfg = smoke_trainer(dir);
    const TrainResult result = train(cfg, smoke_net());

    CHECK(result.updates == 10);
    CHECK(result.steps == 2); // 10 updates / 5 batches per step
    CHECK(result.stale_batches == 0);
    CHECK(result.pool_refreshes == 2);

    const auto lines = read_lines(dir + "/metrics.csv");
    REQUIRE(lines.size() == 11); // header + one row per update
    CHECK(lines[0] ==
          "step,updates,lr,policy_loss,value_loss,entropy,logit_l2,avg_reward,"
          "winrate_vs_random");

    REQUIRE(fs::exists(result.final_checkpoint));
    const NetworkParams loaded = load_checkpoint(result.final_checkpoint);
    CHECK(loaded.config.layers == 2);

    // The loaded checkpoint plays: one game against itself.
    Rng rng(5);
    auto p = std::make_shared<const NetworkParams>(loaded);
    NetworkAgent agent(p);
    const GameResult game = play_game(agent, agent, 99, 120);
    CHECK(game.turns <= 120);
}

TEST_CASE("single-threaded training is bit-for-bit reproducible") {
    const std::string dir_a = scratch_dir("catan_train_rep_a");
    const std::string dir_b = scratch_dir("catan_train_rep_b");
    TrainerConfig cfg_a = smoke_trainer(dir_a);
    TrainerConfig cfg_b = smoke_trainer(dir_b);
    cfg_a.train_updates = cfg_b.train_updates = 6;

    const TrainResult ra = train(cfg_a, smoke_net());
    const TrainResult rb = train(cfg_b, smoke_net());
    CHECK(file_bytes(ra.final_checkpoint) == file_bytes(rb.final_checkpoint));
    // Metrics are identical too (paths differ, contents match).
    const auto la = read_lines(dir_a + "/metrics.csv");
    const auto lb = read_lines(dir_b + "/metrics.csv");
    CHECK(la == lb);
}

TEST_CASE("ablation flags: activity loss off, opponent pool frozen") {
    SUBCASE("--no-activity-loss zeroes the logit-l2 contribution") {
        const std::string dir = scratch_dir("catan_train_noact");
        TrainerConfig cfg = smoke_trainer(dir);
        cfg.train_updates = 4;
        cfg.no_activity_loss = true;
        (void)train(cfg, smoke_net());
        const auto lines = read_lines(dir + "/metrics.csv");
        REQUIRE(lines.size() == 5);
        for (std::size_t i = 1; i < lines.size(); ++i) {
            std::stringstream ss(lines[i]);
            std::string field;
            for (int f = 0; f < 7; ++f) std::getline(ss, field, ',');
            CHECK(field == "0"); // logit_l2 column
        }
    }
    SUBCASE("--fixed-opponent keeps all pool stamps at zero") {
        const std::string fixed_dir = scratch_dir("catan_train_fixed_src");
        TrainerConfig pre = smoke_trainer(fixed_dir);
        pre.train_updates = 2;
        const TrainResult seed_run = train(pre, smoke_net());

        const std::string dir = scratch_dir("catan_train_fixed");
        TrainerConfig cfg = smoke_trainer(dir);
        cfg.train_updates = 6;
        cfg.fixed_opponent = true;
        cfg.fixed_opponent_path = seed_run.final_checkpoint;
        const TrainResult result = train(cfg, smoke_net());
        CHECK(result.pool_refreshes == 0);
        for (long stamp : result.final_pool_stamps) CHECK(stamp == 0);
    }
}

TEST_CASE("training resumes from a checkpoint") {
    const std::string dir = scratch_dir("catan_train_resume");
    TrainerConfig cfg = smoke_trainer(dir);
    cfg.train_updates = 3;
    const TrainResult first = train(cfg, smoke_net());

    TrainerConfig cfg2 = smoke_trainer(dir + "_cont");
    cfg2.train_updates = 2;
    cfg2.resume_path = first.final_checkpoint;
    const TrainResult second = train(cfg2, smoke_net());
    CHECK(second.updates == 2);
    CHECK(fs::exists(second.final_checkpoint));
}

TEST_CASE("multi-threaded training completes and respects batch accounting") {
    const std::string dir = scratch_dir("catan_train_mt");
    TrainerConfig cfg = smoke_trainer(dir);
    cfg.threads = 3; // 2 worker threads + updater
    cfg.train_updates = 8;
    const TrainResult result = train(cfg, smoke_net());
    CHECK(result.updates == 8);
    const auto lines = read_lines(dir + "/metrics.csv");
    CHECK(lines.size() == 9);
}
