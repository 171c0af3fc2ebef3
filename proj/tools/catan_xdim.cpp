// Operator entry point: train / eval / play / inspect / selftest.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "catan/checkpoint.hpp"
#include "catan/config.hpp"
#include "catan/encoding.hpp"
#include "catan/errors.hpp"
#include "catan/evaluation.hpp"
#include "catan/trainer.hpp"
#include "catan/transcript.hpp"

namespace {

using namespace catanrl;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

std::unique_ptr<Agent> make_agent(const std::string& spec, bool greedy) {
    if (spec == "random") return std::make_unique<RandomAgent>();
    auto params = std::make_shared<const NetworkParams>(load_checkpoint(spec));
    return std::make_unique<NetworkAgent>(params, greedy, spec);
}

int cmd_train(const std::string& config_path, const std::vector<std::string>& overrides,
              const std::string& resume, bool no_activity_loss,
              const std::string& fixed_opponent) {
    RunConfig cfg;
    if (!config_path.empty()) cfg = RunConfig::from_file(config_path);
    for (const std::string& kv : overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw ConfigError("--set expects key=value, got: " + kv);
        cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (!resume.empty()) cfg.trainer.resume_path = resume;
    if (no_activity_loss) cfg.trainer.no_activity_loss = true;
    if (!fixed_opponent.empty()) {
        cfg.trainer.fixed_opponent = true;
        cfg.trainer.fixed_opponent_path = fixed_opponent;
    }

    const std::string echo = cfg.echo();
    std::cout << echo;
    std::filesystem::create_directories(cfg.trainer.checkpoint_dir);
    {
        std::ofstream os(std::filesystem::path(cfg.trainer.checkpoint_dir) / "config.echo");
        os << echo;
    }

    const TrainResult result = train(cfg.trainer, cfg.network);
    std::printf("trained updates=%ld steps=%ld checkpoint=%s", result.updates, result.steps,
                result.final_checkpoint.c_str());
    if (result.final_winrate_vs_random >= 0.0)
        std::printf(" winrate_vs_random=%.4f", result.final_winrate_vs_random);
    std::printf("\n");
    return kExitOk;
}

int cmd_eval(const std::string& a, const std::string& b, int n, std::uint64_t seed,
             bool greedy, int turn_cap, int threads, const std::string& report_prefix) {
    auto agent_a = make_agent(a, greedy);
    auto agent_b = make_agent(b, greedy);
    if (threads <= 0) threads = env_thread_cap(1);
    const ArenaStats stats = arena(*agent_a, *agent_b, n, seed, turn_cap, threads);
    std::cout << "agent_a=" << agent_a->name() << " agent_b=" << agent_b->name()
              << " games=" << stats.games << " wins_a=" << stats.wins_a
              << " wins_b=" << stats.wins_b << " draws=" << stats.draws << "\n";
    std::cout << stats.report_csv();
    std::cout << stats.histogram_csv();
    if (!report_prefix.empty()) {
        std::ofstream(report_prefix + "_report.csv") << stats.report_csv();
        std::ofstream(report_prefix + "_hist.csv") << stats.histogram_csv();
    }
    return kExitOk;
}

int cmd_play(const std::string& a, const std::string& b, std::uint64_t seed, bool greedy,
             int turn_cap, const std::string& transcript_path) {
    auto agent_a = make_agent(a, greedy);
    auto agent_b = make_agent(b, greedy);
    const GameResult result = play_game(*agent_a, *agent_b, seed, turn_cap, true);
    if (!transcript_path.empty()) write_transcript(result.transcript, transcript_path);
    std::printf("winner=%s vp_a=%d vp_b=%d turns=%d moves=%zu\n",
                result.winner < 0 ? "draw" : (result.winner == 0 ? "a" : "b"), result.vp[0],
                result.vp[1], result.turns, result.transcript.size());
    return kExitOk;
}

int cmd_inspect(const std::string& what, std::uint64_t seed) {
    const BrickGrid& grid = build_brick_grid();
    if (what == "board") {
        Rng rng(seed);
        const BoardLayout layout = generate_board(rng);
        std::cout << render_grid(grid);
        std::cout << "cells: hex=" << grid.count(CellType::Hex)
                  << " path=" << grid.count(CellType::Path)
                  << " intersection=" << grid.count(CellType::Intersection)
                  << " empty=" << grid.count(CellType::Empty) << "\n";
        for (int h = 0; h < kNumHexes; ++h) {
            const Cell c = grid.hex_cell[h];
            std::printf("hex %2d @(%d,%2d): %-6s", h, c.row, c.col,
                        layout.hex_resource[h] ? resource_name(*layout.hex_resource[h])
                                               : "Desert");
            if (layout.number_token[h]) std::printf(" token %2d", layout.number_token[h]);
            std::printf("\n");
        }
        const BoardTopology& topo = board_topology();
        for (int i = 0; i < kNumHarbors; ++i) {
            std::printf("harbor %d: %s at intersections %d,%d\n", i,
                        harbor_kind_name(layout.harbor_kind[i]),
                        topo.harbor_intersections[i][0], topo.harbor_intersections[i][1]);
        }
        return kExitOk;
    }
    if (what == "encoding") {
        Rng rng(seed);
        const GameState state = new_game(rng);
        const StateEncoding enc = encode_state(observable(state, acting_player(state)), grid);
        std::cout << dump_encoding(enc);
        return kExitOk;
    }
    throw ConfigError("unknown inspect target: " + what + " (expected 'board' or 'encoding')");
}

int cmd_selftest(const std::string& what) {
    if (what != "combinatorics")
        throw ConfigError("unknown selftest: " + what + " (expected 'combinatorics')");
    const auto& keeps = discard_keep_actions();
    const long raw = raw_discard_action_count();
    const BrickGrid& grid = build_brick_grid();
    const int hexes = grid.count(CellType::Hex);
    const int paths = grid.count(CellType::Path);
    const int inters = grid.count(CellType::Intersection);
    std::string kernel_error;
    const bool kernel_ok = verify_kernel_property(grid, &kernel_error);

    std::printf("discard_keep=%zu raw_discard=%ld grid=%d/%d/%d kernel=%s\n", keeps.size(),
                raw, hexes, paths, inters, kernel_ok ? "OK" : "FAIL");
    if (keeps.size() != 70 || raw != 1599979 || hexes != 19 || paths != 72 || inters != 54 ||
        !kernel_ok) {
        if (!kernel_ok) std::fprintf(stderr, "kernel property violated: %s\n",
                                     kernel_error.c_str());
        return kExitRuntime;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-player Catan self-play workbench"};
    app.require_subcommand(1);

    // train
    auto* train_cmd = app.add_subcommand("train", "Run self-play training");
    std::string config_path, resume, fixed_opponent;
    std::vector<std::string> overrides;
    bool no_activity_loss = false;
    train_cmd->add_option("--config", config_path, "Config file (key = value lines)");
    train_cmd->add_option("--set", overrides, "Override a config key (key=value)");
    train_cmd->add_option("--resume", resume, "Resume weights from a checkpoint");
    train_cmd->add_flag("--no-activity-loss", no_activity_loss,
                        "Ablation: drop the policy activity loss (alpha_p = 0)");
    train_cmd->add_option("--fixed-opponent", fixed_opponent,
                          "Ablation: freeze the opponent pool to one checkpoint");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "Head-to-head arena evaluation");
    std::string agent_a = "random", agent_b = "random", report_prefix;
    int n_games = 100, turn_cap = kDefaultTurnCap, threads = 0;
    std::uint64_t seed = 1;
    bool greedy = false;
    eval_cmd->add_option("--agent-a", agent_a, "Checkpoint path or 'random'");
    eval_cmd->add_option("--agent-b", agent_b, "Checkpoint path or 'random'");
    eval_cmd->add_option("-n,--games", n_games, "Number of games");
    eval_cmd->add_option("--seed", seed, "Master seed");
    eval_cmd->add_flag("--greedy", greedy, "Argmax instead of sampling");
    eval_cmd->add_option("--turn-cap", turn_cap, "Draw after this many turns");
    eval_cmd->add_option("--threads", threads, "Worker threads (0: CATAN_XDIM_THREADS)");
    eval_cmd->add_option("--report-prefix", report_prefix, "Write CSV reports here");

    // play
    auto* play_cmd = app.add_subcommand("play", "Play one game and write a transcript");
    std::string transcript_path;
    play_cmd->add_option("--agent-a", agent_a, "Checkpoint path or 'random'");
    play_cmd->add_option("--agent-b", agent_b, "Checkpoint path or 'random'");
    play_cmd->add_option("--seed", seed, "Game seed");
    play_cmd->add_flag("--greedy", greedy, "Argmax instead of sampling");
    play_cmd->add_option("--turn-cap", turn_cap, "Draw after this many turns");
    play_cmd->add_option("--transcript", transcript_path, "Transcript output path (JSONL)");

    // inspect
    auto* inspect_cmd = app.add_subcommand("inspect", "Inspect board or encoding");
    std::string inspect_what;
    inspect_cmd->add_option("what", inspect_what, "'board' or 'encoding'")->required();
    inspect_cmd->add_option("--seed", seed, "Board seed");

    // selftest
    auto* selftest_cmd = app.add_subcommand("selftest", "Built-in verification");
    std::string selftest_what;
    selftest_cmd->add_option("what", selftest_what, "'combinatorics'")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (*train_cmd)
            return cmd_train(config_path, overrides, resume, no_activity_loss, fixed_opponent);
        if (*eval_cmd)
            return cmd_eval(agent_a, agent_b, n_games, seed, greedy, turn_cap, threads,
                            report_prefix);
        if (*play_cmd)
            return cmd_play(agent_a, agent_b, seed, greedy, turn_cap, transcript_path);
        if (*inspect_cmd) return cmd_inspect(inspect_what, seed);
        if (*selftest_cmd) return cmd_selftest(selftest_what);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitRuntime;
    }
    return kExitConfig;
}
