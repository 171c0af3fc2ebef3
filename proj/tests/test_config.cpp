#include <doctest.h>

#include "catan/config.hpp"
#include "catan/errors.hpp"

using namespace catanrl;

TEST_CASE("defaults carry the reference hyperparameters") {
    const RunConfig cfg;
    CHECK(cfg.trainer.lr0 == doctest::Approx(3e-3));
    CHECK(cfg.trainer.lr_decay == doctest::Approx(2e-3));
    CHECK(cfg.trainer.coeffs.alpha_pi == doctest::Approx(1.0));
    CHECK(cfg.trainer.coeffs.alpha_v == doctest::Approx(1e3));
    CHECK(cfg.trainer.coeffs.alpha_entropy == doctest::Approx(1e-4));
    CHECK(cfg.trainer.coeffs.alpha_activity == doctest::Approx(1e-8));
    CHECK(cfg.trainer.coeffs.alpha_weight == doctest::Approx(1e-4));
    CHECK(cfg.trainer.win_reward == doctest::Approx(0.75));
    CHECK(cfg.trainer.vp_reward == doctest::Approx(0.02));
    CHECK(cfg.trainer.workers == 16);
    CHECK(cfg.trainer.games_per_worker == 8);
    CHECK(cfg.trainer.batch_size == 64);
    CHECK(cfg.trainer.batches_per_step == 1000);
    CHECK(cfg.trainer.opponent_refresh_steps == 50);
    CHECK(cfg.network.layers == 8);
    CHECK(cfg.network.channels == 15);
    CHECK(cfg.network.scalars == 40);
    CHECK(cfg.network.baseline_channels == 40);

    // Every reference hyperparameter is reachable by name in the echo.
    const std::string echo = cfg.echo();
    for (const char* key :
         {"lr0 = 0.003", "lr_decay = 0.002", "alpha_pi = 1", "alpha_v = 1000",
          "alpha_entropy = 1e-04", "alpha_activity = 1e-08",
          "alpha_weight = 1e-04", "win_reward = 0.75", "vp_reward = 0.02", "workers = 16",
          "batch_size = 64", "batches_per_step = 1000", "opponent_refresh_steps = 50"})
        CHECK_MESSAGE(echo.find(key) != std::string::npos, key);
}

TEST_CASE("unknown keys are rejected by name") {
    RunConfig cfg;
    try {
        cfg.set("warp_drive", "11");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("warp_drive") != std::string::npos);
    }
    CHECK_THROWS_AS(RunConfig::from_text("nonsense_key = 3\n"), ConfigError);
}

TEST_CASE("values are validated by type") {
    RunConfig cfg;
    CHECK_THROWS_AS(cfg.set("layers", "eight"), ConfigError);
    CHECK_THROWS_AS(cfg.set("lr0", "fast"), ConfigError);
    CHECK_THROWS_AS(cfg.set("compat117", "maybe"), ConfigError);
    CHECK_THROWS_AS(cfg.set("arch", "transformer"), ConfigError);
    CHECK_THROWS_AS(RunConfig::from_text("layers\n"), ConfigError);
    cfg.set("arch", "cnnres");
    CHECK(cfg.network.arch == Arch::CnnRes);
}

TEST_CASE("parsing handles comments, blanks and whitespace") {
    const RunConfig cfg = RunConfig::from_text(
        "# a comment\n"
        "\n"
        "  layers =  6  # trailing comment\n"
        "alpha_v=500\n"
        "checkpoint_dir = runs/exp1\n");
    CHECK(cfg.network.layers == 6);
    CHECK(cfg.trainer.coeffs.alpha_v == doctest::Approx(500.0));
    CHECK(cfg.trainer.checkpoint_dir == "runs/exp1");
}

TEST_CASE("echo round-trips to the identical configuration") {
    RunConfig cfg;
    cfg.set("arch", "xdimres");
    cfg.set("layers", "6");
    cfg.set("lr0", "0.00123");
    cfg.set("seed", "987654321");
    cfg.set("no_activity_loss", "true");
    cfg.set("fixed_opponent_path", "runs/opp.xdim");
    cfg.set("metrics_file", "runs/m.csv");
    cfg.set("transcript_dir", "runs/tr");

    const std::string echo1 = cfg.echo();
    const RunConfig parsed = RunConfig::from_text(echo1);
    const std::string echo2 = parsed.echo();
    CHECK(echo1 == echo2);
    CHECK(parsed.network.arch == Arch::XdimRes);
    CHECK(parsed.trainer.lr0 == doctest::Approx(0.00123));
    CHECK(parsed.trainer.seed == 987654321ULL);
    CHECK(parsed.trainer.no_activity_loss);
    CHECK(parsed.transcript_dir == "runs/tr");
}
