#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>

#include "catan/checkpoint.hpp"
#include "catan/errors.hpp"
#include "net_helpers.hpp"

using namespace catanrl;
using namespace catanrl::test;

namespace {

std::string temp_path(const char* name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

} // namespace

TEST_CASE("checkpoints round-trip bit-exactly") {
    NetworkConfig cfg;
    cfg.arch = Arch::XdimRes;
    cfg.layers = 3;
    cfg.channels = 4;
    cfg.scalars = 6;
    Rng rng(77);
    const NetworkParams params = init_network(cfg, rng);

    const std::string path = temp_path("ckpt_roundtrip.xdim");
    save_checkpoint(params, path);
    const NetworkParams loaded = load_checkpoint(path);

    CHECK(loaded.config == params.config);
    REQUIRE(loaded.tensors.size() == params.tensors.size());
    for (std::size_t t = 0; t < params.tensors.size(); ++t) {
        CHECK(loaded.tensors[t].name == params.tensors[t].name);
        CHECK(loaded.tensors[t].dims == params.tensors[t].dims);
        REQUIRE(loaded.tensors[t].v.size() == params.tensors[t].v.size());
        for (std::size_t i = 0; i < params.tensors[t].v.size(); ++i)
            CHECK(std::memcmp(&loaded.tensors[t].v[i], &params.tensors[t].v[i],
                              sizeof(float)) == 0);
    }

    // Saving the loaded params again reproduces the identical file.
    const std::string path2 = temp_path("ckpt_roundtrip2.xdim");
    save_checkpoint(loaded, path2);
    std::ifstream a(path, std::ios::binary), b(path2, std::ios::binary);
    const std::string bytes_a((std::istreambuf_iterator<char>(a)), {});
    const std::string bytes_b((std::istreambuf_iterator<char>(b)), {});
    CHECK(bytes_a == bytes_b);
    std::filesystem::remove(path);
    std::filesystem::remove(path2);
}

TEST_CASE("forward outputs are bit-identical across a round trip") {
    NetworkConfig cfg;
    cfg.layers = 2;
    cfg.channels = 5;
    cfg.scalars = 8;
    Rng rng(78);
    const NetworkParams params = init_network(cfg, rng);
    const std::string path = temp_path("ckpt_forward.xdim");
    save_checkpoint(params, path);
    const NetworkParams loaded = load_checkpoint(path);
    std::filesystem::remove(path);

    Rng enc_rng(5150);
    for (int i = 0; i < 10; ++i) {
        Rng game_rng(enc_rng.next_u64());
        GameState s = new_game(game_rng);
        for (int moves = enc_rng.uniform_int(0, 30); moves > 0 && !s.is_terminal(); --moves) {
            const auto legal = legal_actions(s);
            s = apply(s, legal[game_rng.uniform_int(0, static_cast<int>(legal.size()) - 1)],
                      game_rng)
                    .first;
        }
        const StateEncoding enc =
            encode_state(observable(s, acting_player(s)), build_brick_grid());
        const NetworkOutput a = forward(params, enc);
        const NetworkOutput b = forward(loaded, enc);
        CHECK(a.spatial_logits == b.spatial_logits);
        CHECK(a.scalar_logits == b.scalar_logits);
        CHECK(a.value == b.value);
    }
}

TEST_CASE("corrupt checkpoints are rejected") {
    const std::string path = temp_path("ckpt_bad.xdim");
    {
        std::ofstream os(path, std::ios::binary);
        os << "NOTACKPT garbage";
    }
    CHECK_THROWS_AS(load_checkpoint(path), ConfigError);
    CHECK_THROWS_AS(load_checkpoint("/nonexistent/nope.xdim"), ConfigError);
    std::filesystem::remove(path);

    // Truncation after the magic is caught too.
    NetworkConfig cfg;
    cfg.layers = 2;
    cfg.channels = 2;
    cfg.scalars = 2;
    Rng rng(79);
    const NetworkParams params = init_network(cfg, rng);
    const std::string full = temp_path("ckpt_full.xdim");
    save_checkpoint(params, full);
    std::string bytes;
    {
        std::ifstream is(full, std::ios::binary);
        bytes.assign((std::istreambuf_iterator<char>(is)), {});
    }
    const std::string cut = temp_path("ckpt_cut.xdim");
    {
        std::ofstream os(cut, std::ios::binary);
        os.write(bytes.data(), static_cast<std::streamsize>(bytes.size() / 2));
    }
    CHECK_THROWS_AS(load_checkpoint(cut), ConfigError);
    std::filesystem::remove(full);
    std::filesystem::remove(cut);
}
