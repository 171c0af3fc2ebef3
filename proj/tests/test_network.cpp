#include <doctest.h>

#include <cmath>

#include "catan/errors.hpp"
#include "net_helpers.hpp"

using namespace catanrl;
using namespace catanrl::test;

namespace {

NetworkConfig small_config(Arch arch) {
    NetworkConfig cfg;
    cfg.arch = arch;
    cfg.layers = 2;
    cfg.channels = 3;
    cfg.scalars = 5;
    cfg.baseline_channels = 4;
    return cfg;
}

StateEncoding sample_encoding(std::uint64_t seed) {
    Rng rng(0);
    GameState s = setup_done_state(seed, rng);
    return encode_state(observable(s, 0), build_brick_grid());
}

void zero_params(NetworkParams& p) {
    for (Tensor& t : p.tensors) std::fill(t.v.begin(), t.v.end(), 0.0f);
}

} // namespace

TEST_CASE("inflate fills channels with their scalar") {
    const std::vector<double> s = {0.7, 0.0, -2.5};
    const auto channels = inflate_scalars(s);
    REQUIRE(channels.size() == 3 * kGridCells);
    for (int c = 0; c < 3; ++c)
        for (int i = 0; i < kGridCells; ++i) CHECK(channels[c * kGridCells + i] == s[c]);

    // Linearity: inflate(a) + inflate(b) == inflate(a+b).
    const std::vector<double> a = {1.5, -0.25}, b = {0.5, 4.0};
    const auto ia = inflate_scalars(a), ib = inflate_scalars(b);
    const auto iab = inflate_scalars({a[0] + b[0], a[1] + b[1]});
    for (std::size_t i = 0; i < iab.size(); ++i) CHECK(ia[i] + ib[i] == iab[i]);
}

TEST_CASE("deflate yields mean and population variance per channel") {
    std::vector<double> channels(2 * kGridCells, 0.0);
    // Channel 0 constant 3.25; channel 1 half zeros, half twos.
    std::fill_n(channels.begin(), kGridCells, 3.25);
    for (int i = 0; i < kGridCells; ++i)
        channels[kGridCells + i] = (i % 2 == 0) ? 0.0 : 2.0;

    const auto d = deflate_channels(channels, 2);
    REQUIRE(d.size() == 4);
    CHECK(d[0] == doctest::Approx(3.25));
    CHECK(d[1] == doctest::Approx(0.0));
    // 231 cells: 116 zeros and 115 twos.
    const double mean = 2.0 * 115.0 / 231.0;
    CHECK(d[2] == doctest::Approx(mean));
    CHECK(d[3] == doctest::Approx(4.0 * 115.0 / 231.0 - mean * mean));
}

TEST_CASE("zero parameters give zero logits and tanh(0) value") {
    for (Arch arch : {Arch::Xdim, Arch::XdimRes, Arch::CnnRes}) {
        Rng rng(1);
        NetworkParams p = init_network(small_config(arch), rng);
        zero_params(p);
        const NetworkOutput out = forward(p, sample_encoding(7));
        for (double v : out.spatial_logits) CHECK(v == 0.0);
        for (double v : out.scalar_logits) CHECK(v == 0.0);
        CHECK(out.value == 0.0);
    }
}

TEST_CASE("output shapes match the action schema") {
    for (Arch arch : {Arch::Xdim, Arch::XdimRes, Arch::CnnRes}) {
        Rng rng(2);
        NetworkConfig cfg = small_config(arch);
        const NetworkParams p = init_network(cfg, rng);
        const NetworkOutput out = forward(p, sample_encoding(8));
        CHECK(out.spatial_logits.size() == 5 * 231);
        CHECK(out.scalar_logits.size() == 106);
        CHECK(out.value > -1.0);
        CHECK(out.value < 1.0);
        CHECK(out.value == doctest::Approx(std::tanh(out.value_pre)));

        cfg.compat117 = true;
        Rng rng2(2);
        const NetworkParams wide = init_network(cfg, rng2);
        CHECK(forward(wide, sample_encoding(8)).scalar_logits.size() == 117);
    }
}

TEST_CASE("forward is a pure function of params and encoding") {
    Rng rng(3);
    const NetworkParams p = init_network(small_config(Arch::Xdim), rng);
    const StateEncoding enc = sample_encoding(9);
    const NetworkOutput a = forward(p, enc);
    const NetworkOutput b = forward(p, enc);
    CHECK(a.spatial_logits == b.spatial_logits);
    CHECK(a.scalar_logits == b.scalar_logits);
    CHECK(a.value == b.value);
}

TEST_CASE("zeroed residual layer is an identity before activation") {
    Rng rng(4);
    NetworkConfig cfg = small_config(Arch::XdimRes);
    NetworkParams p = init_network(cfg, rng);
    // Zero every tensor of hidden layer 1 (shape-preserving, skip active).
    for (int slot = 0; slot < p.tensors_per_layer(); ++slot) {
        Tensor& t = p.layer_tensor(1, slot);
        std::fill(t.v.begin(), t.v.end(), 0.0f);
    }
    ForwardTrace trace;
    (void)forward(p, sample_encoding(10), &trace);
    // Layer 1 is odd: leaky-ReLU of its input.
    const auto& in2d = trace.layers[1].x_in;
    for (std::size_t i = 0; i < in2d.size(); ++i) {
        const double want = in2d[i] > 0 ? in2d[i] : cfg.leaky_slope * in2d[i];
        CHECK(trace.x_final[i] == doctest::Approx(want).epsilon(1e-12));
    }
    const auto& in1d = trace.layers[1].s_in;
    for (std::size_t i = 0; i < in1d.size(); ++i) {
        const double want = in1d[i] > 0 ? in1d[i] : cfg.leaky_slope * in1d[i];
        CHECK(trace.s_final[i] == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("residual and plain variants differ exactly by the skip effect") {
    Rng rng_a(5), rng_b(5);
    NetworkConfig plain = small_config(Arch::Xdim);
    NetworkConfig res = small_config(Arch::XdimRes);
    NetworkParams pp = init_network(plain, rng_a);
    NetworkParams pr = init_network(res, rng_b);
    // Same seed, same tensor shapes: identical weights.
    for (std::size_t t = 0; t < pp.tensors.size(); ++t)
        REQUIRE(pp.tensors[t].v == pr.tensors[t].v);

    ForwardTrace tp, tr;
    (void)forward(pp, sample_encoding(11), &tp);
    (void)forward(pr, sample_encoding(11), &tr);
    // Layer 0 has no skip: identical pre-activations. Layer 1 differs by
    // exactly the layer-1 input (the skip), applied before activation.
    for (std::size_t i = 0; i < tp.layers[0].pre2d.size(); ++i)
        CHECK(tp.layers[0].pre2d[i] == tr.layers[0].pre2d[i]);
    for (std::size_t i = 0; i < tp.layers[1].pre2d.size(); ++i)
        CHECK(tr.layers[1].pre2d[i] ==
              doctest::Approx(tp.layers[1].pre2d[i] + tr.layers[1].x_in[i]).epsilon(1e-12));
}

TEST_CASE("masked policy is a proper distribution over legal actions") {
    Rng rng(6);
    GameState s = setup_done_state(12, rng);
    const BrickGrid& grid = build_brick_grid();
    const Mask mask = legal_mask(s, grid);
    const int k = mask.count();
    REQUIRE(k >= 1);

    SUBCASE("zero logits give the uniform distribution") {
        NetworkParams p = init_network(small_config(Arch::Xdim), rng);
        zero_params(p);
        const auto dist =
            masked_policy(forward(p, encode_state(observable(s, 0), grid)), mask);
        double sum = 0.0;
        for (int i = 0; i < mask.size(); ++i) {
            if (mask.test(i)) CHECK(dist.probs[i] == doctest::Approx(1.0 / k));
            else CHECK(dist.probs[i] == 0.0);
            sum += dist.probs[i];
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-6));
    }
    SUBCASE("uniform logit shifts leave the distribution unchanged") {
        Rng rng2(7);
        const NetworkParams p = init_network(small_config(Arch::Xdim), rng2);
        NetworkOutput out = forward(p, encode_state(observable(s, 0), grid));
        const auto base = masked_policy(out, mask);
        for (double& v : out.spatial_logits) v += 13.5;
        for (double& v : out.scalar_logits) v += 13.5;
        const auto shifted = masked_policy(out, mask);
        for (int i = 0; i < mask.size(); ++i)
            CHECK(shifted.probs[i] == doctest::Approx(base.probs[i]).epsilon(1e-9));
    }
    SUBCASE("masked actions keep probability zero whatever their logit") {
        Rng rng2(8);
        const NetworkParams p = init_network(small_config(Arch::Xdim), rng2);
        NetworkOutput out = forward(p, encode_state(observable(s, 0), grid));
        for (int i = 0; i < mask.size(); ++i)
            if (!mask.test(i)) out.scalar_logits.empty(); // no-op, keep logits as-is
        out.spatial_logits[0] = 1e6; // an empty-cell logit
        const auto dist = masked_policy(out, mask);
        if (!mask.test(0)) CHECK(dist.probs[0] == 0.0);
    }
    SUBCASE("an empty mask throws") {
        Rng rng2(9);
        const NetworkParams p = init_network(small_config(Arch::Xdim), rng2);
        const NetworkOutput out = forward(p, encode_state(observable(s, 0), grid));
        Mask empty(out.flat_size());
        CHECK_THROWS_AS(masked_policy(out, empty), EmptyMask);
    }
}

TEST_CASE("sampling follows the masked distribution") {
    Rng rng(10);
    GameState s = setup_done_state(14, rng);
    const BrickGrid& grid = build_brick_grid();
    const Mask mask = legal_mask(s, grid);
    NetworkParams p = init_network(small_config(Arch::Xdim), rng);
    const auto dist = masked_policy(forward(p, encode_state(observable(s, 0), grid)), mask);

    Rng sampler(123);
    std::vector<int> counts(mask.size(), 0);
    const int draws = 20000;
    for (int i = 0; i < draws; ++i) counts[dist.sample(sampler)] += 1;
    for (int i = 0; i < mask.size(); ++i) {
        if (!mask.test(i)) CHECK(counts[i] == 0);
        else CHECK(static_cast<double>(counts[i]) / draws ==
                   doctest::Approx(dist.probs[i]).epsilon(0.35));
    }
}

TEST_CASE("initialization respects shapes, bounds and the seed") {
    NetworkConfig cfg; // defaults: Xdim, L=8, C=15, N=40
    Rng rng(11);
    const NetworkParams p = init_network(cfg, rng);

    // First layer consumes the 17-channel, 45-scalar encoding.
    CHECK(p.layer_tensor(0, 0).dims == std::vector<int>{15, 17, 3, 5});
    CHECK(p.layer_tensor(0, 2).dims == std::vector<int>{40, 45});
    CHECK(p.layer_tensor(0, 4).dims == std::vector<int>{15, 45});
    CHECK(p.layer_tensor(0, 5).dims == std::vector<int>{40, 34});
    CHECK(p.layer_tensor(1, 0).dims == std::vector<int>{15, 15, 3, 5});
    CHECK(p.head_tensor(0).dims == std::vector<int>{5, 15});
    CHECK(p.head_tensor(2).dims == std::vector<int>{106, 40});
    CHECK(p.head_tensor(4).dims == std::vector<int>{1, 40});

    // Every weight within the fan-based bound, biases zero.
    for (int l = 0; l < cfg.layers; ++l) {
        const Tensor& w = p.layer_tensor(l, 0);
        const double bound = glorot_bound(p.layer_cin(l) * 15, p.layer_cout(l) * 15);
        for (float x : w.v) CHECK(std::abs(x) <= bound);
        for (float b : p.layer_tensor(l, 1).v) CHECK(b == 0.0f);
        for (float b : p.layer_tensor(l, 3).v) CHECK(b == 0.0f);
    }

    Rng rng2(11);
    const NetworkParams q = init_network(cfg, rng2);
    for (std::size_t t = 0; t < p.tensors.size(); ++t) CHECK(p.tensors[t].v == q.tensors[t].v);

    Rng rng3(12);
    const NetworkParams r = init_network(cfg, rng3);
    bool any_diff = false;
    for (std::size_t t = 0; t < p.tensors.size(); ++t)
        any_diff |= (p.tensors[t].v != r.tensors[t].v);
    CHECK(any_diff);
}

TEST_CASE("cnn baseline consumes the same inputs and interface") {
    Rng rng(13);
    NetworkConfig cfg = small_config(Arch::CnnRes);
    const NetworkParams p = init_network(cfg, rng);
    // Input convolution sees board channels plus inflated scalars.
    CHECK(p.layer_tensor(0, 0).dims ==
          std::vector<int>{cfg.baseline_channels, 17 + 45, 3, 5});
    // Scalar heads read the deflated final channels.
    CHECK(p.head_tensor(2).dims == std::vector<int>{106, 2 * cfg.baseline_channels});
    const NetworkOutput out = forward(p, sample_encoding(15));
    CHECK(out.scalar_logits.size() == 106);
}
