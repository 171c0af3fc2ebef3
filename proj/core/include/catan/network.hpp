#pragma once

#include <array>
#include <string>
#include <vector>

#include "catan/action_codec.hpp"
#include "catan/encoding.hpp"
#include "catan/rng.hpp"

namespace catanrl {

enum class Arch : std::uint8_t { Xdim = 0, XdimRes, CnnRes };
const char* arch_name(Arch a);
Arch arch_from_string(const std::string& s);

struct NetworkConfig {
    Arch arch = Arch::Xdim;
    int layers = 8;            // hidden layers, >= 2
    int channels = 15;         // hidden 2D channels C (Xdim variants)
    int scalars = 40;          // hidden scalar neurons N (Xdim variants)
    int baseline_channels = 40; // hidden channels of the CNN baseline
    double leaky_slope = 0.01;
    bool compat117 = false; // pad the scalar action head to 117 slots

    int scalar_logits() const { return compat117 ? kScalarActionsCompat : kScalarActions; }
    int hidden_channels() const { return arch == Arch::CnnRes ? baseline_channels : channels; }
    // The CNN baseline takes the scalar block inflated into extra channels.
    int input_channels() const {
        return arch == Arch::CnnRes ? kStateChannels + kStateScalars : kStateChannels;
    }
    // Width of the vector feeding the scalar-logit and value heads.
    int head_scalars() const {
        return arch == Arch::CnnRes ? 2 * baseline_channels : scalars;
    }
    bool is_xdim() const { return arch != Arch::CnnRes; }

    bool operator==(const NetworkConfig&) const = default;
};

// One named parameter tensor. Values are stored as float32 (the checkpoint
// precision); all arithmetic runs in double.
struct Tensor {
    std::string name;
    std::vector<int> dims;
    std::vector<float> v;

    long size() const { return static_cast<long>(v.size()); }
};

// Layer tensors in a fixed order. Xdim layers: conv.w, conv.b, dense.w,
// dense.b, inflate.w, deflate.w. CNN layers: conv.w, conv.b. Heads:
// spatial.w, spatial.b, scalar.w, scalar.b, value.w, value.b.
struct NetworkParams {
    NetworkConfig config;
    std::vector<Tensor> tensors;

    int tensors_per_layer() const { return config.is_xdim() ? 6 : 2; }
    int head_base() const { return config.layers * tensors_per_layer(); }
    const Tensor& layer_tensor(int layer, int slot) const {
        return tensors[layer * tensors_per_layer() + slot];
    }
    Tensor& layer_tensor(int layer, int slot) {
        return tensors[layer * tensors_per_layer() + slot];
    }
    const Tensor& head_tensor(int slot) const { return tensors[head_base() + slot]; }
    Tensor& head_tensor(int slot) { return tensors[head_base() + slot]; }

    // Layer input / output widths.
    int layer_cin(int layer) const {
        return layer == 0 ? config.input_channels() : config.hidden_channels();
    }
    int layer_cout(int) const { return config.hidden_channels(); }
    int layer_nin(int layer) const { return layer == 0 ? kStateScalars : config.scalars; }
    int layer_nout(int) const { return config.scalars; }
    // Residual variants add the identity skip on shape-preserving layers.
    bool layer_has_skip(int layer) const {
        return (config.arch == Arch::XdimRes || config.arch == Arch::CnnRes) && layer > 0;
    }

    long parameter_count() const;
};

// Deterministic initialization: weights uniform within the
// +-sqrt(6/(fan_in+fan_out)) bound, biases zero.
NetworkParams init_network(const NetworkConfig& config, Rng& rng);

double glorot_bound(int fan_in, int fan_out);

struct NetworkOutput {
    std::array<double, kSpatialActions> spatial_logits{};
    std::vector<double> scalar_logits;
    double value = 0.0; // tanh(value_pre)
    double value_pre = 0.0;

    double flat_logit(int i) const {
        return i < kSpatialActions ? spatial_logits[i] : scalar_logits[i - kSpatialActions];
    }
    int flat_size() const { return kSpatialActions + static_cast<int>(scalar_logits.size()); }
};

// Per-layer forward state kept for backpropagation.
struct LayerTrace {
    std::vector<double> x_in;     // cin x 231
    std::vector<double> s_in;     // nin
    std::vector<double> pre2d;    // cout x 231
    std::vector<double> pre1d;    // nout
    std::vector<double> deflated; // 2*cin, (mean,var) per input channel
};

struct ForwardTrace {
    std::vector<LayerTrace> layers;
    std::vector<double> x_final;      // post-activation of the last layer
    std::vector<double> s_final;      // scalar vector feeding the heads
    std::vector<double> head_deflated; // CnnRes only: deflate of x_final
};

NetworkOutput forward(const NetworkParams& params, const StateEncoding& enc);
NetworkOutput forward(const NetworkParams& params, const StateEncoding& enc,
                      ForwardTrace* trace);

// Masked softmax over flat action indices; probabilities of masked actions
// are exactly zero.
struct PolicyDistribution {
    std::vector<double> probs;

    int sample(Rng& rng) const;
    int argmax() const;
};

PolicyDistribution masked_policy(const NetworkOutput& out, const Mask& mask);

// The cross-dimensional conversion primitives.
// inflate: each scalar becomes a channel constant-filled with its value.
std::vector<double> inflate_scalars(const std::vector<double>& scalars);
// deflate: each channel collapses to (mean, population variance).
std::vector<double> deflate_channels(const std::vector<double>& channels, int n_channels);

} // namespace catanrl
