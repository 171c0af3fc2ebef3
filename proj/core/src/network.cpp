#include "catan/network.hpp"

#include <algorithm>
#include <cmath>

#include "catan/errors.hpp"

namespace catanrl {

const char* arch_name(Arch a) {
    switch (a) {
        case Arch::Xdim: return "xdim";
        case Arch::XdimRes: return "xdimres";
        case Arch::CnnRes: return "cnnres";
    }
    return "?";
}

Arch arch_from_string(const std::string& s) {
    if (s == "xdim") return Arch::Xdim;
    if (s == "xdimres") return Arch::XdimRes;
    if (s == "cnnres") return Arch::CnnRes;
    throw ConfigError("unknown architecture: " + s);
}

double glorot_bound(int fan_in, int fan_out) {
    return std::sqrt(6.0 / (fan_in + fan_out));
}

long NetworkParams::parameter_count() const {
    long n = 0;
    for (const Tensor& t : tensors) n += t.size();
    return n;
}

namespace {

constexpr int kKernelRows = 3;
constexpr int kKernelCols = 5;
constexpr int kKernelSize = kKernelRows * kKernelCols;

Tensor make_tensor(const std::string& name, std::vector<int> dims) {
    Tensor t;
    t.name = name;
    t.dims = std::move(dims);
    long n = 1;
    for (int d : t.dims) n *= d;
    t.v.assign(n, 0.0f);
    return t;
}

void glorot_fill(Tensor& t, int fan_in, int fan_out, Rng& rng) {
    const double bound = glorot_bound(fan_in, fan_out);
    for (float& w : t.v) w = static_cast<float>((rng.uniform_double() * 2.0 - 1.0) * bound);
}

// out[cout][231] = conv(in[cin][231]) + bias, 3x5 kernel, zero padding.
void conv3x5_forward(const Tensor& w, const Tensor& b, const double* in, int cin, int cout,
                     double* out) {
    for (int o = 0; o < cout; ++o) {
        double* dst = out + o * kGridCells;
        const double bias = b.v[o];
        for (int i = 0; i < kGridCells; ++i) dst[i] = bias;
        for (int c = 0; c < cin; ++c) {
            const double* src = in + c * kGridCells;
            const float* k = w.v.data() + (o * cin + c) * kKernelSize;
            for (int r = 0; r < kGridRows; ++r) {
                for (int col = 0; col < kGridCols; ++col) {
                    double acc = 0.0;
                    for (int kr = 0; kr < kKernelRows; ++kr) {
                        const int rr = r + kr - 1;
                        if (rr < 0 || rr >= kGridRows) continue;
                        const double* row = src + rr * kGridCols;
                        const float* kk = k + kr * kKernelCols;
                        for (int kc = 0; kc < kKernelCols; ++kc) {
                            const int cc = col + kc - 2;
                            if (cc < 0 || cc >= kGridCols) continue;
                            acc += kk[kc] * row[cc];
                        }
                    }
                    dst[r * kGridCols + col] += acc;
                }
            }
        }
    }
}

// y[nout] = w[nout][nin] * x + b (b may be null).
void dense_forward(const Tensor& w, const Tensor* b, const double* x, int nin, int nout,
                   double* y, bool accumulate) {
    for (int o = 0; o < nout; ++o) {
        double acc = b ? static_cast<double>(b->v[o]) : 0.0;
        const float* row = w.v.data() + static_cast<long>(o) * nin;
        for (int i = 0; i < nin; ++i) acc += row[i] * x[i];
        if (accumulate) y[o] += acc;
        else y[o] = acc;
    }
}

void deflate_into(const double* channels, int n, double* out) {
    for (int c = 0; c < n; ++c) {
        const double* src = channels + c * kGridCells;
        double sum = 0.0, sq = 0.0;
        for (int i = 0; i < kGridCells; ++i) {
            sum += src[i];
            sq += src[i] * src[i];
        }
        const double mean = sum / kGridCells;
        out[2 * c] = mean;
        out[2 * c + 1] = sq / kGridCells - mean * mean;
    }
}

inline double activate(double x, bool use_tanh, double slope) {
    if (use_tanh) return std::tanh(x);
    return x > 0.0 ? x : slope * x;
}

} // namespace

std::vector<double> inflate_scalars(const std::vector<double>& scalars) {
    std::vector<double> out(scalars.size() * kGridCells);
    for (std::size_t c = 0; c < scalars.size(); ++c)
        std::fill_n(out.begin() + c * kGridCells, kGridCells, scalars[c]);
    return out;
}

std::vector<double> deflate_channels(const std::vector<double>& channels, int n_channels) {
    if (channels.size() != static_cast<std::size_t>(n_channels) * kGridCells)
        throw ShapeMismatch("deflate: channel buffer size mismatch");
    std::vector<double> out(2 * n_channels);
    deflate_into(channels.data(), n_channels, out.data());
    return out;
}

NetworkParams init_network(const NetworkConfig& config, Rng& rng) {
    if (config.layers < 2) throw ShapeMismatch("network needs at least 2 layers");
    if (config.hidden_channels() < 1 || (config.is_xdim() && config.scalars < 1))
        throw ShapeMismatch("hidden widths must be positive");

    NetworkParams p;
    p.config = config;

    for (int l = 0; l < config.layers; ++l) {
        const std::string prefix = "layer" + std::to_string(l) + ".";
        const int cin = p.layer_cin(l), cout = p.layer_cout(l);
        Tensor cw = make_tensor(prefix + "conv.w", {cout, cin, kKernelRows, kKernelCols});
        glorot_fill(cw, cin * kKernelSize, cout * kKernelSize, rng);
        p.tensors.push_back(std::move(cw));
        p.tensors.push_back(make_tensor(prefix + "conv.b", {cout}));
        if (config.is_xdim()) {
            const int nin = p.layer_nin(l), nout = p.layer_nout(l);
            Tensor dw = make_tensor(prefix + "dense.w", {nout, nin});
            glorot_fill(dw, nin, nout, rng);
            p.tensors.push_back(std::move(dw));
            p.tensors.push_back(make_tensor(prefix + "dense.b", {nout}));
            Tensor iw = make_tensor(prefix + "inflate.w", {cout, nin});
            glorot_fill(iw, nin, cout, rng);
            p.tensors.push_back(std::move(iw));
            Tensor fw = make_tensor(prefix + "deflate.w", {nout, 2 * cin});
            glorot_fill(fw, 2 * cin, nout, rng);
            p.tensors.push_back(std::move(fw));
        }
    }

    const int C = config.hidden_channels();
    const int H = config.head_scalars();
    const int A = config.scalar_logits();
    Tensor sw = make_tensor("head.spatial.w", {kActionChannels, C});
    glorot_fill(sw, C, kActionChannels, rng);
    p.tensors.push_back(std::move(sw));
    p.tensors.push_back(make_tensor("head.spatial.b", {kActionChannels}));
    Tensor qw = make_tensor("head.scalar.w", {A, H});
    glorot_fill(qw, H, A, rng);
    p.tensors.push_back(std::move(qw));
    p.tensors.push_back(make_tensor("head.scalar.b", {A}));
    Tensor vw = make_tensor("head.value.w", {1, H});
    glorot_fill(vw, H, 1, rng);
    p.tensors.push_back(std::move(vw));
    p.tensors.push_back(make_tensor("head.value.b", {1}));
    return p;
}

NetworkOutput forward(const NetworkParams& params, const StateEncoding& enc) {
    return forward(params, enc, nullptr);
}

NetworkOutput forward(const NetworkParams& params, const StateEncoding& enc,
                      ForwardTrace* trace) {
    const NetworkConfig& cfg = params.config;
    const bool xdim = cfg.is_xdim();
    const int L = cfg.layers;

    std::vector<double> x(static_cast<std::size_t>(cfg.input_channels()) * kGridCells);
    for (int i = 0; i < kStateChannels * kGridCells; ++i) x[i] = enc.channels[i];
    if (!xdim) {
        // Scalars enter the CNN baseline as constant channels.
        for (int s = 0; s < kStateScalars; ++s)
            std::fill_n(x.begin() + (kStateChannels + s) * kGridCells, kGridCells,
                        static_cast<double>(enc.scalars[s]));
    }
    std::vector<double> s;
    if (xdim) {
        s.resize(kStateScalars);
        for (int i = 0; i < kStateScalars; ++i) s[i] = enc.scalars[i];
    }

    if (trace) {
        trace->layers.clear();
        trace->layers.resize(L);
    }

    std::vector<double> pre2d, pre1d, deflated;
    for (int l = 0; l < L; ++l) {
        const int cin = params.layer_cin(l), cout = params.layer_cout(l);
        const bool skip = params.layer_has_skip(l);
        const bool use_tanh = (l % 2 == 0);

        pre2d.assign(static_cast<std::size_t>(cout) * kGridCells, 0.0);
        conv3x5_forward(params.layer_tensor(l, 0), params.layer_tensor(l, 1), x.data(), cin,
                        cout, pre2d.data());
        if (xdim) {
            const int nin = params.layer_nin(l), nout = params.layer_nout(l);
            // Inflation: dense(nin -> cout), each output fills a channel.
            std::vector<double> fill(cout);
            dense_forward(params.layer_tensor(l, 4), nullptr, s.data(), nin, cout, fill.data(),
                          false);
            for (int c = 0; c < cout; ++c) {
                double* dst = pre2d.data() + c * kGridCells;
                for (int i = 0; i < kGridCells; ++i) dst[i] += fill[c];
            }
            deflated.resize(2 * static_cast<std::size_t>(cin));
            deflate_into(x.data(), cin, deflated.data());
            pre1d.assign(nout, 0.0);
            dense_forward(params.layer_tensor(l, 2), &params.layer_tensor(l, 3), s.data(), nin,
                          nout, pre1d.data(), false);
            dense_forward(params.layer_tensor(l, 5), nullptr, deflated.data(), 2 * cin, nout,
                          pre1d.data(), true);
            if (skip)
                for (int i = 0; i < nout; ++i) pre1d[i] += s[i];
        }
        if (skip)
            for (std::size_t i = 0; i < pre2d.size(); ++i) pre2d[i] += x[i];

        if (trace) {
            LayerTrace& lt = trace->layers[l];
            lt.x_in = x;
            lt.pre2d = pre2d;
            if (xdim) {
                lt.s_in = s;
                lt.pre1d = pre1d;
                lt.deflated = deflated;
            }
        }

        x.resize(pre2d.size());
        for (std::size_t i = 0; i < pre2d.size(); ++i)
            x[i] = activate(pre2d[i], use_tanh, cfg.leaky_slope);
        if (xdim) {
            s.resize(pre1d.size());
            for (std::size_t i = 0; i < pre1d.size(); ++i)
                s[i] = activate(pre1d[i], use_tanh, cfg.leaky_slope);
        }
    }

    // Heads.
    NetworkOutput out;
    const int C = cfg.hidden_channels();
    const int H = cfg.head_scalars();
    const int A = cfg.scalar_logits();

    std::vector<double> head_in;
    if (xdim) {
        head_in = s;
    } else {
        head_in.resize(2 * static_cast<std::size_t>(C));
        deflate_into(x.data(), C, head_in.data());
    }

    const Tensor& sw = params.head_tensor(0);
    const Tensor& sb = params.head_tensor(1);
    for (int k = 0; k < kActionChannels; ++k) {
        double* dst = out.spatial_logits.data() + k * kGridCells;
        const float* row = sw.v.data() + static_cast<long>(k) * C;
        for (int i = 0; i < kGridCells; ++i) {
            double acc = sb.v[k];
            for (int c = 0; c < C; ++c) acc += row[c] * x[c * kGridCells + i];
            dst[i] = acc;
        }
    }
    out.scalar_logits.assign(A, 0.0);
    dense_forward(params.head_tensor(2), &params.head_tensor(3), head_in.data(), H, A,
                  out.scalar_logits.data(), false);
    double z = 0.0;
    dense_forward(params.head_tensor(4), &params.head_tensor(5), head_in.data(), H, 1, &z,
                  false);
    out.value_pre = z;
    out.value = std::tanh(z);

    if (trace) {
        trace->x_final = std::move(x);
        trace->s_final = xdim ? std::move(s) : std::vector<double>{};
        trace->head_deflated = xdim ? std::vector<double>{} : std::move(head_in);
    }
    return out;
}

int PolicyDistribution::sample(Rng& rng) const {
    const double u = rng.uniform_double();
    double acc = 0.0;
    int last = -1;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (probs[i] <= 0.0) continue;
        acc += probs[i];
        last = static_cast<int>(i);
        if (u < acc) return last;
    }
    return last; // rounding residue falls on the last legal action
}

int PolicyDistribution::argmax() const {
    int best = -1;
    double best_p = -1.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (probs[i] > best_p) {
            best_p = probs[i];
            best = static_cast<int>(i);
        }
    }
    return best;
}

PolicyDistribution masked_policy(const NetworkOutput& out, const Mask& mask) {
    if (mask.size() != out.flat_size())
        throw ShapeMismatch("mask size does not match network output");
    PolicyDistribution dist;
    dist.probs.assign(mask.size(), 0.0);

    double max_logit = -1e300;
    int n_legal = 0;
    for (int i = 0; i < mask.size(); ++i) {
        if (!mask.test(i)) continue;
        ++n_legal;
        max_logit = std::max(max_logit, out.flat_logit(i));
    }
    if (n_legal == 0) throw EmptyMask("masked_policy with no legal actions");

    double sum = 0.0;
    for (int i = 0; i < mask.size(); ++i) {
        if (!mask.test(i)) continue;
        const double e = std::exp(out.flat_logit(i) - max_logit);
        dist.probs[i] = e;
        sum += e;
    }
    for (int i = 0; i < mask.size(); ++i) dist.probs[i] /= sum;
    return dist;
}

} // namespace catanrl
