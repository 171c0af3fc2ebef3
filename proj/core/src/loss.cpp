#include "catan/loss.hpp"

#include <algorithm>
#include <cmath>

#include "catan/errors.hpp"

namespace catanrl {

namespace {

constexpr int kKernelRows = 3;
constexpr int kKernelCols = 5;
constexpr int kKernelSize = kKernelRows * kKernelCols;

void conv3x5_backward(const Tensor& w, const double* x_in, const double* d_out, int cin,
                      int cout, double* d_in, std::vector<double>& gw, std::vector<double>& gb) {
    for (int o = 0; o < cout; ++o) {
        const double* dU = d_out + o * kGridCells;
        double acc_b = 0.0;
        for (int i = 0; i < kGridCells; ++i) acc_b += dU[i];
        gb[o] += acc_b;
        for (int c = 0; c < cin; ++c) {
            const double* src = x_in + c * kGridCells;
            double* dst = d_in ? d_in + c * kGridCells : nullptr;
            const long base = (static_cast<long>(o) * cin + c) * kKernelSize;
            const float* k = w.v.data() + base;
            double* gk = gw.data() + base;
            for (int r = 0; r < kGridRows; ++r) {
                for (int col = 0; col < kGridCols; ++col) {
                    const double g = dU[r * kGridCols + col];
                    if (g == 0.0) continue;
                    for (int kr = 0; kr < kKernelRows; ++kr) {
                        const int rr = r + kr - 1;
                        if (rr < 0 || rr >= kGridRows) continue;
                        for (int kc = 0; kc < kKernelCols; ++kc) {
                            const int cc = col + kc - 2;
                            if (cc < 0 || cc >= kGridCols) continue;
                            const int idx = rr * kGridCols + cc;
                            gk[kr * kKernelCols + kc] += g * src[idx];
                            if (dst) dst[idx] += k[kr * kKernelCols + kc] * g;
                        }
                    }
                }
            }
        }
    }
}

void dense_backward(const Tensor& w, const double* x, const double* dy, int nin, int nout,
                    double* dx, std::vector<double>& gw, std::vector<double>* gb) {
    for (int o = 0; o < nout; ++o) {
        const double g = dy[o];
        if (gb) (*gb)[o] += g;
        if (g == 0.0) continue;
        const float* row = w.v.data() + static_cast<long>(o) * nin;
        double* grow = gw.data() + static_cast<long>(o) * nin;
        for (int i = 0; i < nin; ++i) {
            grow[i] += g * x[i];
            if (dx) dx[i] += row[i] * g;
        }
    }
}

// d/dx of (mean_c, var_c): d mean/dx_j = 1/M, d var/dx_j = 2(x_j - mean)/M.
void deflate_backward(const double* x, const double* deflated, const double* dd, int cin,
                      double* dx) {
    constexpr double inv_m = 1.0 / kGridCells;
    for (int c = 0; c < cin; ++c) {
        const double d_mean = dd[2 * c];
        const double d_var = dd[2 * c + 1];
        if (d_mean == 0.0 && d_var == 0.0) continue;
        const double mean = deflated[2 * c];
        const double* src = x + c * kGridCells;
        double* dst = dx + c * kGridCells;
        for (int i = 0; i < kGridCells; ++i)
            dst[i] += d_mean * inv_m + d_var * 2.0 * inv_m * (src[i] - mean);
    }
}

inline double act_derivative(double pre, double y, bool use_tanh, double slope) {
    return use_tanh ? (1.0 - y * y) : (pre > 0.0 ? 1.0 : slope);
}

struct LossAccum {
    double policy = 0.0, value = 0.0, neg_entropy = 0.0, logit_l2 = 0.0;
    double reward_sum = 0.0, advantage_sum = 0.0, value_sum = 0.0;
    int terminal_count = 0;
};

} // namespace

NetworkGrads NetworkGrads::zeros_like(const NetworkParams& params) {
    NetworkGrads g;
    g.g.resize(params.tensors.size());
    for (std::size_t i = 0; i < params.tensors.size(); ++i)
        g.g[i].assign(params.tensors[i].v.size(), 0.0);
    return g;
}

void NetworkGrads::clear() {
    for (auto& t : g) std::fill(t.begin(), t.end(), 0.0);
}

TargetSet compute_targets(const NetworkParams& params, const Batch& batch, double gamma) {
    TargetSet ts;
    const int B = batch.size();
    ts.value.resize(B);
    ts.target.resize(B);
    ts.advantage.resize(B);
    for (int e = 0; e < B; ++e) {
        const Experience& exp = batch.items[e];
        ts.value[e] = forward(params, exp.state).value;
        ts.target[e] = exp.terminal
                           ? exp.reward
                           : exp.reward + gamma * forward(params, exp.successor).value;
        ts.advantage[e] = ts.target[e] - ts.value[e];
    }
    return ts;
}

namespace {

LossDiagnostics run_loss(const NetworkParams& params, const Batch& batch,
                         const LossCoeffs& coeffs, NetworkGrads* grads,
                         const TargetSet* frozen) {
    if (batch.size() == 0) throw ShapeMismatch("empty batch");
    const NetworkConfig& cfg = params.config;
    const bool xdim = cfg.is_xdim();
    const int B = batch.size();
    const int L = cfg.layers;
    const int C = cfg.hidden_channels();
    const int H = cfg.head_scalars();
    const int A = cfg.scalar_logits();
    const double inv_b = 1.0 / B;

    LossAccum acc;
    ForwardTrace trace;

    for (int e = 0; e < B; ++e) {
        const Experience& exp = batch.items[e];
        if (exp.mask.size() != kSpatialActions + A)
            throw ShapeMismatch("experience mask size does not match network config");
        const NetworkOutput out = forward(params, exp.state, grads ? &trace : nullptr);

        const double v = out.value;
        double target;
        double advantage;
        if (frozen) {
            target = frozen->target[e];
            advantage = frozen->advantage[e];
        } else {
            target = exp.terminal
                         ? exp.reward
                         : exp.reward + coeffs.gamma * forward(params, exp.successor).value;
            advantage = target - v;
        }
        const double delta = target - v;

        const PolicyDistribution dist = masked_policy(out, exp.mask);
        const double log_pi = std::log(std::max(dist.probs[exp.action_index], 1e-300));
        double neg_entropy = 0.0;
        for (int i = 0; i < exp.mask.size(); ++i) {
            if (dist.probs[i] > 0.0) neg_entropy += dist.probs[i] * std::log(dist.probs[i]);
        }
        double logit_sq = 0.0;
        for (int i = 0; i < out.flat_size(); ++i) {
            const double p = out.flat_logit(i);
            logit_sq += p * p;
        }

        acc.policy += -advantage * log_pi;
        acc.value += 0.5 * delta * delta;
        acc.neg_entropy += neg_entropy;
        acc.logit_l2 += logit_sq;
        acc.advantage_sum += advantage;
        acc.value_sum += v;
        if (exp.terminal) {
            acc.reward_sum += exp.reward;
            acc.terminal_count += 1;
        }
        if (!grads) continue;

        // d(loss)/d(flat logit), already scaled by 1/B.
        std::vector<double> dflat(out.flat_size(), 0.0);
        for (int i = 0; i < out.flat_size(); ++i) {
            const double pi = dist.probs[i];
            double d = coeffs.alpha_activity * 2.0 * out.flat_logit(i);
            if (exp.mask.test(i)) {
                d += -coeffs.alpha_pi * advantage * ((i == exp.action_index ? 1.0 : 0.0) - pi);
                if (pi > 0.0)
                    d += coeffs.alpha_entropy * pi * (std::log(pi) - neg_entropy);
            }
            dflat[i] = d * inv_b;
        }
        const double dz_v =
            coeffs.alpha_v * (-delta) * (1.0 - v * v) * inv_b; // value head pre-activation

        // Head backward.
        std::vector<double> d_xfin(static_cast<std::size_t>(C) * kGridCells, 0.0);
        std::vector<double> d_head(H, 0.0);

        const Tensor& sw = params.head_tensor(0);
        auto& g_sw = grads->g[params.head_base() + 0];
        auto& g_sb = grads->g[params.head_base() + 1];
        for (int k = 0; k < kActionChannels; ++k) {
            const double* dP = dflat.data() + k * kGridCells;
            const float* row = sw.v.data() + static_cast<long>(k) * C;
            double* grow = g_sw.data() + static_cast<long>(k) * C;
            double accb = 0.0;
            for (int i = 0; i < kGridCells; ++i) {
                const double g = dP[i];
                accb += g;
                if (g == 0.0) continue;
                for (int c = 0; c < C; ++c) {
                    grow[c] += g * trace.x_final[c * kGridCells + i];
                    d_xfin[c * kGridCells + i] += row[c] * g;
                }
            }
            g_sb[k] += accb;
        }

        const double* head_in = xdim ? trace.s_final.data() : trace.head_deflated.data();
        dense_backward(params.head_tensor(2), head_in, dflat.data() + kSpatialActions, H, A,
                       d_head.data(), grads->g[params.head_base() + 2],
                       &grads->g[params.head_base() + 3]);
        dense_backward(params.head_tensor(4), head_in, &dz_v, H, 1, d_head.data(),
                       grads->g[params.head_base() + 4], &grads->g[params.head_base() + 5]);

        std::vector<double> d_x = std::move(d_xfin);
        std::vector<double> d_s;
        if (xdim) {
            d_s = std::move(d_head);
        } else {
            deflate_backward(trace.x_final.data(), trace.head_deflated.data(), d_head.data(),
                             C, d_x.data());
        }

        // Hidden layers, last to first.
        for (int l = L - 1; l >= 0; --l) {
            const LayerTrace& lt = trace.layers[l];
            const int cin = params.layer_cin(l), cout = params.layer_cout(l);
            const bool use_tanh = (l % 2 == 0);
            const bool skip = params.layer_has_skip(l);
            const double* y2d =
                (l == L - 1) ? trace.x_final.data() : trace.layers[l + 1].x_in.data();

            std::vector<double> dU(static_cast<std::size_t>(cout) * kGridCells);
            for (std::size_t i = 0; i < dU.size(); ++i)
                dU[i] = d_x[i] * act_derivative(lt.pre2d[i], y2d[i], use_tanh, cfg.leaky_slope);

            std::vector<double> d_xin(static_cast<std::size_t>(cin) * kGridCells, 0.0);
            if (skip)
                for (std::size_t i = 0; i < dU.size(); ++i) d_xin[i] += dU[i];

            const int t0 = l * params.tensors_per_layer();
            conv3x5_backward(params.layer_tensor(l, 0), lt.x_in.data(), dU.data(), cin, cout,
                             d_xin.data(), grads->g[t0 + 0], grads->g[t0 + 1]);

            if (xdim) {
                const int nin = params.layer_nin(l), nout = params.layer_nout(l);
                const double* y1d =
                    (l == L - 1) ? trace.s_final.data() : trace.layers[l + 1].s_in.data();
                std::vector<double> dt(nout);
                for (int i = 0; i < nout; ++i)
                    dt[i] =
                        d_s[i] * act_derivative(lt.pre1d[i], y1d[i], use_tanh, cfg.leaky_slope);

                std::vector<double> d_sin(nin, 0.0);
                if (skip)
                    for (int i = 0; i < nout; ++i) d_sin[i] += dt[i];

                // Inflation: a channel fill spreads one scalar over the grid,
                // so its gradient is the channel sum of dU.
                std::vector<double> dy(cout);
                for (int c = 0; c < cout; ++c) {
                    double s = 0.0;
                    const double* src = dU.data() + c * kGridCells;
                    for (int i = 0; i < kGridCells; ++i) s += src[i];
                    dy[c] = s;
                }
                dense_backward(params.layer_tensor(l, 4), lt.s_in.data(), dy.data(), nin, cout,
                               d_sin.data(), grads->g[t0 + 4], nullptr);

                dense_backward(params.layer_tensor(l, 2), lt.s_in.data(), dt.data(), nin, nout,
                               d_sin.data(), grads->g[t0 + 2], &grads->g[t0 + 3]);

                std::vector<double> dd(2 * cin, 0.0);
                dense_backward(params.layer_tensor(l, 5), lt.deflated.data(), dt.data(),
                               2 * cin, nout, dd.data(), grads->g[t0 + 5], nullptr);
                deflate_backward(lt.x_in.data(), lt.deflated.data(), dd.data(), cin,
                                 d_xin.data());

                d_s = std::move(d_sin);
            }
            d_x = std::move(d_xin);
        }
    }

    LossDiagnostics diag;
    diag.policy_loss = acc.policy * inv_b;
    diag.value_loss = acc.value * inv_b;
    diag.entropy = -acc.neg_entropy * inv_b;
    diag.logit_l2 = acc.logit_l2 * inv_b;
    double wsq = 0.0;
    for (const Tensor& t : params.tensors)
        for (float w : t.v) wsq += static_cast<double>(w) * w;
    diag.weight_l2 = wsq;
    diag.avg_reward = acc.terminal_count ? acc.reward_sum / acc.terminal_count : 0.0;
    diag.avg_advantage = acc.advantage_sum * inv_b;
    diag.mean_value = acc.value_sum * inv_b;
    diag.total = coeffs.alpha_pi * diag.policy_loss + coeffs.alpha_v * diag.value_loss +
                 coeffs.alpha_entropy * (acc.neg_entropy * inv_b) +
                 coeffs.alpha_activity * diag.logit_l2 + coeffs.alpha_weight * diag.weight_l2;

    if (grads) {
        for (std::size_t t = 0; t < params.tensors.size(); ++t) {
            const auto& v = params.tensors[t].v;
            auto& g = grads->g[t];
            for (std::size_t i = 0; i < v.size(); ++i)
                g[i] += coeffs.alpha_weight * 2.0 * static_cast<double>(v[i]);
        }
    }
    return diag;
}

} // namespace

LossDiagnostics loss_and_gradients(const NetworkParams& params, const Batch& batch,
                                   const LossCoeffs& coeffs, NetworkGrads& grads,
                                   const TargetSet* frozen_targets) {
    if (grads.g.size() != params.tensors.size()) grads = NetworkGrads::zeros_like(params);
    else grads.clear();
    return run_loss(params, batch, coeffs, &grads, frozen_targets);
}

double loss_value(const NetworkParams& params, const Batch& batch, const LossCoeffs& coeffs,
                  const TargetSet* frozen_targets) {
    return run_loss(params, batch, coeffs, nullptr, frozen_targets).total;
}

void apply_update(NetworkParams& params, const NetworkGrads& grads, double lr) {
    if (grads.g.size() != params.tensors.size())
        throw ShapeMismatch("gradient/parameter tensor count mismatch");
    for (std::size_t t = 0; t < params.tensors.size(); ++t) {
        auto& v = params.tensors[t].v;
        const auto& g = grads.g[t];
        if (g.size() != v.size()) throw ShapeMismatch("gradient shape mismatch: " +
                                                      params.tensors[t].name);
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = static_cast<float>(static_cast<double>(v[i]) - lr * g[i]);
    }
}

} // namespace catanrl
