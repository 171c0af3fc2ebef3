#pragma once

#include "catan/experience.hpp"
#include "catan/network.hpp"

namespace catanrl {

struct LossCoeffs {
    double alpha_pi = 1.0;
    double alpha_v = 1e3;
    double alpha_entropy = 1e-4;
    double alpha_activity = 1e-8;
    double alpha_weight = 1e-4;
    double gamma = 1.0;
};

// Gradient buffers parallel to NetworkParams::tensors, double precision.
struct NetworkGrads {
    std::vector<std::vector<double>> g;

    static NetworkGrads zeros_like(const NetworkParams& params);
    void clear();
};

// One-step TD targets: target = r + gamma * v(s') (zero bootstrap at
// terminal), advantage = target - v(s). No gradient flows through either.
struct TargetSet {
    std::vector<double> value;     // v(s)
    std::vector<double> target;    // r + gamma * v(s')
    std::vector<double> advantage; // target - v(s)
};

TargetSet compute_targets(const NetworkParams& params, const Batch& batch, double gamma);

struct LossDiagnostics {
    double total = 0.0;       // full weighted objective being descended
    double policy_loss = 0.0; // mean of -A * ln pi(a|s)
    double value_loss = 0.0;  // mean of (target - v)^2 / 2
    double entropy = 0.0;     // mean policy entropy (positive)
    double logit_l2 = 0.0;    // mean of sum_i p_i^2 over raw logits
    double weight_l2 = 0.0;   // sum of theta^2
    double avg_reward = 0.0;  // mean reward over terminal experiences
    double avg_advantage = 0.0;
    double mean_value = 0.0;
};

// Full combined objective and its exact analytic gradient:
//   alpha_pi * mean(-A ln pi(a|s)) + alpha_v * mean((target-v)^2/2)
// + alpha_H * mean(sum pi ln pi) + alpha_p * mean(sum_i p_i^2)
// + alpha_theta * sum theta^2,
// descended by apply_update. The advantage and target are constants; pass
// `frozen_targets` to hold them fixed across parameter perturbations
// (finite-difference checks).
LossDiagnostics loss_and_gradients(const NetworkParams& params, const Batch& batch,
                                   const LossCoeffs& coeffs, NetworkGrads& grads,
                                   const TargetSet* frozen_targets = nullptr);

// Objective value only (shares the exact computation path of
// loss_and_gradients minus the backward pass).
double loss_value(const NetworkParams& params, const Batch& batch, const LossCoeffs& coeffs,
                  const TargetSet* frozen_targets = nullptr);

// Plain gradient descent: theta <- theta - lr * g.
void apply_update(NetworkParams& params, const NetworkGrads& grads, double lr);

} // namespace catanrl
