// Copyright 2026 the qaum authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <numbers>
#include <span>
#include <vector>

#include "qaum/circuit.hpp"
#include "qaum/dataset.hpp"
#include "qaum/errors.hpp"
#include "qaum/loss.hpp"
#include "qaum/parallel.hpp"

namespace qaum {

/// dp1/dw per trainable weight, in weight-index order.
struct GradientVector {
    std::vector<double> values;
};

namespace detail {

inline void check_shiftable_weights(const ParamCircuit& circuit) {
    for (const CircuitOp& op : circuit.ops()) {
        if (op.slot == SlotKind::Weight && !gate_kind_has_angle(op.gate)) {
            throw structural_error(
                std::string("weight slot holds ") + gate_kind_name(op.gate) +
                ", which has no parameter-shift rule");
        }
    }
}

} // namespace detail

/// Exact gradient of p1 via the two-term parameter-shift rule:
/// dp1/dw_k = [p1(w_k + pi/2) - p1(w_k - pi/2)] / 2. Every supported weight
/// gate (RX, RY, RZ, ZZ) is generated by an involution, so the rule is exact.
inline GradientVector grad_p1(const ParamCircuit& circuit,
                              std::span<const double> weights,
                              std::span<const double> features,
                              int readout_wire) {
    detail::check_binding(circuit, weights, features);
    detail::check_shiftable_weights(circuit);
    constexpr double shift = std::numbers::pi / 2.0;
    std::vector<double> shifted(weights.begin(), weights.end());
    GradientVector grad;
    grad.values.resize(weights.size());
    for (std::size_t k = 0; k < weights.size(); ++k) {
        const double original = shifted[k];
        shifted[k] = original + shift;
        const double plus = evaluate(circuit, shifted, features, readout_wire).p1;
        shifted[k] = original - shift;
        const double minus =
            evaluate(circuit, shifted, features, readout_wire).p1;
        shifted[k] = original;
        grad.values[k] = 0.5 * (plus - minus);
    }
    return grad;
}

/// Mean cross-entropy over the batch and its gradient with respect to the
/// weights, sharing the unshifted evaluations between the two. Per-sample
/// work may run on several threads; the reduction is always performed in
/// sample order, so results are bit-identical for any thread count.
inline double batch_loss_and_grad(const LabeledDataset& batch,
                                  const ParamCircuit& circuit,
                                  std::span<const double> weights,
                                  int readout_wire, double clamp_epsilon,
                                  GradientVector* grad_out, int threads = 1) {
    if (batch.size() == 0) {
        throw usage_error("batch is empty");
    }
    detail::check_binding(circuit, weights,
                          std::span<const double>(batch.features[0]));
    if (grad_out != nullptr) {
        detail::check_shiftable_weights(circuit);
    }
    const std::size_t n_samples = batch.size();
    const std::size_t n_weights = weights.size();

    std::vector<double> losses(n_samples);
    std::vector<std::vector<double>> sample_grads;
    if (grad_out != nullptr) {
        sample_grads.assign(n_samples, std::vector<double>(n_weights));
    }

    parallel_for(n_samples, threads, [&](std::size_t s) {
        const std::span<const double> x(batch.features[s]);
        const int label = batch.labels[s];
        const double p1 = evaluate(circuit, weights, x, readout_wire).p1;
        losses[s] = cross_entropy(p1, label, clamp_epsilon);
        if (grad_out == nullptr) {
            return;
        }
        const double dloss_dp1 = cross_entropy_dp1(p1, label, clamp_epsilon);
        auto& g = sample_grads[s];
        if (dloss_dp1 == 0.0) {
            // clamp is flat here; skip the shifted evaluations
            return;
        }
        constexpr double shift = std::numbers::pi / 2.0;
        std::vector<double> shifted(weights.begin(), weights.end());
        for (std::size_t k = 0; k < n_weights; ++k) {
            const double original = shifted[k];
            shifted[k] = original + shift;
            const double plus =
                evaluate(circuit, shifted, x, readout_wire).p1;
            shifted[k] = original - shift;
            const double minus =
                evaluate(circuit, shifted, x, readout_wire).p1;
            shifted[k] = original;
            g[k] = dloss_dp1 * 0.5 * (plus - minus);
        }
    });

    double loss = 0.0;
    for (std::size_t s = 0; s < n_samples; ++s) {
        loss += losses[s];
    }
    loss /= static_cast<double>(n_samples);

    if (grad_out != nullptr) {
        grad_out->values.assign(n_weights, 0.0);
        for (std::size_t s = 0; s < n_samples; ++s) {
            for (std::size_t k = 0; k < n_weights; ++k) {
                grad_out->values[k] += sample_grads[s][k];
            }
        }
        for (double& v : grad_out->values) {
            v /= static_cast<double>(n_samples);
        }
    }
    return loss;
}

/// Gradient of the mean clamped cross-entropy over the batch.
inline GradientVector grad_loss(const LabeledDataset& batch,
                                const ParamCircuit& circuit,
                                std::span<const double> weights,
                                int readout_wire,
                                double clamp_epsilon = 1e-7,
                                int threads = 1) {
    GradientVector grad;
    batch_loss_and_grad(batch, circuit, weights, readout_wire, clamp_epsilon,
                        &grad, threads);
    return grad;
}

} // namespace qaum
