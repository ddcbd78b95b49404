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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "qaum/circuit.hpp"
#include "qaum/dataset.hpp"
#include "qaum/errors.hpp"
#include "qaum/gradient.hpp"
#include "qaum/loss.hpp"
#include "qaum/parallel.hpp"
#include "qaum/rng.hpp"

namespace qaum {

enum class Ansatz { QAUM, QAOA };

inline const char* ansatz_name(Ansatz a) {
    return a == Ansatz::QAUM ? "qaum" : "qaoa";
}

/// Full experiment parameters for one training run.
struct TrainConfig {
    Ansatz ansatz = Ansatz::QAUM;
    int repetitions = 2;
    int wires = 9; // QAOA only; QAUM always runs on 1 qubit
    double learning_rate = 0.1;
    int epochs = 150;
    double clamp_epsilon = 1e-7;
    std::uint64_t weight_seed = 0;
    std::uint64_t sample_seed = 0;
    std::size_t sample_size = 100;
    std::vector<int> checkpoint_epochs = {1, 50, 100, 150};
    int threads = 1;

    void validate() const {
        if (repetitions < 1) {
            throw config_error("repetitions must be >= 1, got " +
                               std::to_string(repetitions));
        }
        if (!(learning_rate > 0.0)) {
            throw config_error("learning rate must be > 0");
        }
        if (epochs < 1) {
            throw config_error("epochs must be >= 1, got " +
                               std::to_string(epochs));
        }
        if (!(clamp_epsilon > 0.0) || !(clamp_epsilon < 0.5)) {
            throw config_error("clamp epsilon must lie in (0, 0.5)");
        }
        if (sample_size == 0 || sample_size % 2 != 0) {
            throw config_error("sample size must be positive and even");
        }
        if (ansatz == Ansatz::QAOA &&
            (wires < 2 || wires > StateVector::kMaxQubits)) {
            throw config_error("qaoa wire count must be in [2, " +
                               std::to_string(StateVector::kMaxQubits) + "]");
        }
    }
};

struct BlochPoint {
    int label;
    double x;
    double y;
    double z;
};

struct Checkpoint {
    int epoch;
    std::vector<double> weights;
    std::vector<BlochPoint> points;
};

struct TrainReport {
    std::vector<double> loss_curve; // one entry per epoch, pre-update loss
    double min_loss = 0.0;
    double train_accuracy = 0.0;
    double holdout_accuracy = 0.0;
    std::vector<double> final_weights;
    double wall_time_seconds = 0.0;
    std::vector<Checkpoint> checkpoints; // QAUM only
};

/// Per-run min-loss statistics from the two-way repetition protocol.
struct UncertaintyReport {
    double mean_min_loss = 0.0; // mean over the sampling runs
    double init_err = 0.0;      // sample std over 5 weight seeds, fixed sample
    double sampling_err = 0.0;  // sample std over 5 training samples
    std::vector<TrainReport> init_runs;
    std::vector<TrainReport> sampling_runs;
};

/// Adam first/second moment accumulators; `step` counts applied updates.
struct AdamState {
    std::vector<double> m;
    std::vector<double> v;
    long step = 0;
};

/// One Adam update (beta1 = 0.9, beta2 = 0.999, eps = 1e-8, bias-corrected
/// moments). Throws numeric_error if any gradient entry is non-finite.
inline void adam_step(std::span<double> weights, std::span<const double> grads,
                      AdamState& state, double learning_rate) {
    constexpr double beta1 = 0.9;
    constexpr double beta2 = 0.999;
    constexpr double eps = 1e-8;
    if (weights.size() != grads.size()) {
        throw structural_error("adam: weight/gradient length mismatch");
    }
    if (state.m.empty()) {
        state.m.assign(weights.size(), 0.0);
        state.v.assign(weights.size(), 0.0);
    }
    if (state.m.size() != weights.size()) {
        throw structural_error("adam: state length mismatch");
    }
    for (std::size_t k = 0; k < grads.size(); ++k) {
        if (!std::isfinite(grads[k])) {
            throw numeric_error("non-finite gradient at weight " +
                                std::to_string(k) + " on step " +
                                std::to_string(state.step + 1));
        }
    }
    ++state.step;
    const double bc1 = 1.0 - std::pow(beta1, static_cast<double>(state.step));
    const double bc2 = 1.0 - std::pow(beta2, static_cast<double>(state.step));
    for (std::size_t k = 0; k < weights.size(); ++k) {
        state.m[k] = beta1 * state.m[k] + (1.0 - beta1) * grads[k];
        state.v[k] = beta2 * state.v[k] + (1.0 - beta2) * grads[k] * grads[k];
        const double m_hat = state.m[k] / bc1;
        const double v_hat = state.v[k] / bc2;
        weights[k] -= learning_rate * m_hat / (std::sqrt(v_hat) + eps);
    }
}

/// Initial weights drawn uniformly from [0, 2*pi), one draw per weight in
/// index order.
inline std::vector<double> init_weights(int n_weights, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<double> w(static_cast<std::size_t>(n_weights));
    for (double& v : w) {
        v = rng.uniform(0.0, 2.0 * std::numbers::pi);
    }
    return w;
}

/// Bloch coordinates of the pre-measurement state for the first
/// min(size, max_points) rows of the dataset. Single-qubit circuits only.
inline std::vector<BlochPoint>
bloch_checkpoint(const ParamCircuit& circuit, std::span<const double> weights,
                 const LabeledDataset& dataset, std::size_t max_points) {
    if (circuit.n_qubits() != 1) {
        throw structural_error(
            "bloch trajectory needs a single-qubit ansatz, circuit has " +
            std::to_string(circuit.n_qubits()) + " qubits");
    }
    const std::size_t count = std::min(dataset.size(), max_points);
    std::vector<BlochPoint> points;
    points.reserve(count);
    for (std::size_t r = 0; r < count; ++r) {
        const StateVector state =
            final_state(circuit, weights,
                        std::span<const double>(dataset.features[r]));
        const auto [x, y, z] = bloch_coordinates(state);
        points.push_back({dataset.labels[r], x, y, z});
    }
    return points;
}

inline ParamCircuit build_ansatz(const TrainConfig& config, int n_features) {
    if (config.ansatz == Ansatz::QAUM) {
        return build_qaum(n_features, config.repetitions);
    }
    return build_qaoa_embedding(config.wires, n_features, config.repetitions);
}

namespace detail {

inline double accuracy(const ParamCircuit& circuit,
                       std::span<const double> weights,
                       const LabeledDataset& data, int readout_wire) {
    std::size_t correct = 0;
    for (std::size_t r = 0; r < data.size(); ++r) {
        const double p1 =
            evaluate(circuit, weights,
                     std::span<const double>(data.features[r]), readout_wire)
                .p1;
        const int predicted = p1 > 0.5 ? 1 : 0;
        correct += (predicted == data.labels[r]);
    }
    return static_cast<double>(correct) / static_cast<double>(data.size());
}

} // namespace detail

/// Full-batch Adam training loop. `scaled` is the complete scaled dataset;
/// the balanced training sample and disjoint holdout are drawn here from
/// config.sample_seed. loss_curve[e] is the loss at the weights entering
/// epoch e+1; checkpoints record the weights (and, on the single-qubit
/// ansatz, the Bloch image of the training sample) right after the update of
/// the listed epochs. Deterministic given (weight_seed, sample_seed).
inline TrainReport train(const TrainConfig& config,
                         const LabeledDataset& scaled) {
    const auto t0 = std::chrono::steady_clock::now();
    if (config.epochs < 1) {
        throw config_error("epochs must be >= 1");
    }
    if (!(config.learning_rate >= 0.0)) {
        throw config_error("learning rate must be non-negative");
    }
    auto [train_set, holdout] =
        balanced_sample(scaled, {config.sample_size, config.sample_seed});
    const ParamCircuit circuit = build_ansatz(config, scaled.n_features());
    const int readout_wire = 0;

    std::vector<double> weights =
        init_weights(circuit.n_weights(), config.weight_seed);
    AdamState adam;
    TrainReport report;
    report.loss_curve.reserve(static_cast<std::size_t>(config.epochs));
    const bool track_bloch = circuit.n_qubits() == 1;

    for (int epoch = 1; epoch <= config.epochs; ++epoch) {
        GradientVector grad;
        const double loss =
            batch_loss_and_grad(train_set, circuit, weights, readout_wire,
                                config.clamp_epsilon, &grad, config.threads);
        report.loss_curve.push_back(loss);
        adam_step(weights, grad.values, adam, config.learning_rate);
        if (std::find(config.checkpoint_epochs.begin(),
                      config.checkpoint_epochs.end(),
                      epoch) != config.checkpoint_epochs.end()) {
            Checkpoint cp;
            cp.epoch = epoch;
            cp.weights = weights;
            if (track_bloch) {
                cp.points = bloch_checkpoint(circuit, weights, train_set,
                                             train_set.size());
            }
            report.checkpoints.push_back(std::move(cp));
        }
    }

    report.min_loss = *std::min_element(report.loss_curve.begin(),
                                        report.loss_curve.end());
    report.final_weights = weights;
    report.train_accuracy =
        detail::accuracy(circuit, weights, train_set, readout_wire);
    report.holdout_accuracy =
        detail::accuracy(circuit, weights, holdout, readout_wire);
    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return report;
}

inline double sample_stddev(std::span<const double> xs) {
    const auto n = static_cast<double>(xs.size());
    if (xs.size() < 2) {
        return 0.0;
    }
    double mean = 0.0;
    for (const double x : xs) {
        mean += x;
    }
    mean /= n;
    double ss = 0.0;
    for (const double x : xs) {
        ss += (x - mean) * (x - mean);
    }
    return std::sqrt(ss / (n - 1.0));
}

/// Seed offsets used by the uncertainty protocol; override in tests to force
/// degenerate repetitions.
struct SeedPlan {
    std::vector<std::uint64_t> weight_seeds = {0, 1, 2, 3, 4};
    std::vector<std::uint64_t> sample_seeds = {0, 1, 2, 3, 4};
};

/// Two-way uncertainty protocol: initialization error is the sample standard
/// deviation of min_loss over 5 weight seeds on a fixed sample; sampling
/// error is the one over 5 training samples with a fixed weight seed. Seeds
/// are config.{weight,sample}_seed plus the plan offsets. The run shared by
/// both sets is computed once. mean_min_loss averages the sampling runs.
inline UncertaintyReport
uncertainty_protocol(const TrainConfig& config, const LabeledDataset& scaled,
                     int jobs = 1, const SeedPlan& plan = SeedPlan{}) {
    config.validate();
    if (plan.weight_seeds.empty() || plan.sample_seeds.empty()) {
        throw config_error("seed plan must not be empty");
    }

    struct RunKey {
        std::uint64_t weight_seed;
        std::uint64_t sample_seed;
    };
    std::vector<RunKey> runs;
    const auto push_unique = [&runs](RunKey key) {
        const bool duplicate =
            std::any_of(runs.begin(), runs.end(), [&](const RunKey& r) {
                return r.weight_seed == key.weight_seed &&
                       r.sample_seed == key.sample_seed;
            });
        if (!duplicate) {
            runs.push_back(key);
        }
    };
    for (const std::uint64_t off : plan.weight_seeds) {
        push_unique({config.weight_seed + off, config.sample_seed});
    }
    for (const std::uint64_t off : plan.sample_seeds) {
        push_unique({config.weight_seed, config.sample_seed + off});
    }

    std::vector<TrainReport> reports(runs.size());
    parallel_for(runs.size(), jobs, [&](std::size_t i) {
        TrainConfig run_config = config;
        run_config.weight_seed = runs[i].weight_seed;
        run_config.sample_seed = runs[i].sample_seed;
        reports[i] = train(run_config, scaled);
    });

    const auto find_report = [&](std::uint64_t ws,
                                 std::uint64_t ss) -> const TrainReport& {
        for (std::size_t i = 0; i < runs.size(); ++i) {
            if (runs[i].weight_seed == ws && runs[i].sample_seed == ss) {
                return reports[i];
            }
        }
        throw structural_error("uncertainty run lookup failed");
    };

    UncertaintyReport out;
    std::vector<double> init_losses;
    for (const std::uint64_t off : plan.weight_seeds) {
        const TrainReport& r =
            find_report(config.weight_seed + off, config.sample_seed);
        out.init_runs.push_back(r);
        init_losses.push_back(r.min_loss);
    }
    std::vector<double> sampling_losses;
    for (const std::uint64_t off : plan.sample_seeds) {
        const TrainReport& r =
            find_report(config.weight_seed, config.sample_seed + off);
        out.sampling_runs.push_back(r);
        sampling_losses.push_back(r.min_loss);
    }
    out.init_err = sample_stddev(init_losses);
    out.sampling_err = sample_stddev(sampling_losses);
    double mean = 0.0;
    for (const double l : sampling_losses) {
        mean += l;
    }
    out.mean_min_loss = mean / static_cast<double>(sampling_losses.size());
    return out;
}

} // namespace qaum
