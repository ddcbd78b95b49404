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

#include <span>
#include <string>
#include <vector>

#include "qaum/errors.hpp"
#include "qaum/statevector.hpp"

namespace qaum {

enum class SlotKind { Fixed, Weight, Feature };

/// One slot of a parametrized circuit: a gate whose angle is either fixed,
/// bound to trainable weight `index`, or bound to `scale * features[index]`.
struct CircuitOp {
    SlotKind slot;
    GateKind gate;
    int wire0 = 0;
    int wire1 = -1;
    double angle = 0.0; // Fixed slots only
    int index = -1;     // Weight / Feature slots
    double scale = 1.0; // Feature slots only

    bool operator==(const CircuitOp&) const = default;
};

struct ModelOutput {
    double p1; // probability of |1> on the readout wire
};

/// Ordered gate list with weight and feature parameter slots. Validated on
/// construction: each weight index appears exactly once, each feature index
/// at least once, wires in range. Immutable afterwards.
class ParamCircuit {
  public:
    ParamCircuit(int n_qubits, int n_weights, int n_features,
                 std::vector<CircuitOp> ops)
        : n_qubits_(n_qubits), n_weights_(n_weights), n_features_(n_features),
          ops_(std::move(ops)) {
        validate();
    }

    int n_qubits() const { return n_qubits_; }
    int n_weights() const { return n_weights_; }
    int n_features() const { return n_features_; }
    const std::vector<CircuitOp>& ops() const { return ops_; }

    bool operator==(const ParamCircuit&) const = default;

  private:
    void validate() const {
        if (n_qubits_ < 1 || n_qubits_ > StateVector::kMaxQubits) {
            throw config_error("circuit qubit count out of range: " +
                               std::to_string(n_qubits_));
        }
        if (n_weights_ < 0 || n_features_ < 0) {
            throw config_error("negative parameter counts");
        }
        std::vector<int> weight_seen(static_cast<std::size_t>(n_weights_), 0);
        std::vector<int> feature_seen(static_cast<std::size_t>(n_features_),
                                      0);
        for (std::size_t k = 0; k < ops_.size(); ++k) {
            const CircuitOp& op = ops_[k];
            detail::check_wire(op.wire0, n_qubits_);
            if (gate_kind_is_two_qubit(op.gate)) {
                detail::check_wire(op.wire1, n_qubits_);
                if (op.wire0 == op.wire1) {
                    throw structural_error("op " + std::to_string(k) +
                                           ": ZZ wires must differ");
                }
            }
            if (op.slot != SlotKind::Fixed && !gate_kind_has_angle(op.gate)) {
                throw structural_error(
                    "op " + std::to_string(k) + ": " +
                    gate_kind_name(op.gate) +
                    " has no angle and cannot hold a parameter slot");
            }
            if (op.slot == SlotKind::Weight) {
                if (op.index < 0 || op.index >= n_weights_) {
                    throw structural_error("op " + std::to_string(k) +
                                           ": weight index out of range");
                }
                ++weight_seen[static_cast<std::size_t>(op.index)];
            } else if (op.slot == SlotKind::Feature) {
                if (op.index < 0 || op.index >= n_features_) {
                    throw structural_error("op " + std::to_string(k) +
                                           ": feature index out of range");
                }
                ++feature_seen[static_cast<std::size_t>(op.index)];
            }
        }
        for (int w = 0; w < n_weights_; ++w) {
            if (weight_seen[static_cast<std::size_t>(w)] != 1) {
                throw structural_error(
                    "weight index " + std::to_string(w) + " appears " +
                    std::to_string(weight_seen[static_cast<std::size_t>(w)]) +
                    " times, expected exactly once");
            }
        }
        for (int f = 0; f < n_features_; ++f) {
            if (feature_seen[static_cast<std::size_t>(f)] == 0) {
                throw structural_error("feature index " + std::to_string(f) +
                                       " never appears");
            }
        }
    }

    int n_qubits_;
    int n_weights_;
    int n_features_;
    std::vector<CircuitOp> ops_;
};

/// Single-qubit multi-feature re-uploading ansatz: a Hadamard, then trainable
/// layers (RZ, RX, RY with independent weights) interlaced with one RZ
/// encoding gate per feature, repeated `repetitions` times. Consecutive
/// trainable layers at repetition boundaries are merged, so the layer count
/// is n_features * repetitions + 1 and n_weights = 3 * (N * L + 1).
inline ParamCircuit build_qaum(int n_features, int repetitions) {
    if (n_features < 1) {
        throw config_error("qaum ansatz needs at least 1 feature, got " +
                           std::to_string(n_features));
    }
    if (repetitions < 1) {
        throw config_error("repetitions must be >= 1, got " +
                           std::to_string(repetitions));
    }
    std::vector<CircuitOp> ops;
    ops.reserve(1 + static_cast<std::size_t>(n_features) * repetitions * 4 +
                3);
    ops.push_back({SlotKind::Fixed, GateKind::H, 0, -1, 0.0, -1, 1.0});
    int w = 0;
    const auto push_layer = [&ops, &w] {
        ops.push_back({SlotKind::Weight, GateKind::RZ, 0, -1, 0.0, w++, 1.0});
        ops.push_back({SlotKind::Weight, GateKind::RX, 0, -1, 0.0, w++, 1.0});
        ops.push_back({SlotKind::Weight, GateKind::RY, 0, -1, 0.0, w++, 1.0});
    };
    push_layer();
    for (int rep = 0; rep < repetitions; ++rep) {
        for (int f = 0; f < n_features; ++f) {
            ops.push_back(
                {SlotKind::Feature, GateKind::RZ, 0, -1, 0.0, f, 1.0});
            push_layer();
        }
    }
    return ParamCircuit(1, w, n_features, std::move(ops));
}

/// Layered multi-qubit feature map: per repetition an RX feature encoding on
/// the first n_features wires, ZZ entanglers with trainable angles on the
/// wire ring, and trainable RY local fields on every wire; the encoding
/// layer is applied once more after the last repetition.
/// n_weights = 2 * n_wires * repetitions.
inline ParamCircuit build_qaoa_embedding(int n_wires, int n_features,
                                         int repetitions) {
    if (n_wires < 2) {
        throw config_error("qaoa embedding needs at least 2 wires, got " +
                           std::to_string(n_wires));
    }
    if (n_features < 1 || n_features > n_wires) {
        throw config_error("feature count " + std::to_string(n_features) +
                           " must be in [1, n_wires=" +
                           std::to_string(n_wires) + "]");
    }
    if (repetitions < 1) {
        throw config_error("repetitions must be >= 1, got " +
                           std::to_string(repetitions));
    }
    std::vector<CircuitOp> ops;
    int w = 0;
    const auto push_encoding = [&ops, n_features] {
        for (int f = 0; f < n_features; ++f) {
            ops.push_back(
                {SlotKind::Feature, GateKind::RX, f, -1, 0.0, f, 1.0});
        }
    };
    for (int rep = 0; rep < repetitions; ++rep) {
        push_encoding();
        for (int q = 0; q < n_wires; ++q) {
            ops.push_back({SlotKind::Weight, GateKind::ZZ, q,
                           (q + 1) % n_wires, 0.0, w++, 1.0});
        }
        for (int q = 0; q < n_wires; ++q) {
            ops.push_back(
                {SlotKind::Weight, GateKind::RY, q, -1, 0.0, w++, 1.0});
        }
    }
    push_encoding();
    return ParamCircuit(n_wires, w, n_features, std::move(ops));
}

namespace detail {

inline void check_binding(const ParamCircuit& circuit,
                          std::span<const double> weights,
                          std::span<const double> features) {
    if (weights.size() != static_cast<std::size_t>(circuit.n_weights())) {
        throw structural_error(
            "weight array length " + std::to_string(weights.size()) +
            " does not match circuit n_weights " +
            std::to_string(circuit.n_weights()));
    }
    if (features.size() != static_cast<std::size_t>(circuit.n_features())) {
        throw structural_error(
            "feature array length " + std::to_string(features.size()) +
            " does not match circuit n_features " +
            std::to_string(circuit.n_features()));
    }
}

inline void run_bound_circuit(const ParamCircuit& circuit,
                              std::span<const double> weights,
                              std::span<const double> features,
                              std::vector<Complex>& amps) {
    amps.assign(std::size_t{1} << circuit.n_qubits(), Complex{0.0, 0.0});
    amps[0] = Complex{1.0, 0.0};
    for (const CircuitOp& op : circuit.ops()) {
        double angle = op.angle;
        if (op.slot == SlotKind::Weight) {
            angle = weights[static_cast<std::size_t>(op.index)];
        } else if (op.slot == SlotKind::Feature) {
            angle = op.scale * features[static_cast<std::size_t>(op.index)];
        }
        const Gate gate{op.gate, op.wire0, op.wire1, angle};
        apply_gate_inplace(amps, circuit.n_qubits(), gate);
    }
}

} // namespace detail

/// Pre-measurement state of the bound circuit on |0...0>.
inline StateVector final_state(const ParamCircuit& circuit,
                               std::span<const double> weights,
                               std::span<const double> features) {
    detail::check_binding(circuit, weights, features);
    std::vector<Complex> amps;
    detail::run_bound_circuit(circuit, weights, features, amps);
    return StateVector(circuit.n_qubits(), std::move(amps));
}

/// Binds parameters, runs the circuit on |0...0>, and reads out the
/// probability of |1> on `readout_wire`. Pure and deterministic.
inline ModelOutput evaluate(const ParamCircuit& circuit,
                            std::span<const double> weights,
                            std::span<const double> features,
                            int readout_wire) {
    detail::check_binding(circuit, weights, features);
    detail::check_wire(readout_wire, circuit.n_qubits());
    thread_local std::vector<Complex> amps;
    detail::run_bound_circuit(circuit, weights, features, amps);
    const std::size_t mask = std::size_t{1} << readout_wire;
    double p1 = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & mask) {
            p1 += amps[i].real() * amps[i].real() +
                  amps[i].imag() * amps[i].imag();
        }
    }
    return ModelOutput{p1};
}

/// Rewires feature slots: slot index i becomes permutation[i]. The weight
/// structure is untouched.
inline ParamCircuit permute_features(const ParamCircuit& circuit,
                                     std::span<const int> permutation) {
    const auto n = static_cast<std::size_t>(circuit.n_features());
    if (permutation.size() != n) {
        throw structural_error("permutation length " +
                               std::to_string(permutation.size()) +
                               " != n_features " + std::to_string(n));
    }
    std::vector<int> seen(n, 0);
    for (const int p : permutation) {
        if (p < 0 || static_cast<std::size_t>(p) >= n) {
            throw structural_error("permutation value out of range: " +
                                   std::to_string(p));
        }
        ++seen[static_cast<std::size_t>(p)];
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i] != 1) {
            throw structural_error("permutation is not a bijection: value " +
                                   std::to_string(i) + " appears " +
                                   std::to_string(seen[i]) + " times");
        }
    }
    std::vector<CircuitOp> ops = circuit.ops();
    for (CircuitOp& op : ops) {
        if (op.slot == SlotKind::Feature) {
            op.index = permutation[static_cast<std::size_t>(op.index)];
        }
    }
    return ParamCircuit(circuit.n_qubits(), circuit.n_weights(),
                        circuit.n_features(), std::move(ops));
}

} // namespace qaum
