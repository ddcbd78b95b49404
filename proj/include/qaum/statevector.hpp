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

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "qaum/errors.hpp"

namespace qaum {

using Complex = std::complex<double>;

enum class GateKind { H, RX, RY, RZ, ZZ };

inline const char* gate_kind_name(GateKind kind) {
    switch (kind) {
    case GateKind::H:
        return "H";
    case GateKind::RX:
        return "RX";
    case GateKind::RY:
        return "RY";
    case GateKind::RZ:
        return "RZ";
    case GateKind::ZZ:
        return "ZZ";
    }
    return "?";
}

inline bool gate_kind_has_angle(GateKind kind) { return kind != GateKind::H; }

inline bool gate_kind_is_two_qubit(GateKind kind) {
    return kind == GateKind::ZZ;
}

/// One gate instance. Rotations follow the half-angle convention
/// U(theta) = exp(-i * theta * G / 2) with G the Pauli generator; in
/// particular RZ(theta) = diag(exp(-i theta/2), exp(+i theta/2)) and
/// ZZ(theta) = exp(-i * theta * Z(x)Z / 2).
struct Gate {
    GateKind kind;
    int wire0 = 0;
    int wire1 = -1;     // second wire, ZZ only
    double angle = 0.0; // radians, unused for H
};

inline Gate make_h(int wire) { return Gate{GateKind::H, wire, -1, 0.0}; }
inline Gate make_rx(int wire, double angle) {
    return Gate{GateKind::RX, wire, -1, angle};
}
inline Gate make_ry(int wire, double angle) {
    return Gate{GateKind::RY, wire, -1, angle};
}
inline Gate make_rz(int wire, double angle) {
    return Gate{GateKind::RZ, wire, -1, angle};
}
inline Gate make_zz(int wire0, int wire1, double angle) {
    return Gate{GateKind::ZZ, wire0, wire1, angle};
}

namespace detail {

inline void check_wire(int wire, int n_qubits) {
    if (wire < 0 || wire >= n_qubits) {
        throw structural_error("wire " + std::to_string(wire) +
                               " out of range for " +
                               std::to_string(n_qubits) + " qubit(s)");
    }
}

// In-place kernels on the raw amplitude array. Basis index bit w holds the
// value of wire w. Complex products are written out component-wise so the
// compiled loops stay free of libgcc complex-multiply calls.

inline void apply_h_inplace(std::vector<Complex>& amps, int wire) {
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    const std::size_t step = std::size_t{1} << wire;
    const std::size_t dim = amps.size();
    for (std::size_t block = 0; block < dim; block += 2 * step) {
        for (std::size_t i = block; i < block + step; ++i) {
            const Complex a0 = amps[i];
            const Complex a1 = amps[i + step];
            amps[i] = {(a0.real() + a1.real()) * inv_sqrt2,
                       (a0.imag() + a1.imag()) * inv_sqrt2};
            amps[i + step] = {(a0.real() - a1.real()) * inv_sqrt2,
                              (a0.imag() - a1.imag()) * inv_sqrt2};
        }
    }
}

// RX(t) = [[cos, -i sin], [-i sin, cos]] at half angle.
inline void apply_rx_inplace(std::vector<Complex>& amps, int wire,
                             double angle) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    const std::size_t step = std::size_t{1} << wire;
    const std::size_t dim = amps.size();
    for (std::size_t block = 0; block < dim; block += 2 * step) {
        for (std::size_t i = block; i < block + step; ++i) {
            const Complex a0 = amps[i];
            const Complex a1 = amps[i + step];
            amps[i] = {c * a0.real() + s * a1.imag(),
                       c * a0.imag() - s * a1.real()};
            amps[i + step] = {c * a1.real() + s * a0.imag(),
                              c * a1.imag() - s * a0.real()};
        }
    }
}

// RY(t) = [[cos, -sin], [sin, cos]] at half angle (real matrix).
inline void apply_ry_inplace(std::vector<Complex>& amps, int wire,
                             double angle) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    const std::size_t step = std::size_t{1} << wire;
    const std::size_t dim = amps.size();
    for (std::size_t block = 0; block < dim; block += 2 * step) {
        for (std::size_t i = block; i < block + step; ++i) {
            const Complex a0 = amps[i];
            const Complex a1 = amps[i + step];
            amps[i] = {c * a0.real() - s * a1.real(),
                       c * a0.imag() - s * a1.imag()};
            amps[i + step] = {s * a0.real() + c * a1.real(),
                              s * a0.imag() + c * a1.imag()};
        }
    }
}

inline void apply_rz_inplace(std::vector<Complex>& amps, int wire,
                             double angle) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    // diag(e^{-it/2}, e^{+it/2})
    const std::size_t step = std::size_t{1} << wire;
    const std::size_t dim = amps.size();
    for (std::size_t block = 0; block < dim; block += 2 * step) {
        for (std::size_t i = block; i < block + step; ++i) {
            const Complex a0 = amps[i];
            const Complex a1 = amps[i + step];
            amps[i] = {c * a0.real() + s * a0.imag(),
                       c * a0.imag() - s * a0.real()};
            amps[i + step] = {c * a1.real() - s * a1.imag(),
                              c * a1.imag() + s * a1.real()};
        }
    }
}

// Diagonal phase e^{-i t z / 2} with z = (-1)^{b0} (-1)^{b1}.
inline void apply_zz_inplace(std::vector<Complex>& amps, int wire0, int wire1,
                             double angle) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    const std::size_t dim = amps.size();
    for (std::size_t i = 0; i < dim; ++i) {
        const bool b0 = (i >> wire0) & 1U;
        const bool b1 = (i >> wire1) & 1U;
        const double sz = (b0 == b1) ? s : -s; // e^{-i t/2} on even parity
        const Complex a = amps[i];
        amps[i] = {c * a.real() + sz * a.imag(), c * a.imag() - sz * a.real()};
    }
}

inline void apply_gate_inplace(std::vector<Complex>& amps, int n_qubits,
                               const Gate& gate) {
    check_wire(gate.wire0, n_qubits);
    switch (gate.kind) {
    case GateKind::H:
        apply_h_inplace(amps, gate.wire0);
        return;
    case GateKind::RX:
        apply_rx_inplace(amps, gate.wire0, gate.angle);
        return;
    case GateKind::RY:
        apply_ry_inplace(amps, gate.wire0, gate.angle);
        return;
    case GateKind::RZ:
        apply_rz_inplace(amps, gate.wire0, gate.angle);
        return;
    case GateKind::ZZ:
        check_wire(gate.wire1, n_qubits);
        if (gate.wire0 == gate.wire1) {
            throw structural_error("ZZ gate needs two distinct wires");
        }
        apply_zz_inplace(amps, gate.wire0, gate.wire1, gate.angle);
        return;
    }
}

} // namespace detail

/// Dense, normalized amplitude vector over the 2^n computational basis
/// states. Immutable after construction; gate application returns a new
/// value, so states can be shared freely across threads.
class StateVector {
  public:
    static constexpr int kMaxQubits = 12;

    /// |0...0> on n qubits.
    explicit StateVector(int n_qubits) : n_qubits_(n_qubits) {
        if (n_qubits < 1 || n_qubits > kMaxQubits) {
            throw config_error("qubit count must be in [1, " +
                               std::to_string(kMaxQubits) + "], got " +
                               std::to_string(n_qubits));
        }
        amps_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
        amps_[0] = Complex{1.0, 0.0};
    }

    StateVector(int n_qubits, std::vector<Complex> amplitudes)
        : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
        if (n_qubits < 1 || n_qubits > kMaxQubits) {
            throw config_error("qubit count must be in [1, " +
                               std::to_string(kMaxQubits) + "]");
        }
        if (amps_.size() != (std::size_t{1} << n_qubits)) {
            throw structural_error("amplitude vector has length " +
                                   std::to_string(amps_.size()) +
                                   ", expected 2^" + std::to_string(n_qubits));
        }
    }

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<Complex>& amplitudes() const { return amps_; }
    Complex amplitude(std::size_t basis) const { return amps_[basis]; }

    double norm_sq() const {
        double total = 0.0;
        for (const Complex& a : amps_) {
            total += a.real() * a.real() + a.imag() * a.imag();
        }
        return total;
    }

  private:
    friend StateVector apply_gate(const StateVector&, const Gate&);

    int n_qubits_;
    std::vector<Complex> amps_;
};

/// |0...0> with bounds checking; amplitude 1 on basis state 0.
inline StateVector init_zero(int n_qubits) { return StateVector(n_qubits); }

/// U |state>. Pure: the input is untouched.
inline StateVector apply_gate(const StateVector& state, const Gate& gate) {
    StateVector out = state;
    detail::apply_gate_inplace(out.amps_, out.n_qubits_, gate);
    return out;
}

/// Probability of reading |1> on the given wire.
inline double prob_one(const StateVector& state, int wire) {
    detail::check_wire(wire, state.n_qubits());
    const std::size_t mask = std::size_t{1} << wire;
    const auto& amps = state.amplitudes();
    double total = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & mask) {
            total += amps[i].real() * amps[i].real() +
                     amps[i].imag() * amps[i].imag();
        }
    }
    return total;
}

/// Complement of prob_one, exact by construction.
inline double prob_zero(const StateVector& state, int wire) {
    return 1.0 - prob_one(state, wire);
}

/// (<X>, <Y>, <Z>) of a single-qubit pure state.
inline std::array<double, 3> bloch_coordinates(const StateVector& state) {
    if (state.n_qubits() != 1) {
        throw structural_error(
            "Bloch coordinates are defined for 1 qubit, state has " +
            std::to_string(state.n_qubits()));
    }
    const Complex a = state.amplitude(0);
    const Complex b = state.amplitude(1);
    // conj(a) * b
    const double re = a.real() * b.real() + a.imag() * b.imag();
    const double im = a.real() * b.imag() - a.imag() * b.real();
    const double z = (a.real() * a.real() + a.imag() * a.imag()) -
                     (b.real() * b.real() + b.imag() * b.imag());
    return {2.0 * re, 2.0 * im, z};
}

} // namespace qaum
