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
//
// Test-only reference implementations. These deliberately avoid the bitwise
// kernels under test: gates are expanded to dense 2^n x 2^n matrices with
// Kronecker products and applied by plain matrix-vector products.

#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "qaum/circuit.hpp"
#include "qaum/statevector.hpp"

namespace oracle {

using Complex = std::complex<double>;
using CMatrix = std::vector<std::vector<Complex>>;
using CVector = std::vector<Complex>;

inline CMatrix identity(std::size_t dim) {
    CMatrix m(dim, CVector(dim, Complex{0.0, 0.0}));
    for (std::size_t i = 0; i < dim; ++i) {
        m[i][i] = Complex{1.0, 0.0};
    }
    return m;
}

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
    const std::size_t ar = a.size();
    const std::size_t br = b.size();
    CMatrix out(ar * br, CVector(ar * br, Complex{0.0, 0.0}));
    for (std::size_t i = 0; i < ar; ++i) {
        for (std::size_t j = 0; j < ar; ++j) {
            for (std::size_t k = 0; k < br; ++k) {
                for (std::size_t l = 0; l < br; ++l) {
                    out[i * br + k][j * br + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    return out;
}

inline CVector matvec(const CMatrix& m, const CVector& v) {
    CVector out(m.size(), Complex{0.0, 0.0});
    for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t c = 0; c < v.size(); ++c) {
            out[r] += m[r][c] * v[c];
        }
    }
    return out;
}

inline CMatrix single_qubit_matrix(qaum::GateKind kind, double angle) {
    const Complex i{0.0, 1.0};
    const double h = angle / 2.0;
    switch (kind) {
    case qaum::GateKind::H: {
        const double s = 1.0 / std::sqrt(2.0);
        return {{Complex{s, 0}, Complex{s, 0}},
                {Complex{s, 0}, Complex{-s, 0}}};
    }
    case qaum::GateKind::RX:
        return {{Complex{std::cos(h), 0}, -i * std::sin(h)},
                {-i * std::sin(h), Complex{std::cos(h), 0}}};
    case qaum::GateKind::RY:
        return {{Complex{std::cos(h), 0}, Complex{-std::sin(h), 0}},
                {Complex{std::sin(h), 0}, Complex{std::cos(h), 0}}};
    case qaum::GateKind::RZ:
        return {{std::exp(-i * h), Complex{0, 0}},
                {Complex{0, 0}, std::exp(i * h)}};
    default:
        throw std::logic_error("not a single-qubit gate");
    }
}

/// Dense matrix for one gate on an n-qubit register, with basis index bit w
/// holding wire w.
inline CMatrix embedded_gate_matrix(const qaum::Gate& gate, int n_qubits) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    if (gate.kind == qaum::GateKind::ZZ) {
        const Complex i{0.0, 1.0};
        CMatrix m(dim, CVector(dim, Complex{0.0, 0.0}));
        for (std::size_t b = 0; b < dim; ++b) {
            const int z = (((b >> gate.wire0) & 1U) == ((b >> gate.wire1) & 1U))
                              ? 1
                              : -1;
            m[b][b] = std::exp(-i * (gate.angle / 2.0) *
                               static_cast<double>(z));
        }
        return m;
    }
    CMatrix full = identity(std::size_t{1} << (n_qubits - 1 - gate.wire0));
    full = kron(full, single_qubit_matrix(gate.kind, gate.angle));
    return kron(full, identity(std::size_t{1} << gate.wire0));
}

/// Reference model output: multiplies the explicit gate matrices through the
/// initial basis vector and sums |amplitude|^2 over readout-bit-one states.
inline double evaluate_reference(const qaum::ParamCircuit& circuit,
                                 const std::vector<double>& weights,
                                 const std::vector<double>& features,
                                 int readout_wire) {
    const std::size_t dim = std::size_t{1} << circuit.n_qubits();
    CVector state(dim, Complex{0.0, 0.0});
    state[0] = Complex{1.0, 0.0};
    for (const qaum::CircuitOp& op : circuit.ops()) {
        double angle = op.angle;
        if (op.slot == qaum::SlotKind::Weight) {
            angle = weights[static_cast<std::size_t>(op.index)];
        } else if (op.slot == qaum::SlotKind::Feature) {
            angle = op.scale * features[static_cast<std::size_t>(op.index)];
        }
        const qaum::Gate gate{op.gate, op.wire0, op.wire1, angle};
        state = matvec(embedded_gate_matrix(gate, circuit.n_qubits()), state);
    }
    double p1 = 0.0;
    for (std::size_t b = 0; b < dim; ++b) {
        if ((b >> readout_wire) & 1U) {
            p1 += std::norm(state[b]);
        }
    }
    return p1;
}

/// Central finite difference of f around x, one coordinate at a time.
inline std::vector<double>
finite_difference(const std::function<double(const std::vector<double>&)>& f,
                  std::vector<double> x, double step = 1e-5) {
    std::vector<double> grad(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double original = x[k];
        x[k] = original + step;
        const double plus = f(x);
        x[k] = original - step;
        const double minus = f(x);
        x[k] = original;
        grad[k] = (plus - minus) / (2.0 * step);
    }
    return grad;
}

} // namespace oracle
