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

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "qaum/circuit.hpp"
#include "qaum/errors.hpp"

namespace qaum {

/// Multi-dimensional Fourier coefficients of the model output: a map from
/// integer frequency vectors gamma (one entry per feature, each in
/// [-max_degree, max_degree]) to complex values. The readout probability is
/// real, so c(-gamma) equals conj(c(gamma)) up to extraction noise.
struct FourierSpectrum {
    int n_features = 0;
    int max_degree = 0; // probe degree used at extraction
    std::map<std::vector<int>, std::complex<double>> coefficients;
};

struct TruncationReport {
    double max_leakage = 0.0;
    bool pass = false;
};

namespace detail {

constexpr std::size_t kGridGuard = std::size_t{1} << 20;

inline std::size_t checked_grid_size(int n_axes, int probe) {
    if (probe < 1) {
        throw config_error("probe degree must be >= 1, got " +
                           std::to_string(probe));
    }
    const auto m = static_cast<std::size_t>(2 * probe + 1);
    std::size_t total = 1;
    for (int axis = 0; axis < n_axes; ++axis) {
        if (total > kGridGuard / m) {
            throw config_error(
                "Fourier grid (" + std::to_string(m) + "^" +
                std::to_string(n_axes) +
                " evaluations) exceeds the 2^20 guard; lower the probe or "
                "use a per-feature sweep");
        }
        total *= m;
    }
    return total;
}

// In-place DFT along one axis of a row-major N-dimensional cube with M
// points per axis, normalized by 1/M. Direct O(M^2) per line; grid sizes
// are guard-bounded, FFT is not worth the dependency.
inline void dft_axis(std::vector<std::complex<double>>& grid, int n_axes,
                     std::size_t m, int axis) {
    std::size_t stride = 1;
    for (int a = n_axes - 1; a > axis; --a) {
        stride *= m;
    }
    const std::size_t block = stride * m;
    const std::size_t total = grid.size();
    std::vector<std::complex<double>> line(m);
    std::vector<std::complex<double>> twiddle(m * m);
    for (std::size_t f = 0; f < m; ++f) {
        for (std::size_t k = 0; k < m; ++k) {
            const double phase = -2.0 * std::numbers::pi *
                                 static_cast<double>(f * k % m) /
                                 static_cast<double>(m);
            twiddle[f * m + k] = {std::cos(phase), std::sin(phase)};
        }
    }
    for (std::size_t base = 0; base < total; base += block) {
        for (std::size_t off = 0; off < stride; ++off) {
            for (std::size_t k = 0; k < m; ++k) {
                line[k] = grid[base + off + k * stride];
            }
            for (std::size_t f = 0; f < m; ++f) {
                std::complex<double> acc{0.0, 0.0};
                for (std::size_t k = 0; k < m; ++k) {
                    acc += line[k] * twiddle[f * m + k];
                }
                grid[base + off + f * stride] =
                    acc / static_cast<double>(m);
            }
        }
    }
}

// DFT bin f in [0, M) represents frequency f for f <= probe and f - M
// (negative) above.
inline int bin_to_frequency(std::size_t f, std::size_t m, int probe) {
    const int fi = static_cast<int>(f);
    return fi <= probe ? fi : fi - static_cast<int>(m);
}

} // namespace detail

/// Evaluates p1 on the uniform angle grid x_l in {2*pi*k / (2*probe + 1)}
/// (raw angles, bypassing any data scaling) and takes the multidimensional
/// DFT. The model output is a trigonometric polynomial of per-feature degree
/// bounded by the encoding repetitions, so any probe at or above that degree
/// recovers the coefficients exactly.
inline FourierSpectrum extract_spectrum(const ParamCircuit& circuit,
                                        std::span<const double> weights,
                                        int max_degree_probe,
                                        int readout_wire = 0) {
    const int n = circuit.n_features();
    const std::size_t total = detail::checked_grid_size(n, max_degree_probe);
    const auto m = static_cast<std::size_t>(2 * max_degree_probe + 1);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(m);

    std::vector<std::complex<double>> grid(total);
    std::vector<double> x(static_cast<std::size_t>(n));
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rest = idx;
        for (int axis = n - 1; axis >= 0; --axis) {
            x[static_cast<std::size_t>(axis)] =
                step * static_cast<double>(rest % m);
            rest /= m;
        }
        grid[idx] = evaluate(circuit, weights, x, readout_wire).p1;
    }
    for (int axis = 0; axis < n; ++axis) {
        detail::dft_axis(grid, n, m, axis);
    }

    FourierSpectrum spectrum;
    spectrum.n_features = n;
    spectrum.max_degree = max_degree_probe;
    std::vector<int> gamma(static_cast<std::size_t>(n));
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rest = idx;
        for (int axis = n - 1; axis >= 0; --axis) {
            gamma[static_cast<std::size_t>(axis)] =
                detail::bin_to_frequency(rest % m, m, max_degree_probe);
            rest /= m;
        }
        spectrum.coefficients.emplace(gamma, grid[idx]);
    }
    return spectrum;
}

/// One-dimensional spectrum along a single feature axis, with the remaining
/// features frozen at the given values. Bounds the per-feature degree of
/// models whose full grid would breach the guard.
inline FourierSpectrum
extract_axis_spectrum(const ParamCircuit& circuit,
                      std::span<const double> weights, int axis,
                      std::span<const double> frozen_features,
                      int max_degree_probe, int readout_wire = 0) {
    const int n = circuit.n_features();
    if (axis < 0 || axis >= n) {
        throw structural_error("feature axis out of range: " +
                               std::to_string(axis));
    }
    if (frozen_features.size() != static_cast<std::size_t>(n)) {
        throw structural_error("frozen feature vector length mismatch");
    }
    detail::checked_grid_size(1, max_degree_probe);
    const auto m = static_cast<std::size_t>(2 * max_degree_probe + 1);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(m);

    std::vector<std::complex<double>> grid(m);
    std::vector<double> x(frozen_features.begin(), frozen_features.end());
    for (std::size_t k = 0; k < m; ++k) {
        x[static_cast<std::size_t>(axis)] = step * static_cast<double>(k);
        grid[k] = evaluate(circuit, weights, x, readout_wire).p1;
    }
    detail::dft_axis(grid, 1, m, 0);

    FourierSpectrum spectrum;
    spectrum.n_features = 1;
    spectrum.max_degree = max_degree_probe;
    for (std::size_t f = 0; f < m; ++f) {
        spectrum.coefficients.emplace(
            std::vector<int>{detail::bin_to_frequency(f, m, max_degree_probe)},
            grid[f]);
    }
    return spectrum;
}

/// Number of interference terms carrying each frequency d in [-L, L] for L
/// encoding repetitions of one feature: C(2L, L - d). The counts sum to 4^L
/// and fall off toward |d| = L, which is why high frequencies are harder to
/// reach.
inline std::map<int, std::uint64_t> frequency_multiplicities(int L) {
    if (L < 1 || L > 15) {
        throw config_error("repetition count must be in [1, 15], got " +
                           std::to_string(L));
    }
    const auto binomial = [](int n, int k) -> std::uint64_t {
        std::uint64_t result = 1;
        for (int i = 1; i <= k; ++i) {
            result = result * static_cast<std::uint64_t>(n - k + i) /
                     static_cast<std::uint64_t>(i);
        }
        return result;
    };
    std::map<int, std::uint64_t> counts;
    for (int d = -L; d <= L; ++d) {
        counts[d] = binomial(2 * L, L - d);
    }
    return counts;
}

/// Largest coefficient magnitude outside the degree-L box. Requires the
/// spectrum to have been probed at least two degrees beyond L so leakage has
/// room to show up.
inline TruncationReport verify_truncation(const FourierSpectrum& spectrum,
                                          int L) {
    if (spectrum.max_degree < L + 2) {
        throw config_error("truncation check at degree " + std::to_string(L) +
                           " needs a probe of at least " +
                           std::to_string(L + 2) + ", spectrum has " +
                           std::to_string(spectrum.max_degree));
    }
    TruncationReport report;
    for (const auto& [gamma, c] : spectrum.coefficients) {
        bool outside = false;
        for (const int g : gamma) {
            if (g > L || g < -L) {
                outside = true;
                break;
            }
        }
        if (outside) {
            report.max_leakage = std::max(report.max_leakage, std::abs(c));
        }
    }
    report.pass = report.max_leakage < 1e-9;
    return report;
}

/// Re-synthesizes the model output at x from the coefficients:
/// sum over gamma of c(gamma) * exp(i gamma . x), real part.
inline double synthesize(const FourierSpectrum& spectrum,
                         std::span<const double> x) {
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [gamma, c] : spectrum.coefficients) {
        double phase = 0.0;
        for (std::size_t l = 0; l < gamma.size(); ++l) {
            phase += static_cast<double>(gamma[l]) * x[l];
        }
        acc += c * std::complex<double>{std::cos(phase), std::sin(phase)};
    }
    return acc.real();
}

/// Worst-case |c(-gamma) - conj(c(gamma))| over the stored coefficients.
inline double hermitian_asymmetry(const FourierSpectrum& spectrum) {
    double worst = 0.0;
    for (const auto& [gamma, c] : spectrum.coefficients) {
        std::vector<int> negated(gamma.size());
        for (std::size_t l = 0; l < gamma.size(); ++l) {
            negated[l] = -gamma[l];
        }
        const auto it = spectrum.coefficients.find(negated);
        if (it == spectrum.coefficients.end()) {
            continue;
        }
        worst = std::max(worst, std::abs(it->second - std::conj(c)));
    }
    return worst;
}

} // namespace qaum
