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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>

#include "qaum/fourier.hpp"
#include "qaum/io.hpp"
#include "qaum/rng.hpp"
#include "qaum/training.hpp"

using namespace qaum;
using Catch::Approx;

namespace {

double coeff_abs(const FourierSpectrum& s, std::vector<int> gamma) {
    const auto it = s.coefficients.find(gamma);
    REQUIRE(it != s.coefficients.end());
    return std::abs(it->second);
}

} // namespace

TEST_CASE("frequency multiplicities follow the binomial profile") {
    const auto l1 = frequency_multiplicities(1);
    REQUIRE(l1.size() == 3);
    CHECK(l1.at(-1) == 1);
    CHECK(l1.at(0) == 2);
    CHECK(l1.at(1) == 1);

    const auto l2 = frequency_multiplicities(2);
    CHECK(l2.at(-2) == 1);
    CHECK(l2.at(-1) == 4);
    CHECK(l2.at(0) == 6);
    CHECK(l2.at(1) == 4);
    CHECK(l2.at(2) == 1);

    const auto l3 = frequency_multiplicities(3);
    std::uint64_t total = 0;
    for (const auto& [degree, count] : l3) {
        total += count;
    }
    CHECK(total == 64); // 4^3

    CHECK_THROWS_AS(frequency_multiplicities(0), config_error);
}

TEST_CASE("single-feature single-repetition support is {-1, 0, 1}") {
    const ParamCircuit circuit = build_qaum(1, 1);
    const std::vector<double> weights = init_weights(circuit.n_weights(), 3);
    const FourierSpectrum spectrum = extract_spectrum(circuit, weights, 3);
    CHECK(coeff_abs(spectrum, {1}) > 1e-4); // the model really uses degree 1
    CHECK(coeff_abs(spectrum, {2}) < 1e-9);
    CHECK(coeff_abs(spectrum, {-2}) < 1e-9);
    CHECK(coeff_abs(spectrum, {3}) < 1e-9);
    CHECK(hermitian_asymmetry(spectrum) < 1e-9);
}

TEST_CASE("a circuit without feature gates is a pure constant") {
    const ParamCircuit circuit(
        1, 1, 0, {{SlotKind::Weight, GateKind::RY, 0, -1, 0.0, 0, 1.0}});
    const std::vector<double> weights{1.234};
    const FourierSpectrum spectrum = extract_spectrum(circuit, weights, 2);
    REQUIRE(spectrum.coefficients.size() == 1);
    const double p1 = evaluate(circuit, weights, {}, 0).p1;
    const auto c0 = spectrum.coefficients.at(std::vector<int>{});
    CHECK(c0.real() == Approx(p1).margin(1e-12));
    CHECK(c0.imag() == Approx(0.0).margin(1e-12));
    const TruncationReport verdict = verify_truncation(spectrum, 0);
    CHECK(verdict.pass);
    CHECK(verdict.max_leakage == 0.0);
}

TEST_CASE("two-feature support stays inside the degree box") {
    const ParamCircuit circuit = build_qaum(2, 2);
    const std::vector<double> weights = init_weights(circuit.n_weights(), 17);
    const FourierSpectrum spectrum = extract_spectrum(circuit, weights, 4);
    for (const auto& [gamma, c] : spectrum.coefficients) {
        if (std::abs(gamma[0]) > 2 || std::abs(gamma[1]) > 2) {
            CHECK(std::abs(c) < 1e-9);
        }
    }
    CHECK(hermitian_asymmetry(spectrum) < 1e-9);
}

TEST_CASE("truncation verdicts") {
    SECTION("qaum L=1 passes at its own degree") {
        const ParamCircuit circuit = build_qaum(1, 1);
        const std::vector<double> weights =
            init_weights(circuit.n_weights(), 5);
        const FourierSpectrum spectrum = extract_spectrum(circuit, weights, 3);
        CHECK(verify_truncation(spectrum, 1).pass);
    }

    SECTION("two stacked encodings per feature leak past degree 1") {
        // every second-repetition model reaches degree 2 for generic weights
        const ParamCircuit circuit = build_qaum(1, 2);
        const std::vector<double> weights =
            init_weights(circuit.n_weights(), 5);
        const FourierSpectrum spectrum = extract_spectrum(circuit, weights, 4);
        const TruncationReport verdict = verify_truncation(spectrum, 1);
        CHECK_FALSE(verdict.pass);
        CHECK(verdict.max_leakage > 1e-6);
        CHECK(verdict.max_leakage ==
              Approx(std::max(coeff_abs(spectrum, {2}),
                              coeff_abs(spectrum, {-2})))
                  .margin(1e-12));
        // but it passes at its true degree
        CHECK(verify_truncation(spectrum, 2).pass);
    }

    SECTION("a too-small probe is a configuration error") {
        const ParamCircuit circuit = build_qaum(1, 1);
        const std::vector<double> weights =
            init_weights(circuit.n_weights(), 5);
        const FourierSpectrum spectrum = extract_spectrum(circuit, weights, 2);
        CHECK_THROWS_AS(verify_truncation(spectrum, 1), config_error);
    }
}

TEST_CASE("grid guard rejects infeasible extraction requests") {
    const ParamCircuit circuit = build_qaum(8, 1);
    const std::vector<double> weights = init_weights(circuit.n_weights(), 1);
    // (2*3+1)^8 = 5,764,801 > 2^20
    CHECK_THROWS_AS(extract_spectrum(circuit, weights, 3), config_error);
}

TEST_CASE("synthesis from the spectrum reproduces the grid values") {
    const ParamCircuit circuit = build_qaum(2, 1);
    const std::vector<double> weights = init_weights(circuit.n_weights(), 23);
    const int probe = 3;
    const FourierSpectrum spectrum =
        extract_spectrum(circuit, weights, probe);
    const std::size_t m = static_cast<std::size_t>(2 * probe + 1);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const std::vector<double> x{step * static_cast<double>(i),
                                        step * static_cast<double>(j)};
            const double direct = evaluate(circuit, weights, x, 0).p1;
            CHECK(synthesize(spectrum, x) == Approx(direct).margin(1e-9));
        }
    }
}

TEST_CASE("higher frequencies carry less ensemble weight") {
    // mean |c(+-2)| < mean |c(+-1)| over 200 weight draws for L=2
    const ParamCircuit circuit = build_qaum(1, 2);
    double mean_abs_1 = 0.0;
    double mean_abs_2 = 0.0;
    const int draws = 200;
    for (int d = 0; d < draws; ++d) {
        const std::vector<double> weights =
            init_weights(circuit.n_weights(), 1000 + d);
        const FourierSpectrum spectrum =
            extract_spectrum(circuit, weights, 2);
        mean_abs_1 +=
            0.5 * (coeff_abs(spectrum, {1}) + coeff_abs(spectrum, {-1}));
        mean_abs_2 +=
            0.5 * (coeff_abs(spectrum, {2}) + coeff_abs(spectrum, {-2}));
    }
    mean_abs_1 /= draws;
    mean_abs_2 /= draws;
    CHECK(mean_abs_2 < mean_abs_1);
}

TEST_CASE("spectra are covariant under feature permutation") {
    const ParamCircuit circuit = build_qaum(2, 1);
    const std::vector<double> weights = init_weights(circuit.n_weights(), 31);
    const std::vector<int> swap{1, 0};
    const ParamCircuit permuted = permute_features(circuit, swap);
    const FourierSpectrum base = extract_spectrum(circuit, weights, 2);
    const FourierSpectrum perm = extract_spectrum(permuted, weights, 2);
    for (const auto& [gamma, c] : base.coefficients) {
        const std::vector<int> swapped{gamma[1], gamma[0]};
        CHECK(std::abs(perm.coefficients.at(swapped) - c) < 1e-9);
    }
}

TEST_CASE("per-axis sweeps bound the degree of wide models") {
    const ParamCircuit circuit = build_qaum(8, 1);
    const std::vector<double> weights = init_weights(circuit.n_weights(), 77);
    SplitMix64 rng(12);
    std::vector<double> frozen(8);
    for (double& v : frozen) {
        v = rng.uniform(0.0, 2.0 * std::numbers::pi);
    }
    for (int axis = 0; axis < 8; ++axis) {
        const FourierSpectrum spectrum =
            extract_axis_spectrum(circuit, weights, axis, frozen, 3);
        CHECK(verify_truncation(spectrum, 1).pass);
        CHECK(hermitian_asymmetry(spectrum) < 1e-9);
        // the slice really depends on the axis at degree 1
        CHECK(coeff_abs(spectrum, {1}) > 1e-6);
    }
    CHECK_THROWS_AS(
        extract_axis_spectrum(circuit, weights, 8, frozen, 3),
        structural_error);
}

TEST_CASE("spectrum JSON lists gamma vectors with both parts") {
    const ParamCircuit circuit = build_qaum(1, 1);
    const std::vector<double> weights = init_weights(circuit.n_weights(), 2);
    const FourierSpectrum spectrum = extract_spectrum(circuit, weights, 2);
    const Json j = spectrum_to_json(spectrum);
    CHECK(j["n_features"] == 1);
    CHECK(j["max_degree"] == 2);
    REQUIRE(j["coefficients"].size() == 5);
    for (const auto& entry : j["coefficients"]) {
        REQUIRE(entry.contains("gamma"));
        REQUIRE(entry.contains("re"));
        REQUIRE(entry.contains("im"));
        CHECK(std::abs(entry["gamma"][0].get<int>()) <= 2);
    }
}
