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
#include <cmath>
#include <cstdint>
#include <vector>

#include "qaum/dataset.hpp"
#include "qaum/rng.hpp"

namespace qaum {

/// Parameters for the synthetic pulsar-candidate dataset. Defaults mirror
/// the shape of the public HTRU2 file: 17,898 candidates of which 1,639 are
/// real pulsars, 8 continuous features (mean / standard deviation / excess
/// kurtosis / skewness of the folded profile and of the DM-SNR curve).
struct SurrogateSpec {
    std::size_t rows = 17898;
    std::size_t positives = 1639;
    std::uint64_t seed = 2026;
    /// Fraction of pulsars blended toward the noise population; controls the
    /// irreducible class overlap and therefore the loss floor.
    double faint_fraction = 0.20;
};

namespace detail {

struct CandidateRow {
    double profile_mean, profile_std, profile_kurt, profile_skew;
    double dm_mean, dm_std, dm_kurt, dm_skew;
};

inline CandidateRow draw_noise_candidate(SplitMix64& rng) {
    CandidateRow r;
    r.profile_mean = 112.0 + 16.0 * rng.next_normal();
    r.profile_std = 46.8 + 6.0 * rng.next_normal();
    r.profile_kurt = 0.25 + 0.40 * rng.next_normal();
    if (rng.next_double() < 0.05) {
        // occasional impulsive interference with a heavy profile tail
        r.profile_kurt += std::abs(1.6 * rng.next_normal());
    }
    r.profile_skew = 0.2 + 2.0 * r.profile_kurt + 0.55 * rng.next_normal();
    r.dm_mean = std::exp(1.0 + 0.55 * rng.next_normal());
    r.dm_std = std::exp(2.9 + 0.42 * rng.next_normal());
    r.dm_kurt = 9.0 + 3.0 * rng.next_normal();
    r.dm_skew = 11.5 * r.dm_kurt + 24.0 * rng.next_normal();
    return r;
}

inline CandidateRow draw_pulsar_candidate(SplitMix64& rng) {
    const double strength = rng.next_normal();
    CandidateRow r;
    r.profile_mean = 66.0 - 9.0 * strength + 20.0 * rng.next_normal();
    r.profile_std = 41.5 + 7.0 * rng.next_normal();
    r.profile_kurt = 3.0 + 1.0 * strength + 1.0 * rng.next_normal();
    r.profile_skew =
        1.5 + 4.5 * r.profile_kurt + 3.5 * rng.next_normal();
    r.dm_mean = std::exp(3.2 + 0.4 * strength + 0.7 * rng.next_normal());
    r.dm_std = 49.0 + 7.0 * strength + 16.0 * rng.next_normal();
    r.dm_kurt = 3.4 - 0.9 * strength + 2.2 * rng.next_normal();
    r.dm_skew = 7.5 * r.dm_kurt + 16.0 * rng.next_normal();
    return r;
}

inline CandidateRow blend_candidates(const CandidateRow& a,
                                     const CandidateRow& b, double lam) {
    const auto mix = [lam](double x, double y) {
        return lam * x + (1.0 - lam) * y;
    };
    CandidateRow r;
    r.profile_mean = mix(a.profile_mean, b.profile_mean);
    r.profile_std = mix(a.profile_std, b.profile_std);
    r.profile_kurt = mix(a.profile_kurt, b.profile_kurt);
    r.profile_skew = mix(a.profile_skew, b.profile_skew);
    r.dm_mean = mix(a.dm_mean, b.dm_mean);
    r.dm_std = mix(a.dm_std, b.dm_std);
    r.dm_kurt = mix(a.dm_kurt, b.dm_kurt);
    r.dm_skew = mix(a.dm_skew, b.dm_skew);
    return r;
}

inline std::vector<double> clip_to_ranges(const CandidateRow& r) {
    const auto clip = [](double v, double lo, double hi) {
        return std::clamp(v, lo, hi);
    };
    return {clip(r.profile_mean, 5.8, 192.6), clip(r.profile_std, 24.7, 98.8),
            clip(r.profile_kurt, -1.88, 8.1), clip(r.profile_skew, -1.8, 68.1),
            clip(r.dm_mean, 0.21, 223.4),     clip(r.dm_std, 7.37, 110.6),
            clip(r.dm_kurt, -3.14, 34.5),     clip(r.dm_skew, -1.98, 1191.0)};
}

} // namespace detail

/// Deterministic synthetic stand-in for the HTRU2 pulsar-candidate CSV, for
/// offline testing and demos. Noise/RFI candidates and pulsars are drawn
/// from separate generative recipes whose marginals match the public file's
/// documented ranges; a `faint_fraction` of pulsars is blended toward the
/// noise population so balanced samples are not trivially separable. Same
/// spec, same dataset, bit for bit.
inline LabeledDataset make_surrogate_pulsar_data(const SurrogateSpec& spec) {
    if (spec.positives > spec.rows) {
        throw config_error("positive count exceeds row count");
    }
    SplitMix64 rng(spec.seed);
    LabeledDataset ds;
    ds.features.reserve(spec.rows);
    ds.labels.reserve(spec.rows);

    for (std::size_t i = 0; i < spec.rows - spec.positives; ++i) {
        detail::CandidateRow row = detail::draw_noise_candidate(rng);
        if (rng.next_double() < 0.02) {
            // RFI that mimics a pulsar's folded profile
            const detail::CandidateRow mimic =
                detail::draw_pulsar_candidate(rng);
            row.profile_kurt = mimic.profile_kurt;
            row.profile_skew = mimic.profile_skew;
        }
        ds.features.push_back(detail::clip_to_ranges(row));
        ds.labels.push_back(0);
    }
    for (std::size_t i = 0; i < spec.positives; ++i) {
        detail::CandidateRow row = detail::draw_pulsar_candidate(rng);
        if (rng.next_double() < spec.faint_fraction) {
            const detail::CandidateRow noise =
                detail::draw_noise_candidate(rng);
            row = detail::blend_candidates(noise, row,
                                           rng.uniform(0.5, 0.85));
        }
        ds.features.push_back(detail::clip_to_ranges(row));
        ds.labels.push_back(1);
    }

    // deterministic row shuffle so the file is not class-sorted
    std::vector<std::size_t> order(spec.rows);
    for (std::size_t i = 0; i < spec.rows; ++i) {
        order[i] = i;
    }
    rng.partial_shuffle(order, spec.rows);
    LabeledDataset shuffled;
    shuffled.features.reserve(spec.rows);
    shuffled.labels.reserve(spec.rows);
    for (const std::size_t r : order) {
        shuffled.features.push_back(std::move(ds.features[r]));
        shuffled.labels.push_back(ds.labels[r]);
    }
    return shuffled;
}

/// Writes the surrogate in the same headerless 8-feature + label CSV layout
/// the loader expects.
inline void write_surrogate_csv(const LabeledDataset& ds,
                                const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw data_error("cannot write surrogate file: " + path.string());
    }
    out.precision(12);
    for (std::size_t r = 0; r < ds.size(); ++r) {
        for (const double v : ds.features[r]) {
            out << v << ',';
        }
        out << ds.labels[r] << '\n';
    }
    if (!out) {
        throw data_error("write failed: " + path.string());
    }
}

} // namespace qaum
