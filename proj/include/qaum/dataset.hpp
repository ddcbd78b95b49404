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
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qaum/errors.hpp"
#include "qaum/rng.hpp"

namespace qaum {

/// Feature matrix with binary labels. `scaling` holds the per-column
/// (min, max) pairs recorded when the data was scaled; it is empty on raw
/// data. Immutable by convention after load/scale.
struct LabeledDataset {
    std::vector<std::vector<double>> features; // rows
    std::vector<int> labels;                   // 0 or 1 per row
    std::vector<std::pair<double, double>> scaling;

    std::size_t size() const { return labels.size(); }
    int n_features() const {
        return features.empty() ? 0 : static_cast<int>(features[0].size());
    }
    std::size_t count_label(int label) const {
        std::size_t n = 0;
        for (const int l : labels) {
            n += (l == label);
        }
        return n;
    }
};

/// Balanced sampling request: `size` rows per split, half of each class,
/// drawn without replacement by the seeded generator.
struct SampleSpec {
    std::size_t size = 100;
    std::uint64_t seed = 0;
};

namespace detail {

inline double parse_field(std::string_view field, std::size_t row,
                          std::size_t col) {
    const char* first = field.data();
    const char* last = field.data() + field.size();
    while (first != last && (*first == ' ' || *first == '\t')) {
        ++first;
    }
    while (last != first && (*(last - 1) == ' ' || *(last - 1) == '\t' ||
                             *(last - 1) == '\r')) {
        --last;
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) {
        throw data_error("row " + std::to_string(row) + ", column " +
                         std::to_string(col + 1) + ": cannot parse '" +
                         std::string(field) + "' as a number");
    }
    return value;
}

} // namespace detail

/// Loads a headerless CSV of 8 feature columns plus a trailing 0/1 label.
/// Row numbers in error messages are 1-based.
inline LabeledDataset load_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw data_error("cannot open dataset file: " + path.string());
    }
    constexpr int kColumns = 8;
    LabeledDataset ds;
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty() || line == "\r") {
            continue;
        }
        std::vector<std::string_view> fields;
        std::string_view rest = line;
        while (true) {
            const std::size_t comma = rest.find(',');
            fields.push_back(rest.substr(0, comma));
            if (comma == std::string_view::npos) {
                break;
            }
            rest.remove_prefix(comma + 1);
        }
        if (fields.size() != kColumns + 1) {
            throw data_error("row " + std::to_string(row) + ": expected " +
                             std::to_string(kColumns + 1) +
                             " comma-separated columns, found " +
                             std::to_string(fields.size()));
        }
        std::vector<double> values(kColumns);
        for (int c = 0; c < kColumns; ++c) {
            values[static_cast<std::size_t>(c)] =
                detail::parse_field(fields[static_cast<std::size_t>(c)], row,
                                    static_cast<std::size_t>(c));
        }
        const double label_value =
            detail::parse_field(fields[kColumns], row, kColumns);
        if (label_value != 0.0 && label_value != 1.0) {
            throw data_error("row " + std::to_string(row) +
                             ": label must be 0 or 1");
        }
        ds.features.push_back(std::move(values));
        ds.labels.push_back(label_value == 1.0 ? 1 : 0);
    }
    return ds;
}

/// Writes the dataset as CSV with a single header row (f1..f8,label).
inline void save_csv(const LabeledDataset& ds,
                     const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw data_error("cannot write dataset file: " + path.string());
    }
    const int n = ds.n_features();
    for (int c = 0; c < n; ++c) {
        out << 'f' << (c + 1) << ',';
    }
    out << "label\n";
    out.precision(17);
    for (std::size_t r = 0; r < ds.size(); ++r) {
        for (int c = 0; c < n; ++c) {
            out << ds.features[r][static_cast<std::size_t>(c)] << ',';
        }
        out << ds.labels[r] << '\n';
    }
    if (!out) {
        throw data_error("write failed: " + path.string());
    }
}

/// Rescales every column with the given (min, max) pairs:
/// x' = pi * (x - min) / (max - min).
inline LabeledDataset
apply_scale(const LabeledDataset& ds,
            const std::vector<std::pair<double, double>>& bounds) {
    if (bounds.size() != static_cast<std::size_t>(ds.n_features())) {
        throw structural_error("scaling bounds count " +
                               std::to_string(bounds.size()) +
                               " != feature count " +
                               std::to_string(ds.n_features()));
    }
    LabeledDataset out = ds;
    out.scaling = bounds;
    for (auto& row : out.features) {
        for (std::size_t c = 0; c < bounds.size(); ++c) {
            const auto [lo, hi] = bounds[c];
            row[c] = std::numbers::pi * (row[c] - lo) / (hi - lo);
        }
    }
    return out;
}

/// Fits per-column (min, max) on the full dataset and maps every column
/// onto [0, pi]. The fitted pairs are stored on the result for reuse on
/// held-out data.
inline LabeledDataset fit_scale(const LabeledDataset& ds) {
    if (ds.size() == 0) {
        throw usage_error("cannot fit scaling on an empty dataset");
    }
    const int n = ds.n_features();
    std::vector<std::pair<double, double>> bounds(
        static_cast<std::size_t>(n),
        {std::numeric_limits<double>::infinity(),
         -std::numeric_limits<double>::infinity()});
    for (const auto& row : ds.features) {
        for (int c = 0; c < n; ++c) {
            const double v = row[static_cast<std::size_t>(c)];
            auto& [lo, hi] = bounds[static_cast<std::size_t>(c)];
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    for (int c = 0; c < n; ++c) {
        const auto [lo, hi] = bounds[static_cast<std::size_t>(c)];
        if (!(hi > lo)) {
            throw data_error("feature column " + std::to_string(c + 1) +
                             " is constant (" + std::to_string(lo) +
                             "); scaling is degenerate");
        }
    }
    return apply_scale(ds, bounds);
}

namespace detail {

inline LabeledDataset take_rows(const LabeledDataset& ds,
                                const std::vector<std::size_t>& rows) {
    LabeledDataset out;
    out.scaling = ds.scaling;
    out.features.reserve(rows.size());
    out.labels.reserve(rows.size());
    for (const std::size_t r : rows) {
        out.features.push_back(ds.features[r]);
        out.labels.push_back(ds.labels[r]);
    }
    return out;
}

} // namespace detail

/// Draws a balanced training set of spec.size rows (size/2 per class) and an
/// equally sized, balanced, disjoint holdout, both without replacement. The
/// same seed reproduces the same index sets bit for bit.
inline std::pair<LabeledDataset, LabeledDataset>
balanced_sample(const LabeledDataset& ds, const SampleSpec& spec) {
    if (spec.size == 0 || spec.size % 2 != 0) {
        throw config_error("sample size must be positive and even, got " +
                           std::to_string(spec.size));
    }
    std::vector<std::size_t> by_class[2];
    for (std::size_t r = 0; r < ds.size(); ++r) {
        by_class[ds.labels[r]].push_back(r);
    }
    const std::size_t per_class = spec.size / 2;
    // train + holdout together need spec.size rows of each class
    for (int label = 0; label < 2; ++label) {
        if (by_class[label].size() < 2 * per_class) {
            throw config_error(
                "sample spec needs " + std::to_string(2 * per_class) +
                " rows of class " + std::to_string(label) +
                " (train + holdout), dataset has " +
                std::to_string(by_class[label].size()));
        }
    }
    SplitMix64 rng(spec.seed);
    std::vector<std::size_t> train_rows;
    std::vector<std::size_t> holdout_rows;
    for (int label = 0; label < 2; ++label) {
        auto& pool = by_class[label];
        rng.partial_shuffle(pool, 2 * per_class);
        train_rows.insert(train_rows.end(), pool.begin(),
                          pool.begin() + static_cast<std::ptrdiff_t>(per_class));
        holdout_rows.insert(holdout_rows.end(),
                            pool.begin() +
                                static_cast<std::ptrdiff_t>(per_class),
                            pool.begin() +
                                static_cast<std::ptrdiff_t>(2 * per_class));
    }
    return {detail::take_rows(ds, train_rows),
            detail::take_rows(ds, holdout_rows)};
}

} // namespace qaum
