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

#include <algorithm>
#include <fstream>
#include <numbers>
#include <set>

#include "qaum/dataset.hpp"
#include "qaum/io.hpp"
#include "qaum/surrogate.hpp"
#include "support/testdata.hpp"

using namespace qaum;
using Catch::Approx;

namespace {

const std::filesystem::path& scratch_dir() {
    static const auto dir = testdata::fresh_temp_dir("dataset");
    return dir;
}

std::filesystem::path write_lines(const std::string& name,
                                  const std::string& content) {
    const auto path = scratch_dir() / name;
    std::ofstream out(path);
    out << content;
    return path;
}

} // namespace

TEST_CASE("the full candidate file has the documented shape") {
    const auto& source = testdata::candidates();
    INFO("data source: " << source.name);
    CHECK(source.raw.size() == 17898);
    CHECK(source.raw.count_label(1) == 1639);
    CHECK(source.raw.n_features() == 8);
}

TEST_CASE("loader round-trips the surrogate CSV") {
    const LabeledDataset ds =
        make_surrogate_pulsar_data({.rows = 300, .positives = 60, .seed = 9});
    const auto path = scratch_dir() / "surrogate.csv";
    write_surrogate_csv(ds, path);
    const LabeledDataset loaded = load_csv(path);
    REQUIRE(loaded.size() == 300);
    CHECK(loaded.count_label(1) == 60);
    for (std::size_t r = 0; r < loaded.size(); ++r) {
        CHECK(loaded.labels[r] == ds.labels[r]);
        for (int c = 0; c < 8; ++c) {
            CHECK(loaded.features[r][static_cast<std::size_t>(c)] ==
                  Approx(ds.features[r][static_cast<std::size_t>(c)])
                      .epsilon(1e-10));
        }
    }
}

TEST_CASE("loader edge cases") {
    SECTION("an empty file loads as an empty dataset") {
        const auto path = write_lines("empty.csv", "");
        const LabeledDataset ds = load_csv(path);
        CHECK(ds.size() == 0);
    }

    SECTION("a row with 7 feature columns names the row") {
        const auto path = write_lines(
            "short.csv", "1,2,3,4,5,6,7,8,0\n1,2,3,4,5,6,7,0\n");
        CHECK_THROWS_WITH(load_csv(path),
                          Catch::Matchers::ContainsSubstring("row 2"));
    }

    SECTION("a malformed number names row and column") {
        const auto path = write_lines(
            "bad.csv", "1,2,3,4,5,6,7,8,0\n1,2,zzz,4,5,6,7,8,1\n");
        CHECK_THROWS_WITH(load_csv(path),
                          Catch::Matchers::ContainsSubstring("row 2"));
    }

    SECTION("labels outside {0, 1} are rejected") {
        const auto path = write_lines("label.csv", "1,2,3,4,5,6,7,8,2\n");
        CHECK_THROWS_AS(load_csv(path), data_error);
    }

    SECTION("a missing file is a data error") {
        CHECK_THROWS_AS(load_csv(scratch_dir() / "nope.csv"), data_error);
    }
}

TEST_CASE("scaling maps column extremes onto [0, pi]") {
    LabeledDataset ds;
    ds.features = {{0.0, 10.0}, {5.0, 20.0}, {10.0, 30.0}};
    ds.labels = {0, 1, 0};
    const LabeledDataset scaled = fit_scale(ds);
    CHECK(scaled.features[0][0] == 0.0);
    CHECK(scaled.features[1][0] == Approx(std::numbers::pi / 2));
    CHECK(scaled.features[2][0] == Approx(std::numbers::pi));
    CHECK(scaled.features[0][1] == 0.0);
    CHECK(scaled.features[2][1] == Approx(std::numbers::pi));
    REQUIRE(scaled.scaling.size() == 2);
    CHECK(scaled.scaling[0] == std::pair<double, double>{0.0, 10.0});
    CHECK(scaled.scaling[1] == std::pair<double, double>{10.0, 30.0});
}

TEST_CASE("scaling a scaled dataset with identity bounds is the identity") {
    const LabeledDataset scaled = fit_scale(
        make_surrogate_pulsar_data({.rows = 120, .positives = 30, .seed = 4}));
    const std::vector<std::pair<double, double>> identity_bounds(
        8, {0.0, std::numbers::pi});
    const LabeledDataset rescaled = apply_scale(scaled, identity_bounds);
    for (std::size_t r = 0; r < scaled.size(); ++r) {
        for (int c = 0; c < 8; ++c) {
            CHECK(rescaled.features[r][static_cast<std::size_t>(c)] ==
                  Approx(scaled.features[r][static_cast<std::size_t>(c)])
                      .margin(1e-12));
        }
    }
}

TEST_CASE("scaling preserves within-column ordering") {
    const LabeledDataset raw =
        make_surrogate_pulsar_data({.rows = 200, .positives = 50, .seed = 12});
    const LabeledDataset scaled = fit_scale(raw);
    for (int c = 0; c < 8; ++c) {
        for (std::size_t r = 1; r < raw.size(); ++r) {
            const bool raw_le =
                raw.features[r - 1][static_cast<std::size_t>(c)] <=
                raw.features[r][static_cast<std::size_t>(c)];
            const bool scaled_le =
                scaled.features[r - 1][static_cast<std::size_t>(c)] <=
                scaled.features[r][static_cast<std::size_t>(c)];
            CHECK(raw_le == scaled_le);
        }
    }
}

TEST_CASE("degenerate columns are refused") {
    LabeledDataset ds;
    ds.features = {{1.0, 5.0}, {1.0, 6.0}};
    ds.labels = {0, 1};
    CHECK_THROWS_AS(fit_scale(ds), data_error);
    const LabeledDataset empty;
    CHECK_THROWS_AS(fit_scale(empty), usage_error);
}

TEST_CASE("balanced sampling honours the spec") {
    const auto& scaled = testdata::scaled_candidates();

    SECTION("a 100-point sample holds 50 of each class, holdout too") {
        const auto [train, holdout] = balanced_sample(scaled, {100, 7});
        REQUIRE(train.size() == 100);
        REQUIRE(holdout.size() == 100);
        CHECK(train.count_label(1) == 50);
        CHECK(train.count_label(0) == 50);
        CHECK(holdout.count_label(1) == 50);
        CHECK(holdout.count_label(0) == 50);
    }

    SECTION("the same seed reproduces the same rows") {
        const auto [a_train, a_hold] = balanced_sample(scaled, {60, 99});
        const auto [b_train, b_hold] = balanced_sample(scaled, {60, 99});
        CHECK(a_train.features == b_train.features);
        CHECK(a_hold.features == b_hold.features);
        CHECK(a_train.labels == b_train.labels);
    }

    SECTION("unsatisfiable sizes are configuration errors") {
        CHECK_THROWS_AS(balanced_sample(scaled, {4000, 0}), config_error);
        CHECK_THROWS_AS(balanced_sample(scaled, {0, 0}), config_error);
        CHECK_THROWS_AS(balanced_sample(scaled, {101, 0}), config_error);
    }
}

TEST_CASE("train and holdout index sets are disjoint across 100 seeds") {
    const LabeledDataset small = fit_scale(
        make_surrogate_pulsar_data({.rows = 400, .positives = 150, .seed = 2}));
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto [train, holdout] = balanced_sample(small, {40, seed});
        // rows are identified by their feature vectors; the surrogate has no
        // duplicate rows
        std::set<std::vector<double>> train_rows(train.features.begin(),
                                                 train.features.end());
        REQUIRE(train_rows.size() == train.size());
        for (const auto& row : holdout.features) {
            CHECK_FALSE(train_rows.contains(row));
        }
    }
}

TEST_CASE("snapshot export writes a header row and a sidecar") {
    const LabeledDataset scaled = fit_scale(
        make_surrogate_pulsar_data({.rows = 50, .positives = 10, .seed = 3}));
    const auto csv_path = scratch_dir() / "snapshot.csv";
    save_csv(scaled, csv_path);
    std::ifstream in(csv_path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "f1,f2,f3,f4,f5,f6,f7,f8,label");

    const Json sidecar = scaling_sidecar_json(scaled, "snapshot.csv",
                                              fnv1a64_file(csv_path), 11);
    CHECK(sidecar["columns"].size() == 8);
    CHECK(sidecar["sample_seed"] == 11);
    for (std::size_t c = 0; c < 8; ++c) {
        CHECK(sidecar["columns"][c]["min"].get<double>() ==
              scaled.scaling[c].first);
        CHECK(sidecar["columns"][c]["max"].get<double>() ==
              scaled.scaling[c].second);
    }
}
