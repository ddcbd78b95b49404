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

#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qaum/circuit.hpp"
#include "qaum/dataset.hpp"
#include "qaum/fourier.hpp"
#include "qaum/io.hpp"
#include "qaum/surrogate.hpp"
#include "qaum/svg.hpp"
#include "qaum/training.hpp"
#include "qaum/version.hpp"

namespace fs = std::filesystem;
using qaum::Json;

namespace {

// exit codes: 0 ok, 1 configuration, 2 data, 3 numeric, 4 verification
constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitData = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitVerdictFail = 4;

struct CommonOptions {
    std::string data_path;
    std::string out_dir = ".";
    std::string config_path;
    std::optional<std::uint64_t> seed;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
};

struct TrainOptions {
    CommonOptions common;
    std::string ansatz = "qaum";
    std::optional<int> repetitions;
    std::optional<int> wires;
    std::optional<double> learning_rate;
    std::optional<int> epochs;
    std::optional<double> clamp_epsilon;
    std::optional<std::uint64_t> weight_seed;
    std::optional<std::uint64_t> sample_seed;
    std::optional<std::size_t> sample_size;
    bool dump_scaled = false;
};

qaum::TrainConfig resolve_train_config(const TrainOptions& opts) {
    qaum::TrainConfig config; // built-in defaults
    if (!opts.common.config_path.empty()) {
        const Json j = Json::parse(qaum::read_text_file(opts.common.config_path),
                                   nullptr, true, true);
        if (j.contains("ansatz")) {
            const auto name = j["ansatz"].get<std::string>();
            if (name != "qaum" && name != "qaoa") {
                throw qaum::config_error("config: unknown ansatz '" + name +
                                         "'");
            }
            config.ansatz =
                name == "qaum" ? qaum::Ansatz::QAUM : qaum::Ansatz::QAOA;
        }
        if (j.contains("repetitions")) {
            config.repetitions = j["repetitions"].get<int>();
        }
        if (j.contains("wires")) {
            config.wires = j["wires"].get<int>();
        }
        if (j.contains("learning_rate")) {
            config.learning_rate = j["learning_rate"].get<double>();
        }
        if (j.contains("epochs")) {
            config.epochs = j["epochs"].get<int>();
        }
        if (j.contains("clamp_epsilon")) {
            config.clamp_epsilon = j["clamp_epsilon"].get<double>();
        }
        if (j.contains("weight_seed")) {
            config.weight_seed = j["weight_seed"].get<std::uint64_t>();
        }
        if (j.contains("sample_seed")) {
            config.sample_seed = j["sample_seed"].get<std::uint64_t>();
        }
        if (j.contains("sample_size")) {
            config.sample_size = j["sample_size"].get<std::size_t>();
        }
        if (j.contains("checkpoint_epochs")) {
            config.checkpoint_epochs =
                j["checkpoint_epochs"].get<std::vector<int>>();
        }
    }
    // flags override config-file values override defaults
    if (opts.ansatz == "qaum") {
        config.ansatz = qaum::Ansatz::QAUM;
    } else if (opts.ansatz == "qaoa") {
        config.ansatz = qaum::Ansatz::QAOA;
    } else if (!opts.ansatz.empty()) {
        throw qaum::config_error("--ansatz must be 'qaum' or 'qaoa', got '" +
                                 opts.ansatz + "'");
    }
    if (opts.repetitions) {
        config.repetitions = *opts.repetitions;
    }
    if (opts.wires) {
        config.wires = *opts.wires;
    }
    if (opts.learning_rate) {
        config.learning_rate = *opts.learning_rate;
    }
    if (opts.epochs) {
        config.epochs = *opts.epochs;
    }
    if (opts.clamp_epsilon) {
        config.clamp_epsilon = *opts.clamp_epsilon;
    }
    if (opts.common.seed) {
        config.weight_seed = *opts.common.seed;
        config.sample_seed = *opts.common.seed;
    }
    if (opts.weight_seed) {
        config.weight_seed = *opts.weight_seed;
    }
    if (opts.sample_seed) {
        config.sample_seed = *opts.sample_seed;
    }
    if (opts.sample_size) {
        config.sample_size = *opts.sample_size;
    }
    config.threads = std::max(1, opts.common.jobs);
    config.validate();
    return config;
}

qaum::LabeledDataset load_scaled(const std::string& path) {
    if (path.empty()) {
        throw qaum::config_error("--data is required");
    }
    return qaum::fit_scale(qaum::load_csv(path));
}

void write_manifest(const fs::path& out_dir, const std::string& subcommand,
                    const std::string& data_path, const Json& config,
                    const std::vector<std::string>& outputs) {
    Json manifest{{"tool", "qaum"},
                  {"version", qaum::kVersion},
                  {"subcommand", subcommand},
                  {"data_path", data_path},
                  {"data_digest_fnv1a64",
                   data_path.empty()
                       ? ""
                       : qaum::hex64(qaum::fnv1a64_file(data_path))},
                  {"config", config},
                  {"outputs", outputs}};
    qaum::write_text_file(out_dir / "manifest.json", manifest.dump(2) + "\n");
}

int run_train(const TrainOptions& opts) {
    const qaum::TrainConfig config = resolve_train_config(opts);
    const fs::path out_dir(opts.common.out_dir);
    fs::create_directories(out_dir);

    const qaum::LabeledDataset scaled = load_scaled(opts.common.data_path);
    const qaum::TrainReport report = qaum::train(config, scaled);

    Json report_json{{"config", qaum::train_config_to_json(config)},
                     {"result", qaum::train_report_to_json(report)}};
    qaum::write_text_file(out_dir / "report.json",
                          report_json.dump(2) + "\n");
    qaum::write_loss_curve_csv(report.loss_curve, out_dir / "loss.csv");
    std::vector<std::string> outputs = {"report.json", "loss.csv"};

    if (opts.dump_scaled) {
        qaum::save_csv(scaled, out_dir / "scaled.csv");
        const Json sidecar = qaum::scaling_sidecar_json(
            scaled, opts.common.data_path,
            qaum::fnv1a64_file(opts.common.data_path), config.sample_seed);
        qaum::write_text_file(out_dir / "scaling.json",
                              sidecar.dump(2) + "\n");
        outputs.push_back("scaled.csv");
        outputs.push_back("scaling.json");
    }
    write_manifest(out_dir, "train", opts.common.data_path,
                   qaum::train_config_to_json(config), outputs);

    std::cout << "min_loss " << report.min_loss << "  train_acc "
              << report.train_accuracy << "  holdout_acc "
              << report.holdout_accuracy << "\n";
    return kExitOk;
}

struct TableRow {
    std::string model;
    int qubits;
    int repetitions;
    int params;
    qaum::UncertaintyReport stats;
};

int run_table(const TrainOptions& opts) {
    qaum::TrainConfig base = resolve_train_config(opts);
    const fs::path out_dir(opts.common.out_dir);
    fs::create_directories(out_dir);
    const qaum::LabeledDataset scaled = load_scaled(opts.common.data_path);

    std::vector<TableRow> rows;
    for (const auto ansatz : {qaum::Ansatz::QAOA, qaum::Ansatz::QAUM}) {
        for (int reps = 1; reps <= 3; ++reps) {
            qaum::TrainConfig config = base;
            config.ansatz = ansatz;
            config.repetitions = reps;
            // parallelism goes across protocol runs, not inside them
            config.threads = 1;
            const qaum::ParamCircuit circuit =
                qaum::build_ansatz(config, scaled.n_features());
            TableRow row;
            row.model = ansatz == qaum::Ansatz::QAUM ? "QAUM" : "QAOA";
            row.qubits = circuit.n_qubits();
            row.repetitions = reps;
            row.params = circuit.n_weights();
            row.stats = qaum::uncertainty_protocol(config, scaled,
                                                   opts.common.jobs);
            rows.push_back(std::move(row));
        }
    }

    std::ostringstream table;
    table << std::left << std::setw(7) << "Model" << std::right
          << std::setw(7) << "Qubits" << std::setw(13) << "Repetitions"
          << std::setw(8) << "Params" << std::setw(10) << "MinLoss"
          << std::setw(9) << "InitErr" << std::setw(12) << "SamplingErr"
          << "\n";
    table << std::string(66, '-') << "\n";
    table << std::fixed << std::setprecision(3);
    for (const TableRow& row : rows) {
        table << std::left << std::setw(7) << row.model << std::right
              << std::setw(7) << row.qubits << std::setw(13)
              << row.repetitions << std::setw(8) << row.params
              << std::setw(10) << row.stats.mean_min_loss << std::setw(9)
              << row.stats.init_err << std::setw(12) << row.stats.sampling_err
              << "\n";
    }
    std::cout << table.str();

    std::ostringstream csv;
    csv.precision(17);
    csv << "model,qubits,repetitions,params,min_loss,init_err,sampling_err\n";
    for (const TableRow& row : rows) {
        csv << row.model << ',' << row.qubits << ',' << row.repetitions << ','
            << row.params << ',' << row.stats.mean_min_loss << ','
            << row.stats.init_err << ',' << row.stats.sampling_err << '\n';
    }
    qaum::write_text_file(out_dir / "table.csv", csv.str());
    qaum::write_text_file(out_dir / "table.txt", table.str());
    write_manifest(out_dir, "table", opts.common.data_path,
                   qaum::train_config_to_json(base),
                   {"table.csv", "table.txt"});
    return kExitOk;
}

struct BlochOptions {
    CommonOptions common;
    std::string run_dir;
    std::size_t max_points = 1000;
};

int run_bloch(const BlochOptions& opts) {
    const fs::path run_dir(opts.run_dir.empty() ? opts.common.out_dir
                                                : opts.run_dir);
    const fs::path report_path = run_dir / "report.json";
    if (!fs::exists(report_path)) {
        throw qaum::data_error("run directory has no report.json: " +
                               run_dir.string());
    }
    const Json report_json =
        Json::parse(qaum::read_text_file(report_path), nullptr, true, true);
    const std::string ansatz =
        report_json.at("config").at("ansatz").get<std::string>();
    const qaum::TrainReport report =
        qaum::train_report_from_json(report_json.at("result"));
    if (ansatz != "qaum" || report.checkpoints.empty()) {
        throw qaum::data_error(
            "run has no Bloch trajectories (single-qubit runs only): " +
            report_path.string());
    }

    const int repetitions =
        report_json.at("config").at("repetitions").get<int>();
    std::uint64_t display_seed =
        report_json.at("config").at("sample_seed").get<std::uint64_t>();
    if (opts.common.seed) {
        display_seed = *opts.common.seed;
    }

    const qaum::LabeledDataset scaled = load_scaled(opts.common.data_path);
    const qaum::ParamCircuit circuit =
        qaum::build_qaum(scaled.n_features(), repetitions);

    // balanced display sample, independent of the training split
    std::size_t display_size =
        std::min(opts.max_points,
                 std::min(scaled.count_label(0), scaled.count_label(1)));
    display_size -= display_size % 2;
    if (display_size == 0) {
        throw qaum::config_error("--max-points too small for a balanced "
                                 "display sample");
    }
    const auto [display, unused_holdout] =
        qaum::balanced_sample(scaled, {display_size, display_seed});

    const fs::path out_dir(opts.common.out_dir);
    fs::create_directories(out_dir);
    std::vector<std::string> outputs;
    for (const qaum::Checkpoint& cp : report.checkpoints) {
        const std::vector<qaum::BlochPoint> points = qaum::bloch_checkpoint(
            circuit, cp.weights, display, opts.max_points);
        const std::string stem = "bloch_epoch" + std::to_string(cp.epoch);
        qaum::write_bloch_csv(points, out_dir / (stem + ".csv"));
        qaum::write_text_file(out_dir / (stem + ".svg"),
                              qaum::bloch_svg(points, "epoch " +
                                                          std::to_string(
                                                              cp.epoch)));
        outputs.push_back(stem + ".csv");
        outputs.push_back(stem + ".svg");
    }
    write_manifest(out_dir, "bloch", opts.common.data_path,
                   Json{{"run", run_dir.string()},
                        {"max_points", opts.max_points},
                        {"display_seed", display_seed}},
                   outputs);
    std::cout << "wrote " << report.checkpoints.size()
              << " checkpoint(s) to " << out_dir.string() << "\n";
    return kExitOk;
}

struct FourierOptions {
    CommonOptions common;
    std::string ansatz = "qaum";
    int repetitions = 1;
    int n_features = 1;
    int wires = 9;
    std::optional<int> probe;
    std::string weights_file;
    bool random_weights = false;
};

int run_fourier(const FourierOptions& opts) {
    if (opts.repetitions < 1) {
        throw qaum::config_error("--reps must be >= 1");
    }
    const qaum::ParamCircuit circuit =
        opts.ansatz == "qaum"
            ? qaum::build_qaum(opts.n_features, opts.repetitions)
            : qaum::build_qaoa_embedding(opts.wires, opts.n_features,
                                         opts.repetitions);
    const int probe = opts.probe.value_or(opts.repetitions + 2);
    if (probe < opts.repetitions) {
        throw qaum::config_error(
            "--probe (" + std::to_string(probe) +
            ") must be at least the encoding repetitions (" +
            std::to_string(opts.repetitions) + ")");
    }

    std::vector<double> weights;
    if (!opts.weights_file.empty()) {
        const Json j = Json::parse(qaum::read_text_file(opts.weights_file),
                                   nullptr, true, true);
        weights = j.get<std::vector<double>>();
        if (weights.size() != static_cast<std::size_t>(circuit.n_weights())) {
            throw qaum::structural_error(
                "weights file holds " + std::to_string(weights.size()) +
                " values, circuit needs " +
                std::to_string(circuit.n_weights()));
        }
    } else if (opts.random_weights) {
        weights = qaum::init_weights(circuit.n_weights(),
                                     opts.common.seed.value_or(0));
    } else {
        throw qaum::config_error(
            "provide --weights-file or --random-weights");
    }

    const fs::path out_dir(opts.common.out_dir);
    fs::create_directories(out_dir);

    const auto grid_points = [probe](int axes) {
        double total = 1.0;
        for (int a = 0; a < axes; ++a) {
            total *= static_cast<double>(2 * probe + 1);
        }
        return total;
    };

    Json spectrum_json;
    double max_leakage = 0.0;
    bool pass = true;
    if (grid_points(circuit.n_features()) <=
        static_cast<double>(std::size_t{1} << 20)) {
        const qaum::FourierSpectrum spectrum =
            qaum::extract_spectrum(circuit, weights, probe);
        const qaum::TruncationReport verdict =
            qaum::verify_truncation(spectrum, opts.repetitions);
        max_leakage = verdict.max_leakage;
        pass = verdict.pass;
        spectrum_json = qaum::spectrum_to_json(spectrum);
        spectrum_json["mode"] = "full_grid";
    } else {
        // too many features for the full grid: bound the degree one feature
        // at a time with the others frozen at seeded random angles
        qaum::SplitMix64 rng(opts.common.seed.value_or(0) ^
                             0x5EEDF00DULL);
        std::vector<double> frozen(
            static_cast<std::size_t>(circuit.n_features()));
        for (double& v : frozen) {
            v = rng.uniform(0.0, 2.0 * std::numbers::pi);
        }
        Json axes = Json::array();
        for (int axis = 0; axis < circuit.n_features(); ++axis) {
            const qaum::FourierSpectrum spectrum =
                qaum::extract_axis_spectrum(circuit, weights, axis, frozen,
                                            probe);
            const qaum::TruncationReport verdict =
                qaum::verify_truncation(spectrum, opts.repetitions);
            max_leakage = std::max(max_leakage, verdict.max_leakage);
            pass = pass && verdict.pass;
            Json entry = qaum::spectrum_to_json(spectrum);
            entry["axis"] = axis;
            axes.push_back(std::move(entry));
        }
        spectrum_json = Json{{"mode", "per_feature"}, {"axes", std::move(axes)}};
        spectrum_json["n_features"] = circuit.n_features();
        spectrum_json["max_degree"] = probe;
    }
    spectrum_json["truncation_degree"] = opts.repetitions;
    spectrum_json["max_leakage"] = max_leakage;
    spectrum_json["pass"] = pass;
    qaum::write_text_file(out_dir / "spectrum.json",
                          spectrum_json.dump(2) + "\n");
    write_manifest(out_dir, "fourier", "",
                   Json{{"ansatz", opts.ansatz},
                        {"repetitions", opts.repetitions},
                        {"n_features", opts.n_features},
                        {"probe", probe},
                        {"seed", opts.common.seed.value_or(0)}},
                   {"spectrum.json"});

    std::cout << (pass ? "PASS" : "FAIL")
              << " truncation at degree " << opts.repetitions
              << " (max leakage " << std::scientific << max_leakage << ")\n";
    return pass ? kExitOk : kExitVerdictFail;
}

void add_common_flags(CLI::App* cmd, CommonOptions& common,
                      bool needs_data = true) {
    auto* data = cmd->add_option("--data", common.data_path,
                                 "input candidate CSV (8 features + label, "
                                 "no header)");
    if (needs_data) {
        data->required();
    }
    cmd->add_option("--out", common.out_dir, "output directory");
    cmd->add_option("--seed", common.seed, "base seed (weights and sampling)");
    cmd->add_option("--config", common.config_path,
                    "JSON config file; flags override its values");
    cmd->add_option("--jobs", common.jobs, "worker threads");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"single-qubit re-uploading classifier toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", qaum::kVersion);

    TrainOptions train_opts;
    auto* train_cmd =
        app.add_subcommand("train", "train one model and write a run report");
    add_common_flags(train_cmd, train_opts.common);
    train_cmd->add_option("--ansatz", train_opts.ansatz, "qaum | qaoa");
    train_cmd->add_option("--reps", train_opts.repetitions,
                          "encoding repetitions");
    train_cmd->add_option("--wires", train_opts.wires, "qaoa wire count");
    train_cmd->add_option("--lr", train_opts.learning_rate, "learning rate");
    train_cmd->add_option("--epochs", train_opts.epochs, "training epochs");
    train_cmd->add_option("--clamp-epsilon", train_opts.clamp_epsilon,
                          "loss clamp epsilon");
    train_cmd->add_option("--weight-seed", train_opts.weight_seed,
                          "weight initialization seed");
    train_cmd->add_option("--sample-seed", train_opts.sample_seed,
                          "training sample seed");
    train_cmd->add_option("--sample-size", train_opts.sample_size,
                          "balanced training sample size");
    train_cmd->add_flag("--dump-scaled", train_opts.dump_scaled,
                        "also write the scaled dataset snapshot + sidecar");

    TrainOptions table_opts;
    auto* table_cmd = app.add_subcommand(
        "table", "run the 2-ansatz x 3-repetition benchmark grid");
    add_common_flags(table_cmd, table_opts.common);
    table_cmd->add_option("--lr", table_opts.learning_rate, "learning rate");
    table_cmd->add_option("--epochs", table_opts.epochs, "training epochs");
    table_cmd->add_option("--sample-size", table_opts.sample_size,
                          "balanced training sample size");
    table_cmd->add_option("--wires", table_opts.wires, "qaoa wire count");

    BlochOptions bloch_opts;
    auto* bloch_cmd = app.add_subcommand(
        "bloch", "export Bloch-sphere checkpoints of a finished run");
    add_common_flags(bloch_cmd, bloch_opts.common);
    bloch_cmd->add_option("--run", bloch_opts.run_dir,
                          "run directory holding report.json")
        ->required();
    bloch_cmd->add_option("--max-points", bloch_opts.max_points,
                          "points per checkpoint");

    FourierOptions fourier_opts;
    auto* fourier_cmd = app.add_subcommand(
        "fourier", "extract the model's frequency spectrum and verify "
                   "truncation");
    add_common_flags(fourier_cmd, fourier_opts.common, /*needs_data=*/false);
    fourier_cmd->add_option("--ansatz", fourier_opts.ansatz, "qaum | qaoa");
    fourier_cmd->add_option("--reps", fourier_opts.repetitions,
                            "encoding repetitions");
    fourier_cmd->add_option("--features", fourier_opts.n_features,
                            "feature count");
    fourier_cmd->add_option("--wires", fourier_opts.wires, "qaoa wire count");
    fourier_cmd->add_option("--probe", fourier_opts.probe,
                            "probe degree (default reps + 2)");
    fourier_cmd->add_option("--weights-file", fourier_opts.weights_file,
                            "JSON array of weights");
    fourier_cmd->add_flag("--random-weights", fourier_opts.random_weights,
                          "draw weights uniformly from [0, 2pi) using --seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e); // --help / --version
        }
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }

    try {
        if (*train_cmd) {
            return run_train(train_opts);
        }
        if (*table_cmd) {
            return run_table(table_opts);
        }
        if (*bloch_cmd) {
            return run_bloch(bloch_opts);
        }
        return run_fourier(fourier_opts);
    } catch (const qaum::config_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const qaum::structural_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const qaum::usage_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const qaum::data_error& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const qaum::numeric_error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    }
}
