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

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qaum/circuit.hpp"
#include "qaum/dataset.hpp"
#include "qaum/errors.hpp"
#include "qaum/fourier.hpp"
#include "qaum/training.hpp"

namespace qaum {

using Json = nlohmann::ordered_json;

// --- digests -------------------------------------------------------------

/// FNV-1a 64-bit over a byte range; provenance fingerprint, not a
/// cryptographic hash.
inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (const char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    return h;
}

inline std::uint64_t fnv1a64_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw data_error("cannot open file for digest: " + path.string());
    }
    std::uint64_t h = 0xCBF29CE484222325ULL;
    char buffer[1 << 16];
    while (in.read(buffer, sizeof(buffer)) || in.gcount() > 0) {
        const std::streamsize got = in.gcount();
        for (std::streamsize i = 0; i < got; ++i) {
            h ^= static_cast<unsigned char>(buffer[i]);
            h *= 0x100000001B3ULL;
        }
    }
    return h;
}

inline std::string hex64(std::uint64_t value) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << value;
    return os.str();
}

// --- text / file helpers ---------------------------------------------------

inline void write_text_file(const std::filesystem::path& path,
                            std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw data_error("cannot write file: " + path.string());
    }
    out << content;
    if (!out) {
        throw data_error("write failed: " + path.string());
    }
}

inline std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw data_error("cannot read file: " + path.string());
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// --- circuit export --------------------------------------------------------

inline Json circuit_to_json(const ParamCircuit& circuit) {
    Json ops = Json::array();
    for (const CircuitOp& op : circuit.ops()) {
        Json j;
        j["gate"] = gate_kind_name(op.gate);
        Json wires = Json::array();
        wires.push_back(op.wire0);
        if (gate_kind_is_two_qubit(op.gate)) {
            wires.push_back(op.wire1);
        }
        j["wires"] = wires;
        switch (op.slot) {
        case SlotKind::Fixed:
            j["slot"] = "fixed";
            if (gate_kind_has_angle(op.gate)) {
                j["angle"] = op.angle;
            }
            break;
        case SlotKind::Weight:
            j["slot"] = "weight";
            j["index"] = op.index;
            break;
        case SlotKind::Feature:
            j["slot"] = "feature";
            j["index"] = op.index;
            j["scale"] = op.scale;
            break;
        }
        ops.push_back(std::move(j));
    }
    return Json{{"n_qubits", circuit.n_qubits()},
                {"n_weights", circuit.n_weights()},
                {"n_features", circuit.n_features()},
                {"ops", std::move(ops)}};
}

// --- train reports -----------------------------------------------------------

inline Json train_config_to_json(const TrainConfig& config) {
    return Json{{"ansatz", ansatz_name(config.ansatz)},
                {"repetitions", config.repetitions},
                {"wires", config.ansatz == Ansatz::QAOA ? config.wires : 1},
                {"learning_rate", config.learning_rate},
                {"epochs", config.epochs},
                {"clamp_epsilon", config.clamp_epsilon},
                {"weight_seed", config.weight_seed},
                {"sample_seed", config.sample_seed},
                {"sample_size", config.sample_size},
                {"checkpoint_epochs", config.checkpoint_epochs}};
}

inline Json bloch_points_to_json(const std::vector<BlochPoint>& points) {
    Json arr = Json::array();
    for (const BlochPoint& p : points) {
        arr.push_back(Json{
            {"label", p.label}, {"x", p.x}, {"y", p.y}, {"z", p.z}});
    }
    return arr;
}

inline Json train_report_to_json(const TrainReport& report) {
    Json checkpoints = Json::array();
    for (const Checkpoint& cp : report.checkpoints) {
        checkpoints.push_back(Json{{"epoch", cp.epoch},
                                   {"weights", cp.weights},
                                   {"bloch", bloch_points_to_json(cp.points)}});
    }
    return Json{{"loss_curve", report.loss_curve},
                {"min_loss", report.min_loss},
                {"train_accuracy", report.train_accuracy},
                {"holdout_accuracy", report.holdout_accuracy},
                {"final_weights", report.final_weights},
                {"wall_time_seconds", report.wall_time_seconds},
                {"checkpoints", std::move(checkpoints)}};
}

inline std::vector<BlochPoint> bloch_points_from_json(const Json& arr) {
    std::vector<BlochPoint> points;
    for (const auto& j : arr) {
        points.push_back({j.at("label").get<int>(), j.at("x").get<double>(),
                          j.at("y").get<double>(), j.at("z").get<double>()});
    }
    return points;
}

inline TrainReport train_report_from_json(const Json& j) {
    TrainReport report;
    report.loss_curve = j.at("loss_curve").get<std::vector<double>>();
    report.min_loss = j.at("min_loss").get<double>();
    report.train_accuracy = j.at("train_accuracy").get<double>();
    report.holdout_accuracy = j.at("holdout_accuracy").get<double>();
    report.final_weights = j.at("final_weights").get<std::vector<double>>();
    report.wall_time_seconds = j.at("wall_time_seconds").get<double>();
    for (const auto& cj : j.at("checkpoints")) {
        Checkpoint cp;
        cp.epoch = cj.at("epoch").get<int>();
        cp.weights = cj.at("weights").get<std::vector<double>>();
        cp.points = bloch_points_from_json(cj.at("bloch"));
        report.checkpoints.push_back(std::move(cp));
    }
    return report;
}

inline Json uncertainty_report_to_json(const UncertaintyReport& report) {
    const auto losses = [](const std::vector<TrainReport>& runs) {
        Json arr = Json::array();
        for (const TrainReport& r : runs) {
            arr.push_back(r.min_loss);
        }
        return arr;
    };
    return Json{{"mean_min_loss", report.mean_min_loss},
                {"init_err", report.init_err},
                {"sampling_err", report.sampling_err},
                {"init_min_losses", losses(report.init_runs)},
                {"sampling_min_losses", losses(report.sampling_runs)}};
}

// --- spectrum export ---------------------------------------------------------

inline Json spectrum_to_json(const FourierSpectrum& spectrum) {
    Json coeffs = Json::array();
    for (const auto& [gamma, c] : spectrum.coefficients) {
        coeffs.push_back(
            Json{{"gamma", gamma}, {"re", c.real()}, {"im", c.imag()}});
    }
    return Json{{"n_features", spectrum.n_features},
                {"max_degree", spectrum.max_degree},
                {"coefficients", std::move(coeffs)}};
}

// --- CSV writers ---------------------------------------------------------------

inline void write_loss_curve_csv(const std::vector<double>& curve,
                                 const std::filesystem::path& path) {
    std::ostringstream os;
    os.precision(17);
    os << "epoch,loss\n";
    for (std::size_t e = 0; e < curve.size(); ++e) {
        os << (e + 1) << ',' << curve[e] << '\n';
    }
    write_text_file(path, os.str());
}

inline void write_bloch_csv(const std::vector<BlochPoint>& points,
                            const std::filesystem::path& path) {
    std::ostringstream os;
    os.precision(17);
    os << "label,x,y,z\n";
    for (const BlochPoint& p : points) {
        os << p.label << ',' << p.x << ',' << p.y << ',' << p.z << '\n';
    }
    write_text_file(path, os.str());
}

/// Sidecar for a scaled-dataset snapshot: fitted (min, max) per column plus
/// the provenance of the source file and sampling seeds.
inline Json scaling_sidecar_json(const LabeledDataset& scaled,
                                 const std::string& source,
                                 std::uint64_t source_digest,
                                 std::uint64_t sample_seed) {
    Json columns = Json::array();
    for (const auto& [lo, hi] : scaled.scaling) {
        columns.push_back(Json{{"min", lo}, {"max", hi}});
    }
    return Json{{"source", source},
                {"source_digest_fnv1a64", hex64(source_digest)},
                {"sample_seed", sample_seed},
                {"columns", std::move(columns)}};
}

} // namespace qaum
