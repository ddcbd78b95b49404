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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qaum/surrogate.hpp"
#include "qaum/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{"generate a synthetic pulsar-candidate CSV (HTRU2-shaped "
                 "stand-in for offline runs)"};
    app.set_version_flag("--version", qaum::kVersion);

    std::string out_path;
    qaum::SurrogateSpec spec;
    app.add_option("--out", out_path, "output CSV path")->required();
    app.add_option("--rows", spec.rows, "total candidate count");
    app.add_option("--positives", spec.positives, "pulsar count");
    app.add_option("--seed", spec.seed, "generator seed");
    app.add_option("--faint-fraction", spec.faint_fraction,
                   "fraction of pulsars blended toward the noise population");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);
        }
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        const qaum::LabeledDataset ds = qaum::make_surrogate_pulsar_data(spec);
        qaum::write_surrogate_csv(ds, out_path);
        std::cout << "wrote " << ds.size() << " rows ("
                  << ds.count_label(1) << " pulsars) to " << out_path << "\n";
    } catch (const qaum::config_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 1;
    } catch (const qaum::data_error& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
