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

#include <stdexcept>
#include <string>

namespace qaum {

/// Invalid run parameters: qubit counts, repetitions, grid guards,
/// unsatisfiable sampling specs.
class config_error : public std::runtime_error {
  public:
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed inputs that break an object's structure: wire out of range,
/// parameter-array length mismatch, non-bijective permutation.
class structural_error : public std::runtime_error {
  public:
    explicit structural_error(const std::string& msg)
        : std::runtime_error(msg) {}
};

/// Problems with data files: missing, malformed rows, degenerate columns.
class data_error : public std::runtime_error {
  public:
    explicit data_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Non-finite values reaching the optimizer.
class numeric_error : public std::runtime_error {
  public:
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// API misuse that is neither configuration nor data, e.g. an empty batch.
class usage_error : public std::runtime_error {
  public:
    explicit usage_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace qaum
