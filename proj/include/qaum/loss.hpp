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

namespace qaum {

/// Binary cross-entropy on the clamped model output:
/// with q = clamp(p1, eps, 1 - eps), returns
/// -(label * ln q + (1 - label) * ln(1 - q)).
inline double cross_entropy(double p1, int label, double clamp_epsilon) {
    const double q = std::clamp(p1, clamp_epsilon, 1.0 - clamp_epsilon);
    return label ? -std::log(q) : -std::log(1.0 - q);
}

/// d cross_entropy / d p1. Zero on and beyond the clamp boundaries, where
/// the clamp is flat.
inline double cross_entropy_dp1(double p1, int label, double clamp_epsilon) {
    if (p1 <= clamp_epsilon || p1 >= 1.0 - clamp_epsilon) {
        return 0.0;
    }
    return label ? -1.0 / p1 : 1.0 / (1.0 - p1);
}

} // namespace qaum
