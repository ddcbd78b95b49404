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
#include <sstream>
#include <string>
#include <vector>

#include "qaum/training.hpp"

namespace qaum {

/// Static SVG of Bloch-sphere points in orthographic projection (camera
/// azimuth 30 degrees, elevation 18 degrees). Pulsars are filled red
/// circles, non-pulsars black crosses; no external assets or scripts.
inline std::string bloch_svg(const std::vector<BlochPoint>& points,
                             const std::string& title) {
    constexpr double size = 420.0;
    constexpr double radius = 180.0;
    constexpr double cx = size / 2.0;
    constexpr double cy = size / 2.0;
    constexpr double azimuth = 30.0 * std::numbers::pi / 180.0;
    constexpr double elevation = 18.0 * std::numbers::pi / 180.0;

    const double ca = std::cos(azimuth);
    const double sa = std::sin(azimuth);
    const double ce = std::cos(elevation);
    const double se = std::sin(elevation);
    // screen right = (-sin a, cos a, 0); screen up = (-cos a * sin e,
    // -sin a * sin e, cos e)
    const auto project = [&](double x, double y, double z) {
        const double sx = -sa * x + ca * y;
        const double sy = -ca * se * x - sa * se * y + ce * z;
        return std::pair<double, double>{cx + radius * sx, cy - radius * sy};
    };

    std::ostringstream os;
    os.precision(6);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size
       << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << ' ' << size
       << "\">\n";
    os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << radius
       << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";
    // equator ellipse: the z = 0 great circle under this projection
    os << "  <ellipse cx=\"" << cx << "\" cy=\"" << cy << "\" rx=\"" << radius
       << "\" ry=\"" << radius * se
       << "\" fill=\"none\" stroke=\"#bbb\" stroke-width=\"1\" "
          "stroke-dasharray=\"4 3\"/>\n";
    const auto [npx, npy] = project(0.0, 0.0, 1.0);
    const auto [spx, spy] = project(0.0, 0.0, -1.0);
    os << "  <line x1=\"" << npx << "\" y1=\"" << npy << "\" x2=\"" << spx
       << "\" y2=\"" << spy
       << "\" stroke=\"#bbb\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
    os << "  <text x=\"" << npx + 6 << "\" y=\"" << npy
       << "\" font-size=\"14\" fill=\"#444\">|0&#x27E9;</text>\n";
    os << "  <text x=\"" << spx + 6 << "\" y=\"" << spy + 12
       << "\" font-size=\"14\" fill=\"#444\">|1&#x27E9;</text>\n";
    os << "  <text x=\"12\" y=\"24\" font-size=\"15\" fill=\"#222\">" << title
       << "</text>\n";

    for (const BlochPoint& p : points) {
        const auto [px, py] = project(p.x, p.y, p.z);
        if (p.label == 1) {
            os << "  <circle cx=\"" << px << "\" cy=\"" << py
               << "\" r=\"2.4\" fill=\"#c62828\" fill-opacity=\"0.75\"/>\n";
        } else {
            os << "  <path d=\"M" << px - 2.2 << ' ' << py - 2.2 << " L"
               << px + 2.2 << ' ' << py + 2.2 << " M" << px - 2.2 << ' '
               << py + 2.2 << " L" << px + 2.2 << ' ' << py - 2.2
               << "\" stroke=\"#222\" stroke-width=\"1\" "
                  "stroke-opacity=\"0.7\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace qaum
