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
#include <cstdint>
#include <numbers>
#include <vector>

namespace qaum {

/// SplitMix64 generator (Steele, Lea & Flood). Chosen over std::mt19937 so
/// that seeded runs are bit-identical across platforms and standard-library
/// implementations; all bounded/real draws below avoid std distributions for
/// the same reason.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : seed_(seed), state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    /// Unbiased integer in [0, n) via Lemire's multiply-with-rejection.
    std::uint64_t next_below(std::uint64_t n) {
        __uint128_t m = static_cast<__uint128_t>(next_u64()) * n;
        auto low = static_cast<std::uint64_t>(m);
        if (low < n) {
            const std::uint64_t threshold = (0ULL - n) % n;
            while (low < threshold) {
                m = static_cast<__uint128_t>(next_u64()) * n;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    /// Standard normal via Box-Muller (cosine branch only, no cached spare).
    double next_normal() {
        double u1 = next_double();
        while (u1 <= 0.0) {
            u1 = next_double();
        }
        const double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

    /// Independent child stream derived from this generator's seed. The
    /// derivation depends only on (seed, stream), not on draws made so far.
    SplitMix64 child(std::uint64_t stream) const {
        return SplitMix64(mix(seed_ ^ (0x9E3779B97F4A7C15ULL * (stream + 1))));
    }

    std::uint64_t seed() const { return seed_; }

    /// In-place partial Fisher-Yates: after the call, items[0..take) is a
    /// uniform sample without replacement from the original contents.
    template <typename T>
    void partial_shuffle(std::vector<T>& items, std::size_t take) {
        const std::size_t n = items.size();
        if (take > n) {
            take = n;
        }
        for (std::size_t i = 0; i < take; ++i) {
            const std::size_t j =
                i + static_cast<std::size_t>(next_below(n - i));
            std::swap(items[i], items[j]);
        }
    }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t state_;
};

} // namespace qaum
