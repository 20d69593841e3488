/**********
 *   Copyright 2026 The polcal Authors
 *
 *   Licensed under the Apache License, Version 2.0 (the "License");
 *   you may not use this file except in compliance with the License.
 *   You may obtain a copy of the License at
 *
 *       http://www.apache.org/licenses/LICENSE-2.0
 *
 *   Unless required by applicable law or agreed to in writing, software
 *   distributed under the License is distributed on an "AS IS" BASIS,
 *   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *   See the License for the specific language governing permissions and
 *   limitations under the License.
\**********/
#pragma once

#include <cmath>
#include <cstdint>

namespace polcal::rng {

/// Named sub-streams hanging off one user-supplied base seed. Every source
/// of randomness in the library draws from exactly one of these, so each
/// stage of a run is reproducible in isolation.
enum class Stream : std::uint64_t {
    fixture_noise  = 1,
    resampling     = 2,
    ensemble       = 3,
    fiber_segments = 4,
    trials         = 5,
};

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

/// splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
    z += kGolden;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Seed for (base, stream, index). Per-index streams are what make the
/// OpenMP kernels bit-identical to the serial reference: item i draws from
/// its own generator no matter which thread runs it.
inline std::uint64_t derive_seed(std::uint64_t base, Stream stream, std::uint64_t index) {
    std::uint64_t h = mix64(base + kGolden * static_cast<std::uint64_t>(stream));
    return mix64(h + kGolden * index);
}

/// Counter-based generator (splitmix64 core). Chosen over std::mt19937_64
/// because its output is defined by this header alone: the same seed gives
/// the same doubles on every platform, which the determinism contract needs.
class Generator {
public:
    explicit Generator(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += kGolden;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + uniform01() * (b - a); }

    /// Standard normal via Box-Muller. No spare caching: two uniforms per
    /// call keeps the draw count predictable.
    double normal() {
        double u1 = 1.0 - uniform01(); // (0, 1]
        double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    double normal(double mean, double sigma) { return mean + sigma * normal(); }

private:
    std::uint64_t state_;
};

} // namespace polcal::rng
