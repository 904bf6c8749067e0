// Copyright (c) 2026 The metriclab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>

namespace metriclab {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace detail

/// A counter-based random stream keyed by (seed, trial index). Streams for
/// distinct trials are independent of evaluation order, so parallel and
/// serial runs draw identical numbers; experiment outputs stay bit-identical
/// for a given seed regardless of thread count.
class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t trial) {
        std::uint64_t s = seed;
        const std::uint64_t a = detail::splitmix64(s);
        s = trial ^ 0xD1B54A32D192ED03ull;
        const std::uint64_t b = detail::splitmix64(s);
        state_ = a ^ (b + 0x9E3779B97F4A7C15ull * (trial + 1));
    }

    std::uint64_t next_u64() { return detail::splitmix64(state_); }

    /// Uniform on [0, 1).
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on [-1, 1).
    double next_symmetric() { return 2.0 * next_unit() - 1.0; }

private:
    std::uint64_t state_;
};

}  // namespace metriclab
