// SPDX-License-Identifier: Apache-2.0
//
// a2glink: air-to-ground link simulation and measurement analysis toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>

namespace a2g {

/// Mixes a 64-bit value (splitmix64 finalizer). Used to expand seeds.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic random stream (xoshiro256++) with counter-based child
/// derivation. Value semantics: copies replay the same sequence, so a
/// stream can be handed to a pure function and evaluated repeatedly.
///
/// Gaussian variates use Box-Muller directly instead of
/// std::normal_distribution, whose output is implementation-defined.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : root_(seed) {
        std::uint64_t x = seed;
        for (auto& w : s_)
            w = mix64(x++);
        if (s_[0] == 0 && s_[1] == 0 && s_[2] == 0 && s_[3] == 0)
            s_[0] = 0x9e3779b97f4a7c15ULL;
    }

    /// Independent stream addressed by (domain, index) under this stream's
    /// root seed. Children of equal addresses are identical.
    RandomStream child(std::uint64_t domain, std::uint64_t index = 0) const {
        std::uint64_t h = mix64(root_ ^ mix64(domain + 1));
        h = mix64(h ^ mix64(index + 0x517cc1b727220a95ULL));
        return RandomStream(h);
    }

    std::uint64_t root_seed() const { return root_; }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal.
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * kPi * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    /// Circular complex normal CN(0, 1): unit variance split across I/Q.
    std::complex<double> cnormal() {
        const double re = gaussian();
        const double im = gaussian();
        return {re * kInvSqrt2, im * kInvSqrt2};
    }

  private:
    static constexpr double kPi = 3.141592653589793238462643383279502884;
    static constexpr double kInvSqrt2 = 0.70710678118654752440;

    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> s_{};
    std::uint64_t root_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Stream domains used by the simulation engine's seed schedule.
enum class StreamDomain : std::uint64_t {
    DlChannel = 1,
    DlNoise = 2,
    UlChannel = 3,
    UlNoise = 4,
    Payload = 5,
};

inline RandomStream substream(const RandomStream& master, StreamDomain d, std::uint64_t index) {
    return master.child(static_cast<std::uint64_t>(d), index);
}

}  // namespace a2g
