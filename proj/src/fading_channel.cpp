// SPDX-License-Identifier: Apache-2.0
//
// a2glink: air-to-ground link simulation and measurement analysis toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include "a2g/fading_channel.hpp"

#include <cmath>
#include <stdexcept>

namespace a2g {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;
constexpr std::uint64_t kTapDomain = 0x7461'7073ULL;  // per-tap oscillator seeds
}  // namespace

PowerDelayProfile PowerDelayProfile::from_taps(std::vector<Tap> taps) {
    if (taps.empty())
        throw std::invalid_argument("power delay profile needs at least one tap");
    if (taps.front().delay_s != 0.0)
        throw std::invalid_argument("first tap delay must be 0");
    for (std::size_t k = 1; k < taps.size(); ++k)
        if (taps[k].delay_s <= taps[k - 1].delay_s)
            throw std::invalid_argument("tap delays must be strictly increasing");

    PowerDelayProfile p;
    p.taps_ = std::move(taps);
    p.linear_power_.resize(p.taps_.size());
    double total = 0.0;
    for (std::size_t k = 0; k < p.taps_.size(); ++k) {
        p.linear_power_[k] = std::pow(10.0, p.taps_[k].relative_power_db / 10.0);
        total += p.linear_power_[k];
    }
    for (auto& pw : p.linear_power_)
        pw /= total;
    return p;
}

PowerDelayProfile make_eva_profile() {
    return PowerDelayProfile::from_taps({
        {0e-9, 0.0},
        {30e-9, -1.5},
        {150e-9, -1.4},
        {310e-9, -3.6},
        {370e-9, -0.6},
        {710e-9, -9.1},
        {1090e-9, -7.0},
        {1730e-9, -12.0},
        {2510e-9, -16.9},
    });
}

PowerDelayProfile make_flat_profile() {
    return PowerDelayProfile::from_taps({{0.0, 0.0}});
}

ChannelRealization sample_taps(const PowerDelayProfile& profile, double doppler_hz, double t_s,
                               const RandomStream& stream) {
    if (doppler_hz < 0.0)
        throw std::invalid_argument("doppler_hz must be >= 0");

    const std::size_t n_taps = profile.tap_count();
    constexpr int m = kSumOfSinusoidsOscillators;
    const double per_osc = 1.0 / std::sqrt(static_cast<double>(m));

    ChannelRealization real;
    real.tap_gains.resize(n_taps);
    real.tap_delays_s.resize(n_taps);
    real.timestamp_s = t_s;
    real.doppler_hz = doppler_hz;

    for (std::size_t k = 0; k < n_taps; ++k) {
        RandomStream osc = stream.child(kTapDomain, k);
        double re = 0.0, im = 0.0;
        for (int i = 0; i < m; ++i) {
            // Random arrival angle and phase make the ensemble autocorrelation
            // across realizations equal J0(2*pi*fD*dt).
            const double angle = kTwoPi * osc.uniform();
            const double phase = kTwoPi * osc.uniform();
            const double arg = kTwoPi * doppler_hz * t_s * std::cos(angle) + phase;
            re += std::cos(arg);
            im += std::sin(arg);
        }
        const double scale = per_osc * std::sqrt(profile.linear_power(k));
        real.tap_gains[k] = {re * scale, im * scale};
        real.tap_delays_s[k] = profile.delay_s(k);
    }
    return real;
}

FrequencyResponse frequency_response(const ChannelRealization& realization, double spacing_hz,
                                     int n_subcarriers) {
    if (n_subcarriers < 1)
        throw std::invalid_argument("n_subcarriers must be >= 1");

    FrequencyResponse fr;
    fr.subcarrier_spacing_hz = spacing_hz;
    fr.values.resize(static_cast<std::size_t>(n_subcarriers));
    for (int i = 0; i < n_subcarriers; ++i) {
        const double f = spacing_hz * static_cast<double>(i);
        std::complex<double> h{0.0, 0.0};
        for (std::size_t k = 0; k < realization.tap_gains.size(); ++k) {
            const double arg = -kTwoPi * f * realization.tap_delays_s[k];
            h += realization.tap_gains[k] * std::complex<double>(std::cos(arg), std::sin(arg));
        }
        fr.values[static_cast<std::size_t>(i)] = h;
    }
    return fr;
}

}  // namespace a2g
