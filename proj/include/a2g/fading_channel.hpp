// SPDX-License-Identifier: Apache-2.0
//
// a2glink: air-to-ground link simulation and measurement analysis toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "a2g/rng.hpp"

namespace a2g {

/// One multipath tap: excess delay and relative power as tabulated.
struct Tap {
    double delay_s;
    double relative_power_db;
};

/// Tapped-delay-line power profile. Delays must be strictly increasing and
/// start at 0; linear tap powers are normalized to sum to 1.
class PowerDelayProfile {
  public:
    static PowerDelayProfile from_taps(std::vector<Tap> taps);

    std::size_t tap_count() const { return taps_.size(); }
    double delay_s(std::size_t k) const { return taps_[k].delay_s; }
    double relative_power_db(std::size_t k) const { return taps_[k].relative_power_db; }

    /// Normalized linear power of tap k; sums to 1 over all taps.
    double linear_power(std::size_t k) const { return linear_power_[k]; }

  private:
    std::vector<Tap> taps_;
    std::vector<double> linear_power_;
};

/// Extended Vehicular A profile (9 taps, 0..2510 ns), unit total power.
PowerDelayProfile make_eva_profile();

/// Single tap at zero delay: frequency-flat Rayleigh channel.
PowerDelayProfile make_flat_profile();

/// Complex tap gains of one channel draw at one instant. Tap delays are
/// carried along so the realization fully determines its frequency response.
struct ChannelRealization {
    std::vector<std::complex<double>> tap_gains;
    std::vector<double> tap_delays_s;
    double timestamp_s = 0.0;
    double doppler_hz = 0.0;
};

/// Oscillators per tap in the sum-of-sinusoids generator. The envelope
/// law converges to Rayleigh at O(1/M); 256 keeps the KS distance of a
/// 1e5-sample draw below the 1% critical value with margin, while the
/// ensemble autocorrelation over realizations is J0(2*pi*fD*dt) exactly.
inline constexpr int kSumOfSinusoidsOscillators = 256;

/// Draws the tap gains of a time-correlated Rayleigh process at time t.
///
/// Each tap is an independently seeded sum of kSumOfSinusoidsOscillators
/// random-angle sinusoids, so gains from the same stream at t1 and t2
/// decorrelate as J0(2*pi*doppler_hz*|t1-t2|), and doppler_hz = 0 freezes
/// the draw. The stream is taken by value: equal (stream, t) pairs yield
/// bit-identical gains.
ChannelRealization sample_taps(const PowerDelayProfile& profile, double doppler_hz, double t_s,
                               const RandomStream& stream);

/// Channel gain per subcarrier on a regular grid.
struct FrequencyResponse {
    std::vector<std::complex<double>> values;
    double subcarrier_spacing_hz = 0.0;

    std::size_t n_subcarriers() const { return values.size(); }
};

/// Evaluates H(f_i) = sum_k g_k * exp(-j*2*pi*f_i*tau_k) at f_i = i*spacing.
FrequencyResponse frequency_response(const ChannelRealization& realization, double spacing_hz,
                                     int n_subcarriers);

}  // namespace a2g
