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
#include <cstdint>
#include <vector>

#include "a2g/fading_channel.hpp"
#include "a2g/rng.hpp"

namespace a2g {

enum class Modulation { Qpsk };

constexpr int bits_per_symbol(Modulation m) {
    return m == Modulation::Qpsk ? 2 : 0;
}

/// Downlink subframe configuration. Defaults give a 10 MHz grid (50 RBs),
/// QPSK at code rate 1/2 with a 20% overhead allowance.
struct DlConfig {
    int n_rb = 50;
    Modulation modulation = Modulation::Qpsk;
    double code_rate = 0.5;
    double overhead_fraction = 0.2;
    double snr_db = 0.0;
};

/// Payload bits available per subframe after overhead, coding and the
/// 16-bit CRC, floored to a whole number of octets.
/// Throws std::invalid_argument when the configuration leaves no room.
int transport_block_size(const DlConfig& cfg);

struct TransportBlock {
    std::vector<std::uint8_t> payload_bits;
};

TransportBlock random_transport_block(const DlConfig& cfg, RandomStream& stream);

/// CRC-16 (polynomial 0x1021, zero initial state) over a bit vector.
std::uint16_t crc16(const std::vector<std::uint8_t>& bits);

/// Rate-1/2 convolutional encoder, constraint length 7, generators 133/171
/// octal with taps applied LSB-first, zero-tail terminated. Output holds
/// 2*(bits + 6) coded bits, the two generator streams interleaved.
std::vector<std::uint8_t> convolutional_encode(const std::vector<std::uint8_t>& bits);

/// Gray-mapped QPSK at unit average symbol energy; bit pair (0,0) maps to
/// (+1+j)/sqrt(2), the first bit selecting I and the second Q.
std::vector<std::complex<double>> qpsk_modulate(const std::vector<std::uint8_t>& bits);

/// CRC attach, convolutional encode, QPSK map. Payload size must equal
/// transport_block_size(cfg).
std::vector<std::complex<double>> encode_subframe(const TransportBlock& tb, const DlConfig& cfg);

struct DecodedSubframe {
    std::vector<std::uint8_t> payload_bits;
    bool crc_ok = false;
};

/// Per-subframe receiver model: symbols are spread over the n_rb*12 grid
/// (stride permutation, then round-robin subcarrier mapping), pass through
/// y = H*x + n with noise fixed so the average per-resource-element SNR is
/// snr_db, and are equalized and soft-decoded; crc_ok reflects the CRC-16
/// check on the decoded payload.
DecodedSubframe transmit_and_decode(const std::vector<std::complex<double>>& symbols,
                                    const FrequencyResponse& chan, double snr_db,
                                    RandomStream& noise, const DlConfig& cfg);

struct SubframeResult {
    bool crc_ok = false;
    int tb_bits = 0;
    int subframe_index = 0;
};

/// Soft-decision Viterbi decoder for the encoder above. LLR sign convention:
/// positive favors bit 0. Input length must be 2*(n_info + 6).
std::vector<std::uint8_t> viterbi_decode(const std::vector<float>& llr);

/// Stride used to permute symbols across the subcarrier grid before the
/// round-robin mapping, so that neighboring coded bits land on well
/// separated subcarriers. Pure function of the symbol count.
int interleaver_stride(std::size_t n_symbols);

}  // namespace a2g
