// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "wxkit/core/weather_record.hpp"
#include "wxkit/rfdecode/pulse_train.hpp"
#include "wxkit/rfdecode/timing.hpp"

namespace wxkit::rf {

/// AcuRite 5-in-1 style frame, 8 bytes:
///
///   byte0  [7:6] channel, [5:0] id high bits
///   byte1  id low byte
///   byte2  [7] parity, [6] battery ok, [5:0] message type
///   byte3  [7] parity, [6:0] wind speed raw
///   0x31:  byte4 [3:0] wind direction code, byte5/6 [6:0] rain counter hi/lo
///   0x38:  byte4 [6:0] temp raw hi, byte5 [6:3] temp raw lo, byte6 [6:0] humidity
///   byte7  sum(byte0..6) mod 256
///
/// Bytes 2..6 carry even parity in bit 7.
enum class A5n1MessageType : std::uint8_t {
  wind_dir_rain = 0x31,
  temp_humidity = 0x38,
};

struct A5n1Frame {
  std::array<std::uint8_t, 8> bytes{};

  A5n1MessageType message_type() const noexcept
  {
    return static_cast<A5n1MessageType>(bytes[2] & 0x3F);
  }
  friend bool operator==(const A5n1Frame&, const A5n1Frame&) = default;
};

namespace a5n1 {

constexpr unsigned frame_bits = 64;
constexpr double rain_mm_per_tip = 0.254;
constexpr unsigned rain_counter_modulus = 1u << 14;
constexpr double wind_kph_per_count = 0.8278;
constexpr double wind_kph_offset = 1.0;
constexpr double dir_deg_per_code = 22.5;

/// Physical value behind each raw field.
double wind_kph_from_raw(unsigned raw);
double temp_c_from_raw(unsigned raw);

std::uint8_t with_parity(std::uint8_t low7);
bool parity_ok(std::uint8_t byte);

} // namespace a5n1

/// Checks checksum, parity and type, then extracts a partial record.
std::pair<A5n1Frame, WeatherRecord> decode_a5n1(const BitString& bits);
std::pair<A5n1Frame, WeatherRecord> decode_a5n1(const A5n1Frame& frame);

/// Builds a frame of the given type from physical values; checksum and
/// parity are computed.  Fields the type carries must be valid in `r`.
A5n1Frame build_a5n1_frame(const WeatherRecord& r, A5n1MessageType type);

PulseTrain encode_a5n1(const WeatherRecord& r, A5n1MessageType type,
                       const TimingSpec& spec = {});

} // namespace wxkit::rf
