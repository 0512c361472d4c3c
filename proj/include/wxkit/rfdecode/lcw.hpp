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

/// La Crosse WS-2300 style frame of 13 nibbles:
///
///   n0      0x9 sync
///   n1      quantity
///   n2,n3   id = n2*8 + n3[3:1]; n3[0] battery ok
///   n4..n6  BCD value digits (hundreds, tens, units)
///   n7..n9  unused, sent as zero
///   n10,n11 repeat of n4,n5
///   n12     sum(n0..n11) mod 16
enum class LcwQuantity : std::uint8_t {
  temperature = 0,
  humidity = 1,
  rain = 2,
  wind_speed = 3,
  wind_dir = 4,
};

std::string_view to_string(LcwQuantity q);
LcwQuantity lcw_quantity_from_string(std::string_view s);

struct LcwFrame {
  std::array<std::uint8_t, 13> nibbles{};

  LcwQuantity quantity() const noexcept { return static_cast<LcwQuantity>(nibbles[1]); }
  unsigned value() const noexcept { return nibbles[4] * 100u + nibbles[5] * 10u + nibbles[6]; }
  friend bool operator==(const LcwFrame&, const LcwFrame&) = default;
};

namespace lcw {

constexpr unsigned frame_bits = 52;
constexpr std::uint8_t sync_nibble = 0x9;
constexpr unsigned max_id = 127;
constexpr unsigned max_value = 999;
constexpr double rain_mm_per_count = 0.518;

std::uint8_t checksum(const LcwFrame& f);

} // namespace lcw

std::pair<LcwFrame, WeatherRecord> decode_lcw(const BitString& bits);
std::pair<LcwFrame, WeatherRecord> decode_lcw(const LcwFrame& frame);

LcwFrame build_lcw_frame(LcwQuantity quantity, double value, const StationId& station,
                         bool battery_ok = true);

PulseTrain encode_lcw(LcwQuantity quantity, double value, const StationId& station,
                      bool battery_ok = true, const TimingSpec& spec = {});

/// Physical value carried by a field of `r`, as understood by the LCW codec.
double lcw_value_of(const WeatherRecord& r, LcwQuantity q);

} // namespace wxkit::rf
