// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "wxkit/core/station.hpp"

namespace wxkit {

/// Measurement fields that carry a validity bit.
enum class Field : std::uint8_t {
  sensor_battery_ok = 0,
  temperature = 1,
  humidity = 2,
  wind_speed = 3,
  wind_dir = 4,
  rain = 5,
  pressure = 6,
};

inline constexpr std::array<Field, 6> measurement_fields = {
    Field::temperature, Field::humidity, Field::wind_speed,
    Field::wind_dir,    Field::rain,     Field::pressure,
};

/// One byte on the wire; bit 7 is reserved and must stay clear.
///
/// Bit 0 is not a validity bit but the sensor unit's own battery status.
class ValidityFlags {
public:
  static constexpr std::uint8_t reserved_mask = 0x80;

  constexpr ValidityFlags() = default;

  static ValidityFlags from_byte(std::uint8_t b);
  constexpr std::uint8_t to_byte() const noexcept { return bits_; }

  constexpr bool test(Field f) const noexcept {
    return (bits_ >> static_cast<unsigned>(f)) & 1u;
  }
  constexpr void set(Field f, bool on = true) noexcept {
    const auto m = static_cast<std::uint8_t>(1u << static_cast<unsigned>(f));
    bits_ = on ? static_cast<std::uint8_t>(bits_ | m)
               : static_cast<std::uint8_t>(bits_ & ~m);
  }
  constexpr bool any_measurement() const noexcept { return (bits_ & 0x7E) != 0; }

  friend constexpr bool operator==(ValidityFlags, ValidityFlags) = default;

private:
  std::uint8_t bits_ = 0;
};

class StationMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Unified physical measurements in canonical units (°C, %, km/h, degrees,
/// mm, Pa).  Values whose validity bit is clear are meaningless.
struct WeatherRecord {
  StationId station;
  std::uint16_t seq = 0;
  double temperature_c = 0.0;
  double humidity_pct = 0.0;
  double wind_speed_kph = 0.0;
  double wind_dir_deg = 0.0;
  double rain_mm = 0.0; ///< cumulative
  std::int64_t pressure_pa = 0;
  /// Transponder-side readings; absent on records decoded from the sensor link.
  std::optional<double> board_temp_c;
  std::optional<std::int32_t> battery_mv;
  ValidityFlags valid;

  bool has(Field f) const noexcept { return valid.test(f); }
  bool sensor_battery_ok() const noexcept { return valid.test(Field::sensor_battery_ok); }

  friend bool operator==(const WeatherRecord&, const WeatherRecord&) = default;
};

/// Overlay `incoming` onto `existing`.  Validity is the union; where both
/// carry a field, incoming wins.  The sensor battery bit follows whichever
/// record last carried a measurement.
WeatherRecord merge_partial(const WeatherRecord& existing, const WeatherRecord& incoming);

/// True when every field the station family can report is valid.
bool is_complete(const WeatherRecord& r);

/// Worst-case absolute error each field picks up through the uplink payload.
struct QuantizationBounds {
  std::optional<double> temperature_c;
  std::optional<double> humidity_pct;
  std::optional<double> wind_speed_kph;
  std::optional<double> wind_dir_deg;
  std::optional<double> rain_mm;
  std::optional<double> pressure_pa;
  std::optional<double> board_temp_c;
};

QuantizationBounds quantize_roundtrip_bounds(const WeatherRecord& record);

} // namespace wxkit
