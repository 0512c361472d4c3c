// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#include "wxkit/core/weather_record.hpp"

namespace wxkit {

ValidityFlags ValidityFlags::from_byte(std::uint8_t b)
{
  if (b & reserved_mask) throw std::invalid_argument("validity flags: reserved bit set");
  ValidityFlags f;
  f.bits_ = b;
  return f;
}

WeatherRecord merge_partial(const WeatherRecord& existing, const WeatherRecord& incoming)
{
  if (!(existing.station == incoming.station))
    throw StationMismatch("merge_partial: " + to_string(existing.station) + " vs " +
                          to_string(incoming.station));

  WeatherRecord out = existing;
  out.seq = incoming.seq;
  if (incoming.has(Field::temperature)) out.temperature_c = incoming.temperature_c;
  if (incoming.has(Field::humidity)) out.humidity_pct = incoming.humidity_pct;
  if (incoming.has(Field::wind_speed)) out.wind_speed_kph = incoming.wind_speed_kph;
  if (incoming.has(Field::wind_dir)) out.wind_dir_deg = incoming.wind_dir_deg;
  if (incoming.has(Field::rain)) out.rain_mm = incoming.rain_mm;
  if (incoming.has(Field::pressure)) out.pressure_pa = incoming.pressure_pa;
  if (incoming.board_temp_c) out.board_temp_c = incoming.board_temp_c;
  if (incoming.battery_mv) out.battery_mv = incoming.battery_mv;

  for (Field f : measurement_fields)
    if (incoming.has(f)) out.valid.set(f);
  if (incoming.valid.any_measurement())
    out.valid.set(Field::sensor_battery_ok, incoming.sensor_battery_ok());
  return out;
}

bool is_complete(const WeatherRecord& r)
{
  return r.has(Field::temperature) && r.has(Field::humidity) && r.has(Field::wind_speed) &&
         r.has(Field::wind_dir) && r.has(Field::rain);
}

QuantizationBounds quantize_roundtrip_bounds(const WeatherRecord& r)
{
  // Half of each payload step: 0.01 °C, 0.5 %, 0.1 km/h, 0.1°, 0.01 mm, 1 Pa.
  QuantizationBounds b;
  if (r.has(Field::temperature)) b.temperature_c = 0.005;
  if (r.has(Field::humidity)) b.humidity_pct = 0.25;
  if (r.has(Field::wind_speed)) b.wind_speed_kph = 0.05;
  if (r.has(Field::wind_dir)) b.wind_dir_deg = 0.05;
  if (r.has(Field::rain)) b.rain_mm = 0.005;
  if (r.has(Field::pressure)) b.pressure_pa = 0.5;
  if (r.board_temp_c) b.board_temp_c = 0.005;
  return b;
}

} // namespace wxkit
