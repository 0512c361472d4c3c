// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#include "wxkit/core/record_json.hpp"

#include <cmath>

namespace wxkit {

namespace {

double round_to(double v, int decimals)
{
  const double scale = std::pow(10.0, decimals);
  const double r = std::round(v * scale) / scale;
  // Normalise -0.0 so output never shows "-0.0".
  return r == 0.0 ? 0.0 : r;
}

template <typename T>
nlohmann::ordered_json value_or_null(bool valid, T v)
{
  return valid ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr);
}

} // namespace

nlohmann::ordered_json to_json(const WeatherRecord& r)
{
  nlohmann::ordered_json st;
  st["protocol"] = std::string(to_string(r.station.protocol()));
  st["id"] = r.station.id();
  st["channel"] = r.station.channel();

  nlohmann::ordered_json f;
  f["temperature_c"] = value_or_null(r.has(Field::temperature), round_to(r.temperature_c, 2));
  f["humidity_pct"] = value_or_null(r.has(Field::humidity), round_to(r.humidity_pct, 1));
  f["wind_speed_kph"] = value_or_null(r.has(Field::wind_speed), round_to(r.wind_speed_kph, 2));
  f["wind_dir_deg"] = value_or_null(r.has(Field::wind_dir), round_to(r.wind_dir_deg, 1));
  f["rain_mm"] = value_or_null(r.has(Field::rain), round_to(r.rain_mm, 3));
  f["pressure_pa"] = value_or_null(r.has(Field::pressure), r.pressure_pa);
  f["board_temp_c"] = value_or_null(r.board_temp_c.has_value(),
                                    round_to(r.board_temp_c.value_or(0.0), 2));
  f["battery_mv"] = value_or_null(r.battery_mv.has_value(), r.battery_mv.value_or(0));
  f["sensor_battery_ok"] = r.sensor_battery_ok();

  nlohmann::ordered_json j;
  j["station"] = std::move(st);
  j["seq"] = r.seq;
  j["fields"] = std::move(f);
  return j;
}

WeatherRecord record_from_json(const nlohmann::json& j)
{
  WeatherRecord r;
  const auto& st = j.at("station");
  r.station = StationId(protocol_from_string(st.at("protocol").get<std::string>()),
                        st.at("id").get<unsigned>(), st.value("channel", 0u));
  r.seq = j.value("seq", std::uint16_t{0});

  const auto& f = j.at("fields");
  auto read = [&](const char* key, Field field, auto& dst) {
    if (!f.contains(key) || f.at(key).is_null()) return;
    dst = f.at(key).get<std::remove_reference_t<decltype(dst)>>();
    r.valid.set(field);
  };
  read("temperature_c", Field::temperature, r.temperature_c);
  read("humidity_pct", Field::humidity, r.humidity_pct);
  read("wind_speed_kph", Field::wind_speed, r.wind_speed_kph);
  read("wind_dir_deg", Field::wind_dir, r.wind_dir_deg);
  read("rain_mm", Field::rain, r.rain_mm);
  read("pressure_pa", Field::pressure, r.pressure_pa);
  if (f.contains("board_temp_c") && !f.at("board_temp_c").is_null())
    r.board_temp_c = f.at("board_temp_c").get<double>();
  if (f.contains("battery_mv") && !f.at("battery_mv").is_null())
    r.battery_mv = f.at("battery_mv").get<std::int32_t>();
  r.valid.set(Field::sensor_battery_ok, f.value("sensor_battery_ok", false));
  return r;
}

std::string to_json_line(const WeatherRecord& r)
{
  return to_json(r).dump();
}

} // namespace wxkit
