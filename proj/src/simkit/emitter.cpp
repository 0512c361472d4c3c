// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#include "wxkit/simkit/emitter.hpp"

#include <algorithm>

#include "wxkit/rfdecode/a5n1.hpp"
#include "wxkit/rfdecode/lcw.hpp"

namespace wxkit::sim {

namespace {

int walk(Rng& rng, int v, int step, int lo, int hi)
{
  return std::clamp(v + rng.uniform_int(-step, step), lo, hi);
}

WeatherRecord blank(const StationId& s)
{
  WeatherRecord r;
  r.station = s;
  r.valid.set(Field::sensor_battery_ok);
  return r;
}

} // namespace

StationEmitter::StationEmitter(const StationSpec& spec, std::uint64_t seed)
    : spec_(spec),
      station_(spec.protocol, spec.id, spec.channel),
      rng_(seed, Stream::weather),
      period_(to_us(spec.effective_period_s()))
{
  Rng phase(seed, Stream::phase);
  const double ph = spec.phase_s.value_or(phase.uniform() * spec.effective_period_s());
  next_at_ = to_us(ph);

  if (spec.protocol == Protocol::a5n1) {
    temp_ = rng_.uniform_int(950, 1050); // 55..65 °F
    humidity_ = rng_.uniform_int(40, 70);
    wind_ = rng_.uniform_int(0, 10);
  } else {
    temp_ = rng_.uniform_int(520, 580); // 12..18 °C
    humidity_ = rng_.uniform_int(400, 700);
    wind_ = rng_.uniform_int(0, 60);
  }
  dir_ = rng_.uniform_int(0, 15);
}

void StationEmitter::evolve()
{
  if (spec_.protocol == Protocol::a5n1) {
    temp_ = walk(rng_, temp_, 3, 0, 2047);
    humidity_ = walk(rng_, humidity_, 1, 1, 100);
    wind_ = walk(rng_, wind_, 2, 0, 60);
  } else {
    temp_ = walk(rng_, temp_, 3, 0, 999);
    humidity_ = walk(rng_, humidity_, 5, 10, 999);
    wind_ = walk(rng_, wind_, 4, 0, 400);
  }
  dir_ = (dir_ + rng_.uniform_int(-1, 1) + 16) % 16;
  if (rng_.bernoulli(0.05)) rain_tips_ += static_cast<unsigned>(rng_.uniform_int(1, 3));
}

Emission StationEmitter::emit()
{
  evolve();
  Emission e = spec_.protocol == Protocol::a5n1 ? emit_a5n1() : emit_lcw();
  e.at = next_at_;
  ++count_;
  next_at_ += period_;
  return e;
}

Emission StationEmitter::emit_a5n1()
{
  Emission e;
  WeatherRecord r = blank(station_);
  r.wind_speed_kph = rf::a5n1::wind_kph_from_raw(static_cast<unsigned>(wind_));
  r.valid.set(Field::wind_speed);
  rf::A5n1MessageType type = count_ % 2 == 0 ? rf::A5n1MessageType::wind_dir_rain : rf::A5n1MessageType::temp_humidity;
  if (type == rf::A5n1MessageType::wind_dir_rain) {
    e.kind = "0x31";
    r.wind_dir_deg = dir_ * rf::a5n1::dir_deg_per_code;
    r.rain_mm = static_cast<double>(rain_tips_ % rf::a5n1::rain_counter_modulus) *
                rf::a5n1::rain_mm_per_tip;
    r.valid.set(Field::wind_dir);
    r.valid.set(Field::rain);
  } else {
    e.kind = "0x38";
    r.temperature_c = rf::a5n1::temp_c_from_raw(static_cast<unsigned>(temp_));
    r.humidity_pct = humidity_;
    r.valid.set(Field::temperature);
    r.valid.set(Field::humidity);
  }
  e.bits = rf::bits_from_bytes(rf::build_a5n1_frame(r, type).bytes);
  e.truth = r;
  e.truth.rain_mm = static_cast<double>(rain_tips_) * rf::a5n1::rain_mm_per_tip;
  return e;
}

Emission StationEmitter::emit_lcw()
{
  Emission e;
  WeatherRecord r = blank(station_);
  const auto q = static_cast<rf::LcwQuantity>(count_ % 5);
  double value = 0.0;
  switch (q) {
  case rf::LcwQuantity::temperature:
    value = temp_ / 10.0 - 40.0;
    r.temperature_c = value;
    r.valid.set(Field::temperature);
    break;
  case rf::LcwQuantity::humidity:
    value = humidity_ / 10.0;
    r.humidity_pct = value;
    r.valid.set(Field::humidity);
    break;
  case rf::LcwQuantity::rain:
    value = static_cast<double>(rain_tips_ % 1000) * rf::lcw::rain_mm_per_count;
    r.rain_mm = static_cast<double>(rain_tips_) * rf::lcw::rain_mm_per_count;
    r.valid.set(Field::rain);
    break;
  case rf::LcwQuantity::wind_speed:
    value = wind_ / 10.0 * 3.6;
    r.wind_speed_kph = value;
    r.valid.set(Field::wind_speed);
    break;
  case rf::LcwQuantity::wind_dir:
    value = dir_ * 22.5;
    r.wind_dir_deg = value;
    r.valid.set(Field::wind_dir);
    break;
  }
  e.kind = std::string(rf::to_string(q));
  e.bits = rf::bits_from_nibbles(rf::build_lcw_frame(q, value, station_, true).nibbles);
  e.truth = r;
  return e;
}

} // namespace wxkit::sim
