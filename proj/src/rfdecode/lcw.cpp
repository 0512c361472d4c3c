// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#include "wxkit/rfdecode/lcw.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "wxkit/core/units.hpp"
#include "wxkit/rfdecode/errors.hpp"
#include "wxkit/rfdecode/framer.hpp"

namespace wxkit::rf {

std::string_view to_string(LcwQuantity q)
{
  switch (q) {
  case LcwQuantity::temperature: return "temperature";
  case LcwQuantity::humidity: return "humidity";
  case LcwQuantity::rain: return "rain";
  case LcwQuantity::wind_speed: return "wind_speed";
  case LcwQuantity::wind_dir: return "wind_dir";
  }
  return "?";
}

LcwQuantity lcw_quantity_from_string(std::string_view s)
{
  for (unsigned q = 0; q <= 4; ++q)
    if (s == to_string(static_cast<LcwQuantity>(q))) return static_cast<LcwQuantity>(q);
  throw std::invalid_argument("unknown lcw quantity '" + std::string(s) + "'");
}

namespace lcw {

std::uint8_t checksum(const LcwFrame& f)
{
  unsigned sum = 0;
  for (int i = 0; i < 12; ++i) sum += f.nibbles[i];
  return static_cast<std::uint8_t>(sum & 0xF);
}

} // namespace lcw

namespace {

// Raw value V (0..999) for a physical value, per quantity scaling.
long raw_for(LcwQuantity q, double v)
{
  switch (q) {
  case LcwQuantity::temperature: return std::lround((v + 40.0) * 10.0);
  case LcwQuantity::humidity: return std::lround(v * 10.0);
  case LcwQuantity::rain: return std::lround(v / lcw::rain_mm_per_count);
  case LcwQuantity::wind_speed: return std::lround(units::kph_to_mps(v) * 10.0);
  case LcwQuantity::wind_dir:
    if (!(v >= 0.0 && v < 360.0)) return -1;
    return std::lround(v / 22.5) % 16;
  }
  return -1;
}

} // namespace

std::pair<LcwFrame, WeatherRecord> decode_lcw(const LcwFrame& f)
{
  const auto& n = f.nibbles;
  if (n[0] != lcw::sync_nibble)
    throw DecodeError(DecodeErrc::bad_sync, "nibble0 is " + std::to_string(n[0]));
  if (n[12] != lcw::checksum(f))
    throw DecodeError(DecodeErrc::checksum, "expected " + std::to_string(lcw::checksum(f)) +
                                                ", got " + std::to_string(n[12]));
  if (n[10] != n[4] || n[11] != n[5])
    throw DecodeError(DecodeErrc::digit_repeat, "value digits not repeated");
  for (unsigned i = 4; i <= 6; ++i)
    if (n[i] > 9) throw DecodeError(DecodeErrc::non_bcd_digit, "nibble " + std::to_string(i), i);
  if (n[1] > 4) throw DecodeError(DecodeErrc::unknown_quantity, "type " + std::to_string(n[1]));

  WeatherRecord r;
  r.station = StationId(Protocol::lcw, n[2] * 8u + (n[3] >> 1));
  r.valid.set(Field::sensor_battery_ok, n[3] & 1);

  const double v = f.value();
  switch (f.quantity()) {
  case LcwQuantity::temperature:
    r.temperature_c = v / 10.0 - 40.0;
    r.valid.set(Field::temperature);
    break;
  case LcwQuantity::humidity:
    r.humidity_pct = v / 10.0;
    r.valid.set(Field::humidity);
    break;
  case LcwQuantity::rain:
    r.rain_mm = v * lcw::rain_mm_per_count;
    r.valid.set(Field::rain);
    break;
  case LcwQuantity::wind_speed:
    r.wind_speed_kph = units::mps_to_kph(v / 10.0);
    r.valid.set(Field::wind_speed);
    break;
  case LcwQuantity::wind_dir:
    if (f.value() > 15)
      throw DecodeError(DecodeErrc::value_out_of_range, "direction code " + std::to_string(f.value()));
    r.wind_dir_deg = v * 22.5;
    r.valid.set(Field::wind_dir);
    break;
  }
  return {f, r};
}

std::pair<LcwFrame, WeatherRecord> decode_lcw(const BitString& bits)
{
  if (bits.size() != lcw::frame_bits)
    throw DecodeError(DecodeErrc::wrong_length,
                      "lcw needs 52 bits, got " + std::to_string(bits.size()));
  LcwFrame f;
  const auto nib = nibbles_from_bits(bits);
  std::copy(nib.begin(), nib.end(), f.nibbles.begin());
  return decode_lcw(f);
}

LcwFrame build_lcw_frame(LcwQuantity quantity, double value, const StationId& station,
                         bool battery_ok)
{
  if (station.protocol() != Protocol::lcw) throw EncodeError("lcw: station is not lcw");
  if (station.id() > lcw::max_id) throw EncodeError("lcw: station id exceeds 7 bits");
  if (static_cast<unsigned>(quantity) > 4) throw EncodeError("lcw: unknown quantity");
  const long v = raw_for(quantity, value);
  if (v < 0 || v > static_cast<long>(lcw::max_value))
    throw EncodeError("lcw: " + std::string(to_string(quantity)) + " value " +
                      std::to_string(value) + " not representable");

  LcwFrame f;
  auto& n = f.nibbles;
  n[0] = lcw::sync_nibble;
  n[1] = static_cast<std::uint8_t>(quantity);
  n[2] = static_cast<std::uint8_t>(station.id() >> 3);
  n[3] = static_cast<std::uint8_t>(((station.id() & 0x7) << 1) | (battery_ok ? 1 : 0));
  n[4] = static_cast<std::uint8_t>(v / 100);
  n[5] = static_cast<std::uint8_t>((v / 10) % 10);
  n[6] = static_cast<std::uint8_t>(v % 10);
  n[10] = n[4];
  n[11] = n[5];
  n[12] = lcw::checksum(f);
  return f;
}

PulseTrain encode_lcw(LcwQuantity quantity, double value, const StationId& station,
                      bool battery_ok, const TimingSpec& spec)
{
  const auto f = build_lcw_frame(quantity, value, station, battery_ok);
  return modulate(bits_from_nibbles(f.nibbles), spec, Protocol::lcw);
}

double lcw_value_of(const WeatherRecord& r, LcwQuantity q)
{
  switch (q) {
  case LcwQuantity::temperature: return r.temperature_c;
  case LcwQuantity::humidity: return r.humidity_pct;
  case LcwQuantity::rain: return r.rain_mm;
  case LcwQuantity::wind_speed: return r.wind_speed_kph;
  case LcwQuantity::wind_dir: return r.wind_dir_deg;
  }
  return 0.0;
}

} // namespace wxkit::rf
