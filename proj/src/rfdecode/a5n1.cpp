// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#include "wxkit/rfdecode/a5n1.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "wxkit/core/units.hpp"
#include "wxkit/rfdecode/errors.hpp"
#include "wxkit/rfdecode/framer.hpp"

namespace wxkit::rf {

namespace a5n1 {

double wind_kph_from_raw(unsigned raw)
{
  return raw == 0 ? 0.0 : wind_kph_per_count * raw + wind_kph_offset;
}

double temp_c_from_raw(unsigned raw)
{
  return units::fahrenheit_to_celsius(raw / 10.0 - 40.0);
}

std::uint8_t with_parity(std::uint8_t low7)
{
  low7 &= 0x7F;
  return static_cast<std::uint8_t>(low7 | ((std::popcount(low7) & 1u) << 7));
}

bool parity_ok(std::uint8_t byte)
{
  return (std::popcount(byte) & 1u) == 0;
}

} // namespace a5n1

namespace {

constexpr unsigned max_temp_raw = 127 * 16 + 15;
constexpr unsigned max_wind_raw = 127;
constexpr unsigned max_humidity = 127;

std::uint8_t checksum(const A5n1Frame& f)
{
  unsigned sum = 0;
  for (int i = 0; i < 7; ++i) sum += f.bytes[i];
  return static_cast<std::uint8_t>(sum & 0xFF);
}

unsigned wind_raw_for(double kph)
{
  if (!(kph >= 0.0)) throw EncodeError("a5n1: wind speed must be non-negative");
  const double top = a5n1::wind_kph_from_raw(max_wind_raw);
  const double half_step = a5n1::wind_kph_per_count / 2.0;
  if (kph > top + half_step) throw EncodeError("a5n1: wind speed above " + std::to_string(top));
  long r = std::lround((kph - a5n1::wind_kph_offset) / a5n1::wind_kph_per_count);
  r = std::clamp<long>(r, 1, max_wind_raw);
  const double err_r = std::abs(a5n1::wind_kph_from_raw(static_cast<unsigned>(r)) - kph);
  return (kph <= err_r) ? 0u : static_cast<unsigned>(r);
}

void require(const WeatherRecord& r, Field f, const char* name)
{
  if (!r.has(f)) throw EncodeError(std::string("a5n1: record lacks ") + name);
}

} // namespace

std::pair<A5n1Frame, WeatherRecord> decode_a5n1(const A5n1Frame& f)
{
  const auto& b = f.bytes;
  if (b[7] != checksum(f))
    throw DecodeError(DecodeErrc::checksum, "expected " + std::to_string(checksum(f)) + ", got " +
                                                std::to_string(b[7]));
  for (unsigned i = 2; i <= 6; ++i)
    if (!a5n1::parity_ok(b[i]))
      throw DecodeError(DecodeErrc::parity, "byte " + std::to_string(i), i);

  const unsigned type = b[2] & 0x3F;
  if (type != 0x31 && type != 0x38)
    throw DecodeError(DecodeErrc::unknown_message_type, "type 0x" + std::to_string(type));

  WeatherRecord r;
  r.station = StationId(Protocol::a5n1, ((b[0] & 0x3Fu) << 8) | b[1], b[0] >> 6);
  r.valid.set(Field::sensor_battery_ok, (b[2] >> 6) & 1);
  r.wind_speed_kph = a5n1::wind_kph_from_raw(b[3] & 0x7F);
  r.valid.set(Field::wind_speed);

  if (type == 0x31) {
    r.wind_dir_deg = (b[4] & 0x0F) * a5n1::dir_deg_per_code;
    r.valid.set(Field::wind_dir);
    const unsigned tips = ((b[5] & 0x7Fu) << 7) | (b[6] & 0x7Fu);
    r.rain_mm = tips * a5n1::rain_mm_per_tip;
    r.valid.set(Field::rain);
  } else {
    const unsigned raw = ((b[4] & 0x7Fu) << 4) | ((b[5] >> 3) & 0x0Fu);
    r.temperature_c = a5n1::temp_c_from_raw(raw);
    r.valid.set(Field::temperature);
    const unsigned hum = b[6] & 0x7F;
    r.humidity_pct = hum;
    // 101..127 fits the field but is not a humidity.
    r.valid.set(Field::humidity, hum <= 100);
  }
  return {f, r};
}

std::pair<A5n1Frame, WeatherRecord> decode_a5n1(const BitString& bits)
{
  if (bits.size() != a5n1::frame_bits)
    throw DecodeError(DecodeErrc::wrong_length,
                      "a5n1 needs 64 bits, got " + std::to_string(bits.size()));
  A5n1Frame f;
  const auto bytes = bytes_from_bits(bits);
  std::copy(bytes.begin(), bytes.end(), f.bytes.begin());
  return decode_a5n1(f);
}

A5n1Frame build_a5n1_frame(const WeatherRecord& r, A5n1MessageType type)
{
  if (r.station.protocol() != Protocol::a5n1) throw EncodeError("a5n1: station is not a5n1");
  require(r, Field::wind_speed, "wind speed");

  std::array<std::uint8_t, 8> b{};
  b[0] = static_cast<std::uint8_t>((r.station.channel() << 6) | (r.station.id() >> 8));
  b[1] = static_cast<std::uint8_t>(r.station.id() & 0xFF);
  b[2] = a5n1::with_parity(static_cast<std::uint8_t>((r.sensor_battery_ok() ? 0x40 : 0) |
                                                     static_cast<unsigned>(type)));
  b[3] = a5n1::with_parity(static_cast<std::uint8_t>(wind_raw_for(r.wind_speed_kph)));

  if (type == A5n1MessageType::wind_dir_rain) {
    require(r, Field::wind_dir, "wind direction");
    require(r, Field::rain, "rain");
    if (!(r.wind_dir_deg >= 0.0 && r.wind_dir_deg < 360.0))
      throw EncodeError("a5n1: wind direction outside [0, 360)");
    const auto code = static_cast<unsigned>(std::lround(r.wind_dir_deg / a5n1::dir_deg_per_code)) % 16;
    const long tips = std::lround(r.rain_mm / a5n1::rain_mm_per_tip);
    if (tips < 0 || tips >= static_cast<long>(a5n1::rain_counter_modulus))
      throw EncodeError("a5n1: rain counter outside 14 bits");
    b[4] = a5n1::with_parity(static_cast<std::uint8_t>(code));
    b[5] = a5n1::with_parity(static_cast<std::uint8_t>(tips >> 7));
    b[6] = a5n1::with_parity(static_cast<std::uint8_t>(tips & 0x7F));
  } else if (type == A5n1MessageType::temp_humidity) {
    require(r, Field::temperature, "temperature");
    require(r, Field::humidity, "humidity");
    const long raw = std::lround((units::celsius_to_fahrenheit(r.temperature_c) + 40.0) * 10.0);
    if (raw < 0 || raw > static_cast<long>(max_temp_raw))
      throw EncodeError("a5n1: temperature outside -40..164.7 °F");
    const long hum = std::lround(r.humidity_pct);
    if (hum < 0 || hum > static_cast<long>(max_humidity))
      throw EncodeError("a5n1: humidity outside 0..127");
    b[4] = a5n1::with_parity(static_cast<std::uint8_t>(raw >> 4));
    b[5] = a5n1::with_parity(static_cast<std::uint8_t>((raw & 0x0F) << 3));
    b[6] = a5n1::with_parity(static_cast<std::uint8_t>(hum));
  } else {
    throw EncodeError("a5n1: unknown message type");
  }

  A5n1Frame f{b};
  f.bytes[7] = checksum(f);
  return f;
}

PulseTrain encode_a5n1(const WeatherRecord& r, A5n1MessageType type, const TimingSpec& spec)
{
  const auto f = build_a5n1_frame(r, type);
  return modulate(bits_from_bytes(f.bytes), spec, Protocol::a5n1);
}

} // namespace wxkit::rf
