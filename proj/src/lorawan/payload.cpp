// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#include "wxkit/lorawan/payload.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace wxkit::lorawan {

namespace {

constexpr std::uint8_t type_a5n1 = 0x01;
constexpr std::uint8_t type_lcw = 0x02;

class Writer {
public:
  void u8(std::uint64_t v) { out.push_back(static_cast<std::uint8_t>(v)); }
  void u16(std::uint64_t v) { be(v, 2); }
  void u32(std::uint64_t v) { be(v, 4); }
  void s16(std::int64_t v) { be(static_cast<std::uint16_t>(static_cast<std::int16_t>(v)), 2); }

  std::vector<std::uint8_t> out;

private:
  void be(std::uint64_t v, int n)
  {
    for (int i = n - 1; i >= 0; --i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
};

class Reader {
public:
  explicit Reader(std::span<const std::uint8_t> b) : b_(b) {}
  std::uint32_t u8() { return take(1); }
  std::uint32_t u16() { return take(2); }
  std::uint32_t u32() { return take(4); }
  std::int32_t s16() { return static_cast<std::int16_t>(take(2)); }

private:
  std::uint32_t take(int n)
  {
    std::uint32_t v = 0;
    for (int i = 0; i < n; ++i) v = (v << 8) | b_[pos_++];
    return v;
  }
  std::span<const std::uint8_t> b_;
  std::size_t pos_ = 0;
};

// Scaled integer for a valid field, range-checked.
std::int64_t scaled(const char* name, bool valid, double v, double scale, std::int64_t lo,
                    std::int64_t hi)
{
  if (!valid) return 0;
  if (!std::isfinite(v)) throw PayloadError(std::string(name) + " is not finite");
  const auto q = std::llround(v * scale);
  if (q < lo || q > hi) throw PayloadError(std::string(name) + " out of payload range");
  return q;
}

} // namespace

std::size_t payload_size(Protocol p)
{
  return p == Protocol::a5n1 ? payload::a5n1_size : payload::lcw_size;
}

std::vector<std::uint8_t> payload_encode(const WeatherRecord& r, const PayloadMeta& meta)
{
  const bool a5 = r.station.protocol() == Protocol::a5n1;
  Writer w;
  w.out.reserve(payload_size(r.station.protocol()));
  w.u8(payload::version);
  w.u8(a5 ? type_a5n1 : type_lcw);
  w.u16((static_cast<unsigned>(r.station.channel()) << 14) | r.station.id());
  w.u16(r.seq);
  w.u8(r.valid.to_byte());
  w.s16(scaled("temperature", r.has(Field::temperature), r.temperature_c, 100, -32768, 32767));
  w.u8(scaled("humidity", r.has(Field::humidity), r.humidity_pct, 2, 0, 200));
  w.u16(scaled("wind speed", r.has(Field::wind_speed), r.wind_speed_kph, 10, 0, 65535));
  w.u16(scaled("wind direction", r.has(Field::wind_dir), r.wind_dir_deg, 10, 0, 3599));
  w.u32(scaled("rain", r.has(Field::rain), r.rain_mm, 100, 0, 0xFFFFFFFF));
  w.u32(scaled("pressure", r.has(Field::pressure), static_cast<double>(r.pressure_pa), 1, 0,
               0xFFFFFFFF));
  if (a5)
    w.s16(scaled("board temperature", r.board_temp_c.has_value(), r.board_temp_c.value_or(0), 100,
                 -32768, 32767));
  const auto mv = r.battery_mv.value_or(0);
  if (mv < 0 || mv > 65535) throw PayloadError("battery voltage out of payload range");
  w.u16(static_cast<std::uint64_t>(mv));
  w.u8(meta.frames_received);
  w.u16(meta.cycle_time_s);
  return std::move(w.out);
}

DecodedPayload payload_decode(std::span<const std::uint8_t> bytes)
{
  if (bytes.size() < 2) throw PayloadError("payload too short");
  if (bytes[0] != payload::version)
    throw PayloadError("unknown payload version " + std::to_string(bytes[0]));
  Protocol proto;
  if (bytes[1] == type_a5n1)
    proto = Protocol::a5n1;
  else if (bytes[1] == type_lcw)
    proto = Protocol::lcw;
  else
    throw PayloadError("unknown station type " + std::to_string(bytes[1]));
  if (bytes.size() != payload_size(proto))
    throw PayloadError("wrong payload length " + std::to_string(bytes.size()) + " for " +
                       std::string(to_string(proto)));

  Reader rd(bytes.subspan(2));
  DecodedPayload out;
  auto& r = out.record;
  const auto sid = rd.u16();
  try {
    r.station = StationId(proto, sid & 0x3FFF, sid >> 14);
  } catch (const std::invalid_argument& e) {
    throw PayloadError(e.what());
  }
  r.seq = static_cast<std::uint16_t>(rd.u16());
  try {
    r.valid = ValidityFlags::from_byte(static_cast<std::uint8_t>(rd.u8()));
  } catch (const std::invalid_argument& e) {
    throw PayloadError(e.what());
  }

  const auto temp = rd.s16();
  const auto hum = rd.u8();
  const auto wind = rd.u16();
  const auto dir = rd.u16();
  const auto rain = rd.u32();
  const auto pres = rd.u32();
  if (hum > 200) throw PayloadError("humidity byte " + std::to_string(hum) + " exceeds 200");
  if (dir >= 3600) throw PayloadError("wind direction exceeds 359.9");

  // An invalid field must be zero on the wire, keeping the encoding canonical.
  const std::pair<Field, bool> carried[] = {
      {Field::temperature, temp != 0}, {Field::humidity, hum != 0}, {Field::wind_speed, wind != 0},
      {Field::wind_dir, dir != 0},     {Field::rain, rain != 0},    {Field::pressure, pres != 0},
  };
  for (auto [f, nonzero] : carried)
    if (nonzero && !r.has(f)) throw PayloadError("invalid field carries data");

  r.temperature_c = temp / 100.0;
  r.humidity_pct = hum / 2.0;
  r.wind_speed_kph = wind / 10.0;
  r.wind_dir_deg = dir / 10.0;
  r.rain_mm = rain / 100.0;
  r.pressure_pa = pres;
  if (proto == Protocol::a5n1) r.board_temp_c = rd.s16() / 100.0;
  r.battery_mv = static_cast<std::int32_t>(rd.u16());
  out.meta.frames_received = static_cast<std::uint8_t>(rd.u8());
  out.meta.cycle_time_s = static_cast<std::uint16_t>(rd.u16());
  return out;
}

} // namespace wxkit::lorawan
