// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

// Reference field extraction for both sensor families, working on plain
// byte/nibble arrays.  Used to cross-check the library's codecs.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace ref {

struct Fields {
  unsigned id = 0;
  unsigned channel = 0;
  bool battery_ok = false;
  std::optional<double> temp_c;
  std::optional<double> humidity;
  std::optional<double> wind_kph;
  std::optional<double> dir_deg;
  std::optional<double> rain_mm;
  std::string error; ///< empty when the frame is valid
};

inline int popcount7(std::uint8_t b)
{
  int n = 0;
  for (int i = 0; i < 7; ++i) n += (b >> i) & 1;
  return n;
}

inline Fields a5n1(const std::array<std::uint8_t, 8>& b)
{
  Fields f;
  unsigned sum = 0;
  for (int i = 0; i < 7; ++i) sum += b[i];
  if ((sum & 0xFF) != b[7]) {
    f.error = "checksum";
    return f;
  }
  for (int i = 2; i <= 6; ++i) {
    if (((popcount7(b[i]) + (b[i] >> 7)) & 1) != 0) {
      f.error = "parity";
      return f;
    }
  }
  f.channel = b[0] >> 6;
  f.id = ((b[0] & 0x3Fu) << 8) | b[1];
  f.battery_ok = (b[2] >> 6) & 1;
  const unsigned type = b[2] & 0x3F;
  const unsigned wind = b[3] & 0x7F;
  f.wind_kph = wind == 0 ? 0.0 : 0.8278 * wind + 1.0;
  if (type == 0x31) {
    f.dir_deg = (b[4] & 0x0F) * 22.5;
    f.rain_mm = ((b[5] & 0x7F) * 128 + (b[6] & 0x7F)) * 0.254;
  } else if (type == 0x38) {
    const unsigned raw = (b[4] & 0x7Fu) * 16 + ((b[5] >> 3) & 0x0F);
    const double fahrenheit = raw / 10.0 - 40.0;
    f.temp_c = (fahrenheit - 32.0) * 5.0 / 9.0;
    f.humidity = b[6] & 0x7F;
  } else {
    f.error = "unknown message type";
  }
  return f;
}

inline Fields lcw(const std::array<std::uint8_t, 13>& n)
{
  Fields f;
  if (n[0] != 0x9) {
    f.error = "bad sync";
    return f;
  }
  unsigned sum = 0;
  for (int i = 0; i < 12; ++i) sum += n[i];
  if ((sum & 0xF) != n[12]) {
    f.error = "checksum";
    return f;
  }
  if (n[10] != n[4] || n[11] != n[5]) {
    f.error = "digit repeat";
    return f;
  }
  if (n[4] > 9 || n[5] > 9 || n[6] > 9) {
    f.error = "non-bcd digit";
    return f;
  }
  f.id = n[2] * 8u + (n[3] >> 1);
  f.battery_ok = n[3] & 1;
  const unsigned v = n[4] * 100u + n[5] * 10u + n[6];
  switch (n[1]) {
  case 0: f.temp_c = v / 10.0 - 40.0; break;
  case 1: f.humidity = v / 10.0; break;
  case 2: f.rain_mm = v * 0.518; break;
  case 3: f.wind_kph = v / 10.0 * 3.6; break;
  case 4:
    if (v > 15) f.error = "value out of range";
    else f.dir_deg = v * 22.5;
    break;
  default: f.error = "unknown quantity";
  }
  return f;
}

} // namespace ref
