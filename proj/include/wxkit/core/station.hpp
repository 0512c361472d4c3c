// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace wxkit {

/// Supported weather-station radio families.
enum class Protocol : std::uint8_t {
  a5n1, ///< AcuRite 5-in-1 style, 8-byte PWM frames
  lcw,  ///< La Crosse WS-2300 style, 13-nibble frames
};

std::string_view to_string(Protocol p);
Protocol protocol_from_string(std::string_view s);

/// Identity of one outdoor sensor unit.
///
/// The id is 14 bits wide and the channel 2 bits.  La Crosse units have no
/// channel selector, so they are always on channel 0.
class StationId {
public:
  static constexpr std::uint16_t max_id = 0x3FFF;
  static constexpr std::uint8_t max_channel = 3;

  StationId() = default;
  StationId(Protocol protocol, unsigned id, unsigned channel = 0);

  Protocol protocol() const noexcept { return protocol_; }
  std::uint16_t id() const noexcept { return id_; }
  std::uint8_t channel() const noexcept { return channel_; }

  friend bool operator==(const StationId&, const StationId&) = default;

private:
  Protocol protocol_ = Protocol::a5n1;
  std::uint16_t id_ = 0;
  std::uint8_t channel_ = 0;
};

std::string to_string(const StationId& s);

} // namespace wxkit
