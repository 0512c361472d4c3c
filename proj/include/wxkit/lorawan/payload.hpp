// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "wxkit/core/weather_record.hpp"

namespace wxkit::lorawan {

/// Compact uplink payload, big-endian throughout:
///
///   off size field
///    0   1   version (0x01)
///    1   1   station type (0x01 a5n1, 0x02 lcw)
///    2   2   channel << 14 | id
///    4   2   seq
///    6   1   validity flags
///    7   2   temperature °C x100, signed
///    9   1   humidity % x2
///   10   2   wind km/h x10
///   12   2   wind direction ° x10
///   14   4   rain mm x100
///   18   4   pressure Pa
///   22   2   board temperature °C x100, signed (a5n1 only)
///   ..   2   battery mV
///   ..   1   frames received this cycle
///   ..   2   cycle time s
///
/// 29 bytes for a5n1, 27 for lcw.  Invalid fields are sent as zero.
namespace payload {
constexpr std::uint8_t version = 0x01;
constexpr std::size_t a5n1_size = 29;
constexpr std::size_t lcw_size = 27;
} // namespace payload

struct PayloadMeta {
  std::uint8_t frames_received = 0;
  std::uint16_t cycle_time_s = 0;

  friend bool operator==(const PayloadMeta&, const PayloadMeta&) = default;
};

struct DecodedPayload {
  WeatherRecord record;
  PayloadMeta meta;
};

class PayloadError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::size_t payload_size(Protocol p);

std::vector<std::uint8_t> payload_encode(const WeatherRecord& record, const PayloadMeta& meta);
DecodedPayload payload_decode(std::span<const std::uint8_t> bytes);

} // namespace wxkit::lorawan
