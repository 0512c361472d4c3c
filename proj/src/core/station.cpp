// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#include "wxkit/core/station.hpp"

#include <stdexcept>

namespace wxkit {

std::string_view to_string(Protocol p)
{
  switch (p) {
  case Protocol::a5n1: return "a5n1";
  case Protocol::lcw: return "lcw";
  }
  return "?";
}

Protocol protocol_from_string(std::string_view s)
{
  if (s == "a5n1") return Protocol::a5n1;
  if (s == "lcw") return Protocol::lcw;
  throw std::invalid_argument("unknown protocol '" + std::string(s) + "'");
}

StationId::StationId(Protocol protocol, unsigned id, unsigned channel)
    : protocol_(protocol)
{
  if (id > max_id) throw std::invalid_argument("station id exceeds 14 bits");
  if (channel > max_channel) throw std::invalid_argument("station channel exceeds 2 bits");
  if (protocol == Protocol::lcw && channel != 0)
    throw std::invalid_argument("lcw stations have no channel selector");
  id_ = static_cast<std::uint16_t>(id);
  channel_ = static_cast<std::uint8_t>(channel);
}

std::string to_string(const StationId& s)
{
  return std::string(to_string(s.protocol())) + ":" + std::to_string(s.id()) + "/" +
         std::to_string(s.channel());
}

} // namespace wxkit
