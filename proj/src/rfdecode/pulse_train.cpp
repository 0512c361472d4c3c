// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#include "wxkit/rfdecode/pulse_train.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wxkit::rf {

void PulseTrain::append(Level level, std::uint32_t duration_us)
{
  if (duration_us == 0) throw std::invalid_argument("pulse duration must be positive");
  if (!entries_.empty() && entries_.back().level == level)
    throw std::invalid_argument("pulse levels must alternate");
  entries_.push_back({level, duration_us});
}

void PulseTrain::append(const PulseTrain& other)
{
  for (const auto& p : other.entries_) append(p.level, p.duration_us);
}

PulseTrain PulseTrain::scaled(double factor) const
{
  PulseTrain out;
  out.entries_.reserve(entries_.size());
  for (const auto& p : entries_) {
    const auto d = static_cast<std::uint32_t>(std::max(1.0, std::round(p.duration_us * factor)));
    out.entries_.push_back({p.level, d});
  }
  return out;
}

BitString bits_from_bytes(std::span<const std::uint8_t> bytes)
{
  BitString bits;
  bits.reserve(bytes.size() * 8);
  for (auto b : bytes)
    for (int i = 7; i >= 0; --i) bits.push_back((b >> i) & 1);
  return bits;
}

BitString bits_from_nibbles(std::span<const std::uint8_t> nibbles)
{
  BitString bits;
  bits.reserve(nibbles.size() * 4);
  for (auto n : nibbles)
    for (int i = 3; i >= 0; --i) bits.push_back((n >> i) & 1);
  return bits;
}

std::vector<std::uint8_t> bytes_from_bits(const BitString& bits)
{
  std::vector<std::uint8_t> out((bits.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) out[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
  return out;
}

std::vector<std::uint8_t> nibbles_from_bits(const BitString& bits)
{
  std::vector<std::uint8_t> out((bits.size() + 3) / 4, 0);
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) out[i / 4] |= static_cast<std::uint8_t>(0x8u >> (i % 4));
  return out;
}

} // namespace wxkit::rf
