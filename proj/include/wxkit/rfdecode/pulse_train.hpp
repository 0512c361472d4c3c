// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace wxkit::rf {

enum class Level : std::uint8_t { low, high };

struct Pulse {
  Level level;
  std::uint32_t duration_us;

  friend bool operator==(const Pulse&, const Pulse&) = default;
};

/// Demodulated OOK capture.  Levels strictly alternate and every duration is
/// positive; `append` enforces both.
class PulseTrain {
public:
  PulseTrain() = default;

  void append(Level level, std::uint32_t duration_us);
  void append(const PulseTrain& other);

  std::span<const Pulse> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const Pulse& operator[](std::size_t i) const { return entries_[i]; }

  /// Every duration multiplied by `factor`, rounded, floored at 1 µs.
  PulseTrain scaled(double factor) const;

  friend bool operator==(const PulseTrain&, const PulseTrain&) = default;

private:
  std::vector<Pulse> entries_;
};

/// Bits in transmission order, most significant first.
using BitString = std::vector<bool>;

BitString bits_from_bytes(std::span<const std::uint8_t> bytes);
BitString bits_from_nibbles(std::span<const std::uint8_t> nibbles);
/// Packs MSB first; a trailing partial byte is zero-padded.
std::vector<std::uint8_t> bytes_from_bits(const BitString& bits);
std::vector<std::uint8_t> nibbles_from_bits(const BitString& bits);

} // namespace wxkit::rf
