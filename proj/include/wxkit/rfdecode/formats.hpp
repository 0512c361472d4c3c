// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wxkit/rfdecode/pulse_train.hpp"

namespace wxkit::rf {

/// Malformed text input; `line` is 1-based.
class FormatError : public std::runtime_error {
public:
  FormatError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

// Capture format: one "H <us>" or "L <us>" per line, '#' starts a comment.
PulseTrain read_pulses(std::istream& in);
void write_pulses(std::ostream& out, const PulseTrain& train);

// Bitstring format: one frame per line of '0'/'1'.
std::vector<BitString> read_bitstrings(std::istream& in);
std::string to_bit_text(const BitString& bits);

// Hex format: one frame per line, lowercase, no separators.  A5N1 frames
// and LoRaWAN payloads are whole bytes; LCW frames are 13 hex digits, one
// per nibble.
std::vector<std::string> read_hex_lines(std::istream& in);
std::string to_hex(std::span<const std::uint8_t> bytes);
std::string nibbles_to_hex(std::span<const std::uint8_t> nibbles);
/// Throws std::invalid_argument on odd length or a non-hex digit.
std::vector<std::uint8_t> from_hex(std::string_view hex);
std::vector<std::uint8_t> nibbles_from_hex(std::string_view hex);

} // namespace wxkit::rf
