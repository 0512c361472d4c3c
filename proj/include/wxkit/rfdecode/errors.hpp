// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wxkit::rf {

enum class DecodeErrc : std::uint8_t {
  wrong_length,
  checksum,
  parity,
  unknown_message_type,
  bad_sync,
  digit_repeat,
  non_bcd_digit,
  unknown_quantity,
  value_out_of_range,
};

std::string_view to_string(DecodeErrc e);

/// Every frame-level rejection.  `index` is the failing byte (A5N1 parity)
/// or nibble (LCW BCD) when one applies.
class DecodeError : public std::runtime_error {
public:
  DecodeError(DecodeErrc code, std::string detail, std::optional<unsigned> index = {});

  DecodeErrc code() const noexcept { return code_; }
  std::optional<unsigned> index() const noexcept { return index_; }

private:
  DecodeErrc code_;
  std::optional<unsigned> index_;
};

/// Value that the target air format cannot carry.
class EncodeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace wxkit::rf
