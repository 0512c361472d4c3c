// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#include "wxkit/rfdecode/errors.hpp"

namespace wxkit::rf {

std::string_view to_string(DecodeErrc e)
{
  switch (e) {
  case DecodeErrc::wrong_length: return "wrong length";
  case DecodeErrc::checksum: return "checksum";
  case DecodeErrc::parity: return "parity";
  case DecodeErrc::unknown_message_type: return "unknown message type";
  case DecodeErrc::bad_sync: return "bad sync";
  case DecodeErrc::digit_repeat: return "digit repeat";
  case DecodeErrc::non_bcd_digit: return "non-bcd digit";
  case DecodeErrc::unknown_quantity: return "unknown quantity";
  case DecodeErrc::value_out_of_range: return "value out of range";
  }
  return "unknown";
}

DecodeError::DecodeError(DecodeErrc code, std::string detail, std::optional<unsigned> index)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code),
      index_(index)
{}

} // namespace wxkit::rf
