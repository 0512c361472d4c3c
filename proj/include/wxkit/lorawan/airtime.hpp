// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace wxkit::lorawan {

struct RadioParams {
  unsigned sf = 9;
  std::uint32_t bandwidth_hz = 125000;
  unsigned coding_rate = 1; ///< 1..4 for 4/5..4/8
  unsigned preamble_symbols = 8;
  bool explicit_header = true;
  bool crc_on = true;
  /// Unset means the transceiver rule: on for SF11/SF12 at 125 kHz.
  std::optional<bool> low_dr_optimize;
  int tx_power_dbm = 14;

  bool low_dr_effective() const noexcept;
  /// Throws RadioParamError naming the offending parameter.
  void validate() const;
};

class RadioParamError : public std::invalid_argument {
public:
  RadioParamError(std::string param, const std::string& what)
      : std::invalid_argument(what), param_(std::move(param))
  {}
  const std::string& param() const noexcept { return param_; }

private:
  std::string param_;
};

double symbol_time_s(const RadioParams& p);

/// Number of payload symbols (including the 8 fixed ones).
unsigned payload_symbols(const RadioParams& p, unsigned phy_payload_len);

/// Time on air in seconds for a PHY payload of `phy_payload_len` bytes.
double airtime(const RadioParams& p, unsigned phy_payload_len);

} // namespace wxkit::lorawan
