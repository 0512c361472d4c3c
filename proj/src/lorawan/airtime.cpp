// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#include "wxkit/lorawan/airtime.hpp"

#include <algorithm>

namespace wxkit::lorawan {

bool RadioParams::low_dr_effective() const noexcept
{
  return low_dr_optimize.value_or(sf >= 11 && bandwidth_hz == 125000);
}

void RadioParams::validate() const
{
  if (sf < 7 || sf > 12) throw RadioParamError("sf", "spreading factor must be 7..12");
  if (bandwidth_hz != 125000 && bandwidth_hz != 250000 && bandwidth_hz != 500000)
    throw RadioParamError("bw", "bandwidth must be 125000, 250000 or 500000 Hz");
  if (coding_rate < 1 || coding_rate > 4)
    throw RadioParamError("cr", "coding rate must be 4/5..4/8");
  if (preamble_symbols < 6 || preamble_symbols > 65535)
    throw RadioParamError("preamble", "preamble must be 6..65535 symbols");
}

double symbol_time_s(const RadioParams& p)
{
  return static_cast<double>(1u << p.sf) / p.bandwidth_hz;
}

unsigned payload_symbols(const RadioParams& p, unsigned pl)
{
  p.validate();
  if (pl > 255) throw RadioParamError("payload", "PHY payload must be at most 255 bytes");
  const int sf = static_cast<int>(p.sf);
  const int de = p.low_dr_effective() ? 1 : 0;
  const int ih = p.explicit_header ? 0 : 1;
  const int crc = p.crc_on ? 1 : 0;
  const int num = 8 * static_cast<int>(pl) - 4 * sf + 28 + 16 * crc - 20 * ih;
  const int den = 4 * (sf - 2 * de);
  // ceil for positive numerators; the max() clamps the rest to zero.
  const int blocks = num > 0 ? (num + den - 1) / den : 0;
  return 8 + static_cast<unsigned>(std::max(blocks * static_cast<int>(p.coding_rate + 4), 0));
}

double airtime(const RadioParams& p, unsigned pl)
{
  const double ts = symbol_time_s(p);
  const unsigned n = payload_symbols(p, pl);
  return (p.preamble_symbols + 4.25) * ts + n * ts;
}

} // namespace wxkit::lorawan
