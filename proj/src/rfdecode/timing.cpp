// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#include "wxkit/rfdecode/timing.hpp"

#include <stdexcept>

namespace wxkit::rf {

void TimingSpec::validate() const
{
  if (!(tolerance > 0.0 && tolerance < 0.5))
    throw std::invalid_argument("timing tolerance must lie in (0, 0.5)");
  const std::uint32_t durations[] = {
      a5n1.sync_us,     a5n1.bit1_high_us, a5n1.bit1_low_us, a5n1.bit0_high_us,
      a5n1.bit0_low_us, lcw.bit0_high_us,  lcw.bit1_high_us, lcw.gap_us,
      trailer_us,
  };
  for (auto d : durations)
    if (d == 0) throw std::invalid_argument("nominal durations must be positive");
  if (a5n1.sync_pairs == 0) throw std::invalid_argument("a5n1 needs at least one sync pair");
}

} // namespace wxkit::rf
