// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#pragma once

#include <cstdint>

namespace wxkit::rf {

// Nominal pulse durations in µs.  The layouts are this project's own
// normative definition of each family's air interface.

struct A5n1Timing {
  std::uint32_t sync_us = 600;  // both high and low of each sync pair
  std::uint32_t sync_pairs = 4;
  std::uint32_t bit1_high_us = 400;
  std::uint32_t bit1_low_us = 200;
  std::uint32_t bit0_high_us = 200;
  std::uint32_t bit0_low_us = 400;
};

struct LcwTiming {
  std::uint32_t bit0_high_us = 1300;
  std::uint32_t bit1_high_us = 550;
  std::uint32_t gap_us = 1000;
};

struct TimingSpec {
  A5n1Timing a5n1;
  LcwTiming lcw;
  double tolerance = 0.35;          // fraction of nominal, in (0, 0.5)
  std::uint32_t trailer_us = 10000; // low emitted after the last bit of a frame
  std::uint32_t min_run_bits = 8;   // shorter runs are treated as noise

  /// Throws std::invalid_argument on an unusable spec.
  void validate() const;
};

} // namespace wxkit::rf
