// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "wxkit/core/weather_record.hpp"

namespace wxkit::rf {

/// Rain increment between two readings of the 14-bit A5N1 tip counter,
/// tolerating one wrap.
double rain_counter_delta(unsigned prev, unsigned curr);

/// Turns per-frame rain counter readings into a per-station cumulative
/// total that never decreases within one decoding session.
class DecodeSession {
public:
  /// Rewrites `r.rain_mm` (when valid) into session-cumulative form.
  WeatherRecord accumulate(WeatherRecord r);

private:
  struct Key {
    Protocol protocol;
    std::uint16_t id;
    std::uint8_t channel;
    friend auto operator<=>(const Key&, const Key&) = default;
  };
  struct RainState {
    unsigned last_count;
    double total_mm;
  };
  std::map<Key, RainState> rain_;
};

} // namespace wxkit::rf
