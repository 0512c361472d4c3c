// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#pragma once

#include <cstdint>
#include <string>

#include "wxkit/core/weather_record.hpp"
#include "wxkit/rfdecode/pulse_train.hpp"
#include "wxkit/simkit/config.hpp"
#include "wxkit/simkit/rng.hpp"

namespace wxkit::sim {

using SimTime = std::int64_t; ///< microseconds

constexpr SimTime to_us(double s) { return static_cast<SimTime>(s * 1e6 + (s >= 0 ? 0.5 : -0.5)); }
constexpr double to_s(SimTime t) { return static_cast<double>(t) * 1e-6; }

struct Emission {
  SimTime at = 0;
  std::string kind; ///< "0x31", "0x38", or an LCW quantity name
  rf::BitString bits;
  /// Exactly the values the frame carries, with rain as the running total
  /// since the station started.
  WeatherRecord truth;
};

/// A sensor unit broadcasting on a fixed period.  Weather evolves as a
/// bounded random walk on the codec's own raw grid, so every truth value is
/// exactly representable on the wire.
class StationEmitter {
public:
  StationEmitter(const StationSpec& spec, std::uint64_t seed);

  SimTime next_time() const noexcept { return next_at_; }
  /// Produces the emission at next_time() and advances.
  Emission emit();

private:
  void evolve();
  Emission emit_a5n1();
  Emission emit_lcw();

  StationSpec spec_;
  StationId station_;
  Rng rng_;
  SimTime period_;
  SimTime next_at_;
  std::uint64_t count_ = 0;

  // Raw-grid state.  A5N1: temp raw 0..2047 (0.1 °F), humidity %, wind raw
  // 0..127, direction code 0..15.  LCW: value digits 0..999.
  int temp_ = 0;
  int humidity_ = 0;
  int wind_ = 0;
  int dir_ = 0;
  std::uint64_t rain_tips_ = 0;
};

} // namespace wxkit::sim
