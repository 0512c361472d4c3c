// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wxkit/core/weather_record.hpp"
#include "wxkit/energy/profile.hpp"
#include "wxkit/lorawan/duty_cycle.hpp"
#include "wxkit/lorawan/frame.hpp"
#include "wxkit/lorawan/payload.hpp"
#include "wxkit/rfdecode/pulse_train.hpp"
#include "wxkit/rfdecode/rain.hpp"
#include "wxkit/rfdecode/timing.hpp"
#include "wxkit/simkit/config.hpp"
#include "wxkit/simkit/emitter.hpp"

namespace wxkit::sim {

enum class Phase : std::uint8_t {
  reset,
  init,
  rx1,
  inter_sleep,
  rx2,
  read_baro,
  build_tx,
  transmit,
  deep_sleep,
};

std::string_view to_string(Phase p);

/// Power drawn in each phase, µW.  Every active phase draws the fitted
/// baseline; transmission adds the radio on top.
struct StatePowers {
  double active_uw = 0.0;
  double tx_extra_uw = 0.0;
  double sleep_uw = 0.0;

  double of(Phase p) const noexcept;
};

/// Splits a platform's measured active energy into a baseline and, when the
/// platform has component detail, a transmitter share for `airtime_s`.
StatePowers attribute_power(const energy::EnergyProfile& profile, double airtime_s);

struct TransponderParams {
  StationId station;
  rf::TimingSpec timing;
  SimTime init = 0;
  SimTime inter_sleep = 0;
  SimTime rx_timeout = 0;
  SimTime baro = 0;
  SimTime build = 0;
  SimTime cycle = 0;
  SimTime min_active = 0;
  SimTime airtime = 0;
  double duty_limit = 0.01;
  StatePowers powers;
  std::int32_t battery_mv = 0;
  lorawan::AbpSession session;

  static TransponderParams from_config(const SimConfig& c);
};

struct TransponderState {
  Phase phase = Phase::reset;
  SimTime entered = 0;
  SimTime cycle_start = 0;
  std::uint64_t timer_token = 0; ///< 0: no timer pending
  std::uint64_t next_token = 1;
  WeatherRecord memory;
  unsigned frames_received = 0;
  std::uint16_t seq = 0;
  lorawan::AbpSession session;
  rf::DecodeSession rain;
  lorawan::DutyCycleGovernor governor;

  explicit TransponderState(const TransponderParams& p);
};

// Inputs
struct PowerOn {};
struct TimerFired {
  std::uint64_t token;
};
struct FrameArrival {
  rf::PulseTrain train;
};
struct BaroReading {
  std::uint64_t token;
  double pressure_pa;
  double temp_c;
};
using Input = std::variant<PowerOn, TimerFired, FrameArrival, BaroReading>;

// Actions
struct ScheduleTimer {
  SimTime at;
  std::uint64_t token;
  bool wants_baro; ///< deliver a BaroReading instead of TimerFired
};
struct LedgerEntry {
  Phase phase;
  SimTime start;
  SimTime end;
  double power_uw;
  double energy_uwh() const noexcept { return power_uw * to_s(end - start) / 3600.0; }
};
struct PhaseChange {
  Phase from;
  Phase to;
};
struct FrameAccepted {
  WeatherRecord decoded;
};
struct FrameRejected {
  std::string reason;
};
struct UplinkSent {
  std::vector<std::uint8_t> frame;
  std::uint32_t fcnt;
  SimTime airtime;
  WeatherRecord record;
  lorawan::PayloadMeta meta;
};
using Action =
    std::variant<ScheduleTimer, LedgerEntry, PhaseChange, FrameAccepted, FrameRejected, UplinkSent>;

/// An input the current phase cannot take.
class ProtocolViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

struct StepResult {
  TransponderState state;
  std::vector<Action> actions;
};

/// The transponder's whole behaviour as a pure transition.
StepResult step(const TransponderParams& params, const TransponderState& state, SimTime now,
                const Input& input);

} // namespace wxkit::sim
