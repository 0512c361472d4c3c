// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#pragma once

#include <deque>
#include <span>
#include <vector>

namespace wxkit::lorawan {

/// Silence required after a transmission of `t_air` seconds so that the
/// transmitter stays under `duty_limit`.
double duty_cycle_wait(double t_air, double duty_limit);

struct GovernorDecision {
  bool allowed;
  double next_allowed_s;
};

/// May a new transmission start at `now`, given the previous one of
/// `t_air` seconds ended at `last_tx_end`?
GovernorDecision governor_check(double last_tx_end, double t_air, double now,
                                double duty_limit = 0.01);

struct Transmission {
  double start_s;
  double airtime_s;
};

/// Single-sub-band governor for one transmitter.  Besides the silence after
/// each frame it keeps every sliding window's airtime within the budget.
class DutyCycleGovernor {
public:
  explicit DutyCycleGovernor(double duty_limit = 0.01, double window_s = 3600.0);

  /// May a frame of `t_air` seconds start at `now`?
  GovernorDecision check(double now, double t_air) const;
  /// Records a transmission.  Throws std::logic_error if it was not allowed.
  void record(double start, double t_air);

  double duty_limit() const noexcept { return limit_; }

private:
  double limit_;
  double window_;
  std::deque<Transmission> recent_;
};

/// Largest total airtime inside any window of `window_s` seconds.
double max_window_airtime(std::span<const Transmission> txs, double window_s = 3600.0);

} // namespace wxkit::lorawan
