// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "wxkit/simkit/config.hpp"

namespace wxkit::sim {

struct Invariants {
  bool time_monotone = true;
  bool ledger_contiguous = true;
  bool ledger_consistent = true;
  bool duty_cycle = true;
  bool delivered_decoded = true;
  /// Only enforced without bit errors; corrupted frames can slip past the
  /// sensor-link checks.
  bool lossless_fidelity = true;

  bool all() const noexcept
  {
    return time_monotone && ledger_contiguous && ledger_consistent && duty_cycle &&
           delivered_decoded && lossless_fidelity;
  }
};

struct SimSummary {
  double duration_s = 0.0;
  std::uint64_t cycles = 0;
  std::uint64_t frames_emitted = 0;
  std::uint64_t frames_lost = 0;
  std::uint64_t frames_corrupted = 0;
  std::uint64_t frames_heard = 0;
  std::uint64_t frames_accepted = 0;
  std::uint64_t frames_rejected = 0;
  std::uint64_t uplinks_sent = 0;
  std::uint64_t uplinks_lost = 0;
  std::uint64_t uplinks_delivered = 0;
  std::uint64_t uplink_errors = 0;
  std::uint64_t complete_records = 0;
  std::uint64_t truth_matches = 0;
  std::uint64_t truth_mismatches = 0;
  double energy_uwh = 0.0;
  std::map<std::string, double> energy_by_phase_uwh;
  double closed_form_uwh = 0.0;
  double airtime_s = 0.0;
  double duty_utilization_pct = 0.0;
  double max_hour_airtime_s = 0.0;
  Invariants invariants;

  nlohmann::ordered_json to_json() const;
};

struct SimTrace {
  std::vector<std::string> lines; ///< one JSON object per event, time-ordered
  SimSummary summary;

  /// Event lines followed by a final {"summary": ...} line.
  std::string to_jsonl() const;
};

/// Runs one deterministic simulation.  Throws ConfigError on a bad config.
SimTrace run(const SimConfig& config);

} // namespace wxkit::sim
