// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wxkit/energy/profile.hpp"

namespace wxkit::energy {

class EnergyModelError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Energy of one transmit cycle of `t_cycle_s` seconds, µWh.
double cycle_energy(const EnergyProfile& p, double t_cycle_s);

/// µWh consumed per day when cycling every `t_cycle_s` seconds.
double daily_energy(const EnergyProfile& p, double t_cycle_s);

double battery_life_days(const EnergyProfile& p, double t_cycle_s);

/// Power (µW) left for the microcontroller across the whole active phase
/// after the receiver and transmitter energies are taken out:
///   (E_active - E_shr - E_tx) / t_active
/// Requires `p.detail`; throws EnergyModelError if the result is negative.
double fit_component_power(const EnergyProfile& p, double measured_e_active_uwh);

/// One row of the battery-duration scenario table.
struct ScenarioRow {
  std::string platform;
  double interval_min;
  double model_days;
  std::optional<double> reference_days; ///< published figure
  double deviation_pct;                 ///< model vs reference
  std::string note;
};

/// 5/15/30/60-minute scenarios for BSF32 then LoPy4.
std::vector<ScenarioRow> scenario_table();

struct DailyEnergyCheck {
  std::string platform;
  double interval_s;
  double model_uwh_per_day;
  double reference_uwh_per_day;
  std::string note;
};

std::vector<DailyEnergyCheck> daily_energy_checks();

} // namespace wxkit::energy
