// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace wxkit::energy {

/// Currents of the individual blocks during the active phase, used only to
/// attribute the measured active energy.
struct ComponentDetail {
  double i_shr_ma = 0.0; ///< 433 MHz receiver on
  double i_tx_ma = 0.0;  ///< LoRa transmission
  double t_shr_s = 0.0;
  double t_tx_s = 0.0;
};

/// Power characteristics of one transponder platform.  The active-phase
/// energy is a measured lump, not rebuilt from component currents.
struct EnergyProfile {
  std::string name;
  double supply_v = 0.0;
  double t_active_s = 0.0;
  double e_active_uwh = 0.0;
  double i_sleep_ua = 0.0;
  double battery_uwh = 0.0;
  std::optional<ComponentDetail> detail;

  double sleep_power_uw() const noexcept { return i_sleep_ua * supply_v; }
  void validate() const;
};

/// BSF32: 3.7 V Li-ion 2000 mAh (7.4 Wh), 42.2 s / 449 µWh active, 144 µA sleep.
EnergyProfile bsf32();
/// LoPy4: 3 x D alkaline at 4.5 V (48 Wh), 44.06 s / 1.17 mWh active, 32.8 µA sleep.
EnergyProfile lopy4();

EnergyProfile profile_by_name(std::string_view name);

} // namespace wxkit::energy
