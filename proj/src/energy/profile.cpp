// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#include "wxkit/energy/profile.hpp"

#include <stdexcept>

namespace wxkit::energy {

void EnergyProfile::validate() const
{
  if (!(supply_v > 0.0)) throw std::invalid_argument(name + ": supply voltage must be positive");
  if (!(t_active_s > 0.0)) throw std::invalid_argument(name + ": active time must be positive");
  if (!(e_active_uwh > 0.0)) throw std::invalid_argument(name + ": active energy must be positive");
  if (!(i_sleep_ua >= 0.0)) throw std::invalid_argument(name + ": sleep current must be >= 0");
  if (!(battery_uwh > 0.0)) throw std::invalid_argument(name + ": battery capacity must be positive");
}

EnergyProfile bsf32()
{
  EnergyProfile p;
  p.name = "bsf32";
  p.supply_v = 3.7;
  p.t_active_s = 42.2;
  p.e_active_uwh = 449.0;
  p.i_sleep_ua = 144.0;
  p.battery_uwh = 3.7 * 2000.0 * 1000.0; // 2000 mAh at 3.7 V
  p.detail = ComponentDetail{9.9, 102.0, 0.0, 0.289};
  return p;
}

EnergyProfile lopy4()
{
  EnergyProfile p;
  p.name = "lopy4";
  p.supply_v = 4.5;
  p.t_active_s = 44.06;
  p.e_active_uwh = 1170.0;
  p.i_sleep_ua = 32.8;
  p.battery_uwh = 48.0e6;
  return p;
}

EnergyProfile profile_by_name(std::string_view name)
{
  if (name == "bsf32") return bsf32();
  if (name == "lopy4") return lopy4();
  throw std::invalid_argument("unknown platform '" + std::string(name) + "'");
}

} // namespace wxkit::energy
