// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#include <doctest.h>

#include "wxkit/energy/model.hpp"
#include "wxkit/energy/profile.hpp"

using namespace wxkit::energy;

TEST_SUITE("energy")
{
  // Frozen from an independent evaluation of e_active + i_sleep*V*(t - t_active)/3600.
  TEST_CASE("cycle, daily and lifetime table")
  {
    struct Row {
      EnergyProfile p;
      double t, cycle_uwh, daily_uwh, days;
    };
    const Row rows[] = {
        {bsf32(), 300, 487.1544, 140300.467, 52.7439},
        {bsf32(), 323, 490.5584, 131220.575, 56.3936},
        {bsf32(), 900, 575.9544, 55291.622, 133.8358},
        {bsf32(), 1800, 709.1544, 34039.411, 217.3951},
        {bsf32(), 3600, 975.5544, 23413.306, 316.0596},
        {lopy4(), 300, 1180.4935, 339982.14, 141.1839},
        {lopy4(), 900, 1205.0935, 115688.98, 414.9056},
        {lopy4(), 1800, 1241.9935, 59615.69, 805.1572},
        {lopy4(), 3600, 1315.7935, 31579.045, 1519.9953},
    };
    for (const auto& r : rows) {
      CAPTURE(r.p.name);
      CAPTURE(r.t);
      CHECK(cycle_energy(r.p, r.t) == doctest::Approx(r.cycle_uwh).epsilon(1e-6));
      CHECK(daily_energy(r.p, r.t) == doctest::Approx(r.daily_uwh).epsilon(1e-6));
      CHECK(battery_life_days(r.p, r.t) == doctest::Approx(r.days).epsilon(1e-5));
    }
  }

  TEST_CASE("edge cases")
  {
    const auto p = bsf32();
    CHECK(cycle_energy(p, p.t_active_s) == doctest::Approx(p.e_active_uwh));
    CHECK(daily_energy(p, 86400) == doctest::Approx(cycle_energy(p, 86400)));
    CHECK_THROWS_AS(cycle_energy(p, 40.0), EnergyModelError);
    CHECK_THROWS_AS(battery_life_days(p, 10.0), EnergyModelError);
  }

  TEST_CASE("published anchors")
  {
    CHECK(battery_life_days(bsf32(), 323) == doctest::Approx(56.7).epsilon(0.02));
    CHECK(battery_life_days(lopy4(), 300) == doctest::Approx(141).epsilon(0.03));
    CHECK(daily_energy(bsf32(), 323) == doctest::Approx(130803).epsilon(0.01));
    CHECK(daily_energy(lopy4(), 300) == doctest::Approx(339.8e3).epsilon(0.01));
    CHECK(lopy4().sleep_power_uw() == doctest::Approx(147.6));
    CHECK(bsf32().sleep_power_uw() == doctest::Approx(532.8));
  }

  TEST_CASE("lifetime strictly increases with the interval; cycle energy is affine")
  {
    for (const auto& p : {bsf32(), lopy4()}) {
      double prev = 0;
      const double slope = p.sleep_power_uw() / 3600.0;
      for (double t = p.t_active_s; t <= 7200; t += 7.3) {
        const double d = battery_life_days(p, t);
        CHECK(d > prev);
        prev = d;
        CHECK(cycle_energy(p, t + 100) - cycle_energy(p, t) == doctest::Approx(100 * slope));
      }
    }
  }

  TEST_CASE("component fit")
  {
    auto p = bsf32();
    p.detail->t_shr_s = 0;
    p.detail->t_tx_s = 0;
    CHECK(fit_component_power(p, p.e_active_uwh) ==
          doctest::Approx(p.e_active_uwh * 3600 / p.t_active_s));

    // 9.9 mA for 41.9 s plus 102 mA for 0.289 s at 3.7 V already exceeds 449 µWh.
    p.detail->t_shr_s = 41.9;
    p.detail->t_tx_s = 0.289;
    CHECK_THROWS_AS(fit_component_power(p, p.e_active_uwh), EnergyModelError);

    p.detail->t_shr_s = 0;
    p.detail->t_tx_s = 0.289;
    CHECK(fit_component_power(p, p.e_active_uwh) == doctest::Approx(35718.754).epsilon(1e-6));
    CHECK_THROWS_AS(fit_component_power(p, 20.0), EnergyModelError);
    CHECK_THROWS_AS(fit_component_power(lopy4(), 1170), EnergyModelError);
  }

  TEST_CASE("scenario table")
  {
    const auto rows = scenario_table();
    REQUIRE(rows.size() == 8);
    CHECK(rows[2].platform == "bsf32");
    CHECK(rows[2].interval_min == 30);
    CHECK(rows[2].note.find("4204 is a typo") != std::string::npos);
    CHECK(std::abs(rows[2].deviation_pct) <= 10.0);
    const auto checks = daily_energy_checks();
    REQUIRE(checks.size() == 2);
    CHECK(checks[1].note.find("33.98") != std::string::npos);
    CHECK(profile_by_name("lopy4").name == "lopy4");
    CHECK_THROWS(profile_by_name("esp32"));
  }
}
