// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

// Release gate: one PASS/FAIL line per acceptance criterion.  Exits 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "support/gen.hpp"
#include "support/ref_lorawan.hpp"
#include "support/ref_sensors.hpp"
#include "wxkit/energy/model.hpp"
#include "wxkit/lorawan/airtime.hpp"
#include "wxkit/lorawan/frame.hpp"
#include "wxkit/rfdecode/a5n1.hpp"
#include "wxkit/rfdecode/errors.hpp"
#include "wxkit/rfdecode/framer.hpp"
#include "wxkit/rfdecode/lcw.hpp"
#include "wxkit/simkit/simulator.hpp"

using namespace wxkit;

namespace {

// Pinned tolerances.
constexpr double airtime_ms_expected = 287.744;
constexpr double airtime_ms_abs_tol = 0.0005;
constexpr double airtime_published_ms = 289.0;
constexpr double airtime_published_rel = 0.01;
constexpr double daily_energy_rel = 0.01;
constexpr int roundtrips_per_protocol = 10000;
constexpr int lorawan_frames = 100;
constexpr double sim_energy_rel = 0.01;
constexpr double sim_utilisation_pct = 0.032;
constexpr double sim_utilisation_abs_tol = 0.001;
constexpr double sim_runtime_s = 5.0;

int failures = 0;

void report(int id, bool pass, const std::string& what)
{
  std::printf("%s [%d] %s\n", pass ? "PASS" : "FAIL", id, what.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

bool near_rel(double got, double want, double rel) { return std::abs(got / want - 1.0) <= rel; }

void airtime()
{
  const double ms = lorawan::airtime(lorawan::RadioParams{}, 42) * 1000.0;
  report(1,
         std::abs(ms - airtime_ms_expected) <= airtime_ms_abs_tol &&
             near_rel(ms, airtime_published_ms, airtime_published_rel),
         fmt::format("airtime SF9/125k/4-5/42 B = {:.3f} ms (expect {:.3f}; published {} +-{:.0f}%)",
                     ms, airtime_ms_expected, airtime_published_ms, airtime_published_rel * 100));
}

void battery()
{
  struct Row {
    energy::EnergyProfile p;
    double interval_s;
    double published;
    double rel; ///< negative: reported only
    double vs;  ///< figure the tolerance is taken against
  };
  const Row rows[] = {
      {energy::bsf32(), 323, 56.7, 0.02, 56.7},   {energy::bsf32(), 3600, 326, 0.05, 326},
      {energy::lopy4(), 300, 141, 0.03, 141},     {energy::lopy4(), 900, 414, 0.03, 414},
      {energy::lopy4(), 3600, 1478, 0.05, 1478},  {energy::bsf32(), 900, 123, 0.10, 123},
      {energy::lopy4(), 1800, 739, -1, 739},      {energy::bsf32(), 1800, 4204, 0.10, 204},
  };
  bool ok = true;
  std::string detail;
  for (const auto& r : rows) {
    const double days = energy::battery_life_days(r.p, r.interval_s);
    const bool row_ok = r.rel < 0 || near_rel(days, r.vs, r.rel);
    ok = ok && row_ok;
    detail += fmt::format(" {}@{:.0f}s={:.1f}/{}{}", r.p.name, r.interval_s, days, r.vs,
                          row_ok ? "" : "!");
  }
  // Discrepancy rows must carry their note.
  const auto table = energy::scenario_table();
  auto note_of = [&](const std::string& platform, double minutes) {
    for (const auto& r : table)
      if (r.platform == platform && r.interval_min == minutes) return r.note;
    return std::string();
  };
  const bool notes = !note_of("bsf32", 15).empty() && !note_of("lopy4", 30).empty() &&
                     note_of("bsf32", 30).find("4204 is a typo") != std::string::npos;
  report(2, ok && notes, "battery life vs published rows:" + detail + (notes ? "" : " (notes missing)"));
}

void daily_energy()
{
  const double b = energy::daily_energy(energy::bsf32(), 323);
  const double l = energy::daily_energy(energy::lopy4(), 300);
  bool typo_flagged = false;
  for (const auto& c : energy::daily_energy_checks())
    if (c.platform == "lopy4" && c.note.find("33.98") != std::string::npos &&
        c.note.find("typo") != std::string::npos)
      typo_flagged = true;
  report(3,
         near_rel(b, 130803, daily_energy_rel) && near_rel(l, 339800, daily_energy_rel) &&
             typo_flagged,
         fmt::format("daily energy bsf32@323s {:.1f} uWh (130803), lopy4@300s {:.1f} uWh "
                     "(339800), typo note {}",
                     b, l, typo_flagged ? "present" : "missing"));
}

void roundtrips()
{
  const rf::TimingSpec spec;
  gen::Rng rng(4);
  int a5_fail = 0, lcw_fail = 0;
  for (int i = 0; i < roundtrips_per_protocol; ++i) {
    const auto type = i % 2 ? rf::A5n1MessageType::temp_humidity : rf::A5n1MessageType::wind_dir_rain;
    const auto in = gen::a5n1_record(rng, type);
    try {
      const auto runs = rf::frame_pulses(rf::encode_a5n1(in, type, spec), spec, Protocol::a5n1);
      if (runs.size() != 1) throw std::runtime_error("framing");
      const auto out = rf::decode_a5n1(runs[0]).second;
      bool ok = out.station == in.station && out.valid == in.valid &&
                std::abs(out.wind_speed_kph - in.wind_speed_kph) <= 0.8278 / 2 + 1e-9;
      if (type == rf::A5n1MessageType::temp_humidity)
        ok = ok && std::abs(out.temperature_c - in.temperature_c) <= 0.1 / 1.8 / 2 + 1e-9 &&
             out.humidity_pct == in.humidity_pct;
      else
        ok = ok && out.wind_dir_deg == in.wind_dir_deg && std::abs(out.rain_mm - in.rain_mm) < 1e-9;
      a5_fail += !ok;
    } catch (const std::exception&) {
      ++a5_fail;
    }

    const auto c = gen::lcw_case(rng);
    try {
      const auto runs = rf::frame_pulses(rf::encode_lcw(c.quantity, c.value, c.station, c.battery_ok, spec),
                                         spec, Protocol::lcw);
      if (runs.size() != 1) throw std::runtime_error("framing");
      const auto out = rf::decode_lcw(runs[0]).second;
      lcw_fail += !(out.station == c.station && out.sensor_battery_ok() == c.battery_ok &&
                    std::abs(rf::lcw_value_of(out, c.quantity) - c.value) < 1e-9);
    } catch (const std::exception&) {
      ++lcw_fail;
    }
  }
  report(4, a5_fail == 0 && lcw_fail == 0,
         fmt::format("encode->pulses->frame->decode: a5n1 {} / {} failures, lcw {} / {} failures",
                     a5_fail, roundtrips_per_protocol, lcw_fail, roundtrips_per_protocol));
}

void integrity()
{
  wxkit::WeatherRecord r;
  r.station = StationId(Protocol::a5n1, 1234, 2);
  r.temperature_c = 22.4;
  r.humidity_pct = 61;
  r.wind_speed_kph = 0.8278 * 17 + 1;
  for (auto f : {Field::temperature, Field::humidity, Field::wind_speed, Field::sensor_battery_ok})
    r.valid.set(f);
  const auto bits = rf::bits_from_bytes(rf::build_a5n1_frame(r, rf::A5n1MessageType::temp_humidity).bytes);
  int missed_bits = 0;
  for (std::size_t i = 0; i < 56; ++i) {
    auto b = bits;
    b[i] = !b[i];
    try {
      rf::decode_a5n1(b);
      ++missed_bits;
    } catch (const rf::DecodeError&) {
    }
  }
  const auto f = rf::build_lcw_frame(rf::LcwQuantity::temperature, 25.3, StationId(Protocol::lcw, 77), true);
  int subs = 0, missed_subs = 0;
  for (std::size_t i = 0; i < f.nibbles.size(); ++i) {
    for (std::uint8_t v = 0; v < 16; ++v) {
      if (v == f.nibbles[i]) continue;
      auto bad = f;
      bad.nibbles[i] = v;
      ++subs;
      try {
        rf::decode_lcw(bad);
        ++missed_subs;
      } catch (const rf::DecodeError&) {
      }
    }
  }
  report(5, missed_bits == 0 && missed_subs == 0,
         fmt::format("a5n1 single-bit flips detected {}/56; lcw nibble substitutions detected {}/{}",
                     56 - missed_bits, subs - missed_subs, subs));
}

void lorawan_frames_check()
{
  std::mt19937_64 rng(606);
  int mismatches = 0;
  for (int i = 0; i < lorawan_frames; ++i) {
    lorawan::AbpSession s;
    s.dev_addr = static_cast<std::uint32_t>(rng());
    for (auto& b : s.nwk_skey) b = static_cast<std::uint8_t>(rng());
    for (auto& b : s.app_skey) b = static_cast<std::uint8_t>(rng());
    s.fport = static_cast<std::uint8_t>(1 + rng() % 223);
    s.fcnt_up = rng() % 100000;
    const auto fcnt = static_cast<std::uint32_t>(s.fcnt_up);
    std::vector<std::uint8_t> p(1 + rng() % lorawan::max_app_payload);
    for (auto& b : p) b = static_cast<std::uint8_t>(rng());
    try {
      const auto f = lorawan::frame_build(s, p);
      const auto parsed = lorawan::frame_parse(f, s, lorawan::FcntPolicy{fcnt});
      const auto oracle = ref::decode_uplink(f, s.nwk_skey, s.app_skey, static_cast<std::uint16_t>(fcnt >> 16));
      const bool ok = parsed.payload == p && parsed.fcnt == fcnt && oracle &&
                      oracle->payload == p && oracle->dev_addr == s.dev_addr &&
                      oracle->fport == s.fport;
      mismatches += !ok;
    } catch (const std::exception&) {
      ++mismatches;
    }
  }
  lorawan::AbpSession s;
  const auto size = lorawan::frame_build(s, std::vector<std::uint8_t>(29, 0)).size();
  report(6, mismatches == 0 && size == 42,
         fmt::format("{} random frames: {} mismatches vs parse and reference decoder; 29-byte payload "
                     "frame is {} bytes",
                     lorawan_frames, mismatches, size));
}

void simulation()
{
  sim::SimConfig c;
  c.duration_s = 86400;
  c.transponder.t_cycle_s = 900;
  const auto t0 = std::chrono::steady_clock::now();
  const auto a = sim::run(c);
  const auto b = sim::run(c);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / 2;
  const auto& s = a.summary;
  const bool ok = s.uplinks_delivered == 96 && s.complete_records == 96 && s.truth_matches == 96 &&
                  near_rel(s.energy_uwh, s.closed_form_uwh, sim_energy_rel) &&
                  std::abs(s.duty_utilization_pct - sim_utilisation_pct) <= sim_utilisation_abs_tol &&
                  s.max_hour_airtime_s <= 36.0 && s.invariants.all() &&
                  a.to_jsonl() == b.to_jsonl() && secs < sim_runtime_s;
  report(7, ok,
         fmt::format("24 h @900 s: delivered {}/96, truth matches {}, energy {:.2f} vs closed form "
                     "{:.2f} uWh, utilisation {:.4f}%, worst hour {:.3f} s, traces identical {}, "
                     "run {:.3f} s",
                     s.uplinks_delivered, s.truth_matches, s.energy_uwh, s.closed_form_uwh,
                     s.duty_utilization_pct, s.max_hour_airtime_s,
                     a.to_jsonl() == b.to_jsonl() ? "yes" : "no", secs));
}

} // namespace

int main()
{
  airtime();
  battery();
  daily_energy();
  roundtrips();
  integrity();
  lorawan_frames_check();
  simulation();
  std::printf("%d of 7 criteria failed\n", failures);
  return failures ? 1 : 0;
}
