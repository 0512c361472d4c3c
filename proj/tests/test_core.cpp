// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#include <random>

#include <doctest.h>

#include "wxkit/core/record_json.hpp"
#include "wxkit/core/station.hpp"
#include "wxkit/core/units.hpp"
#include "wxkit/core/weather_record.hpp"

using namespace wxkit;

namespace {

WeatherRecord record(const StationId& s)
{
  WeatherRecord r;
  r.station = s;
  return r;
}

} // namespace

TEST_SUITE("core")
{
  TEST_CASE("station id domains")
  {
    CHECK_NOTHROW(StationId(Protocol::a5n1, 16383, 3));
    CHECK_THROWS_AS(StationId(Protocol::a5n1, 16384, 0), std::invalid_argument);
    CHECK_THROWS_AS(StationId(Protocol::a5n1, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(StationId(Protocol::lcw, 1, 1), std::invalid_argument);
    CHECK(protocol_from_string("lcw") == Protocol::lcw);
    CHECK_THROWS(protocol_from_string("oregon"));
  }

  TEST_CASE("validity flags round-trip every legal byte")
  {
    for (unsigned b = 0; b < 128; ++b) {
      const auto f = ValidityFlags::from_byte(static_cast<std::uint8_t>(b));
      CHECK(f.to_byte() == b);
    }
    for (unsigned b = 128; b < 256; ++b)
      CHECK_THROWS(ValidityFlags::from_byte(static_cast<std::uint8_t>(b)));
  }

  TEST_CASE("merge: disjoint fields union")
  {
    const StationId s(Protocol::a5n1, 7);
    auto a = record(s);
    a.temperature_c = 20.0;
    a.valid.set(Field::temperature);
    auto b = record(s);
    b.humidity_pct = 55;
    b.valid.set(Field::humidity);
    const auto m = merge_partial(a, b);
    CHECK(m.has(Field::temperature));
    CHECK(m.has(Field::humidity));
    CHECK(m.temperature_c == 20.0);
    CHECK(m.humidity_pct == 55.0);
  }

  TEST_CASE("merge: incoming wins and seq follows incoming")
  {
    const StationId s(Protocol::a5n1, 7);
    auto a = record(s);
    a.temperature_c = 20.0;
    a.valid.set(Field::temperature);
    a.seq = 3;
    auto b = a;
    b.temperature_c = 21.0;
    b.seq = 4;
    const auto m = merge_partial(a, b);
    CHECK(m.temperature_c == 21.0);
    CHECK(m.seq == 4);
  }

  TEST_CASE("merge: empty with empty stays empty")
  {
    const StationId s(Protocol::lcw, 9);
    const auto m = merge_partial(record(s), record(s));
    CHECK(m.valid.to_byte() == 0);
  }

  TEST_CASE("merge: station mismatch is rejected")
  {
    CHECK_THROWS_AS(merge_partial(record(StationId(Protocol::a5n1, 1)),
                                  record(StationId(Protocol::a5n1, 2))),
                    StationMismatch);
  }

  TEST_CASE("merge is associative over random partial sequences")
  {
    std::mt19937_64 rng(11);
    const StationId s(Protocol::a5n1, 42, 1);
    auto random_partial = [&] {
      auto r = record(s);
      std::uniform_real_distribution<double> u(0, 100);
      r.seq = static_cast<std::uint16_t>(rng() & 0xFFFF);
      for (Field f : measurement_fields)
        if (rng() & 1) r.valid.set(f);
      r.valid.set(Field::sensor_battery_ok, rng() & 1);
      r.temperature_c = u(rng);
      r.humidity_pct = u(rng);
      r.wind_speed_kph = u(rng);
      r.wind_dir_deg = u(rng);
      r.rain_mm = u(rng);
      r.pressure_pa = static_cast<std::int64_t>(rng() % 110000);
      if (rng() & 1) r.board_temp_c = u(rng);
      if (rng() & 1) r.battery_mv = static_cast<std::int32_t>(rng() % 5000);
      return r;
    };
    for (int trial = 0; trial < 2000; ++trial) {
      const auto a = random_partial(), b = random_partial(), c = random_partial();
      CHECK(merge_partial(merge_partial(a, b), c) == merge_partial(a, merge_partial(b, c)));
    }
  }

  TEST_CASE("quantization bounds are half a payload step")
  {
    auto r = record(StationId(Protocol::a5n1, 1));
    for (Field f : measurement_fields) r.valid.set(f);
    r.board_temp_c = 20.0;
    const auto b = quantize_roundtrip_bounds(r);
    CHECK(*b.temperature_c == doctest::Approx(0.005));
    CHECK(*b.humidity_pct == doctest::Approx(0.25));
    CHECK(*b.wind_speed_kph == doctest::Approx(0.05));
    CHECK(*b.wind_dir_deg == doctest::Approx(0.05));
    CHECK(*b.rain_mm == doctest::Approx(0.005));
    CHECK(*b.pressure_pa == doctest::Approx(0.5));
    CHECK(*b.board_temp_c == doctest::Approx(0.005));
    CHECK_FALSE(quantize_roundtrip_bounds(record(StationId(Protocol::a5n1, 1))).temperature_c);
  }

  TEST_CASE("complete means every sensor field")
  {
    auto r = record(StationId(Protocol::a5n1, 1));
    for (Field f : {Field::temperature, Field::humidity, Field::wind_speed, Field::wind_dir})
      r.valid.set(f);
    CHECK_FALSE(is_complete(r));
    r.valid.set(Field::rain);
    CHECK(is_complete(r));
  }

  TEST_CASE("record JSON round-trip with nulls for invalid fields")
  {
    auto r = record(StationId(Protocol::a5n1, 1234, 2));
    r.seq = 17;
    r.temperature_c = 21.94;
    r.valid.set(Field::temperature);
    r.pressure_pa = 101325;
    r.valid.set(Field::pressure);
    r.valid.set(Field::sensor_battery_ok);
    r.battery_mv = 3700;
    const auto j = to_json(r);
    CHECK(j["fields"]["humidity_pct"].is_null());
    CHECK(j["fields"]["temperature_c"].get<double>() == doctest::Approx(21.94));
    CHECK(record_from_json(nlohmann::json::parse(to_json_line(r))) == r);
  }

  TEST_CASE("unit conversions")
  {
    CHECK(units::fahrenheit_to_celsius(71.5) == doctest::Approx(21.9444).epsilon(1e-5));
    CHECK(units::fahrenheit_to_celsius(0.0) == doctest::Approx(-17.7778).epsilon(1e-5));
    CHECK(units::mps_to_kph(10.0) == doctest::Approx(36.0));
    CHECK(units::celsius_to_fahrenheit(units::fahrenheit_to_celsius(12.3)) == doctest::Approx(12.3));
  }
}
