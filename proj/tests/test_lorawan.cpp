// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#include <random>

#include <doctest.h>

#include "support/ref_lorawan.hpp"
#include "wxkit/lorawan/airtime.hpp"
#include "wxkit/lorawan/crypto.hpp"
#include "wxkit/lorawan/duty_cycle.hpp"
#include "wxkit/lorawan/frame.hpp"
#include "wxkit/lorawan/payload.hpp"
#include "wxkit/rfdecode/formats.hpp"

using namespace wxkit;
using namespace wxkit::lorawan;

namespace {

template <std::size_t N>
std::array<std::uint8_t, N> arr(std::string_view hex)
{
  const auto v = rf::from_hex(hex);
  std::array<std::uint8_t, N> a{};
  std::copy(v.begin(), v.end(), a.begin());
  return a;
}

const Key128 rfc_key = arr<16>("2b7e151628aed2a6abf7158809cf4f3c");
const std::string rfc_msg =
    "6bc1bee22e409f96e93d7e117393172aae2d8a571e03ac9c9eb76fac45af8e51"
    "30c81c46a35ce411e5fbc1191a0a52eff69f2445df4f9b17ad2b417be66c3710";

AbpSession session(std::mt19937_64& rng)
{
  AbpSession s;
  s.dev_addr = static_cast<std::uint32_t>(rng());
  for (auto& b : s.nwk_skey) b = static_cast<std::uint8_t>(rng());
  for (auto& b : s.app_skey) b = static_cast<std::uint8_t>(rng());
  s.fport = static_cast<std::uint8_t>(1 + rng() % 223);
  return s;
}

WeatherRecord full_a5n1()
{
  WeatherRecord r;
  r.station = StationId(Protocol::a5n1, 1234, 2);
  r.seq = 513;
  r.temperature_c = 21.94;
  r.humidity_pct = 45;
  r.wind_speed_kph = 10.11;
  r.wind_dir_deg = 90;
  r.rain_mm = 2.54;
  r.pressure_pa = 101325;
  r.board_temp_c = -3.5;
  r.battery_mv = 3700;
  for (Field f : measurement_fields) r.valid.set(f);
  r.valid.set(Field::sensor_battery_ok);
  return r;
}

} // namespace

TEST_SUITE("lorawan")
{
  TEST_CASE("AES-128 known answer, library and reference")
  {
    const auto key = arr<16>("000102030405060708090a0b0c0d0e0f");
    const auto pt = arr<16>("00112233445566778899aabbccddeeff");
    const auto want = arr<16>("69c4e0d86a7b0430d8cdb78070b4c55a");
    CHECK(aes128_encrypt(key, pt) == want);
    CHECK(ref::aes128(key, pt) == want);
  }

  TEST_CASE("AES-CMAC known answers, library and reference")
  {
    const auto msg = rf::from_hex(rfc_msg);
    const std::pair<std::size_t, const char*> cases[] = {
        {0, "bb1d6929e95937287fa37d129b756746"},
        {16, "070a16b46b4d4144f79bdd9dd04a287c"},
        {40, "dfa66747de9ae63030ca32611497c827"},
        {64, "51f0bebf7e3b9d92fc49741779363cfe"},
    };
    for (const auto& [len, mac] : cases) {
      const std::vector<std::uint8_t> m(msg.begin(), msg.begin() + static_cast<std::ptrdiff_t>(len));
      CHECK(aes128_cmac(rfc_key, m) == arr<16>(mac));
      CHECK(ref::cmac(rfc_key, m) == arr<16>(mac));
    }
  }

  TEST_CASE("payload: temperature 21.94 C at offset 7")
  {
    const auto p = payload_encode(full_a5n1(), {2, 900});
    REQUIRE(p.size() == 29);
    CHECK(p[0] == 0x01);
    CHECK(p[1] == 0x01);
    CHECK(p[7] == 0x08);
    CHECK(p[8] == 0x92);
    CHECK(((p[2] << 8) | p[3]) == (2 << 14 | 1234));
    CHECK(p[26] == 2);
    CHECK(((p[27] << 8) | p[28]) == 900);
  }

  TEST_CASE("payload: all fields invalid")
  {
    WeatherRecord r;
    r.station = StationId(Protocol::a5n1, 9);
    const auto p = payload_encode(r, {});
    REQUIRE(p.size() == 29);
    CHECK((p[6] & 0xFE) == 0);
    for (std::size_t i = 7; i < 22; ++i) CHECK(p[i] == 0);
  }

  TEST_CASE("payload: LCW layout is 27 bytes without board temperature")
  {
    auto r = full_a5n1();
    r.station = StationId(Protocol::lcw, 77);
    r.board_temp_c.reset();
    const auto p = payload_encode(r, {5, 300});
    REQUIRE(p.size() == 27);
    CHECK(p[1] == 0x02);
    CHECK(((p[22] << 8) | p[23]) == 3700);
    CHECK(p[24] == 5);
    CHECK(((p[25] << 8) | p[26]) == 300);
  }

  TEST_CASE("payload: decode errors")
  {
    auto p = payload_encode(full_a5n1(), {});
    CHECK_THROWS_AS(payload_decode(std::span(p).first(28)), PayloadError);
    auto bad = p;
    bad[0] = 2;
    CHECK_THROWS_AS(payload_decode(bad), PayloadError);
    bad = p;
    bad[1] = 9;
    CHECK_THROWS_AS(payload_decode(bad), PayloadError);
    bad = p;
    bad[9] = 201;
    CHECK_THROWS_AS(payload_decode(bad), PayloadError);
    bad = p;
    bad[6] |= 0x80;
    CHECK_THROWS(payload_decode(bad));
  }

  TEST_CASE("payload: records round-trip within quantization, bytes round-trip exactly")
  {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 5000; ++i) {
      WeatherRecord r;
      const bool a5 = i % 2 == 0;
      r.station = a5 ? StationId(Protocol::a5n1, rng() % 16384, rng() % 4)
                     : StationId(Protocol::lcw, rng() % 128);
      r.seq = static_cast<std::uint16_t>(rng());
      r.valid = ValidityFlags::from_byte(static_cast<std::uint8_t>(rng() & 0x7F));
      auto put = [&](Field f, double& dst, double v) {
        if (r.has(f)) dst = v;
      };
      put(Field::temperature, r.temperature_c, -40 + 120 * u(rng));
      put(Field::humidity, r.humidity_pct, 100 * u(rng));
      put(Field::wind_speed, r.wind_speed_kph, 300 * u(rng));
      put(Field::wind_dir, r.wind_dir_deg, 359.9 * u(rng));
      put(Field::rain, r.rain_mm, 20000 * u(rng));
      if (r.has(Field::pressure)) r.pressure_pa = 80000 + static_cast<std::int64_t>(rng() % 30000);
      if (a5) r.board_temp_c = -20 + 60 * u(rng);
      r.battery_mv = static_cast<std::int32_t>(rng() % 5000);
      const PayloadMeta meta{static_cast<std::uint8_t>(rng()), static_cast<std::uint16_t>(rng())};

      const auto bytes = payload_encode(r, meta);
      CHECK(bytes.size() == payload_size(r.station.protocol()));
      const auto d = payload_decode(bytes);
      CHECK(payload_encode(d.record, d.meta) == bytes);
      CHECK(d.meta == meta);
      CHECK(d.record.valid == r.valid);
      CHECK(d.record.seq == r.seq);
      const auto b = quantize_roundtrip_bounds(r);
      if (r.has(Field::temperature)) CHECK(std::abs(d.record.temperature_c - r.temperature_c) <= *b.temperature_c + 1e-9);
      if (r.has(Field::humidity)) CHECK(std::abs(d.record.humidity_pct - r.humidity_pct) <= *b.humidity_pct + 1e-9);
      if (r.has(Field::wind_speed)) CHECK(std::abs(d.record.wind_speed_kph - r.wind_speed_kph) <= *b.wind_speed_kph + 1e-9);
      if (r.has(Field::wind_dir)) CHECK(std::abs(d.record.wind_dir_deg - r.wind_dir_deg) <= *b.wind_dir_deg + 1e-9);
      if (r.has(Field::rain)) CHECK(std::abs(d.record.rain_mm - r.rain_mm) <= *b.rain_mm + 1e-9);
      if (r.has(Field::pressure)) CHECK(d.record.pressure_pa == r.pressure_pa);
      if (a5) CHECK(std::abs(*d.record.board_temp_c - *r.board_temp_c) <= *b.board_temp_c + 1e-9);
      CHECK(d.record.battery_mv == r.battery_mv);
    }
  }

  TEST_CASE("frame: 29-byte payload makes a 42-byte frame, empty payload 12")
  {
    std::mt19937_64 rng(1);
    auto s = session(rng);
    const std::vector<std::uint8_t> p(29, 0xAB);
    CHECK(frame_build(s, p).size() == 42);
    CHECK(s.fcnt_up == 1);
    const auto empty = frame_build(s, {});
    CHECK(empty.size() == 12);
    const auto parsed = frame_parse(empty, s, FcntPolicy{1});
    CHECK_FALSE(parsed.fport);
    CHECK(parsed.payload.empty());
  }

  TEST_CASE("frame: round trip and reference decoder agree on 1000 random frames")
  {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 1000; ++i) {
      auto s = session(rng);
      s.fcnt_up = rng() % 70000;
      const auto fcnt = static_cast<std::uint32_t>(s.fcnt_up);
      std::vector<std::uint8_t> p(rng() % 223);
      for (auto& b : p) b = static_cast<std::uint8_t>(rng());
      const auto f = frame_build(s, p);
      CHECK(f.size() == p.size() + (p.empty() ? 12 : 13));
      const auto parsed = frame_parse(f, s, FcntPolicy{fcnt});
      CHECK(parsed.payload == p);
      CHECK(parsed.fcnt == fcnt);
      const auto oracle = ref::decode_uplink(f, s.nwk_skey, s.app_skey, static_cast<std::uint16_t>(fcnt >> 16));
      REQUIRE(oracle);
      CHECK(oracle->payload == p);
      CHECK(oracle->dev_addr == s.dev_addr);
    }
  }

  TEST_CASE("frame: keystream is an involution for every length")
  {
    std::mt19937_64 rng(8);
    Key128 k{};
    for (auto& b : k) b = static_cast<std::uint8_t>(rng());
    for (std::size_t n = 0; n <= max_app_payload; ++n) {
      std::vector<std::uint8_t> p(n);
      for (auto& b : p) b = static_cast<std::uint8_t>(rng());
      CHECK(crypt_frm_payload(k, 0x26011BDA, 77, crypt_frm_payload(k, 0x26011BDA, 77, p)) == p);
    }
  }

  TEST_CASE("frame: every single-byte change is rejected")
  {
    std::mt19937_64 rng(9);
    auto s = session(rng);
    const auto f = frame_build(s, std::vector<std::uint8_t>(29, 0x5A));
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::uint8_t delta : {0x01, 0x80, 0xFF}) {
        auto bad = f;
        bad[i] ^= delta;
        CHECK_THROWS_AS(frame_parse(bad, s, FcntPolicy{0}), FrameError);
      }
    }
  }

  TEST_CASE("frame: replay and counter window")
  {
    std::mt19937_64 rng(10);
    auto s = session(rng);
    auto server = s;
    UplinkReceiver rx(server);
    const auto f0 = frame_build(s, std::vector<std::uint8_t>(4, 1));
    CHECK_NOTHROW(rx.accept(f0));
    try {
      rx.accept(f0);
      FAIL("replay accepted");
    } catch (const FrameError& e) {
      CHECK(e.code() == FrameErrc::counter_window);
    }
    s.fcnt_up = 40;
    const auto far = frame_build(s, std::vector<std::uint8_t>(4, 1));
    CHECK_THROWS_AS(rx.accept(far), FrameError);
    s.fcnt_up = 10;
    const auto near = frame_build(s, std::vector<std::uint8_t>(4, 1));
    CHECK(rx.accept(near).fcnt == 10);
    CHECK(rx.expected_fcnt() == 11);
  }

  TEST_CASE("frame: counter widening across the 16-bit boundary")
  {
    std::mt19937_64 rng(12);
    auto s = session(rng);
    s.fcnt_up = 0x1FFFF;
    const auto f = frame_build(s, std::vector<std::uint8_t>(3, 7));
    CHECK(frame_parse(f, s, FcntPolicy{0x1FFF8}).fcnt == 0x1FFFFu);
    const auto g = frame_build(s, std::vector<std::uint8_t>(3, 7));
    CHECK(frame_parse(g, s, FcntPolicy{0x1FFFF}).fcnt == 0x20000u);
  }

  TEST_CASE("frame: unsupported header and long payloads")
  {
    std::mt19937_64 rng(13);
    auto s = session(rng);
    auto f = frame_build(s, std::vector<std::uint8_t>(3, 7));
    f[0] = 0x80;
    CHECK_THROWS_AS(frame_parse(f, s, FcntPolicy{0}), FrameError);
    CHECK_THROWS_AS(frame_build(s, std::vector<std::uint8_t>(223, 0)), FrameError);
    CHECK_THROWS_AS(frame_parse(std::vector<std::uint8_t>(11, 0), s, FcntPolicy{0}), FrameError);
  }

  TEST_CASE("airtime: frozen values")
  {
    RadioParams p;
    CHECK(airtime(p, 42) * 1e3 == doctest::Approx(287.744).epsilon(1e-9));
    p.sf = 7;
    CHECK(airtime(p, 1) * 1e3 == doctest::Approx(25.856).epsilon(1e-9));
    p.sf = 12;
    p.crc_on = false;
    CHECK(airtime(p, 0) * 1e3 == doctest::Approx(663.552).epsilon(1e-9));
    CHECK(payload_symbols(p, 0) == 8);
    CHECK(p.low_dr_effective());
    p.sf = 13;
    CHECK_THROWS_AS(airtime(p, 10), RadioParamError);
    p.sf = 9;
    CHECK_THROWS_AS(airtime(p, 256), RadioParamError);
  }

  TEST_CASE("airtime is monotone in payload length and spreading factor")
  {
    for (std::uint32_t bw : {125000u, 250000u, 500000u}) {
      for (unsigned cr = 1; cr <= 4; ++cr) {
        for (bool crc : {false, true}) {
          for (bool hdr : {false, true}) {
            RadioParams p;
            p.bandwidth_hz = bw;
            p.coding_rate = cr;
            p.crc_on = crc;
            p.explicit_header = hdr;
            for (unsigned sf = 7; sf <= 12; ++sf) {
              p.sf = sf;
              double prev = 0;
              for (unsigned pl = 0; pl <= 255; ++pl) {
                const double t = airtime(p, pl);
                CHECK(t >= prev);
                prev = t;
                if (sf > 7) {
                  auto q = p;
                  q.sf = sf - 1;
                  CHECK(airtime(q, pl) <= t);
                }
              }
            }
          }
        }
      }
    }
  }

  TEST_CASE("duty cycle")
  {
    CHECK(duty_cycle_wait(0.287744, 0.01) == doctest::Approx(28.486656));
    CHECK(duty_cycle_wait(0.287744, 1.0) == 0.0);
    const auto d = governor_check(100.0, 0.289, 110.0);
    CHECK_FALSE(d.allowed);
    CHECK(d.next_allowed_s == doctest::Approx(100.0 + 0.289 * 99));
    CHECK(governor_check(100.0, 0.289, 400.0).allowed);
    CHECK(0.289 / 300.0 * 100 == doctest::Approx(0.0963).epsilon(1e-3));

    DutyCycleGovernor g;
    CHECK(g.check(0, 0.289).allowed);
    g.record(0, 0.289);
    CHECK_FALSE(g.check(10, 0.289).allowed);
    CHECK_THROWS_AS(g.record(10, 0.289), std::logic_error);
    CHECK_THROWS_AS(g.check(10, 40.0), std::invalid_argument);

    std::vector<Transmission> txs;
    for (int i = 0; i < 24; ++i) txs.push_back({i * 300.0, 0.289});
    CHECK(max_window_airtime(txs) == doctest::Approx(12 * 0.289));
  }

  TEST_CASE("governor keeps every sliding hour within budget")
  {
    // Back-to-back frames at the per-frame limit alone would put 126 frames
    // (36.3 s) into some hour.
    for (const double limit : {0.01, 0.001}) {
      CAPTURE(limit);
      DutyCycleGovernor g(limit);
      std::vector<Transmission> txs;
      double now = 0.0;
      while (now < 4 * 3600.0) {
        const auto d = g.check(now, 0.287744);
        if (!d.allowed) {
          CHECK(d.next_allowed_s > now);
          now = d.next_allowed_s;
          continue;
        }
        g.record(now, 0.287744);
        txs.push_back({now, 0.287744});
        now += 0.287744;
      }
      CHECK(max_window_airtime(txs) <= limit * 3600.0 + 1e-6);
      CHECK(max_window_airtime(txs) >= limit * 3600.0 - 0.287744);
    }
  }
}
