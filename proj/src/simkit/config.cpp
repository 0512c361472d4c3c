// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#include "wxkit/simkit/config.hpp"

#include <algorithm>

#include "wxkit/energy/profile.hpp"
#include "wxkit/lorawan/frame.hpp"
#include "wxkit/lorawan/payload.hpp"
#include "wxkit/rfdecode/formats.hpp"

namespace wxkit::sim {

namespace {

// Test keys; real deployments supply their own.
constexpr lorawan::Key128 default_nwk = {0x2B, 0x7E, 0x15, 0x16, 0x28, 0xAE, 0xD2, 0xA6,
                                         0xAB, 0xF7, 0x15, 0x88, 0x09, 0xCF, 0x4F, 0x3C};
constexpr lorawan::Key128 default_app = {0x00, 0x01, 0x02, 0x03, 0x04, 0x05, 0x06, 0x07,
                                         0x08, 0x09, 0x0A, 0x0B, 0x0C, 0x0D, 0x0E, 0x0F};

std::string key_hex(const lorawan::Key128& k)
{
  return rf::to_hex(k);
}

std::string lower(std::string s)
{
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

class Reader {
public:
  std::vector<std::string> problems;

  template <typename T>
  void get(const nlohmann::json& obj, const char* key, T& dst, const std::string& path)
  {
    if (!obj.contains(key)) return;
    try {
      dst = obj.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
      problems.push_back(path + key + ": wrong type");
    }
  }

  template <typename T>
  void get_opt(const nlohmann::json& obj, const char* key, std::optional<T>& dst,
               const std::string& path)
  {
    if (!obj.contains(key) || obj.at(key).is_null()) return;
    T v{};
    get(obj, key, v, path);
    dst = v;
  }

  void key(const nlohmann::json& obj, const char* name, lorawan::Key128& dst, const std::string& path)
  {
    std::string s;
    if (!obj.contains(name)) return;
    get(obj, name, s, path);
    try {
      const auto bytes = rf::from_hex(lower(s));
      if (bytes.size() != 16) throw std::invalid_argument("length");
      std::copy(bytes.begin(), bytes.end(), dst.begin());
    } catch (const std::invalid_argument&) {
      problems.push_back(path + name + ": expected 32 hex digits");
    }
  }

  const nlohmann::json& section(const nlohmann::json& j, const char* name)
  {
    static const nlohmann::json empty = nlohmann::json::object();
    if (!j.contains(name)) return empty;
    if (!j.at(name).is_object()) {
      problems.push_back(std::string(name) + ": expected an object");
      return empty;
    }
    return j.at(name);
  }
};

} // namespace

SimConfig::SimConfig()
{
  transponder.nwk_skey = default_nwk;
  transponder.app_skey = default_app;
}

ConfigError::ConfigError(std::vector<std::string> problems)
    : std::invalid_argument([&] {
        std::string s = "invalid simulation config:";
        for (const auto& p : problems) s += "\n  " + p;
        return s;
      }()),
      problems_(std::move(problems))
{}

std::vector<std::string> validate(const SimConfig& c)
{
  std::vector<std::string> p;
  auto prob = [&](const char* name, double v) {
    if (!(v >= 0.0 && v <= 1.0)) p.push_back(std::string(name) + " must be a probability in [0, 1]");
  };
  if (!(c.duration_s > 0.0)) p.push_back("duration_s must be positive");
  prob("channel.frame_loss", c.channel.frame_loss);
  prob("channel.bit_flip", c.channel.bit_flip);
  prob("gateway.uplink_loss", c.gateway.uplink_loss);

  try {
    StationId(c.station.protocol, c.station.id, c.station.channel);
    if (c.station.protocol == Protocol::lcw && c.station.id > 127)
      p.push_back("station.id must be 0..127 for lcw");
  } catch (const std::invalid_argument& e) {
    p.push_back(std::string("station: ") + e.what());
  }
  if (!(c.station.effective_period_s() > 0.0)) p.push_back("station.period_s must be positive");
  if (c.station.phase_s && !(*c.station.phase_s >= 0.0)) p.push_back("station.phase_s must be >= 0");

  const auto& t = c.transponder;
  std::optional<energy::EnergyProfile> prof;
  try {
    prof = energy::profile_by_name(t.profile);
  } catch (const std::invalid_argument& e) {
    p.push_back(std::string("transponder.profile: ") + e.what());
  }
  if (prof && !(t.t_cycle_s >= prof->t_active_s))
    p.push_back("transponder.t_cycle_s must be at least the platform's active time (" +
                std::to_string(prof->t_active_s) + " s)");
  if (!(t.t_cycle_s > 0.0) || t.t_cycle_s > 65535.0)
    p.push_back("transponder.t_cycle_s must be in (0, 65535]");
  if (!(t.rx_timeout_s > 0.0)) p.push_back("transponder.rx_timeout_s must be positive");
  if (!(t.inter_sleep_s >= 0.0)) p.push_back("transponder.inter_sleep_s must be >= 0");
  if (!(t.init_s >= 0.0)) p.push_back("transponder.init_s must be >= 0");
  if (!(t.baro_s >= 0.0)) p.push_back("transponder.baro_s must be >= 0");
  if (!(t.build_s >= 0.0)) p.push_back("transponder.build_s must be >= 0");
  if (t.min_active_s && !(*t.min_active_s >= 0.0)) p.push_back("transponder.min_active_s must be >= 0");
  if (!(t.duty_limit > 0.0 && t.duty_limit <= 1.0))
    p.push_back("transponder.duty_limit must lie in (0, 1]");
  if (t.fport < 1 || t.fport > 223) p.push_back("transponder.fport must be 1..223");
  if (t.battery_mv && (*t.battery_mv < 0 || *t.battery_mv > 65535))
    p.push_back("transponder.battery_mv must be 0..65535");
  try {
    t.radio.validate();
    const double air = lorawan::airtime(
        t.radio, static_cast<unsigned>(lorawan::payload_size(c.station.protocol) + lorawan::frame_overhead));
    if (t.duty_limit > 0.0 && air > t.duty_limit * 3600.0)
      p.push_back("transponder.duty_limit leaves less than one frame of airtime per hour");
  } catch (const lorawan::RadioParamError& e) {
    p.push_back("transponder.radio." + e.param() + ": " + e.what());
  }
  return p;
}

SimConfig config_from_json(const nlohmann::json& j)
{
  SimConfig c;
  Reader r;
  if (!j.is_object()) throw ConfigError({"config must be a JSON object"});

  r.get(j, "duration_s", c.duration_s, "");
  r.get(j, "seed", c.seed, "");
  r.get(j, "record_trace", c.record_trace, "");

  const auto& st = r.section(j, "station");
  std::string proto = std::string(to_string(c.station.protocol));
  r.get(st, "protocol", proto, "station.");
  try {
    c.station.protocol = protocol_from_string(proto);
  } catch (const std::invalid_argument& e) {
    r.problems.push_back(std::string("station.protocol: ") + e.what());
  }
  r.get(st, "id", c.station.id, "station.");
  r.get(st, "channel", c.station.channel, "station.");
  r.get_opt(st, "period_s", c.station.period_s, "station.");
  r.get_opt(st, "phase_s", c.station.phase_s, "station.");

  const auto& ch = r.section(j, "channel");
  r.get(ch, "frame_loss", c.channel.frame_loss, "channel.");
  r.get(ch, "bit_flip", c.channel.bit_flip, "channel.");

  const auto& gw = r.section(j, "gateway");
  r.get(gw, "uplink_loss", c.gateway.uplink_loss, "gateway.");

  const auto& tr = r.section(j, "transponder");
  auto& t = c.transponder;
  r.get(tr, "profile", t.profile, "transponder.");
  r.get(tr, "t_cycle_s", t.t_cycle_s, "transponder.");
  r.get(tr, "rx_timeout_s", t.rx_timeout_s, "transponder.");
  r.get(tr, "inter_sleep_s", t.inter_sleep_s, "transponder.");
  r.get(tr, "init_s", t.init_s, "transponder.");
  r.get(tr, "baro_s", t.baro_s, "transponder.");
  r.get(tr, "build_s", t.build_s, "transponder.");
  r.get_opt(tr, "min_active_s", t.min_active_s, "transponder.");
  r.get_opt(tr, "battery_mv", t.battery_mv, "transponder.");
  r.get(tr, "duty_limit", t.duty_limit, "transponder.");
  r.get(tr, "fport", t.fport, "transponder.");
  if (tr.contains("dev_addr")) {
    std::string s;
    r.get(tr, "dev_addr", s, "transponder.");
    try {
      const auto b = rf::from_hex(lower(s));
      if (b.size() != 4) throw std::invalid_argument("length");
      t.dev_addr = (std::uint32_t{b[0]} << 24) | (b[1] << 16) | (b[2] << 8) | b[3];
    } catch (const std::invalid_argument&) {
      r.problems.push_back("transponder.dev_addr: expected 8 hex digits");
    }
  }
  r.key(tr, "nwk_skey", t.nwk_skey, "transponder.");
  r.key(tr, "app_skey", t.app_skey, "transponder.");

  const auto& radio = r.section(tr, "radio");
  r.get(radio, "sf", t.radio.sf, "transponder.radio.");
  r.get(radio, "bandwidth_hz", t.radio.bandwidth_hz, "transponder.radio.");
  r.get(radio, "coding_rate", t.radio.coding_rate, "transponder.radio.");
  r.get(radio, "preamble_symbols", t.radio.preamble_symbols, "transponder.radio.");
  r.get(radio, "explicit_header", t.radio.explicit_header, "transponder.radio.");
  r.get(radio, "crc_on", t.radio.crc_on, "transponder.radio.");
  r.get_opt(radio, "low_dr_optimize", t.radio.low_dr_optimize, "transponder.radio.");
  r.get(radio, "tx_power_dbm", t.radio.tx_power_dbm, "transponder.radio.");

  const auto& baro = r.section(tr, "baro");
  r.get(baro, "pressure_pa", t.baro.pressure_pa, "transponder.baro.");
  r.get(baro, "pressure_noise_pa", t.baro.pressure_noise_pa, "transponder.baro.");
  r.get(baro, "temp_c", t.baro.temp_c, "transponder.baro.");
  r.get(baro, "temp_noise_c", t.baro.temp_noise_c, "transponder.baro.");

  auto problems = std::move(r.problems);
  for (auto& p : validate(c)) problems.push_back(std::move(p));
  if (!problems.empty()) throw ConfigError(std::move(problems));
  return c;
}

nlohmann::ordered_json to_json(const SimConfig& c)
{
  nlohmann::ordered_json j;
  j["duration_s"] = c.duration_s;
  j["seed"] = c.seed;
  auto& st = j["station"];
  st["protocol"] = std::string(to_string(c.station.protocol));
  st["id"] = c.station.id;
  st["channel"] = c.station.channel;
  st["period_s"] = c.station.effective_period_s();
  st["phase_s"] = c.station.phase_s ? nlohmann::ordered_json(*c.station.phase_s) : nullptr;
  j["channel"] = {{"frame_loss", c.channel.frame_loss}, {"bit_flip", c.channel.bit_flip}};
  const auto& t = c.transponder;
  auto& tr = j["transponder"];
  tr["profile"] = t.profile;
  tr["t_cycle_s"] = t.t_cycle_s;
  tr["rx_timeout_s"] = t.rx_timeout_s;
  tr["inter_sleep_s"] = t.inter_sleep_s;
  tr["init_s"] = t.init_s;
  tr["baro_s"] = t.baro_s;
  tr["build_s"] = t.build_s;
  tr["min_active_s"] = t.min_active_s ? nlohmann::ordered_json(*t.min_active_s) : nullptr;
  tr["battery_mv"] = t.battery_mv ? nlohmann::ordered_json(*t.battery_mv) : nullptr;
  tr["duty_limit"] = t.duty_limit;
  const std::uint8_t da[] = {static_cast<std::uint8_t>(t.dev_addr >> 24),
                             static_cast<std::uint8_t>(t.dev_addr >> 16),
                             static_cast<std::uint8_t>(t.dev_addr >> 8),
                             static_cast<std::uint8_t>(t.dev_addr)};
  tr["dev_addr"] = rf::to_hex(da);
  tr["nwk_skey"] = key_hex(t.nwk_skey);
  tr["app_skey"] = key_hex(t.app_skey);
  tr["fport"] = t.fport;
  tr["radio"] = {{"sf", t.radio.sf},
                 {"bandwidth_hz", t.radio.bandwidth_hz},
                 {"coding_rate", t.radio.coding_rate},
                 {"preamble_symbols", t.radio.preamble_symbols},
                 {"explicit_header", t.radio.explicit_header},
                 {"crc_on", t.radio.crc_on},
                 {"low_dr_optimize", t.radio.low_dr_effective()},
                 {"tx_power_dbm", t.radio.tx_power_dbm}};
  tr["baro"] = {{"pressure_pa", t.baro.pressure_pa},
                {"pressure_noise_pa", t.baro.pressure_noise_pa},
                {"temp_c", t.baro.temp_c},
                {"temp_noise_c", t.baro.temp_noise_c}};
  j["gateway"] = {{"uplink_loss", c.gateway.uplink_loss}};
  return j;
}

} // namespace wxkit::sim
