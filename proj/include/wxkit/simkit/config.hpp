// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "wxkit/core/station.hpp"
#include "wxkit/lorawan/airtime.hpp"
#include "wxkit/lorawan/crypto.hpp"

namespace wxkit::sim {

struct StationSpec {
  Protocol protocol = Protocol::a5n1;
  unsigned id = 1234;
  unsigned channel = 0;
  /// Default: 18 s for a5n1 (alternating 0x31/0x38), 8 s for lcw.
  std::optional<double> period_s;
  /// First emission time; default drawn from the seed in [0, period).
  std::optional<double> phase_s;

  double effective_period_s() const { return period_s.value_or(protocol == Protocol::a5n1 ? 18.0 : 8.0); }
};

struct ChannelSpec {
  double frame_loss = 0.0; ///< probability a frame never arrives
  double bit_flip = 0.0;   ///< per-bit flip probability for frames that do
};

struct BaroSpec {
  double pressure_pa = 101325.0;
  double pressure_noise_pa = 30.0;
  double temp_c = 21.0;
  double temp_noise_c = 0.3;
};

struct TransponderSpec {
  std::string profile = "bsf32";
  double t_cycle_s = 900.0;
  double rx_timeout_s = 60.0;
  double inter_sleep_s = 10.0;
  double init_s = 2.0;
  double baro_s = 0.05;
  double build_s = 0.05;
  /// Floor on the active phase; default is the profile's measured t_active.
  std::optional<double> min_active_s;
  std::optional<std::int32_t> battery_mv; ///< default: supply voltage
  double duty_limit = 0.01;
  std::uint32_t dev_addr = 0x26011BDA;
  lorawan::Key128 nwk_skey{};
  lorawan::Key128 app_skey{};
  unsigned fport = 1;
  lorawan::RadioParams radio;
  BaroSpec baro;
};

struct GatewaySpec {
  double uplink_loss = 0.0;
};

struct SimConfig {
  double duration_s = 86400.0;
  std::uint64_t seed = 1;
  StationSpec station;
  ChannelSpec channel;
  TransponderSpec transponder;
  GatewaySpec gateway;
  /// Keep a JSON-lines trace; summaries are produced either way.
  bool record_trace = true;

  SimConfig();
};

/// All problems found, not just the first.
class ConfigError : public std::invalid_argument {
public:
  explicit ConfigError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const noexcept { return problems_; }

private:
  std::vector<std::string> problems_;
};

std::vector<std::string> validate(const SimConfig& c);

/// Throws ConfigError listing every problem.
SimConfig config_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const SimConfig& c);

} // namespace wxkit::sim
