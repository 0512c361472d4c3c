// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#include "wxkit/cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

#include "wxkit/core/record_json.hpp"
#include "wxkit/energy/model.hpp"
#include "wxkit/lorawan/airtime.hpp"
#include "wxkit/lorawan/frame.hpp"
#include "wxkit/lorawan/payload.hpp"
#include "wxkit/rfdecode/a5n1.hpp"
#include "wxkit/rfdecode/formats.hpp"
#include "wxkit/rfdecode/framer.hpp"
#include "wxkit/rfdecode/lcw.hpp"
#include "wxkit/rfdecode/pipeline.hpp"
#include "wxkit/rfdecode/rain.hpp"
#include "wxkit/simkit/simulator.hpp"

namespace wxkit::cli {

namespace {

using json = nlohmann::ordered_json;

/// Ends the invocation with an exit code and a diagnostic.
struct Exit {
  int code;
  std::string message;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

/// Opens `path`, or hands back stdin for "" and "-".
class Input {
public:
  Input(const std::string& path, std::istream& fallback)
  {
    if (path.empty() || path == "-") {
      stream_ = &fallback;
      return;
    }
    file_ = std::make_unique<std::ifstream>(path);
    if (!*file_) throw Exit{io_error, "cannot open " + path};
    stream_ = file_.get();
  }
  std::istream& get() { return *stream_; }

private:
  std::unique_ptr<std::ifstream> file_;
  std::istream* stream_ = nullptr;
};

std::string lower(std::string s)
{
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

Protocol parse_protocol(const std::string& s)
{
  try {
    return protocol_from_string(s);
  } catch (const std::invalid_argument& e) {
    throw Exit{invalid, std::string("--protocol: ") + e.what()};
  }
}

rf::BitString bits_from_hex_line(const std::string& line, Protocol p)
{
  return p == Protocol::a5n1 ? rf::bits_from_bytes(rf::from_hex(line))
                             : rf::bits_from_nibbles(rf::nibbles_from_hex(line));
}

std::vector<WeatherRecord> read_records(std::istream& in)
{
  std::vector<WeatherRecord> out;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(record_from_json(nlohmann::json::parse(line)));
    } catch (const std::exception& e) {
      throw Exit{invalid, fmt::format("line {}: {}", n, e.what())};
    }
  }
  if (in.bad()) throw Exit{io_error, "read error"};
  return out;
}

std::vector<std::string> hex_lines(std::istream& in)
{
  try {
    auto lines = rf::read_hex_lines(in);
    for (auto& l : lines) l = lower(l);
    return lines;
  } catch (const rf::FormatError& e) {
    throw Exit{invalid, e.what()};
  }
}

// decode ------------------------------------------------------------------

struct DecodeOpts {
  std::string protocol = "a5n1";
  std::string format = "pulses";
  std::vector<std::string> inputs;
};

int cmd_decode(const DecodeOpts& o, Streams s)
{
  const Protocol p = parse_protocol(o.protocol);
  const rf::TimingSpec spec;
  rf::DecodeSession session;
  std::size_t decoded = 0;
  std::size_t frame_no = 0;

  auto emit = [&](const rf::BitString& bits) {
    ++frame_no;
    try {
      const auto r = session.accumulate(rf::decode_frame_bits(bits, p));
      s.out << to_json_line(r) << '\n';
      ++decoded;
    } catch (const rf::DecodeError& e) {
      fmt::print(s.err, "frame {}: rejected: {}\n", frame_no, e.what());
    }
  };

  auto inputs = o.inputs;
  if (inputs.empty()) inputs.push_back("-");
  for (const auto& path : inputs) {
    Input in(path, s.in);
    try {
      if (o.format == "pulses") {
        for (const auto& run : rf::frame_pulses(rf::read_pulses(in.get()), spec, p)) emit(run);
      } else if (o.format == "bits") {
        for (const auto& b : rf::read_bitstrings(in.get())) emit(b);
      } else {
        for (const auto& line : hex_lines(in.get())) {
          rf::BitString bits;
          try {
            bits = bits_from_hex_line(line, p);
          } catch (const std::invalid_argument& e) {
            ++frame_no;
            fmt::print(s.err, "frame {}: rejected: {}\n", frame_no, e.what());
            continue;
          }
          emit(bits);
        }
      }
    } catch (const rf::FormatError& e) {
      throw Exit{invalid, (path == "-" ? std::string("stdin") : path) + ": " + e.what()};
    }
    if (in.get().bad()) throw Exit{io_error, "read error on " + path};
  }
  return decoded ? ok : no_data;
}

// encode ------------------------------------------------------------------

struct EncodeOpts {
  std::string format = "pulses";
  std::string type = "auto";
  double scale = 1.0;
  std::string input;
};

std::vector<rf::BitString> frames_for(const WeatherRecord& r, const std::string& type)
{
  std::vector<rf::BitString> out;
  if (r.station.protocol() == Protocol::a5n1) {
    std::vector<rf::A5n1MessageType> types;
    if (type == "0x31") {
      types.push_back(rf::A5n1MessageType::wind_dir_rain);
    } else if (type == "0x38") {
      types.push_back(rf::A5n1MessageType::temp_humidity);
    } else {
      if (r.has(Field::wind_dir) || r.has(Field::rain))
        types.push_back(rf::A5n1MessageType::wind_dir_rain);
      if (r.has(Field::temperature) || r.has(Field::humidity))
        types.push_back(rf::A5n1MessageType::temp_humidity);
    }
    for (auto t : types) out.push_back(rf::bits_from_bytes(rf::build_a5n1_frame(r, t).bytes));
    return out;
  }
  static constexpr std::pair<Field, rf::LcwQuantity> map[] = {
      {Field::temperature, rf::LcwQuantity::temperature},
      {Field::humidity, rf::LcwQuantity::humidity},
      {Field::rain, rf::LcwQuantity::rain},
      {Field::wind_speed, rf::LcwQuantity::wind_speed},
      {Field::wind_dir, rf::LcwQuantity::wind_dir},
  };
  for (const auto& [field, q] : map) {
    if (!r.has(field)) continue;
    if (type != "auto" && type != rf::to_string(q)) continue;
    const auto f = rf::build_lcw_frame(q, rf::lcw_value_of(r, q), r.station, r.sensor_battery_ok());
    out.push_back(rf::bits_from_nibbles(f.nibbles));
  }
  return out;
}

int cmd_encode(const EncodeOpts& o, Streams s)
{
  if (!(o.scale > 0.0)) throw Exit{invalid, "--scale: must be positive"};
  Input in(o.input, s.in);
  const auto records = read_records(in.get());
  const rf::TimingSpec spec;
  std::size_t written = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    std::vector<rf::BitString> frames;
    try {
      frames = frames_for(r, o.type);
    } catch (const std::invalid_argument& e) {
      throw Exit{invalid, fmt::format("record {}: {}", i + 1, e.what())};
    }
    if (frames.empty()) fmt::print(s.err, "record {}: nothing to encode\n", i + 1);
    for (const auto& bits : frames) {
      if (o.format == "pulses") {
        rf::write_pulses(s.out, rf::modulate(bits, spec, r.station.protocol()).scaled(o.scale));
      } else if (o.format == "bits") {
        s.out << rf::to_bit_text(bits) << '\n';
      } else if (r.station.protocol() == Protocol::a5n1) {
        s.out << rf::to_hex(rf::bytes_from_bits(bits)) << '\n';
      } else {
        s.out << rf::nibbles_to_hex(rf::nibbles_from_bits(bits)) << '\n';
      }
      ++written;
    }
  }
  return written ? ok : no_data;
}

// payload -----------------------------------------------------------------

struct PayloadOpts {
  std::string input;
  unsigned frames_received = 0;
  unsigned cycle_time_s = 900;
};

int cmd_payload_encode(const PayloadOpts& o, Streams s)
{
  if (o.frames_received > 255) throw Exit{invalid, "--frames-received: must be 0..255"};
  if (o.cycle_time_s > 65535) throw Exit{invalid, "--cycle-time-s: must be 0..65535"};
  Input in(o.input, s.in);
  const auto records = read_records(in.get());
  const lorawan::PayloadMeta meta{static_cast<std::uint8_t>(o.frames_received),
                                  static_cast<std::uint16_t>(o.cycle_time_s)};
  for (std::size_t i = 0; i < records.size(); ++i) {
    try {
      s.out << rf::to_hex(lorawan::payload_encode(records[i], meta)) << '\n';
    } catch (const std::exception& e) {
      throw Exit{invalid, fmt::format("record {}: {}", i + 1, e.what())};
    }
  }
  return records.empty() ? no_data : ok;
}

int cmd_payload_decode(const PayloadOpts& o, Streams s)
{
  Input in(o.input, s.in);
  std::size_t decoded = 0, n = 0;
  for (const auto& line : hex_lines(in.get())) {
    ++n;
    try {
      const auto d = lorawan::payload_decode(rf::from_hex(line));
      auto j = to_json(d.record);
      j["frames_received"] = d.meta.frames_received;
      j["cycle_time_s"] = d.meta.cycle_time_s;
      s.out << j.dump() << '\n';
      ++decoded;
    } catch (const std::exception& e) {
      fmt::print(s.err, "payload {}: rejected: {}\n", n, e.what());
    }
  }
  return decoded ? ok : no_data;
}

// frame -------------------------------------------------------------------

struct FrameOpts {
  std::string input;
  std::string dev_addr;
  std::string nwk_skey;
  std::string app_skey;
  std::uint32_t fcnt = 0;
  unsigned fport = 1;
  unsigned window = 16;
};

std::string resolve(const std::string& flag_value, const char* flag, const char* var,
                    const EnvLookup& env)
{
  if (!flag_value.empty()) return flag_value;
  if (auto v = env(var); v && !v->empty()) return *v;
  throw Exit{invalid, fmt::format("{} is required (or set {})", flag, var)};
}

lorawan::AbpSession session_from(const FrameOpts& o, const EnvLookup& env)
{
  lorawan::AbpSession sess;
  auto key = [&](const std::string& v, const char* flag, const char* var) {
    const auto hex = lower(resolve(v, flag, var, env));
    std::vector<std::uint8_t> b;
    try {
      b = rf::from_hex(hex);
    } catch (const std::invalid_argument&) {
    }
    if (b.size() != 16) throw Exit{invalid, fmt::format("{}: expected 32 hex digits", flag)};
    lorawan::Key128 k{};
    std::copy(b.begin(), b.end(), k.begin());
    return k;
  };
  sess.nwk_skey = key(o.nwk_skey, "--nwkskey", "WXKIT_NWKSKEY");
  sess.app_skey = key(o.app_skey, "--appskey", "WXKIT_APPSKEY");
  std::vector<std::uint8_t> da;
  try {
    da = rf::from_hex(lower(resolve(o.dev_addr, "--devaddr", "WXKIT_DEVADDR", env)));
  } catch (const std::invalid_argument&) {
  }
  if (da.size() != 4) throw Exit{invalid, "--devaddr: expected 8 hex digits"};
  sess.dev_addr = (std::uint32_t{da[0]} << 24) | (std::uint32_t{da[1]} << 16) |
                  (std::uint32_t{da[2]} << 8) | da[3];
  if (o.fport < 1 || o.fport > 223) throw Exit{invalid, "--fport: must be 1..223"};
  sess.fport = static_cast<std::uint8_t>(o.fport);
  sess.fcnt_up = o.fcnt;
  return sess;
}

int cmd_frame_build(const FrameOpts& o, Streams s, const EnvLookup& env)
{
  auto sess = session_from(o, env);
  Input in(o.input, s.in);
  std::size_t n = 0;
  for (const auto& line : hex_lines(in.get())) {
    ++n;
    try {
      s.out << rf::to_hex(lorawan::frame_build(sess, rf::from_hex(line))) << '\n';
    } catch (const std::exception& e) {
      throw Exit{invalid, fmt::format("payload {}: {}", n, e.what())};
    }
  }
  return n ? ok : no_data;
}

int cmd_frame_parse(const FrameOpts& o, Streams s, const EnvLookup& env)
{
  const auto sess = session_from(o, env);
  Input in(o.input, s.in);
  lorawan::FcntPolicy policy{o.fcnt, o.window, true};
  std::size_t parsed = 0, n = 0;
  for (const auto& line : hex_lines(in.get())) {
    ++n;
    try {
      const auto up = lorawan::frame_parse(rf::from_hex(line), sess, policy);
      policy.expected_fcnt = up.fcnt + 1;
      json j;
      j["dev_addr"] = fmt::format("{:08x}", up.dev_addr);
      j["fcnt"] = up.fcnt;
      j["fport"] = up.fport ? json(*up.fport) : json(nullptr);
      j["payload"] = rf::to_hex(up.payload);
      s.out << j.dump() << '\n';
      ++parsed;
    } catch (const std::exception& e) {
      fmt::print(s.err, "frame {}: rejected: {}\n", n, e.what());
    }
  }
  return parsed ? ok : no_data;
}

// airtime -----------------------------------------------------------------

struct AirtimeOpts {
  unsigned sf = 9;
  std::uint32_t bw = 125000;
  unsigned cr = 5;
  unsigned payload = 0;
  unsigned preamble = 8;
  bool no_crc = false;
  bool implicit_header = false;
  std::string ldro = "auto";
};

int cmd_airtime(const AirtimeOpts& o, Streams s)
{
  if (o.cr < 5 || o.cr > 8) throw Exit{invalid, "--cr: coding rate denominator must be 5..8"};
  lorawan::RadioParams p;
  p.sf = o.sf;
  p.bandwidth_hz = o.bw;
  p.coding_rate = o.cr - 4;
  p.preamble_symbols = o.preamble;
  p.crc_on = !o.no_crc;
  p.explicit_header = !o.implicit_header;
  if (o.ldro == "on") p.low_dr_optimize = true;
  if (o.ldro == "off") p.low_dr_optimize = false;
  try {
    fmt::print(s.out, "{:.3f}\n", lorawan::airtime(p, o.payload) * 1000.0);
  } catch (const lorawan::RadioParamError& e) {
    throw Exit{invalid, fmt::format("--{}: {}", e.param(), e.what())};
  }
  return ok;
}

// battery -----------------------------------------------------------------

struct BatteryOpts {
  std::string platform = "bsf32";
  std::optional<double> interval_s;
  bool table = false;
  bool as_json = false;
};

int cmd_battery(const BatteryOpts& o, Streams s)
{
  if (o.table) {
    const auto rows = energy::scenario_table();
    const auto checks = energy::daily_energy_checks();
    if (o.as_json) {
      for (const auto& r : rows) {
        json j;
        j["platform"] = r.platform;
        j["interval_min"] = r.interval_min;
        j["model_days"] = std::round(r.model_days * 10) / 10;
        j["published_days"] = r.reference_days ? json(*r.reference_days) : json(nullptr);
        j["deviation_pct"] = std::round(r.deviation_pct * 10) / 10;
        j["note"] = r.note.empty() ? json(nullptr) : json(r.note);
        s.out << j.dump() << '\n';
      }
      for (const auto& c : checks) {
        json j;
        j["platform"] = c.platform;
        j["interval_s"] = c.interval_s;
        j["model_uwh_per_day"] = std::round(c.model_uwh_per_day * 10) / 10;
        j["published_uwh_per_day"] = c.reference_uwh_per_day;
        j["note"] = c.note.empty() ? json(nullptr) : json(c.note);
        s.out << j.dump() << '\n';
      }
      return ok;
    }
    fmt::print(s.out, "{:<8} {:>8} {:>10} {:>10} {:>8}  {}\n", "platform", "interval", "model_d",
               "published", "dev_%", "note");
    for (const auto& r : rows) {
      fmt::print(s.out, "{:<8} {:>6.0f} m {:>10.1f} {:>10} {:>+8.1f}  {}\n", r.platform,
                 r.interval_min, r.model_days,
                 r.reference_days ? fmt::format("{:.0f}", *r.reference_days) : std::string("-"),
                 r.deviation_pct, r.note);
    }
    s.out << '\n';
    fmt::print(s.out, "{:<8} {:>8} {:>14} {:>14}  {}\n", "platform", "interval", "model_uWh/d",
               "published", "note");
    for (const auto& c : checks) {
      fmt::print(s.out, "{:<8} {:>6.0f} s {:>14.1f} {:>14.1f}  {}\n", c.platform, c.interval_s,
                 c.model_uwh_per_day, c.reference_uwh_per_day, c.note);
    }
    return ok;
  }

  if (!o.interval_s) throw Exit{invalid, "one of --interval-s or --table is required"};
  energy::EnergyProfile p;
  try {
    p = energy::profile_by_name(lower(o.platform));
  } catch (const std::invalid_argument& e) {
    throw Exit{invalid, std::string("--platform: ") + e.what()};
  }
  try {
    const double days = energy::battery_life_days(p, *o.interval_s);
    if (o.as_json) {
      json j;
      j["platform"] = p.name;
      j["interval_s"] = *o.interval_s;
      j["cycle_energy_uwh"] = std::round(energy::cycle_energy(p, *o.interval_s) * 1e4) / 1e4;
      j["daily_energy_uwh"] = std::round(energy::daily_energy(p, *o.interval_s) * 10) / 10;
      j["battery_life_days"] = std::round(days * 10) / 10;
      s.out << j.dump() << '\n';
    } else {
      fmt::print(s.out, "{:.1f}\n", days);
    }
  } catch (const energy::EnergyModelError& e) {
    throw Exit{invalid, std::string("--interval-s: ") + e.what()};
  }
  return ok;
}

// simulate ----------------------------------------------------------------

struct SimulateOpts {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<double> duration_s;
  std::string out;
};

int cmd_simulate(const SimulateOpts& o, Streams s)
{
  nlohmann::json doc = nlohmann::json::object();
  if (!o.config.empty()) {
    Input in(o.config, s.in);
    try {
      doc = nlohmann::json::parse(in.get());
    } catch (const nlohmann::json::parse_error& e) {
      throw Exit{invalid, std::string("--config: ") + e.what()};
    }
  }
  if (o.seed) doc["seed"] = *o.seed;
  if (o.duration_s) doc["duration_s"] = *o.duration_s;
  sim::SimConfig cfg;
  try {
    cfg = sim::config_from_json(doc);
  } catch (const sim::ConfigError& e) {
    throw Exit{invalid, e.what()};
  }
  cfg.record_trace = !o.out.empty();
  const auto trace = sim::run(cfg);
  if (!o.out.empty()) {
    std::ofstream f(o.out, std::ios::binary);
    f << trace.to_jsonl();
    if (!f) throw Exit{io_error, "cannot write " + o.out};
  }
  s.out << trace.summary.to_json().dump(2) << '\n';
  if (!trace.summary.invariants.all()) {
    s.err << "simulation invariants violated\n";
    return invalid;
  }
  return ok;
}

} // namespace

EnvLookup system_env()
{
  return [](const std::string& name) -> std::optional<std::string> {
    if (const char* v = std::getenv(name.c_str())) return std::string(v);
    return std::nullopt;
  };
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err, const EnvLookup& env)
{
  CLI::App app{"Weather-station radio decoding, LoRaWAN uplink and energy toolkit", "wxkit"};
  app.require_subcommand(1);
  const std::vector<std::string> protocols{"a5n1", "lcw"};

  DecodeOpts dec;
  auto* decode = app.add_subcommand("decode", "Decode sensor frames to JSON-lines records");
  decode->add_option("--protocol", dec.protocol)->check(CLI::IsMember(protocols));
  decode->add_option("--format", dec.format)->check(CLI::IsMember({"pulses", "bits", "hex"}));
  decode->add_option("inputs", dec.inputs, "Input files (default stdin)");

  EncodeOpts enc;
  auto* encode = app.add_subcommand("encode", "Encode JSON-lines records to sensor frames");
  encode->add_option("--format", enc.format)->check(CLI::IsMember({"pulses", "bits", "hex"}));
  encode->add_option("--type", enc.type, "auto, 0x31, 0x38, or an LCW quantity");
  encode->add_option("--scale", enc.scale, "Multiply pulse durations");
  encode->add_option("input", enc.input);

  PayloadOpts pay;
  auto* payload = app.add_subcommand("payload", "Compact uplink payloads");
  payload->require_subcommand(1);
  auto* pay_enc = payload->add_subcommand("encode", "JSON-lines records to hex payloads");
  pay_enc->add_option("--frames-received", pay.frames_received);
  pay_enc->add_option("--cycle-time-s", pay.cycle_time_s);
  pay_enc->add_option("input", pay.input);
  auto* pay_dec = payload->add_subcommand("decode", "Hex payloads to JSON-lines records");
  pay_dec->add_option("input", pay.input);

  FrameOpts fr;
  auto* frame = app.add_subcommand("frame", "LoRaWAN ABP uplink frames");
  frame->require_subcommand(1);
  auto add_session = [&](CLI::App* c) {
    c->add_option("--devaddr", fr.dev_addr, "DevAddr hex (env WXKIT_DEVADDR)");
    c->add_option("--nwkskey", fr.nwk_skey, "NwkSKey hex (env WXKIT_NWKSKEY)");
    c->add_option("--appskey", fr.app_skey, "AppSKey hex (env WXKIT_APPSKEY)");
    c->add_option("--fcnt", fr.fcnt, "First (build) or expected (parse) frame counter");
    c->add_option("input", fr.input);
  };
  auto* fr_build = frame->add_subcommand("build", "Hex payloads to hex frames");
  add_session(fr_build);
  fr_build->add_option("--fport", fr.fport);
  auto* fr_parse = frame->add_subcommand("parse", "Hex frames to JSON lines");
  add_session(fr_parse);
  fr_parse->add_option("--window", fr.window, "Accepted counter gap");

  AirtimeOpts air;
  auto* airtime = app.add_subcommand("airtime", "LoRa time on air in milliseconds");
  airtime->add_option("--sf", air.sf);
  airtime->add_option("--bw", air.bw, "Bandwidth in Hz");
  airtime->add_option("--cr", air.cr, "Coding rate denominator, 5..8 for 4/5..4/8");
  airtime->add_option("--payload", air.payload, "PHY payload bytes")->required();
  airtime->add_option("--preamble", air.preamble);
  airtime->add_flag("--no-crc", air.no_crc);
  airtime->add_flag("--implicit-header", air.implicit_header);
  airtime->add_option("--ldro", air.ldro)->check(CLI::IsMember({"auto", "on", "off"}));

  BatteryOpts bat;
  auto* battery = app.add_subcommand("battery", "Battery lifetime in days");
  battery->add_option("--platform", bat.platform);
  auto* interval = battery->add_option("--interval-s", bat.interval_s);
  auto* table = battery->add_flag("--table", bat.table, "Scenario table for both platforms");
  interval->excludes(table);
  battery->add_flag("--json", bat.as_json);

  SimulateOpts simo;
  auto* simulate = app.add_subcommand("simulate", "Run the transponder simulation");
  simulate->add_option("--config", simo.config, "JSON config file");
  simulate->add_option("--seed", simo.seed);
  simulate->add_option("--duration-s", simo.duration_s);
  simulate->add_option("--out", simo.out, "Write the JSON-lines trace here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return ok;
    }
    err << "error: " << e.what() << '\n';
    return invalid;
  }

  const Streams s{in, out, err};
  try {
    if (decode->parsed()) return cmd_decode(dec, s);
    if (encode->parsed()) return cmd_encode(enc, s);
    if (pay_enc->parsed()) return cmd_payload_encode(pay, s);
    if (pay_dec->parsed()) return cmd_payload_decode(pay, s);
    if (fr_build->parsed()) return cmd_frame_build(fr, s, env);
    if (fr_parse->parsed()) return cmd_frame_parse(fr, s, env);
    if (airtime->parsed()) return cmd_airtime(air, s);
    if (battery->parsed()) return cmd_battery(bat, s);
    if (simulate->parsed()) return cmd_simulate(simo, s);
  } catch (const Exit& e) {
    err << "error: " << e.message << '\n';
    return e.code;
  }
  return invalid;
}

} // namespace wxkit::cli
